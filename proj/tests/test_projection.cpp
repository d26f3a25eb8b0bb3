#include <doctest.h>

#include <algorithm>
#include <map>

#include "tensorideals/projection.hpp"
#include "tensorideals/symtensor.hpp"

using namespace tid;

TEST_CASE("profile validation") {
  CHECK_THROWS_AS((ProjectionProfile{2, 4, 3, 0}.validate()), InvalidProfile);  // t > d-2
  CHECK_THROWS_AS((ProjectionProfile{2, 4, 2, 3}.validate()), InvalidProfile);  // k > t
  CHECK_THROWS_AS((ProjectionProfile{1, 4, 2, 0}.validate()), InvalidProfile);  // n < 2
  CHECK_NOTHROW((ProjectionProfile{2, 5, 3, 3}.validate()));  // s = 9 <= C(5,2)
  ProjectionProfile ok{2, 4, 2, 0};
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.s() == 3);
  CHECK(!ok.high_k());
  ProjectionProfile hk{2, 5, 3, 2};
  CHECK_NOTHROW(hk.validate());
  CHECK(hk.high_k());
  CHECK(hk.s() == 8);
  CHECK(hk.g_count() == 1);
}

TEST_CASE("Hilbert-Burch shapes and degrees") {
  {
    Projection m(ProjectionProfile{2, 4, 2, 0});
    const HilbertBurch& hb = m.hilbert_burch();
    CHECK(hb.L.rows() == 2);
    CHECK(hb.L.cols() == 3);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 3; ++c) CHECK(*hb.L.at(r, c).homogeneous_degree() == 1);
    }
    REQUIRE(hb.F.size() == 3);
    CHECK(hb.G.empty());
    for (const auto& f : hb.F) CHECK(*f.homogeneous_degree() == 2);
  }
  {
    Projection m(ProjectionProfile{2, 5, 3, 2});
    const HilbertBurch& hb = m.hilbert_burch();
    CHECK(hb.L.rows() == 2);
    CHECK(hb.L.cols() == 3);
    CHECK(*hb.L.at(0, 0).homogeneous_degree() == 1);  // one linear column
    CHECK(*hb.L.at(0, 1).homogeneous_degree() == 2);
    CHECK(*hb.L.at(1, 2).homogeneous_degree() == 2);
    REQUIRE(hb.F.size() == 2);
    REQUIRE(hb.G.size() == 1);
    for (const auto& f : hb.F) CHECK(*f.homogeneous_degree() == 3);
    CHECK(*hb.G[0].homogeneous_degree() == 4);
  }
}

TEST_CASE("homogeneity across the grid and seeds") {
  for (std::size_t d = 3; d <= 6; ++d) {
    for (std::size_t t = 1; t + 2 <= d; ++t) {
      for (std::size_t k = 0; k <= t; ++k) {
        ProjectionProfile p{2, d, t, k};
        if (p.s() > d * (d - 1) / 2) continue;
        Projection m(p, Field::rationals(), 7);
        for (const auto& f : m.hilbert_burch().F) {
          REQUIRE(!f.is_zero());
          CHECK(*f.homogeneous_degree() == t);
        }
        for (const auto& g : m.hilbert_burch().G) {
          REQUIRE(!g.is_zero());
          CHECK(*g.homogeneous_degree() == t + 1);
        }
      }
    }
  }
}

TEST_CASE("jd spanning set for (2,4,2,0)") {
  Projection m(ProjectionProfile{2, 4, 2, 0});
  auto jd = m.jd_spanning_set();
  CHECK(jd.size() == 27);  // u=3, (n+1)=3, t-k+1=3
  for (const auto& [label, form] : jd) CHECK(*form.homogeneous_degree() == 4);
  // dim J_4 = C(6,2) - 3
  CHECK(m.jd_dimension() == 12);
}

TEST_CASE("relation counts match the closed forms") {
  CHECK(expected_relation_count(ProjectionProfile{2, 4, 2, 0}) == 6);
  CHECK(expected_relation_count(ProjectionProfile{2, 5, 3, 2}) == 2);
  {
    Projection m(ProjectionProfile{2, 4, 2, 0});
    CHECK(m.linear_relations().size() == 6);
    auto rr = m.relation_rank();
    CHECK(rr.rows == 6);
    CHECK(rr.rank == 6);
    CHECK(rr.is_maximal);
    CHECK(m.ambient()->var_count() == 27);
    // full linear space: 27 - combined = dim J_4 = 12
    CHECK(rr.combined_rank == 15);
  }
  {
    Projection m(ProjectionProfile{2, 5, 3, 2});
    CHECK(m.linear_relations().size() == 2);
    auto rr = m.relation_rank();
    CHECK(rr.rank == 2);
    CHECK(rr.is_maximal);
    CHECK(m.ambient()->var_count() == 21);  // 3*3*2 + 3*1
    CHECK(m.ambient()->var_count() - rr.combined_rank == 21 - 8);
  }
}

TEST_CASE("relations and identifications pull back to zero") {
  for (ProjectionProfile p : {ProjectionProfile{2, 4, 2, 0}, ProjectionProfile{2, 5, 3, 2},
                              ProjectionProfile{2, 6, 3, 1}}) {
    Projection m(p);
    Parameterization param = m.parameterization();
    CHECK(pullback_vanishes(m.linear_relations(), param).vanishes);
    CHECK(pullback_vanishes(m.identification_relations(), param).vanishes);
  }
}

TEST_CASE("border identities expand to zero") {
  for (ProjectionProfile p : {ProjectionProfile{2, 4, 2, 0}, ProjectionProfile{2, 5, 3, 2},
                              ProjectionProfile{2, 7, 5, 5}, ProjectionProfile{2, 7, 5, 0}}) {
    for (std::uint64_t seed : {1ull, 99ull}) {
      Projection m(p, Field::rationals(), seed);
      for (const auto& residue : m.border_identity_residues()) CHECK(residue.is_zero());
    }
  }
}

TEST_CASE("catalecticant matrices") {
  FormMatrix c = catalecticant_matrix(2, 2);
  REQUIRE(c.rows() == 3);
  REQUIRE(c.cols() == 3);
  CHECK(c.registry()->var_count() == 6);
  // classical layout: (z1 z2 z3 / z2 z4 z5 / z3 z5 z6) in decreasing lex labels
  CHECK(c.at(0, 0).to_string() == "+1\xc2\xb7z[2,0,0]");
  CHECK(c.at(1, 0) == c.at(0, 1));
  CHECK(c.at(2, 0) == c.at(0, 2));
  CHECK(c.at(2, 1) == c.at(1, 2));
  auto minors = canonical_poly_set(c.all_minors(2));
  CHECK(c.all_minors(2).size() == 9);
  CHECK(minors.size() == 6);
  CHECK(span_dimension(minors, 2) == 6);

  // pullback z_beta -> w^beta kills all 2-minors
  auto w = VarRegistry::make({"w0", "w1", "w2"});
  std::map<VarId, Polynomial> images;
  for (VarId v = 0; v < c.registry()->var_count(); ++v) {
    // parse the label back into exponents via the registry order: labels are
    // in decreasing lex order matching exponents_of_degree
    auto exps = exponents_of_degree(3, 2);
    std::vector<std::pair<VarId, std::uint32_t>> pairs;
    for (VarId i = 0; i < 3; ++i) {
      if (exps[v][i]) pairs.emplace_back(i, exps[v][i]);
    }
    images.emplace(v, Polynomial::term(w, Monomial::from_pairs(std::move(pairs)),
                                       Scalar::one(w->field())));
  }
  for (const auto& mnr : minors) CHECK(mnr.substitute(w, images).is_zero());

  // Hankel shape over P^1
  FormMatrix h = catalecticant_matrix(1, 3);
  REQUIRE(h.rows() == 2);
  REQUIRE(h.cols() == 3);
  CHECK(h.at(0, 0).to_string() == "+1\xc2\xb7z[3,0]");
  CHECK(h.at(1, 0) == h.at(0, 1));
  CHECK(h.at(1, 1) == h.at(0, 2));

  CHECK_THROWS_AS(catalecticant_matrix(2, 0), DegenerateDegree);
}

TEST_CASE("hypermatrix A shapes") {
  {
    Projection m(ProjectionProfile{2, 4, 2, 0});
    Hypermatrix a = m.build_A();
    CHECK(a.shape() == std::vector<std::size_t>{3, 1, 9});
  }
  {
    Projection m(ProjectionProfile{2, 6, 2, 0});
    Hypermatrix a = m.build_A();
    CHECK(a.shape() == std::vector<std::size_t>{3, 6, 9});
  }
  {
    // r = 3(t-k+1) + (2k-t) = 2t-k+3 in the surface case; the catalecticant
    // degenerates to one column since d-t-2 = 0
    Projection m(ProjectionProfile{2, 5, 3, 2});
    Hypermatrix a = m.build_A();
    CHECK(a.shape() == std::vector<std::size_t>{3, 1, 7});
  }
}

TEST_CASE("XM and Cat equations") {
  Projection m(ProjectionProfile{2, 4, 2, 0});
  auto [xm, cat] = m.xm_cat_equations();
  CHECK(cat.empty());  // single-column catalecticant has no 2-minors
  // raw count C(3,2)*C(9,2) = 108 before dedup; all distinct here
  CHECK(xm.size() == 108);

  Hypermatrix a = m.build_A();
  auto minors = a.d_minors(2);
  auto contains = [&minors](const Polynomial& p) {
    return std::binary_search(minors.begin(), minors.end(), p,
                              [](const Polynomial& x, const Polynomial& y) {
                                return Polynomial::cmp(x, y) < 0;
                              });
  };
  for (const auto& p : xm) CHECK(contains(p));

  // all 2-minors of A vanish under the parameterization
  Parameterization param = m.parameterization();
  CHECK(pullback_vanishes(minors, param).vanishes);
}

TEST_CASE("rank1_factor") {
  Projection m(ProjectionProfile{2, 4, 2, 0});
  const std::size_t nvars = m.ambient()->var_count();
  const Field f = Field::rationals();

  // rows (v, 2v, 3v): recover (1, 2, 3)
  std::vector<Scalar> point(nvars, Scalar::zero(f));
  const std::size_t r = m.profile().slot_count();
  for (std::size_t h = 1; h <= 3; ++h) {
    for (std::size_t slot = 1; slot <= r; ++slot) {
      long base = static_cast<long>(slot);  // row vector v = (1, 2, ..., r)
      VarId v = slot <= 9 ? m.xt_id(h, (slot - 1) / 3, (slot - 1) % 3 + 1) : 0;
      point[v] = Scalar::of_int(static_cast<long>(h) * base, f);
    }
  }
  auto a = m.rank1_factor(point);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == Scalar::one(f));
  CHECK(a[1] == Scalar::of_int(2, f));
  CHECK(a[2] == Scalar::of_int(3, f));

  CHECK_THROWS_AS(m.rank1_factor(std::vector<Scalar>(nvars, Scalar::zero(f))), ZeroMatrix);

  std::vector<Scalar> bad(nvars, Scalar::zero(f));
  bad[m.xt_id(1, 0, 1)] = Scalar::one(f);
  bad[m.xt_id(2, 0, 2)] = Scalar::one(f);  // rank 2 pattern
  CHECK_THROWS_AS(m.rank1_factor(bad), NotRankOne);

  // round-trip through the parameterization
  Parameterization param = m.parameterization();
  std::vector<Scalar> wpt{Scalar::of_int(3, f), Scalar::of_int(-2, f), Scalar::of_int(5, f)};
  std::vector<Scalar> q;
  for (const auto& g : param.targets) q.push_back(g.evaluate(wpt));
  auto rec = m.rank1_factor(q);
  // compare projectively against the z-monomials at wpt
  std::vector<Scalar> zv;
  for (const auto& e : m.z_exponents()) {
    Scalar val = Scalar::one(f);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t j = 0; j < e[i]; ++j) val = val * wpt[i];
    }
    zv.push_back(val);
  }
  for (std::size_t i = 0; i < rec.size(); ++i) {
    for (std::size_t j = i + 1; j < rec.size(); ++j) {
      CHECK(rec[i] * zv[j] == rec[j] * zv[i]);
    }
  }
}

TEST_CASE("rank1_factor is projective-scale invariant") {
  Projection m(ProjectionProfile{2, 4, 2, 0});
  Parameterization param = m.parameterization();
  const Field f = Field::rationals();
  std::vector<Scalar> wpt{Scalar::of_int(2, f), Scalar::of_int(7, f), Scalar::of_int(-3, f)};
  std::vector<Scalar> q;
  for (const auto& g : param.targets) q.push_back(g.evaluate(wpt));
  std::vector<Scalar> q_scaled;
  const Scalar c = Scalar::of_rational(-5, 3);
  for (const auto& v : q) q_scaled.push_back(v * c);
  auto a = m.rank1_factor(q);
  auto b = m.rank1_factor(q_scaled);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      CHECK(a[i] * b[j] == a[j] * b[i]);
    }
  }
}

TEST_CASE("verify_projection passes on the reference profiles") {
  VerifyOptions opts;
  for (ProjectionProfile p : {ProjectionProfile{2, 4, 2, 0}, ProjectionProfile{2, 5, 3, 2}}) {
    VerificationReport rep = verify_projection(p, VerifyMode::LinearAlgebra, opts);
    INFO(rep.to_text());
    CHECK(rep.overall() == "pass");
  }
}

TEST_CASE("elimination kernel of the projection map agrees with the graded oracle") {
  Projection m(ProjectionProfile{2, 4, 2, 0});
  Parameterization param = m.parameterization();
  IdealBasis kernel = kernel_of_map(m.ambient(), m.w_registry(), param.targets);
  // the kernel generators vanish on the parameterization by construction
  CHECK(pullback_vanishes(kernel.generators(), param).vanishes);
  // graded pieces: degree 1 carries the 15 independent linear relations,
  // degree 2 the full quadratic part
  CHECK(ideal_graded_dimension(m.ambient(), kernel.generators(), 1) == 15);
  CHECK(graded_kernel_dim(param, 1) == 15);
  CHECK(ideal_graded_dimension(m.ambient(), kernel.generators(), 2) ==
        graded_kernel_dim(param, 2));
}

TEST_CASE("groebner mode certifies the smallest profile in full") {
  VerifyOptions opts;
  VerificationReport rep =
      verify_projection(ProjectionProfile{2, 4, 2, 0}, VerifyMode::Groebner, opts);
  INFO(rep.to_text());
  CHECK(rep.overall() == "pass");
  bool saw = false;
  for (const auto& c : rep.checks) {
    if (c.name == "groebner-ideal-equality") {
      saw = true;
      CHECK(c.status == "pass");
    }
  }
  CHECK(saw);
}

TEST_CASE("verify_projection in P^3") {
  VerifyOptions opts;
  VerificationReport rep =
      verify_projection(ProjectionProfile{3, 4, 2, 0}, VerifyMode::LinearAlgebra, opts);
  INFO(rep.to_text());
  CHECK(rep.overall() == "pass");
}

TEST_CASE("construction is deterministic for a fixed seed") {
  Projection m1(ProjectionProfile{2, 5, 3, 2}, Field::rationals(), 11);
  Projection m2(ProjectionProfile{2, 5, 3, 2}, Field::rationals(), 11);
  REQUIRE(m1.effective_seed() == m2.effective_seed());
  for (std::size_t r = 0; r < m1.hilbert_burch().L.rows(); ++r) {
    for (std::size_t c = 0; c < m1.hilbert_burch().L.cols(); ++c) {
      CHECK(m1.hilbert_burch().L.at(r, c) == m2.hilbert_burch().L.at(r, c));
    }
  }
  for (std::size_t i = 0; i < m1.linear_relations().size(); ++i) {
    CHECK(m1.linear_relations()[i].to_string() == m2.linear_relations()[i].to_string());
  }
}

TEST_CASE("prime field construction works") {
  Projection m(ProjectionProfile{2, 4, 2, 0}, Field::prime(Field::kDefaultPrime), 1);
  CHECK(m.jd_dimension() == 12);
  VerifyOptions opts;
  opts.field = Field::prime(Field::kDefaultPrime);
  VerificationReport rep =
      verify_projection(ProjectionProfile{2, 4, 2, 0}, VerifyMode::LinearAlgebra, opts);
  CHECK(rep.overall() == "pass");
}
