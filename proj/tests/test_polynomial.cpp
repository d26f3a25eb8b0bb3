#include <doctest.h>

#include <algorithm>

#include "tensorideals/form_matrix.hpp"
#include "tensorideals/polynomial.hpp"
#include "tensorideals/rng.hpp"
#include "tensorideals/monomial.hpp"

using namespace tid;

namespace {

RegistryPtr xyz() { return VarRegistry::make({"x", "y", "z"}); }

Polynomial var(const RegistryPtr& r, const std::string& n) {
  return Polynomial::variable(r, r->id(n));
}

}  // namespace

TEST_CASE("basic arithmetic") {
  auto r = xyz();
  Polynomial x = var(r, "x"), y = var(r, "y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(x + Polynomial::zero(r) == x);
  Polynomial one = Polynomial::constant(r, Scalar::of_int(1, r->field()));
  CHECK((x + one) * (x + one) ==
        x * x + x.scaled(Scalar::of_int(2, r->field())) + one);
  CHECK((x + one).pow(2) == x * x + x.scaled(Scalar::of_int(2, r->field())) + one);
}

TEST_CASE("registry mismatch is rejected") {
  auto r1 = xyz();
  auto r2 = VarRegistry::make({"a", "b"});
  CHECK_THROWS_AS(var(r1, "x") + var(r2, "a"), RegistryMismatch);
  // structurally equal registries interoperate
  auto r3 = VarRegistry::make({"x", "y", "z"});
  CHECK(var(r1, "x") == var(r3, "x"));
}

TEST_CASE("monomial order: degrevlex") {
  auto r = xyz();
  // x^2 y > x z^2 under degrevlex(x>y>z): equal degree, last nonzero of
  // difference is at z and negative.
  Monomial a = Monomial::from_pairs({{0, 2}, {1, 1}});
  Monomial b = Monomial::from_pairs({{0, 1}, {2, 2}});
  CHECK(Monomial::cmp(a, b, r->order()) > 0);
  // degree wins first
  Monomial c = Monomial::from_pairs({{2, 4}});
  CHECK(Monomial::cmp(c, a, r->order()) > 0);
  // classic: x y > z^2? degree equal; diff = (1,1,-2): last nonzero negative -> xy > z^2
  Monomial xy = Monomial::from_pairs({{0, 1}, {1, 1}});
  Monomial z2 = Monomial::from_pairs({{2, 2}});
  CHECK(Monomial::cmp(xy, z2, r->order()) > 0);
}

TEST_CASE("monomial order: lex and block") {
  Monomial x = Monomial::variable(0);
  Monomial y3 = Monomial::from_pairs({{1, 3}});
  CHECK(Monomial::cmp(x, y3, MonomialOrder::lex()) > 0);
  // Block order eliminating {0}: any monomial containing var 0 dominates
  // monomials without it.
  MonomialOrder blk = MonomialOrder::block(1);
  CHECK(Monomial::cmp(x, y3, blk) > 0);
  Monomial y = Monomial::variable(1);
  Monomial z2 = Monomial::from_pairs({{2, 2}});
  // No var 0 in either: falls through to degrevlex on the suffix.
  CHECK(Monomial::cmp(z2, y, blk) > 0);
}

TEST_CASE("to_string format is stable") {
  auto r = xyz();
  Polynomial x = var(r, "x"), y = var(r, "y");
  Polynomial p = x * x - y.scaled(Scalar::of_rational(2, 3));
  CHECK(p.to_string() == "+1\xc2\xb7x^2 -2/3\xc2\xb7y");
  CHECK(Polynomial::zero(r).to_string() == "0");
  Polynomial c = Polynomial::constant(r, Scalar::of_rational(-7, 2));
  CHECK(c.to_string() == "-7/2");
}

TEST_CASE("substitution") {
  // Segre P^1 x P^1 pullback: xw - yz vanishes on x->st, y->s^2, z->t^2, w->st.
  auto amb = VarRegistry::make({"x", "y", "z", "w"});
  auto par = VarRegistry::make({"s", "t"});
  Polynomial s = var(par, "s"), t = var(par, "t");
  std::map<VarId, Polynomial> images{
      {amb->id("x"), s * t}, {amb->id("y"), s * s}, {amb->id("z"), t * t}, {amb->id("w"), s * t}};
  Polynomial p = var(amb, "x") * var(amb, "w") - var(amb, "y") * var(amb, "z");
  CHECK(p.substitute(par, images).is_zero());

  // identity assignment
  std::map<VarId, Polynomial> id_images;
  for (VarId v = 0; v < amb->var_count(); ++v) id_images.emplace(v, Polynomial::variable(amb, v));
  CHECK(p.substitute(amb, id_images) == p);

  // all-zero assignment
  std::map<VarId, Polynomial> zero_images;
  for (VarId v = 0; v < amb->var_count(); ++v) zero_images.emplace(v, Polynomial::zero(amb));
  Polynomial q = var(amb, "x") * var(amb, "x") + var(amb, "y");
  CHECK(q.substitute(amb, zero_images).is_zero());

  // missing assignment
  std::map<VarId, Polynomial> partial{{amb->id("x"), s}};
  CHECK_THROWS_AS(p.substitute(par, partial), UnassignedVariable);
}

TEST_CASE("homogeneity tracking") {
  auto r = xyz();
  Polynomial x = var(r, "x"), y = var(r, "y");
  CHECK(*(x * x + y * y).homogeneous_degree() == 2);
  CHECK(!(x * x + y).homogeneous_degree().has_value());
  CHECK(!Polynomial::zero(r).homogeneous_degree().has_value());
}

TEST_CASE("minors by Laplace expansion") {
  auto r = VarRegistry::make({"x", "y", "z", "w"});
  FormMatrix m(r, 2, 2);
  m.set(0, 0, var(r, "x"));
  m.set(0, 1, var(r, "y"));
  m.set(1, 0, var(r, "z"));
  m.set(1, 1, var(r, "w"));
  Polynomial det = m.minor_det({0, 1}, {0, 1});
  CHECK(det == var(r, "x") * var(r, "w") - var(r, "y") * var(r, "z"));
  // 1x1 minor is the entry
  CHECK(m.minor_det({1}, {0}) == var(r, "z"));
  CHECK_THROWS_AS(m.minor_det({0, 1}, {0}), NotSquareSelection);

  auto r3 = xyz();
  FormMatrix diag(r3, 3, 3);
  diag.set(0, 0, var(r3, "x"));
  diag.set(1, 1, var(r3, "y"));
  diag.set(2, 2, var(r3, "z"));
  CHECK(diag.det() == var(r3, "x") * var(r3, "y") * var(r3, "z"));
}

TEST_CASE("determinant multilinearity and cofactor consistency") {
  SplitMix64 rng(11);
  auto r = xyz();
  for (int round = 0; round < 10; ++round) {
    FormMatrix m(r, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        std::vector<Term> terms;
        for (VarId v = 0; v < 3; ++v) {
          long c = rng.range(-4, 4);
          if (c) terms.push_back({Monomial::variable(v), Scalar::of_int(c, r->field())});
        }
        m.set(i, j, Polynomial::from_terms(r, std::move(terms)));
      }
    }
    Polynomial det = m.det();
    // scaling one row scales the determinant
    FormMatrix scaled = m;
    Scalar c5 = Scalar::of_int(5, r->field());
    for (std::size_t j = 0; j < 3; ++j) scaled.set(1, j, m.at(1, j).scaled(c5));
    CHECK(scaled.det() == det.scaled(c5));
    // cofactor expansion along row 0 and along row 2 agree with det
    for (std::size_t row : {std::size_t{0}, std::size_t{2}}) {
      Polynomial acc(r);
      for (std::size_t c = 0; c < 3; ++c) {
        std::vector<std::size_t> rs, cs;
        for (std::size_t i = 0; i < 3; ++i) {
          if (i != row) rs.push_back(i);
        }
        for (std::size_t j = 0; j < 3; ++j) {
          if (j != c) cs.push_back(j);
        }
        Polynomial term = m.at(row, c) * m.minor_det(rs, cs);
        acc = ((row + c) % 2 == 0) ? acc + term : acc - term;
      }
      CHECK(acc == det);
    }
  }
}

namespace {

// Dense reference implementations of the three orders.
int dense_cmp(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
              const MonomialOrder& o) {
  auto lex = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  };
  auto degrevlex = [&](std::size_t from) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = from; i < a.size(); ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > from;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  };
  switch (o.kind) {
    case OrderKind::Lex:
      return lex(0, a.size());
    case OrderKind::DegRevLex:
      return degrevlex(0);
    case OrderKind::Block: {
      int c = lex(0, o.block_split);
      return c != 0 ? c : degrevlex(o.block_split);
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("monomial orders agree with dense reference implementations") {
  SplitMix64 rng(101);
  const std::size_t nvars = 5;
  for (int round = 0; round < 2000; ++round) {
    std::vector<std::uint32_t> ea(nvars), eb(nvars);
    std::vector<std::pair<VarId, std::uint32_t>> pa, pb;
    for (VarId v = 0; v < nvars; ++v) {
      ea[v] = static_cast<std::uint32_t>(rng.below(4));
      eb[v] = static_cast<std::uint32_t>(rng.below(4));
      if (ea[v]) pa.emplace_back(v, ea[v]);
      if (eb[v]) pb.emplace_back(v, eb[v]);
    }
    Monomial a = Monomial::from_pairs(pa), b = Monomial::from_pairs(pb);
    for (const MonomialOrder& o : {MonomialOrder::degrevlex(), MonomialOrder::lex(),
                                   MonomialOrder::block(2), MonomialOrder::block(4)}) {
      int got = Monomial::cmp(a, b, o);
      int want = dense_cmp(ea, eb, o);
      CHECK((got == 0) == (want == 0));
      CHECK((got > 0) == (want > 0));
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  SplitMix64 rng(77);
  auto r = xyz();
  auto random_poly = [&]() {
    std::vector<Term> terms;
    for (int t = 0; t < 4; ++t) {
      std::vector<std::pair<VarId, std::uint32_t>> pairs;
      for (VarId v = 0; v < 3; ++v) {
        std::uint32_t e = static_cast<std::uint32_t>(rng.below(3));
        if (e) pairs.emplace_back(v, e);
      }
      long c = rng.range(-5, 5);
      if (c) terms.push_back({Monomial::from_pairs(std::move(pairs)),
                              Scalar::of_int(c, r->field())});
    }
    return Polynomial::from_terms(r, std::move(terms));
  };
  for (int round = 0; round < 100; ++round) {
    Polynomial a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a - a == Polynomial::zero(r));
  }
}

TEST_CASE("canonical sign and polynomial ordering") {
  auto r = xyz();
  Polynomial x = var(r, "x"), y = var(r, "y");
  Polynomial p = y - x;  // leading term -x
  Polynomial q = p.canonical_sign();
  CHECK(q == x - y);
  CHECK(p.canonical_sign() == (x - y).canonical_sign());
  CHECK(Polynomial::cmp(p, p) == 0);
}
