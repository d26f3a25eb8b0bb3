#include <doctest.h>

#include <set>

#include "tensorideals/rng.hpp"
#include "tensorideals/groebner.hpp"
#include "tensorideals/hypermatrix.hpp"

using namespace tid;

namespace {

Polynomial var(const RegistryPtr& r, const std::string& n) {
  return Polynomial::variable(r, r->id(n));
}

// Post-hoc Buchberger criterion: every S-polynomial of the basis reduces to 0.
bool spolys_reduce_to_zero(const IdealBasis& ideal) {
  const auto& g = ideal.groebner();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j]), ideal).is_zero()) return false;
    }
  }
  return true;
}

std::string dump(const std::vector<Polynomial>& polys) {
  std::string out;
  for (const auto& p : polys) out += p.to_string() + "\n";
  return out;
}

}  // namespace

TEST_CASE("reduced basis of {x^2 - y, y^2} is itself") {
  // Hand Buchberger: S(x^2-y, y^2) = y^2(x^2-y) - x^2 y^2 = -y^3, which the
  // divisor y^2 reduces to zero; the two generators are already reduced.
  auto r = VarRegistry::make({"x", "y"});
  Polynomial x = var(r, "x"), y = var(r, "y");
  IdealBasis basis = groebner_basis(IdealBasis(r, {x * x - y, y * y}));
  REQUIRE(basis.groebner().size() == 2);
  CHECK(basis.groebner()[0] == y * y);
  CHECK(basis.groebner()[1] == x * x - y);
  CHECK(spolys_reduce_to_zero(basis));
}

TEST_CASE("degenerate inputs") {
  auto r = VarRegistry::make({"x", "y"});
  Polynomial x = var(r, "x");
  IdealBasis dup(r, {x, x});
  CHECK(dup.generators().size() == 1);
  IdealBasis empty = groebner_basis(IdealBasis(r, {}));
  CHECK(empty.groebner().empty());
}

TEST_CASE("normal form") {
  auto r = VarRegistry::make({"x", "y"});
  Polynomial x = var(r, "x"), y = var(r, "y");
  IdealBasis i1 = groebner_basis(IdealBasis(r, {x * x - y, y * y}));
  for (const auto& g : i1.generators()) CHECK(normal_form(g, i1).is_zero());

  IdealBasis ix = groebner_basis(IdealBasis(r, {x}));
  Polynomial one = Polynomial::constant(r, Scalar::one(r->field()));
  CHECK(normal_form(one, ix) == one);

  Hypermatrix m22 = Hypermatrix::generic({2, 2});
  IdealBasis i2 = groebner_basis(m22.ideal_of_minors(2));
  const auto& reg = m22.registry();
  Polynomial det = var(reg, "x[1,1]") * var(reg, "x[2,2]") - var(reg, "x[1,2]") * var(reg, "x[2,1]");
  CHECK(normal_form(det, i2).is_zero());
  CHECK(ideal_member(det, i2));
}

TEST_CASE("ideal equality") {
  auto r = VarRegistry::make({"x", "y"});
  Polynomial x = var(r, "x"), y = var(r, "y");
  CHECK(ideal_equal(IdealBasis(r, {x, y}), IdealBasis(r, {x + y, y})));
  CHECK(!ideal_equal(IdealBasis(r, {x}), IdealBasis(r, {x * x})));
}

TEST_CASE("elimination: the cusp") {
  auto r = VarRegistry::make({"t", "x", "y"});
  Polynomial t = var(r, "t"), x = var(r, "x"), y = var(r, "y");
  IdealBasis curve(r, {x - t * t, y - t * t * t});
  IdealBasis kept = eliminate(curve, {r->id("t")});
  REQUIRE(kept.generators().size() == 1);
  // x^3 - y^2 up to sign canonicalization
  auto rr = kept.registry();
  Polynomial expected = var(rr, "x").pow(3) - var(rr, "y").pow(2);
  CHECK(kept.generators()[0] == expected.canonical_sign());
}

TEST_CASE("eliminate nothing returns the ideal unchanged") {
  auto r = VarRegistry::make({"x", "y"});
  IdealBasis i(r, {var(r, "x") - var(r, "y")});
  IdealBasis same = eliminate(i, {});
  CHECK(same.generators() == i.generators());
}

TEST_CASE("elimination with a repeated coordinate: Segre P1xP1") {
  auto r = VarRegistry::make({"s", "t", "x", "y", "z", "w"});
  Polynomial s = var(r, "s"), t = var(r, "t");
  IdealBasis graph(r, {var(r, "x") - s * t, var(r, "y") - s * s, var(r, "z") - t * t,
                       var(r, "w") - s * t});
  IdealBasis kept = eliminate(graph, {r->id("s"), r->id("t")});
  auto rr = kept.registry();
  Polynomial x = var(rr, "x"), y = var(rr, "y"), z = var(rr, "z"), w = var(rr, "w");
  CHECK(ideal_member(x - w, kept));
  CHECK(ideal_member(x * w - y * z, kept));
  CHECK(!ideal_member(x, kept));
}

TEST_CASE("kernel of the twisted cubic parameterization") {
  auto par = VarRegistry::make({"s", "t"});
  auto amb = VarRegistry::make({"x0", "x1", "x2", "x3"});
  Polynomial s = var(par, "s"), t = var(par, "t");
  std::vector<Polynomial> targets{s.pow(3), s.pow(2) * t, s * t.pow(2), t.pow(3)};
  IdealBasis kernel = kernel_of_map(amb, par, targets);
  // the rational normal cubic is cut out by three quadrics
  REQUIRE(kernel.groebner().size() == 3);
  for (const auto& g : kernel.groebner()) CHECK(*g.homogeneous_degree() == 2);
  Polynomial x0 = var(amb, "x0"), x1 = var(amb, "x1"), x2 = var(amb, "x2"), x3 = var(amb, "x3");
  IdealBasis cached = groebner_basis(kernel);
  CHECK(ideal_member(x0 * x2 - x1 * x1, cached));
  CHECK(ideal_member(x0 * x3 - x1 * x2, cached));
  CHECK(ideal_member(x1 * x3 - x2 * x2, cached));
}

TEST_CASE("kernel trivial cases") {
  auto par = VarRegistry::make({"w1"});
  auto amb = VarRegistry::make({"x"});
  IdealBasis kernel = kernel_of_map(amb, par, {var(par, "w1")});
  CHECK(kernel.generators().empty());

  // Veronese d=2 on P^1
  auto par2 = VarRegistry::make({"s", "t"});
  auto amb2 = VarRegistry::make({"x0", "x1", "x2"});
  Polynomial s = var(par2, "s"), t = var(par2, "t");
  IdealBasis k2 = kernel_of_map(amb2, par2, {s * s, s * t, t * t});
  REQUIRE(k2.generators().size() == 1);
  Polynomial conic = var(amb2, "x0") * var(amb2, "x2") - var(amb2, "x1") * var(amb2, "x1");
  CHECK(k2.generators()[0] == conic.canonical_sign());
}

TEST_CASE("kernel input validation") {
  auto par = VarRegistry::make({"s", "t"});
  auto amb = VarRegistry::make({"x", "y"});
  Polynomial s = var(par, "s"), t = var(par, "t");
  CHECK_THROWS_AS(kernel_of_map(amb, par, {s + s * t, t}), InhomogeneousInput);
  CHECK_THROWS_AS(kernel_of_map(amb, par, {s * s, t}), InhomogeneousInput);
}

TEST_CASE("determinism: identical inputs give bit-identical reduced bases") {
  Hypermatrix a = Hypermatrix::generic({2, 3});
  IdealBasis b1 = groebner_basis(a.ideal_of_minors(2));
  IdealBasis b2 = groebner_basis(a.ideal_of_minors(2));
  CHECK(dump(b1.groebner()) == dump(b2.groebner()));
  CHECK(spolys_reduce_to_zero(b1));
}

TEST_CASE("random quadric ideals satisfy the Buchberger criterion post hoc") {
  SplitMix64 rng(23);
  auto r = VarRegistry::make({"x", "y", "z"});
  auto monos = exponents_of_degree(3, 2);
  for (int round = 0; round < 8; ++round) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Term> terms;
      for (const auto& e : monos) {
        long c = rng.range(-2, 2);
        if (!c) continue;
        std::vector<std::pair<VarId, std::uint32_t>> pairs;
        for (VarId v = 0; v < 3; ++v) {
          if (e[v]) pairs.emplace_back(v, e[v]);
        }
        terms.push_back({Monomial::from_pairs(std::move(pairs)), Scalar::of_int(c, r->field())});
      }
      gens.push_back(Polynomial::from_terms(r, std::move(terms)));
    }
    IdealBasis basis = groebner_basis(IdealBasis(r, gens));
    CHECK(spolys_reduce_to_zero(basis));
    for (const auto& g : gens) CHECK(normal_form(g, basis).is_zero());
  }
}

TEST_CASE("resource budget raises and is catchable") {
  Hypermatrix a = Hypermatrix::generic({2, 2, 2});
  GroebnerBudget tiny;
  tiny.max_pair_reductions = 1;
  CHECK_THROWS_AS(groebner_basis(a.ideal_of_minors(2), tiny), ResourceBudgetExceeded);
}
