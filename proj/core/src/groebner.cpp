#include "tensorideals/groebner.hpp"

#include <algorithm>
#include <queue>

#include "tensorideals/errors.hpp"

namespace tid {

IdealBasis::IdealBasis(RegistryPtr reg, std::vector<Polynomial> generators)
    : reg_(std::move(reg)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_registry(reg_, g.registry());
    gens_.push_back(g.canonical_sign());
  }
  std::sort(gens_.begin(), gens_.end(),
            [](const Polynomial& a, const Polynomial& b) { return Polynomial::cmp(a, b) < 0; });
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

const std::vector<Polynomial>& IdealBasis::groebner() const {
  if (!gb_) throw Error("groebner basis not computed");
  return *gb_;
}

IdealBasis IdealBasis::with_cache(RegistryPtr reg, std::vector<Polynomial> generators,
                                  std::vector<Polynomial> reduced_gb) {
  IdealBasis b(std::move(reg), std::move(generators));
  b.gb_ = std::move(reduced_gb);
  return b;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial& lf = f.leading_term().mono;
  const Monomial& lg = g.leading_term().mono;
  Monomial l = Monomial::lcm(lf, lg);
  Polynomial a = f.times_term(lf.quotient_of(l), f.leading_term().coeff.inverse());
  Polynomial b = g.times_term(lg.quotient_of(l), g.leading_term().coeff.inverse());
  return a - b;
}

namespace {

// Full reduction against `basis` (assumed sorted by ascending leading
// monomial); deterministic: the first divisor in storage order wins.
Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis,
                       const std::size_t* term_cap = nullptr) {
  Polynomial remainder(p.registry());
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      const Term& lg = g.leading_term();
      if (lg.mono.divides(lt.mono)) {
        p = p - g.times_term(lg.mono.quotient_of(lt.mono), lt.coeff / lg.coeff);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder = remainder + Polynomial::term(p.registry(), lt.mono, lt.coeff);
      p = p - Polynomial::term(p.registry(), lt.mono, lt.coeff);
    }
    if (term_cap && p.term_count() > *term_cap) {
      throw ResourceBudgetExceeded("polynomial grew past " + std::to_string(*term_cap) + " terms");
    }
  }
  return remainder;
}

struct Pair {
  std::uint32_t deg;  // total degree of the lcm
  Monomial lcm;
  std::size_t i, j;
};

struct PairCmp {
  MonomialOrder order;
  // Normal strategy: smallest lcm degree first, ties by the monomial order,
  // then by indices. priority_queue pops the *largest*, so invert.
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg > b.deg;
    int c = Monomial::cmp(a.lcm, b.lcm, order);
    if (c != 0) return c > 0;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

std::vector<Polynomial> buchberger(const RegistryPtr& reg, std::vector<Polynomial> input,
                                   const GroebnerBudget& budget) {
  const MonomialOrder order = reg->order();
  std::vector<Polynomial> basis;
  for (auto& g : input) {
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return Monomial::cmp(a.leading_term().mono, b.leading_term().mono, order) < 0;
  });
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  std::priority_queue<Pair, std::vector<Pair>, PairCmp> queue(PairCmp{order});
  // Pairs already popped, whether reduced or skipped by a criterion.
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading_term().mono, basis[j].leading_term().mono);
      queue.push(Pair{l.degree(), l, i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  std::uint64_t reductions = 0;
  while (!queue.empty()) {
    Pair pr = queue.top();
    queue.pop();
    treated.emplace(pr.i, pr.j);

    const Monomial& li = basis[pr.i].leading_term().mono;
    const Monomial& lj = basis[pr.j].leading_term().mono;
    if (li.coprime(lj)) continue;  // product criterion
    // Chain criterion: some m with lm(m) | lcm and both side pairs treated.
    bool skip = false;
    for (std::size_t m = 0; m < basis.size() && !skip; ++m) {
      if (m == pr.i || m == pr.j) continue;
      if (!basis[m].leading_term().mono.divides(pr.lcm)) continue;
      auto key_im = std::minmax(pr.i, m);
      auto key_jm = std::minmax(pr.j, m);
      if (treated.count({key_im.first, key_im.second}) &&
          treated.count({key_jm.first, key_jm.second})) {
        skip = true;
      }
    }
    if (skip) continue;

    if (++reductions > budget.max_pair_reductions) {
      throw ResourceBudgetExceeded("S-pair reductions past " +
                                   std::to_string(budget.max_pair_reductions));
    }
    Polynomial r = reduce_full(s_polynomial(basis[pr.i], basis[pr.j]), basis,
                               &budget.max_poly_terms);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    if (basis.size() > budget.max_basis_size) {
      throw ResourceBudgetExceeded("basis size past " + std::to_string(budget.max_basis_size));
    }
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another
  // kept one; process by ascending leading monomial so divisors are kept.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    int c = Monomial::cmp(a.leading_term().mono, b.leading_term().mono, order);
    if (c != 0) return c < 0;
    return Polynomial::cmp(a, b) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool divisible = false;
    for (const auto& h : minimal) {
      if (h.leading_term().mono.divides(g.leading_term().mono)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) minimal.push_back(g);
  }
  // Tail-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Polynomial red = reduce_full(minimal[i], others).monic();
      if (!(red == minimal[i])) {
        minimal[i] = red;
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return Monomial::cmp(a.leading_term().mono, b.leading_term().mono, order) < 0;
  });
  return minimal;
}

}  // namespace

IdealBasis groebner_basis(const IdealBasis& ideal, const GroebnerBudget& budget) {
  if (ideal.has_groebner()) return ideal;
  std::vector<Polynomial> gb = buchberger(ideal.registry(), ideal.generators(), budget);
  return IdealBasis::with_cache(ideal.registry(), ideal.generators(), std::move(gb));
}

Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal) {
  require_same_registry(p.registry(), ideal.registry());
  return reduce_full(p, ideal.groebner());
}

bool ideal_member(const Polynomial& p, const IdealBasis& ideal) {
  return normal_form(p, ideal).is_zero();
}

bool ideal_equal(const IdealBasis& lhs, const IdealBasis& rhs, const GroebnerBudget& budget) {
  require_same_registry(lhs.registry(), rhs.registry());
  IdealBasis a = groebner_basis(lhs, budget);
  IdealBasis b = groebner_basis(rhs, budget);
  const auto& ga = a.groebner();
  const auto& gb = b.groebner();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (!(ga[i] == gb[i].transport(a.registry()))) return false;
  }
  return true;
}

IdealBasis eliminate(const IdealBasis& ideal, const std::set<VarId>& drop,
                     const GroebnerBudget& budget) {
  const RegistryPtr& reg = ideal.registry();
  if (drop.empty()) return ideal;
  for (VarId v : drop) {
    if (v >= reg->var_count()) throw IndexOutOfRange("eliminated variable");
  }

  std::vector<std::string> elim_names, kept_names;
  for (VarId v = 0; v < reg->var_count(); ++v) {
    if (drop.count(v)) {
      elim_names.push_back(reg->name(v));
    } else {
      kept_names.push_back(reg->name(v));
    }
  }
  std::vector<std::string> all_names = elim_names;
  all_names.insert(all_names.end(), kept_names.begin(), kept_names.end());
  RegistryPtr elim_reg = VarRegistry::make(
      std::move(all_names), MonomialOrder::block(static_cast<VarId>(elim_names.size())),
      reg->field());

  std::vector<Polynomial> moved;
  moved.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) moved.push_back(g.transport(elim_reg));
  IdealBasis shifted = groebner_basis(IdealBasis(elim_reg, std::move(moved)), budget);

  RegistryPtr kept_reg =
      VarRegistry::make(std::move(kept_names), MonomialOrder::degrevlex(), reg->field());
  std::vector<Polynomial> kept;
  for (const auto& g : shifted.groebner()) {
    bool touches_dropped = false;
    for (VarId v : g.support()) {
      if (v < elim_names.size()) {
        touches_dropped = true;
        break;
      }
    }
    if (!touches_dropped) kept.push_back(g.transport(kept_reg));
  }
  // The retained polynomials are a reduced basis for the intersection ideal:
  // the block order restricts to DegRevLex on the kept variables.
  std::vector<Polynomial> gens = kept;
  return IdealBasis::with_cache(kept_reg, std::move(gens), std::move(kept));
}

IdealBasis kernel_of_map(const RegistryPtr& ambient_reg, const RegistryPtr& param_reg,
                         const std::vector<Polynomial>& targets, const GroebnerBudget& budget) {
  if (targets.size() != ambient_reg->var_count()) {
    throw IndexOutOfRange("one target per ambient variable required");
  }
  if (!(ambient_reg->field() == param_reg->field())) {
    throw FieldMismatch("ambient vs parameter ring");
  }
  std::optional<std::uint32_t> common;
  for (const auto& f : targets) {
    require_same_registry(f.registry(), param_reg);
    auto d = f.homogeneous_degree();
    if (!d) {
      if (!f.is_zero()) throw InhomogeneousInput("kernel_of_map target");
      continue;
    }
    if (common && *common != *d) throw InhomogeneousInput("kernel_of_map targets of mixed degree");
    common = d;
  }

  // Combined ring [params..., ambient...] with the parameters eliminated.
  std::vector<std::string> names = param_reg->names();
  names.insert(names.end(), ambient_reg->names().begin(), ambient_reg->names().end());
  RegistryPtr joint = VarRegistry::make(
      std::move(names), MonomialOrder::block(static_cast<VarId>(param_reg->var_count())),
      param_reg->field());

  std::vector<Polynomial> gens;
  gens.reserve(targets.size());
  for (VarId v = 0; v < ambient_reg->var_count(); ++v) {
    Polynomial x = Polynomial::variable(joint, joint->id(ambient_reg->name(v)));
    gens.push_back(x - targets[v].transport(joint));
  }
  std::set<VarId> drop;
  for (VarId v = 0; v < param_reg->var_count(); ++v) drop.insert(v);
  IdealBasis eliminated = eliminate(IdealBasis(joint, std::move(gens)), drop, budget);

  // Transport to the caller's ambient registry.
  std::vector<Polynomial> gens_out, gb_out;
  for (const auto& g : eliminated.generators()) gens_out.push_back(g.transport(ambient_reg));
  for (const auto& g : eliminated.groebner()) gb_out.push_back(g.transport(ambient_reg));
  if (ambient_reg->order() == eliminated.registry()->order()) {
    return IdealBasis::with_cache(ambient_reg, std::move(gens_out), std::move(gb_out));
  }
  return IdealBasis(ambient_reg, std::move(gens_out));
}

}  // namespace tid
