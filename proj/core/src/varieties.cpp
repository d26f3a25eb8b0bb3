#include "tensorideals/varieties.hpp"

#include <algorithm>
#include <map>

#include "tensorideals/errors.hpp"
#include "tensorideals/weak_generic.hpp"

namespace tid {

Polynomial Parameterization::pullback(const Polynomial& p) const {
  require_same_registry(p.registry(), ambient);
  std::map<VarId, Polynomial> images;
  for (VarId v : p.support()) images.emplace(v, targets.at(v));
  return p.substitute(params, images);
}

void Parameterization::validate() const {
  if (targets.size() != ambient->var_count()) {
    throw IndexOutOfRange("one target per ambient variable required");
  }
  if (param_group_of.size() != params->var_count()) {
    throw IndexOutOfRange("group assignment arity");
  }
  std::optional<std::vector<std::uint32_t>> common;
  for (const auto& f : targets) {
    require_same_registry(f.registry(), params);
    auto md = f.multidegree(param_group_of, group_count);
    if (!md) throw InhomogeneousInput("parameterization target");
    if (common && *common != *md) throw InhomogeneousInput("targets of mixed multidegree");
    common = md;
  }
}

std::vector<std::uint32_t> Parameterization::multidegree() const {
  if (targets.empty()) return {};
  return *targets.front().multidegree(param_group_of, group_count);
}

Parameterization segre_veronese_map(const SymProfile& profile, Field field) {
  profile.validate();
  const std::size_t t = profile.factor_count();

  std::vector<std::string> wnames;
  std::vector<std::uint32_t> group_of;
  for (std::size_t j = 1; j <= t; ++j) {
    for (std::size_t i = 1; i <= profile.n[j - 1]; ++i) {
      wnames.push_back("w[" + std::to_string(j) + "," + std::to_string(i) + "]");
      group_of.push_back(static_cast<std::uint32_t>(j - 1));
    }
  }
  RegistryPtr params = VarRegistry::make(std::move(wnames), MonomialOrder::degrevlex(), field);

  auto canonical = enumerate_canonical_indices(profile);
  std::vector<std::string> xnames;
  xnames.reserve(canonical.size());
  for (const auto& ci : canonical) xnames.push_back(ci.label());
  RegistryPtr ambient = VarRegistry::make(std::move(xnames), MonomialOrder::degrevlex(), field);

  std::vector<std::size_t> group_offset(t, 0);
  {
    std::size_t off = 0;
    for (std::size_t j = 0; j < t; ++j) {
      group_offset[j] = off;
      off += profile.n[j];
    }
  }

  Parameterization p;
  p.ambient = ambient;
  p.params = params;
  p.param_group_of = std::move(group_of);
  p.group_count = static_cast<std::uint32_t>(t);
  p.targets.reserve(canonical.size());
  for (const auto& ci : canonical) {
    std::vector<std::pair<VarId, std::uint32_t>> exps;
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t idx : ci.blocks[j]) {
        exps.emplace_back(static_cast<VarId>(group_offset[j] + idx - 1), 1);
      }
    }
    p.targets.push_back(
        Polynomial::term(params, Monomial::from_pairs(std::move(exps)), Scalar::one(field)));
  }
  p.validate();
  return p;
}

PullbackCheck pullback_vanishes(const std::vector<Polynomial>& polys, const Parameterization& p) {
  PullbackCheck out;
  for (const auto& f : polys) {
    Polynomial image = p.pullback(f);
    if (!image.is_zero()) {
      out.vanishes = false;
      out.witness = f;
      out.witness_image = image;
      return out;
    }
  }
  return out;
}

namespace {

struct KernelMatrix {
  std::vector<Monomial> ambient_monomials;  // row order
  ScalarMatrix matrix;
};

KernelMatrix pullback_matrix(const Parameterization& p, std::uint32_t degree) {
  const RegistryPtr& amb = p.ambient;
  const RegistryPtr& par = p.params;
  const Field field = amb->field();

  auto exps = exponents_of_degree(amb->var_count(), degree);
  std::vector<Monomial> rows;
  rows.reserve(exps.size());
  for (const auto& e : exps) {
    std::vector<std::pair<VarId, std::uint32_t>> pairs;
    for (VarId v = 0; v < e.size(); ++v) {
      if (e[v]) pairs.emplace_back(v, e[v]);
    }
    rows.push_back(Monomial::from_pairs(std::move(pairs)));
  }
  std::sort(rows.begin(), rows.end(), [&](const Monomial& a, const Monomial& b) {
    return Monomial::cmp(a, b, amb->order()) > 0;
  });

  // Pullbacks with a per-variable power cache.
  std::map<VarId, std::vector<Polynomial>> pows;
  auto power = [&](VarId v, std::uint32_t e) -> const Polynomial& {
    auto& cache = pows[v];
    if (cache.empty()) cache.push_back(p.targets.at(v));
    while (cache.size() < e) cache.push_back(cache.back() * p.targets.at(v));
    return cache[e - 1];
  };
  std::vector<Polynomial> images;
  images.reserve(rows.size());
  for (const auto& m : rows) {
    Polynomial img = Polynomial::constant(par, Scalar::one(field));
    for (const auto& [v, e] : m.exponents()) img = img * power(v, e);
    images.push_back(std::move(img));
  }

  auto cmp = [&](const Monomial& a, const Monomial& b) {
    return Monomial::cmp(a, b, par->order()) > 0;
  };
  std::map<Monomial, std::size_t, decltype(cmp)> cols(cmp);
  for (const auto& img : images) {
    for (const auto& t : img.terms()) cols.emplace(t.mono, 0);
  }
  std::size_t next = 0;
  for (auto& [m, idx] : cols) idx = next++;

  ScalarMatrix mat(field, rows.size(), next);
  for (std::size_t r = 0; r < images.size(); ++r) {
    for (const auto& t : images[r].terms()) mat.set(r, cols.at(t.mono), t.coeff);
  }
  return {std::move(rows), std::move(mat)};
}

}  // namespace

std::size_t graded_kernel_dim(const Parameterization& p, std::uint32_t degree) {
  if (degree < 1) throw InvalidProfile("kernel degree must be >= 1");
  KernelMatrix km = pullback_matrix(p, degree);
  return km.matrix.rows() - exact_rank(km.matrix);
}

GradedKernel graded_kernel(const Parameterization& p, std::uint32_t degree) {
  if (degree < 1) throw InvalidProfile("kernel degree must be >= 1");
  KernelMatrix km = pullback_matrix(p, degree);
  KernelBasis kb = left_kernel(km.matrix);
  GradedKernel out;
  out.dim = kb.dim;
  for (const auto& row : kb.rows) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_zero()) terms.push_back({km.ambient_monomials[i], row[i]});
    }
    out.basis.push_back(Polynomial::from_terms(p.ambient, std::move(terms)));
  }
  return out;
}

std::size_t ideal_graded_dimension(const RegistryPtr& reg,
                                   const std::vector<Polynomial>& generators,
                                   std::uint32_t degree) {
  std::vector<Polynomial> products;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    auto d = g.homogeneous_degree();
    if (!d) throw InhomogeneousInput("ideal generator");
    if (*d > degree) continue;
    auto exps = exponents_of_degree(reg->var_count(), degree - *d);
    for (const auto& e : exps) {
      std::vector<std::pair<VarId, std::uint32_t>> pairs;
      for (VarId v = 0; v < e.size(); ++v) {
        if (e[v]) pairs.emplace_back(v, e[v]);
      }
      products.push_back(g.times_term(Monomial::from_pairs(std::move(pairs)),
                                      Scalar::one(reg->field())));
    }
  }
  return span_dimension(products, degree);
}

VerificationReport verify_segre_veronese(const SymProfile& profile, VerifyMode mode,
                                         const VerifyOptions& opts) {
  profile.validate();
  VerificationReport rep;
  rep.theorem = "segre-veronese";
  rep.profile = {{"n", profile.n}, {"d", profile.d}};
  rep.field = opts.field.to_string();
  rep.seed = opts.seed;

  Hypermatrix a = generic_sym_hypermatrix(profile, opts.field);
  std::vector<Polynomial> minors = a.d_minors(2);
  Parameterization map = segre_veronese_map(profile, opts.field);

  // The hypermatrix registry and the map's ambient registry are structurally
  // identical; move the minors over once.
  std::vector<Polynomial> minors_amb;
  minors_amb.reserve(minors.size());
  for (const auto& m : minors) minors_amb.push_back(m.transport(map.ambient));

  PullbackCheck pc = pullback_vanishes(minors_amb, map);
  rep.add_pass_fail("pullback-containment", pc.vanishes,
                    nlohmann::ordered_json(minors.size()), nlohmann::ordered_json(0),
                    pc.vanishes ? "" : "witness: " + pc.witness->to_string());

  const std::size_t lhs2 = span_dimension(minors_amb, 2);
  const std::size_t rhs2 = graded_kernel_dim(map, 2);
  rep.add_pass_fail("degree-2-dimension", lhs2 == rhs2, nlohmann::ordered_json(lhs2),
                    nlohmann::ordered_json(rhs2));

  const std::size_t lhs3 = ideal_graded_dimension(map.ambient, minors_amb, 3);
  const std::size_t rhs3 = graded_kernel_dim(map, 3);
  rep.add_pass_fail("degree-3-generation", lhs3 == rhs3, nlohmann::ordered_json(lhs3),
                    nlohmann::ordered_json(rhs3),
                    lhs3 == rhs3 ? "consistent with ideal generation in degree 2" : "");

  if (mode == VerifyMode::Groebner) {
    try {
      IdealBasis lhs_ideal(map.ambient, minors_amb);
      IdealBasis kernel = kernel_of_map(map.ambient, map.params, map.targets, opts.budget);
      bool equal = ideal_equal(lhs_ideal, kernel, opts.budget);
      rep.add_pass_fail("groebner-ideal-equality", equal);
    } catch (const ResourceBudgetExceeded& e) {
      rep.add_inconclusive("groebner-ideal-equality", e.what());
    }
  }
  return rep;
}

}  // namespace tid
