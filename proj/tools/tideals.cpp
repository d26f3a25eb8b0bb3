// Command line front end: construct determinantal generator sets and run the
// verification suites.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tensorideals/errors.hpp"
#include "tensorideals/hypermatrix.hpp"
#include "tensorideals/linalg.hpp"
#include "tensorideals/projection.hpp"
#include "tensorideals/report.hpp"
#include "tensorideals/symtensor.hpp"
#include "tensorideals/varieties.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct CommonOpts {
  std::uint64_t seed = 1;
  std::string field = "rationals";
  std::string mode = "la";
  std::string format = "text";
  std::uint64_t max_pairs = 0;  // 0 = default budget
};

tid::Field parse_field(const std::string& spec) {
  if (spec == "rationals" || spec == "q") return tid::Field::rationals();
  if (spec == "prime") return tid::Field::prime(tid::Field::kDefaultPrime);
  if (spec.rfind("prime:", 0) == 0) {
    return tid::Field::prime(std::stoull(spec.substr(6)));
  }
  throw CLI::ValidationError("--field", "expected rationals | prime | prime:<p>");
}

tid::VerifyMode parse_mode(const std::string& spec) {
  if (spec == "la" || spec == "linear-algebra") return tid::VerifyMode::LinearAlgebra;
  if (spec == "groebner" || spec == "gb") return tid::VerifyMode::Groebner;
  throw CLI::ValidationError("--mode", "expected la | groebner");
}

tid::VerifyOptions make_options(const CommonOpts& c) {
  tid::VerifyOptions opts;
  opts.field = parse_field(c.field);
  opts.seed = c.seed;
  if (const char* env = std::getenv("TIDEALS_MAX_PAIRS")) {
    opts.budget.max_pair_reductions = std::strtoull(env, nullptr, 10);
  }
  if (const char* env = std::getenv("TIDEALS_MAX_BASIS")) {
    opts.budget.max_basis_size = std::strtoull(env, nullptr, 10);
  }
  if (c.max_pairs) opts.budget.max_pair_reductions = c.max_pairs;
  return opts;
}

void add_common(CLI::App* app, CommonOpts& c) {
  app->add_option("--seed", c.seed, "PRNG seed (splitmix64)");
  app->add_option("--field", c.field, "Coefficient field: rationals | prime | prime:<p>");
  app->add_option("--mode", c.mode, "Verification mode: la | groebner");
  app->add_option("--format", c.format, "Output format: text | json");
  app->add_option("--max-pairs", c.max_pairs,
                  "Groebner budget: S-pair reduction cap (env TIDEALS_MAX_PAIRS)");
}

void print_report(const tid::VerificationReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.to_json().dump() << "\n";
  } else {
    std::cout << rep.to_text();
  }
}

ordered_json generators_json(const std::vector<tid::Polynomial>& gens) {
  ordered_json arr = ordered_json::array();
  for (const auto& g : gens) arr.push_back(g.to_string());
  return arr;
}

void print_generators(const ordered_json& header, const std::vector<tid::Polynomial>& gens,
                      const std::string& format, const std::string& empty_notice) {
  if (format == "json") {
    ordered_json j = header;
    j["count"] = gens.size();
    j["generators"] = generators_json(gens);
    std::cout << j.dump() << "\n";
    return;
  }
  for (auto it = header.begin(); it != header.end(); ++it) {
    std::cout << it.key() << ": " << it.value().dump() << "\n";
  }
  if (gens.empty()) {
    std::cout << empty_notice << "\n";
    return;
  }
  std::cout << "generators (" << gens.size() << "):\n";
  for (const auto& g : gens) std::cout << "  " << g.to_string() << "\n";
}

std::vector<std::size_t> parse_size_list(const std::vector<std::string>& raw) {
  // accepts both "2 2 2" and "2,2,2"
  std::vector<std::size_t> out;
  for (const auto& tok : raw) {
    std::size_t pos = 0;
    while (pos < tok.size()) {
      std::size_t comma = tok.find(',', pos);
      if (comma == std::string::npos) comma = tok.size();
      out.push_back(std::stoull(tok.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  return out;
}

int run_segre(const std::vector<std::size_t>& shape, const CommonOpts& c) {
  tid::Field field = parse_field(c.field);
  tid::Hypermatrix a = tid::Hypermatrix::generic(shape, field);
  std::vector<tid::Polynomial> gens = a.d_minors(2);
  ordered_json header;
  header["variety"] = "segre";
  header["shape"] = shape;
  header["field"] = field.to_string();
  header["variables"] = a.registry()->var_count();
  header["degree2_span"] = tid::span_dimension(gens, 2);
  print_generators(header, gens, c.format, "no 2-minors exist; the ideal is zero");
  return kExitPass;
}

int run_segre_veronese(const tid::SymProfile& profile, bool verify, const CommonOpts& c) {
  tid::VerifyOptions opts = make_options(c);
  if (!verify) {
    tid::Hypermatrix a = tid::generic_sym_hypermatrix(profile, opts.field);
    std::vector<tid::Polynomial> gens = a.d_minors(2);
    ordered_json header;
    header["variety"] = "segre-veronese";
    header["n"] = profile.n;
    header["d"] = profile.d;
    header["field"] = opts.field.to_string();
    header["variables"] = a.registry()->var_count();
    header["degree2_span"] = tid::span_dimension(gens, 2);
    print_generators(header, gens, c.format, "no 2-minors exist; the ideal is zero");
    return kExitPass;
  }
  tid::VerifyMode mode = parse_mode(c.mode);
  tid::VerificationReport rep = tid::run_with_prime_retry(
      opts.field, [&](tid::Field f) {
        tid::VerifyOptions o = opts;
        o.field = f;
        return tid::verify_segre_veronese(profile, mode, o);
      });
  print_report(rep, c.format);
  return rep.exit_code();
}

ordered_json matrix_json(const tid::FormMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t col = 0; col < m.cols(); ++col) row.push_back(m.at(r, col).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_project(const tid::ProjectionProfile& profile, bool verify, const CommonOpts& c) {
  tid::VerifyOptions opts = make_options(c);
  if (verify) {
    tid::VerifyMode mode = parse_mode(c.mode);
    tid::VerificationReport rep = tid::run_with_prime_retry(
        opts.field, [&](tid::Field f) {
          tid::VerifyOptions o = opts;
          o.field = f;
          return tid::verify_projection(profile, mode, o);
        });
    print_report(rep, c.format);
    return rep.exit_code();
  }

  tid::Projection model(profile, opts.field, opts.seed);
  ordered_json j;
  j["variety"] = "veronese-projection";
  j["profile"] = {{"n", profile.n}, {"d", profile.d}, {"t", profile.t}, {"k", profile.k}};
  j["field"] = opts.field.to_string();
  j["seed"] = model.effective_seed();
  if (!model.reseed_trail().empty()) j["reseed_trail"] = model.reseed_trail();
  j["L"] = matrix_json(model.hilbert_burch().L);
  j["F"] = generators_json(model.hilbert_burch().F);
  j["G"] = generators_json(model.hilbert_burch().G);
  j["relations"] = generators_json(model.linear_relations());
  j["identifications"] = generators_json(model.identification_relations());
  j["catalecticant"] = matrix_json(model.catalecticant());
  j["A"] = ordered_json::parse(model.build_A().to_json());
  if (c.format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"determinantal generator sets of Segre, Veronese, Segre-Veronese and "
               "projected-Veronese varieties, with exact verification"};
  app.require_subcommand(1);

  CommonOpts copts;

  auto* segre = app.add_subcommand("segre", "2-minor generators of the generic hypermatrix");
  std::vector<std::string> shape_raw;
  segre->add_option("shape", shape_raw, "factor sizes n1 n2 ...")->required();
  add_common(segre, copts);

  auto* sv = app.add_subcommand("segre-veronese",
                                "2-minor generators of the generic (n,d)-symmetric hypermatrix");
  std::vector<std::string> n_raw, d_raw;
  bool sv_verify = false;
  sv->add_option("-n,--dims", n_raw, "factor dimensions n1,n2,...")->required();
  sv->add_option("-d,--degrees", d_raw, "multidegree d1,d2,...")->required();
  sv->add_flag("--verify", sv_verify, "run the verification suite");
  add_common(sv, copts);

  auto* prj = app.add_subcommand("project",
                                 "projection of the d-uple Veronese of P^n from a degree-s "
                                 "codimension-2 scheme");
  tid::ProjectionProfile pp;
  bool prj_verify = false;
  prj->add_option("-n", pp.n, "ambient projective dimension")->required();
  prj->add_option("-d", pp.d, "embedding degree")->required();
  prj->add_option("-t", pp.t, "scheme parameter t")->required();
  prj->add_option("-k", pp.k, "scheme parameter k")->required();
  prj->add_flag("--verify", prj_verify, "run the verification suite");
  add_common(prj, copts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (segre->parsed()) {
      return run_segre(parse_size_list(shape_raw), copts);
    }
    if (sv->parsed()) {
      tid::SymProfile profile{parse_size_list(n_raw), parse_size_list(d_raw)};
      return run_segre_veronese(profile, sv_verify, copts);
    }
    if (prj->parsed()) {
      return run_project(pp, prj_verify, copts);
    }
  } catch (const tid::InvalidProfile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tid::GenericityFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const tid::ResourceBudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const tid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: malformed number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
