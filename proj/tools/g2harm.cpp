// Command-line front end: verify | basis | eigenfamily | morphism.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 input or parse
// error, 3 inconclusive (every sample fell inside the pole guard).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2harm/errors.hpp"
#include "g2harm/euclid7.hpp"
#include "g2harm/g2alg.hpp"
#include "g2harm/harmonic.hpp"
#include "g2harm/polyfn.hpp"
#include "g2harm/serialize.hpp"
#include "g2harm/verify.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2, kInconclusive = 3 };

struct RunConfig {
  std::uint64_t seed = 1;
  int samples = 100;
  std::optional<double> tol;
  double h = g2harm::kDefaultFdStep1;
  std::string out;
};

void add_common_flags(CLI::App& cmd, RunConfig& cfg) {
  // "--h" is the step size, so help is long-form only
  cmd.set_help_flag("--help", "Print this help message and exit");
  cmd.add_option("--seed", cfg.seed, "Seed for all random sampling")->capture_default_str();
  cmd.add_option("--samples", cfg.samples, "Random group elements per sampled check")
      ->check(CLI::Range(1, 1 << 24))
      ->capture_default_str();
  cmd.add_option("--tol", cfg.tol, "Override every residual tolerance")->check(CLI::PositiveNumber);
  cmd.add_option("--h", cfg.h, "Finite-difference step (first order; second order uses 10h)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--out", cfg.out, "Write the JSON report here instead of stdout");
}

nlohmann::json envelope(const std::string& command, const RunConfig& cfg) {
  nlohmann::json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  nlohmann::json c;
  c["seed"] = cfg.seed;
  c["samples"] = cfg.samples;
  c["tol"] = cfg.tol ? nlohmann::json(*cfg.tol) : nlohmann::json(nullptr);
  c["h"] = cfg.h;
  j["config"] = c;
  return j;
}

int emit(const nlohmann::json& j, const RunConfig& cfg) {
  const std::string text = g2harm::dump17(j) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return kPass;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    std::cerr << "g2harm: cannot open " << cfg.out << " for writing\n";
    return kInputError;
  }
  file << text;
  return kPass;
}

int input_error(nlohmann::json j, const RunConfig& cfg, const std::string& code, const std::string& message,
                std::optional<std::size_t> position = std::nullopt) {
  std::cerr << "g2harm: " << message << "\n";
  nlohmann::json e;
  e["code"] = code;
  e["message"] = message;
  if (position) e["position"] = *position;
  j["error"] = e;
  j["pass"] = false;
  emit(j, cfg);
  return kInputError;
}

int finish(nlohmann::json j, const RunConfig& cfg, int status) {
  const int io = emit(j, cfg);
  return io != kPass ? io : status;
}

int run_verify(const RunConfig& cfg) {
  g2harm::VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.samples = cfg.samples;
  vc.tol = cfg.tol;
  vc.h = cfg.h;
  const auto results = g2harm::verify_all(g2harm::default_basis(), vc);

  nlohmann::json j = envelope("verify", cfg);
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json c;
    c["name"] = r.name;
    c["identity"] = r.identity;
    c["value"] = r.value;
    switch (r.bound) {
      case g2harm::CheckResult::Bound::upper:
        c["bound"] = "upper";
        c["tol"] = r.hi;
        break;
      case g2harm::CheckResult::Bound::lower:
        c["bound"] = "lower";
        c["threshold"] = r.lo;
        break;
      case g2harm::CheckResult::Bound::window:
        c["bound"] = "window";
        c["window"] = {r.lo, r.hi};
        break;
    }
    c["samples"] = r.samples;
    for (const auto& [k, v] : r.details) c["details"][k] = v;
    c["pass"] = r.pass();
    if (!r.pass()) {
      all = false;
      failures.push_back(r.name + ": " + r.identity);
    }
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["failures"] = failures;
  j["pass"] = all;
  for (const auto& f : failures) std::cerr << "FAILED " << f.get<std::string>() << "\n";
  return finish(j, cfg, all ? kPass : kFail);
}

int run_basis(const RunConfig& cfg) {
  nlohmann::json j = envelope("basis", cfg);
  try {
    const g2harm::G2Basis basis = g2harm::build_g2_basis();
    const auto diag = g2harm::diagnose(basis, 200, cfg.seed);
    const auto cas = g2harm::casimir_report(basis);
    j["dimension"] = g2harm::kG2Dim;
    j["basis"] = g2harm::to_json(basis);
    j["gram_residual"] = diag.gram_residual;
    j["derivation_residual"] = diag.derivation_residual;
    j["closure_residual"] = diag.closure_residual;
    j["lambda"] = g2harm::casimir_scalar(basis);
    j["casimir_off_diagonal"] = cas.off_diagonal;
    const double tol = cfg.tol.value_or(1e-10);
    const bool ok = diag.gram_residual <= tol && diag.derivation_residual <= tol && diag.closure_residual <= tol;
    j["pass"] = ok;
    return finish(j, cfg, ok ? kPass : kFail);
  } catch (const g2harm::InvariantError& e) {
    std::cerr << "g2harm: " << e.what() << "\n";
    j["error"] = {{"code", "construction_failed"}, {"message", e.what()}};
    j["pass"] = false;
    return finish(j, cfg, kFail);
  }
}

int run_eigenfamily(const RunConfig& cfg, const std::string& p_text) {
  nlohmann::json j = envelope("eigenfamily", cfg);
  j["p"] = p_text;
  g2harm::Vec7C p;
  try {
    p = g2harm::parse_vec7(p_text);
  } catch (const g2harm::ParseError& e) {
    return input_error(j, cfg, "parse_error", e.what(), e.position());
  }
  try {
    const auto& basis = g2harm::default_basis();
    const auto fam = g2harm::make_eigenfamily(p, basis);
    const auto report = g2harm::check_eigenfamily(fam, basis, cfg.samples, cfg.seed, cfg.tol.value_or(1e-9));
    j["report"] = g2harm::to_json(report);
    j["pass"] = report.passed();
    return finish(j, cfg, report.passed() ? kPass : kFail);
  } catch (const g2harm::IsotropyError& e) {
    j["isotropy_defect"] = e.measured();
    return input_error(j, cfg, "not_isotropic", e.what());
  }
}

int run_morphism(const RunConfig& cfg, const std::string& num, const std::string& den, const std::string& p_text) {
  nlohmann::json j = envelope("morphism", cfg);
  j["numerator"] = num;
  j["denominator"] = den;
  j["p"] = p_text;
  g2harm::PolyFn p_poly, q_poly;
  g2harm::Vec7C p;
  try {
    p_poly = g2harm::PolyFn::parse(num);
  } catch (const g2harm::ParseError& e) {
    return input_error(j, cfg, "parse_error_numerator", e.what(), e.position());
  }
  try {
    q_poly = g2harm::PolyFn::parse(den);
  } catch (const g2harm::ParseError& e) {
    return input_error(j, cfg, "parse_error_denominator", e.what(), e.position());
  }
  try {
    p = g2harm::parse_vec7(p_text);
  } catch (const g2harm::ParseError& e) {
    return input_error(j, cfg, "parse_error", e.what(), e.position());
  }
  try {
    const auto map = g2harm::RationalMap::make(p_poly, q_poly);
    const auto& basis = g2harm::default_basis();
    const auto fam = g2harm::make_eigenfamily(p, basis);
    const auto report =
        g2harm::check_harmonic_morphism(map, fam, basis, cfg.samples, cfg.seed, cfg.tol.value_or(1e-7));
    j["report"] = g2harm::to_json(report);
    j["pass"] = report.passed();
    switch (report.verdict) {
      case g2harm::Verdict::pass:
        return finish(j, cfg, kPass);
      case g2harm::Verdict::fail:
        return finish(j, cfg, kFail);
      case g2harm::Verdict::inconclusive:
        std::cerr << "g2harm: every sample fell inside the pole guard\n";
        j["error"] = {{"code", "all_samples_near_pole"}, {"message", "every sample fell inside the pole guard"}};
        return finish(j, cfg, kInconclusive);
    }
    return kFail;
  } catch (const g2harm::RationalMapError& e) {
    return input_error(j, cfg, g2harm::to_string(e.fault()), e.what());
  } catch (const g2harm::IsotropyError& e) {
    j["isotropy_defect"] = e.measured();
    return input_error(j, cfg, "not_isotropic", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenfamilies and harmonic morphisms on G2: construction and numerical certification"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  RunConfig cfg;
  std::string p_text = "1,i,0,0,0,0,0";
  std::string num, den;

  auto* verify = app.add_subcommand("verify", "Run every identity suite and emit a report bundle");
  add_common_flags(*verify, cfg);
  auto* basis = app.add_subcommand("basis", "Emit the orthonormal g2 basis with its Casimir scalar");
  add_common_flags(*basis, cfg);
  auto* eigen = app.add_subcommand("eigenfamily", "Certify the eigenfamily E_p for an isotropic p");
  add_common_flags(*eigen, cfg);
  eigen->add_option("-p,--vector", p_text, "Seven comma-separated complex numbers, e.g. 1,i,0,0,0,0,0")
      ->capture_default_str();
  auto* morph = app.add_subcommand("morphism", "Certify P/Q of an eigenfamily as a harmonic morphism");
  add_common_flags(*morph, cfg);
  morph->add_option("-P,--numerator", num, "Homogeneous polynomial in z1..z7")->required();
  morph->add_option("-Q,--denominator", den, "Homogeneous polynomial of the same degree")->required();
  morph->add_option("-p,--vector", p_text, "Isotropic vector defining the family")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*verify) return run_verify(cfg);
    if (*basis) return run_basis(cfg);
    if (*eigen) return run_eigenfamily(cfg, p_text);
    if (*morph) return run_morphism(cfg, num, den, p_text);
  } catch (const std::exception& e) {
    std::cerr << "g2harm: " << e.what() << "\n";
    return kFail;
  }
  return kInputError;
}
