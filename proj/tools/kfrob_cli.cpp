// kfrob: command-line front end for the K-theory verification library.
//
//   kfrob verify-arr --n 2 --prime 3 --bundle "1*h(1)"
//   kfrob verify-arr --m 1 --n 1 --prime 2 --bundle "1*h(1,0)"
//   kfrob tau --rank 2 --prime 3 --graded
//   kfrob frobenius --vars 2 --prime 3
//   kfrob frobenius --prime 3 --hypersurface "y^2-x^3-x" --samples "(0,0);(2,1)"
//   kfrob equivariant --l 3 --omega "2*h(-1)" --ambient p1
//   kfrob suite --config configs/default_suite.json --out report.json --jobs 2
//
// Every subcommand prints JSON to stdout and exits 0 iff all checks pass.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "kfrob/equivariant.hpp"
#include "kfrob/errors.hpp"
#include "kfrob/frobenius.hpp"
#include "kfrob/pushforward.hpp"
#include "kfrob/suite.hpp"
#include "kfrob/tau.hpp"

namespace {

using nlohmann::json;

void emit(const json& j, const std::string& path) {
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) throw kfrob::InvalidArgument("cannot write " + path);
    out << j.dump(2) << "\n";
  }
  std::cout << j.dump(2) << "\n";
}

int exit_for(kfrob::Status s) {
  switch (s) {
    case kfrob::Status::pass:
      return 0;
    case kfrob::Status::fail:
      return 1;
    case kfrob::Status::error:
      return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact K-theory checks: Adams-Riemann-Roch, Bott classes, tau(E), Frobenius"};
  app.require_subcommand(1);

  // verify-arr
  auto* arr = app.add_subcommand("verify-arr", "Check the Adams-Riemann-Roch identity");
  int arr_n = 1;
  std::optional<int> arr_m;
  int arr_p = 2;
  std::string arr_bundle;
  std::string arr_json;
  arr->add_option("--n", arr_n, "Fiber dimension n (P^n)")->required();
  arr->add_option("--m", arr_m, "Base dimension m (base P^m; omit for a point)");
  arr->add_option("--prime", arr_p, "Prime p")->required();
  arr->add_option("--bundle", arr_bundle, "Split class, e.g. \"2*h(-1) - 1*h(0)\"")->required();
  arr->add_option("--json", arr_json, "Also write the report to this file");

  // tau
  auto* tau = app.add_subcommand("tau", "Basis and graded dimensions of tau(E)");
  int tau_r = 1;
  int tau_p = 2;
  bool tau_graded = false;
  tau->add_option("--rank", tau_r, "Rank r of E")->required();
  tau->add_option("--prime", tau_p, "Prime p")->required();
  tau->add_flag("--graded", tau_graded, "Include graded dimensions");

  // frobenius
  auto* frob = app.add_subcommand("frobenius", "Frobenius algebra and conormal checks");
  int frob_r = 1;
  int frob_p = 2;
  std::string frob_eq;
  std::string frob_samples;
  frob->add_option("--vars", frob_r, "Number of affine coordinates r (A^r model)");
  frob->add_option("--prime", frob_p, "Prime p")->required();
  frob->add_option("--hypersurface", frob_eq, "Equation f, e.g. \"y^2-x^3-x\"");
  frob->add_option("--samples", frob_samples, "Sample points, e.g. \"(0,0);(2,1)\"");

  // equivariant
  auto* eq = app.add_subcommand("equivariant", "theta^l(Omega) vs lambda_{-1}(Omega (x) H)");
  int eq_l = 2;
  std::string eq_omega;
  std::string eq_ambient = "p1";
  eq->add_option("--l", eq_l, "Prime order l of the cyclic group")->required();
  eq->add_option("--omega", eq_omega, "Effective split class for Omega")->required();
  eq->add_option("--ambient", eq_ambient, "Ambient geometry: pt, p1, p2, p3, p1xp1");

  // suite
  auto* suite = app.add_subcommand("suite", "Run a suite configuration");
  std::string suite_config;
  std::string suite_out;
  std::optional<int> suite_jobs;
  suite->add_option("--config", suite_config, "Suite configuration (JSON)")->required();
  suite->add_option("--out", suite_out, "Report output path");
  suite->add_option("--jobs", suite_jobs, "Worker threads (overrides the config)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*arr) {
      kfrob::VerificationReport report;
      if (arr_m) {
        const auto ring = kfrob::RingDescriptor::product(*arr_m, arr_n).with_inverted_prime(arr_p);
        report = kfrob::verify_arr_relative(*arr_m, arr_n, arr_p,
                                            kfrob::parse_bundle_spec(arr_bundle, ring));
      } else {
        const auto ring = kfrob::RingDescriptor::projective(arr_n).with_inverted_prime(arr_p);
        report = kfrob::verify_arr(arr_n, arr_p, kfrob::parse_bundle_spec(arr_bundle, ring));
      }
      emit(report.to_json(), arr_json);
      return exit_for(report.status);
    }
    if (*tau) {
      const kfrob::TauBasis basis = kfrob::tau_basis(tau_r, tau_p);
      json j = {{"rank", tau_r},
                {"prime", tau_p},
                {"count", basis.monomials.size()},
                {"basis", basis.monomials},
                {"degrees", basis.degrees}};
      if (tau_graded) j["graded_dims"] = kfrob::tau_graded_dims(tau_r, tau_p);
      emit(j, "");
      return 0;
    }
    if (*frob) {
      if (!frob_eq.empty()) {
        const auto model = kfrob::AffineModel::hypersurface_model(frob_eq, frob_p);
        const auto report =
            kfrob::hypersurface_conormal_check(model, kfrob::parse_samples(frob_samples));
        emit(report.to_json(), "");
        return exit_for(report.status);
      }
      const auto algebra =
          kfrob::build_frob_algebra(kfrob::AffineModel::affine_space(frob_r, frob_p));
      const auto gr = kfrob::check_gr_iso(frob_r, frob_p);
      const auto conormal = kfrob::diagonal_conormal(algebra);
      const bool ok = gr.passed() && conormal.passed();
      emit({{"status", ok ? "PASS" : "FAIL"},
            {"pushforward_basis", kfrob::frobenius_pushforward_basis(frob_r, frob_p)},
            {"reports", {gr.to_json(), conormal.to_json()}}},
           "");
      return ok ? 0 : 1;
    }
    if (*eq) {
      const auto ring = kfrob::ambient_ring(eq_ambient);
      const auto report =
          kfrob::verify_appendix_theorem(kfrob::parse_bundle_spec(eq_omega, ring), eq_l);
      emit(report.to_json(), "");
      return exit_for(report.status);
    }
    if (*suite) {
      kfrob::SuiteConfig config = kfrob::SuiteConfig::load(suite_config);
      if (suite_jobs) config.jobs = *suite_jobs;
      if (!suite_out.empty()) config.output_path = suite_out;
      const kfrob::SuiteResult result = kfrob::run_suite(config);
      const json j = result.to_json();
      if (!config.output_path.empty()) {
        std::ofstream out(config.output_path);
        if (!out) throw kfrob::InvalidArgument("cannot write " + config.output_path);
        out << j.dump(2) << "\n";
      }
      std::cout << j.at("summary").dump() << "\n";
      return result.exit_code();
    }
  } catch (const kfrob::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
