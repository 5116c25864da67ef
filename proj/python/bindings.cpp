// Thin pybind11 layer.  Results cross the boundary as JSON text; the Python
// package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "kfrob/equivariant.hpp"
#include "kfrob/errors.hpp"
#include "kfrob/frobenius.hpp"
#include "kfrob/pushforward.hpp"
#include "kfrob/suite.hpp"
#include "kfrob/tau.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

std::string verify_arr(int n, int prime, const std::string& bundle, std::optional<int> m) {
  if (m) {
    const auto ring = kfrob::RingDescriptor::product(*m, n).with_inverted_prime(prime);
    return kfrob::verify_arr_relative(*m, n, prime, kfrob::parse_bundle_spec(bundle, ring)).to_json().dump();
  }
  const auto ring = kfrob::RingDescriptor::projective(n).with_inverted_prime(prime);
  return kfrob::verify_arr(n, prime, kfrob::parse_bundle_spec(bundle, ring)).to_json().dump();
}

std::string tau(int rank, int prime) {
  const auto basis = kfrob::tau_basis(rank, prime);
  return json{{"rank", rank},
              {"prime", prime},
              {"count", basis.monomials.size()},
              {"basis", basis.monomials},
              {"degrees", basis.degrees},
              {"graded_dims", kfrob::tau_graded_dims(rank, prime)}}
      .dump();
}

std::string gr_iso(int vars, int prime) { return kfrob::check_gr_iso(vars, prime).to_json().dump(); }

std::string hypersurface(const std::string& equation, int prime, const std::string& samples) {
  const auto model = kfrob::AffineModel::hypersurface_model(equation, prime);
  return kfrob::hypersurface_conormal_check(model, kfrob::parse_samples(samples)).to_json().dump();
}

std::string equivariant(int l, const std::string& omega, const std::string& ambient) {
  const auto ring = kfrob::ambient_ring(ambient);
  return kfrob::verify_appendix_theorem(kfrob::parse_bundle_spec(omega, ring), l).to_json().dump();
}

std::string run_suite(const std::string& config_text, std::optional<int> jobs) {
  auto config = kfrob::SuiteConfig::from_json(json::parse(config_text));
  if (jobs) config.jobs = *jobs;
  py::gil_scoped_release release;
  return kfrob::run_suite(config).to_json().dump();
}

std::string normalize_bundle(const std::string& text, const std::string& ambient) {
  return kfrob::parse_bundle_spec(text, kfrob::ambient_ring(ambient)).to_string();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact K-theory checks (C++ core)";

  static py::exception<kfrob::Error> error(m, "KfrobError", PyExc_ValueError);
  static py::exception<kfrob::ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const kfrob::ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const kfrob::Error& e) {
      py::set_error(error, e.what());
    } catch (const json::exception& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("verify_arr", &verify_arr, py::arg("n"), py::arg("prime"), py::arg("bundle"),
        py::arg("m") = std::nullopt);
  m.def("tau", &tau, py::arg("rank"), py::arg("prime"));
  m.def("gr_iso", &gr_iso, py::arg("vars"), py::arg("prime"));
  m.def("hypersurface", &hypersurface, py::arg("equation"), py::arg("prime"), py::arg("samples"));
  m.def("equivariant", &equivariant, py::arg("l"), py::arg("omega"), py::arg("ambient") = "p1");
  m.def("run_suite", &run_suite, py::arg("config"), py::arg("jobs") = std::nullopt);
  m.def("normalize_bundle", &normalize_bundle, py::arg("text"), py::arg("ambient") = "p1");
  m.def("chi", [](int n, long a) { return kfrob::chi(n, a).get_str(); }, py::arg("n"), py::arg("a"));
}
