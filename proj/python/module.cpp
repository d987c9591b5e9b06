// Python bindings for the core operations. Exact rationals cross the
// boundary as "p/q" strings; exact big-integer results come back as Python
// ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gls/asymptotics.hpp"
#include "gls/enumerator.hpp"
#include "gls/normality_stats.hpp"
#include "gls/simplex_sums.hpp"
#include "gls/system_io.hpp"
#include "gls/verify.hpp"

namespace py = pybind11;
using namespace gls;

namespace {

Rational rat(const std::string& text) { return parse_rational(text); }

py::int_ big(const BigInt& value) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(value.str()));
}

DigitSystem make(const std::vector<std::string>& measures,
                 const std::vector<std::string>& symbols) {
    std::vector<Rational> parsed;
    parsed.reserve(measures.size());
    for (const auto& m : measures) parsed.push_back(rat(m));
    return DigitSystem(std::move(parsed), symbols);
}

py::dict sum_result(const simplex::SumResult& r) {
    py::dict d;
    d["value"] = big(r.value);
    d["float_value"] = r.float_value;
    d["lattice_points"] = r.lattice_count;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "generalized Champernowne constructions over finite-digit "
              "product-measure systems";

    py::class_<DigitSystem>(m, "System")
        .def(py::init(&make), py::arg("measures"),
             py::arg("symbols") = std::vector<std::string>{})
        .def_property_readonly("digit_count", &DigitSystem::digit_count)
        .def("measure",
             [](const DigitSystem& sys, int d) {
                 return to_string(sys.measure(static_cast<Digit>(d)));
             })
        .def("log_measure",
             [](const DigitSystem& sys, int d) { return sys.log_measure(static_cast<Digit>(d)); })
        .def("symbol",
             [](const DigitSystem& sys, int d) { return sys.symbol(static_cast<Digit>(d)); })
        .def("user_position",
             [](const DigitSystem& sys, int d) { return sys.user_position(static_cast<Digit>(d)); })
        .def("__repr__",
             [](const DigitSystem& sys) { return "System(" + sys.describe() + ")"; });

    m.def("load_system", [](const std::string& path) { return load_system_file(path); });
    m.def("parse_system", &parse_system);

    m.def("cylinder_measure",
          [](const DigitSystem& sys, const Word& w) { return to_string(cylinder_measure(sys, w)); });
    m.def("log_measure",
          [](const DigitSystem& sys, const CountVector& counts) { return log_measure(sys, counts); });

    m.def("enumerate_prefix",
          [](const DigitSystem& sys, std::size_t n) { return enumerate_prefix(sys, n); });
    m.def("digit_prefix",
          [](const DigitSystem& sys, std::uint64_t n) { return digit_prefix(sys, n); });
    m.def("threshold_counts",
          [](const DigitSystem& sys, const std::string& eps, const std::optional<Word>& query) {
              const auto counts =
                  threshold_counts(sys, rat(eps), query ? &*query : nullptr);
              py::dict d;
              d["digit_total"] = counts.digit_total;
              d["word_total"] = counts.word_total;
              if (counts.occurrences) d["occurrences"] = *counts.occurrences;
              return d;
          },
          py::arg("system"), py::arg("eps"), py::arg("query") = std::nullopt);

    m.def("block_counts",
          [](const DigitSystem& sys, const std::vector<Digit>& prefix, int k) {
              const BlockCensus census = block_counts(sys, prefix, k);
              py::dict d;
              for (std::uint64_t packed = 0; packed < census.rows(); ++packed) {
                  if (const auto c = census.count_packed(packed)) {
                      const Word w = census.unpack(packed);
                      d[py::tuple(py::cast(w))] = c;
                  }
              }
              return d;
          });
    m.def("hot_spot_report",
          [](const DigitSystem& sys, std::uint64_t N, int K) {
              const auto report = hot_spot_report(sys, N, K);
              py::list rows;
              for (const auto& row : report.rows) {
                  py::dict r;
                  r["word"] = row.word;
                  r["count"] = row.count;
                  r["measure"] = to_string(row.measure);
                  r["ratio"] = row.ratio;
                  rows.append(std::move(r));
              }
              py::dict d;
              d["N"] = report.N;
              d["K"] = report.K;
              d["rows"] = rows;
              d["max_ratio"] = report.max_ratio;
              d["min_ratio"] = report.min_ratio;
              return d;
          });
    m.def("convergence_table",
          [](const DigitSystem& sys, const std::vector<std::uint64_t>& Ns, int K) {
              py::list rows;
              for (const auto& row : convergence_table(sys, Ns, K)) {
                  py::dict r;
                  r["N"] = row.N;
                  r["max_deviation"] = row.max_deviation;
                  r["max_ratio"] = row.max_ratio;
                  rows.append(std::move(r));
              }
              return rows;
          });

    m.def("lattice_points",
          [](const DigitSystem& sys, const std::string& eps) {
              return simplex::lattice_points(sys, rat(eps));
          });
    m.def("digit_sum",
          [](const DigitSystem& sys, const std::string& eps) {
              return sum_result(simplex::digit_sum(sys, rat(eps)));
          });
    m.def("word_sum",
          [](const DigitSystem& sys, const std::string& eps) {
              return sum_result(simplex::word_sum(sys, rat(eps)));
          });
    m.def("occurrence_sum",
          [](const DigitSystem& sys, const std::string& eps, const Word& s) {
              return sum_result(simplex::occurrence_sum(sys, rat(eps), s));
          });

    m.def("surface_sums",
          [](const DigitSystem& sys, const std::string& eps) {
              const auto sums = asymptotics::surface_sums(sys, rat(eps));
              py::dict d;
              d["digit_sum"] = sums.digit_sum;
              d["word_sum"] = sums.word_sum;
              d["points"] = sums.point_count;
              return d;
          });
    m.def("multinomial_entropy",
          [](const std::vector<double>& x) { return asymptotics::multinomial_entropy(x); });
    m.def("laplace_analysis",
          [](const DigitSystem& sys, const std::string& eps) {
              const auto a = asymptotics::laplace_analysis(sys, rat(eps));
              py::dict d;
              d["log_eps"] = a.log_eps;
              d["scale"] = a.scale;
              d["maximizer"] = a.maximizer;
              d["value_at_max"] = a.value_at_max;
              d["dim"] = a.dim;
              d["curvature"] = a.curvature;
              d["eigenvalues"] = a.eigenvalues;
              d["eigenvectors"] = a.eigenvectors;
              return d;
          });
    m.def("taylor_residual",
          [](const DigitSystem& sys, const std::string& eps, std::uint64_t samples,
             std::uint64_t seed) {
              return asymptotics::taylor_residual(sys, rat(eps), samples, seed);
          },
          py::arg("system"), py::arg("eps"), py::arg("samples") = 1000,
          py::arg("seed") = 20240601);
    m.def("concavity_check",
          [](const DigitSystem& sys, const std::string& eps, std::uint64_t samples,
             std::uint64_t seed) {
              const auto report = asymptotics::concavity_check(sys, rat(eps), samples, seed);
              py::dict d;
              d["samples"] = report.samples;
              d["max_value"] = report.max_value;
              d["min_value"] = report.min_value;
              return d;
          },
          py::arg("system"), py::arg("eps"), py::arg("samples") = 1000,
          py::arg("seed") = 20240601);
    m.def("gaussian_sum_check", [](double Z, double C) {
        const auto g = asymptotics::gaussian_sum_check(Z, C);
        py::dict d;
        d["sum"] = g.sum;
        d["reference"] = g.reference;
        d["rel_error"] = g.rel_error;
        return d;
    });

    m.def("verify",
          [](const DigitSystem& sys, std::uint64_t seed) {
              py::list rows;
              for (const auto& r : run_verification(sys, seed)) {
                  py::dict d;
                  d["name"] = r.name;
                  d["passed"] = r.passed;
                  d["detail"] = r.detail;
                  rows.append(std::move(d));
              }
              return rows;
          },
          py::arg("system"), py::arg("seed") = 20240601);
}
