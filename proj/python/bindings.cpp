#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "citecurve/corpus.hpp"
#include "citecurve/curve.hpp"
#include "citecurve/errors.hpp"
#include "citecurve/ranking.hpp"
#include "citecurve/synth.hpp"

namespace py = pybind11;
using namespace citecurve;

namespace {

MetricId metric_or_throw(const std::string& token) {
  const auto id = metric_from_string(token);
  if (!id) {
    throw ValidationError("unknown metric \"" + token +
                          "\" (expected h, c, c_per_p, pt, pi, m, c_t, c_tc, c_ic or c_e)");
  }
  return *id;
}

SelfCitationScope scope_or_throw(const std::string& token) {
  if (token == "all-coauthors") return SelfCitationScope::AllCoauthors;
  if (token == "single-author") return SelfCitationScope::SingleAuthor;
  throw ValidationError("scope must be \"all-coauthors\" or \"single-author\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Citation-curve analytics: penalty areas, PT/PI indices, rankings";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<AreaDecomposition>(m, "AreaDecomposition")
      .def_readonly("h", &AreaDecomposition::h)
      .def_readonly("c_total", &AreaDecomposition::c_total)
      .def_readonly("c_core", &AreaDecomposition::c_core)
      .def_readonly("c_tail", &AreaDecomposition::c_tail)
      .def_readonly("c_excess", &AreaDecomposition::c_excess)
      .def_readonly("c_tail_complement", &AreaDecomposition::c_tail_complement)
      .def_readonly("c_ideal_complement", &AreaDecomposition::c_ideal_complement)
      .def_readonly("p_tail", &AreaDecomposition::p_tail)
      .def("__repr__", [](const AreaDecomposition& d) {
        std::ostringstream os;
        os << "AreaDecomposition(h=" << d.h << ", c_total=" << d.c_total
           << ", c_core=" << d.c_core << ", c_tail=" << d.c_tail << ", c_excess=" << d.c_excess
           << ", c_tail_complement=" << d.c_tail_complement
           << ", c_ideal_complement=" << d.c_ideal_complement << ", p_tail=" << d.p_tail << ")";
        return os.str();
      });

  py::class_<IndexWeights>(m, "IndexWeights")
      .def(py::init([](std::int32_t kappa, std::int32_t epsilon, std::int32_t tau,
                       std::int32_t sigma, std::int32_t iota) {
             return IndexWeights{kappa, epsilon, tau, sigma, iota};
           }),
           py::arg("kappa") = 1, py::arg("epsilon") = 1, py::arg("tau") = 1,
           py::arg("sigma") = 1, py::arg("iota") = 1)
      .def_readwrite("kappa", &IndexWeights::kappa)
      .def_readwrite("epsilon", &IndexWeights::epsilon)
      .def_readwrite("tau", &IndexWeights::tau)
      .def_readwrite("sigma", &IndexWeights::sigma)
      .def_readwrite("iota", &IndexWeights::iota);

  py::class_<AuthorProfile>(m, "AuthorProfile")
      .def_readonly("author_id", &AuthorProfile::author_id)
      .def_readonly("display_name", &AuthorProfile::display_name)
      .def_property_readonly(
          "publication_count",
          [](const AuthorProfile& p) { return p.publications.size(); })
      .def("citation_counts", &AuthorProfile::citation_counts)
      .def("total_citations", &AuthorProfile::total_citations)
      .def("first_pub_year", &AuthorProfile::first_pub_year)
      .def("__repr__", [](const AuthorProfile& p) {
        return "AuthorProfile(author_id='" + p.author_id + "', publications=" +
               std::to_string(p.publications.size()) + ")";
      });

  m.def(
      "build_curve",
      [](const std::vector<std::int64_t>& counts) { return build_curve(counts).counts(); },
      py::arg("counts"), "Validate and sort citation counts non-increasing.");
  m.def(
      "h_index",
      [](const std::vector<std::int64_t>& counts) { return h_index(build_curve(counts)); },
      py::arg("counts"));
  m.def(
      "decompose",
      [](const std::vector<std::int64_t>& counts) { return decompose(build_curve(counts)); },
      py::arg("counts"), "All curve areas for one publication record.");
  m.def("parameterized_count", &parameterized_count, py::arg("decomposition"),
        py::arg("weights") = IndexWeights{});
  m.def("penalty_pt", &penalty_pt, py::arg("decomposition"),
        py::arg("weights") = IndexWeights{});
  m.def("penalty_pi", &penalty_pi, py::arg("decomposition"),
        py::arg("weights") = IndexWeights{});
  m.def(
      "classify",
      [](std::int64_t pt_value) { return std::string(to_string(classify_author(pt_value))); },
      py::arg("pt_value"), "\"influential\" for PT >= 0, else \"mass-producer\".");
  m.def(
      "m_quotient",
      [](std::int64_t h, int first_pub_year, int reference_year) {
        return m_quotient(h, first_pub_year, reference_year).to_double();
      },
      py::arg("h"), py::arg("first_pub_year"), py::arg("reference_year"));

  m.def("load_corpus",
        [](const std::string& path) { return load_corpus(path); },
        py::arg("path"), "Read a JSON-lines corpus file.");
  m.def(
      "write_corpus",
      [](const std::string& path, const Corpus& corpus) { write_corpus(path, corpus); },
      py::arg("path"), py::arg("corpus"));
  m.def(
      "generate_synthetic",
      [](const std::string& preset, std::int64_t n, std::uint64_t seed) {
        GeneratorSpec spec = preset_spec(preset);
        if (n >= 0) spec.n_authors = n;
        return generate_synthetic(spec, seed);
      },
      py::arg("preset"), py::arg("n") = -1, py::arg("seed") = 42,
      "Deterministic synthetic corpus from a named preset.");
  m.def(
      "filter_self_citations",
      [](const AuthorProfile& profile, const std::string& scope) {
        return filter_self_citations(profile, scope_or_throw(scope));
      },
      py::arg("profile"), py::arg("scope") = "all-coauthors");
  m.def(
      "compute_metric",
      [](const Corpus& corpus, const std::string& metric, const IndexWeights& weights,
         std::optional<int> reference_year) {
        MetricContext ctx;
        ctx.weights = weights;
        ctx.reference_year = reference_year;
        std::map<std::string, double> out;
        for (const auto& [id, value] : compute_metric(corpus, metric_or_throw(metric), ctx)) {
          out[id] = value.to_double();
        }
        return out;
      },
      py::arg("corpus"), py::arg("metric"), py::arg("weights") = IndexWeights{},
      py::arg("reference_year") = std::nullopt,
      "Per-author metric values keyed by author_id.");
  m.def(
      "rank_correlation",
      [](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
        if (x.size() != y.size()) {
          throw ValidationError("rank correlation requires sequences of equal length");
        }
        std::map<std::string, Rational> mx, my;
        for (std::size_t i = 0; i < x.size(); ++i) {
          char key[24];
          std::snprintf(key, sizeof(key), "%012zu", i);
          mx[key] = Rational(static_cast<std::int64_t>(x[i]));
          my[key] = Rational(static_cast<std::int64_t>(y[i]));
        }
        const auto r = rank_correlation(mx, my);
        return py::make_tuple(r.spearman, r.kendall);
      },
      py::arg("x"), py::arg("y"),
      "(spearman, kendall tau-b) over two equally ordered integer sequences.");

#ifdef CITECURVE_VERSION
  m.attr("__version__") = CITECURVE_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
