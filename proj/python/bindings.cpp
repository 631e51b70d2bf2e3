#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sato/gkm.hpp"
#include "sato/io.hpp"
#include "sato/krichever.hpp"
#include "sato/partition.hpp"
#include "sato/schubert.hpp"
#include "sato/symmetric.hpp"
#include "sato/tautological.hpp"
#include "sato/verify.hpp"

namespace py = pybind11;
using namespace sato;

namespace {

PullbackMap make_map(const std::string& kind, int g, int q, int h, bool equivariant, bool alternate_sign) {
  PullbackMap m;
  if (kind == "kq") m = PullbackMap::make_kq(q, g, equivariant);
  else if (kind == "k1") m = PullbackMap::make_k1(g, equivariant);
  else if (kind == "line") m = PullbackMap::make_line(g, h, equivariant);
  else throw std::invalid_argument("unknown map '" + kind + "'; expected kq, k1 or line");
  if (alternate_sign && m.kind != MapKind::kq) throw std::invalid_argument("alternate_sign applies to kq only");
  m.kq_alternate_sign = alternate_sign;
  return m;
}

std::string poly_json(const GradedPoly& p) { return to_json(p).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Schubert calculus, GKM localization and Krichever pullbacks";

  m.def("pullback",
        [](const std::string& kind, int g, int r, int q, int h, bool equivariant, bool alternate_sign) {
          GradedPoly p = pullback_generator(make_map(kind, g, q, h, equivariant, alternate_sign), r);
          return py::make_tuple(pretty(p), poly_json(p));
        },
        py::arg("kind"), py::arg("g"), py::arg("r"), py::arg("q") = 0, py::arg("h") = 0,
        py::arg("equivariant") = false, py::arg("alternate_sign") = false);

  m.def("pullback_class",
        [](const std::string& kind, int g, const std::vector<int>& partition, int q, int h, bool equivariant) {
          GradedPoly p = pullback_class(make_map(kind, g, q, h, equivariant, false),
                                        SchubertClass::basis(Partition(partition)));
          return py::make_tuple(pretty(p), poly_json(p));
        },
        py::arg("kind"), py::arg("g"), py::arg("partition"), py::arg("q") = 0, py::arg("h") = 0,
        py::arg("equivariant") = false);

  m.def("equivariant_limit_check",
        [](const std::string& kind, int g, int r, int q, int h) {
          return equivariant_limit_check(make_map(kind, g, q, h, false, false), r);
        },
        py::arg("kind"), py::arg("g"), py::arg("r"), py::arg("q") = 0, py::arg("h") = 0);

  m.def("lr_coefficients", [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<std::pair<std::vector<int>, long>> out;
    for (const auto& [nu, c] : lr_coefficients(Partition(a), Partition(b))) out.emplace_back(nu.parts(), c);
    return out;
  });

  m.def("schur_mult", [](const std::vector<int>& a, const std::vector<int>& b) {
    SchubertClass x = schubert_product(SchubertClass::basis(Partition(a)), SchubertClass::basis(Partition(b)));
    return py::make_tuple(x.str(), to_json(x).dump());
  });

  m.def("conjugate", [](const std::vector<int>& p) { return conjugate(Partition(p)).parts(); });
  m.def("maya_from_partition", [](const std::vector<int>& p, long d) { return maya_from_partition(Partition(p), d).head(); });
  m.def("partition_from_maya", [](long d, const std::vector<long>& head) {
    return partition_from_maya(MayaSequence(d, head)).parts();
  });
  m.def("codimension", [](long d, const std::vector<long>& head) { return codimension(MayaSequence(d, head)); });

  m.def("gkm_schubert",
        [](int n, int l, const std::vector<int>& lambda, bool rotation) {
          Partition p(lambda);
          GKMClass c = equivariant_schubert(make_gkm_graph(n, l), p);
          if (rotation) c = specialize_rotation(c);
          return to_json(c, &p).dump();
        },
        py::arg("n"), py::arg("l"), py::arg("lambda_"), py::arg("rotation") = false);

  m.def("gkm_product", [](int n, int l, const std::vector<int>& a, const std::vector<int>& b) {
    GraphPtr graph = make_gkm_graph(n, l);
    auto basis = schubert_basis(graph);
    GKMClass prod = pointwise_product(equivariant_schubert(graph, Partition(a)), equivariant_schubert(graph, Partition(b)));
    SchubertClass x = specialize_ordinary(prod, basis);
    return py::make_tuple(x.str(), gkm_check(prod).empty());
  });

  m.def("bernoulli", [](unsigned n) { return bernoulli_number(n).str(); });
  m.def("bernoulli_poly", [](unsigned n) {
    std::vector<std::string> out;
    for (const auto& c : bernoulli_poly(n)) out.push_back(c.str());
    return out;
  });
  m.def("ch_hodge", [](int r, int q, int g) {
    GradedPoly p = ch_hodge(r, q, g);
    return py::make_tuple(pretty(p), poly_json(p));
  });
  m.def("grr_ch_p", [](int k) {
    GradedPoly p = grr_ch_P(k);
    return py::make_tuple(pretty(p), poly_json(p));
  });
  m.def("ch_p_stated", [](int k) {
    GradedPoly p = ch_P_stated(k);
    return py::make_tuple(pretty(p), poly_json(p));
  });
  m.def("compare_ch_p", [](int k) {
    py::list out;
    for (const auto& d : compare_ch_P(k)) {
      py::dict row;
      row["i"] = d.i;
      row["j"] = d.j;
      row["expansion"] = d.expansion.str();
      row["stated"] = d.stated.str();
      row["kind"] = to_string(d.kind);
      out.append(row);
    }
    return out;
  });

  m.def("suite_names", &verify::suite_names);
  m.def("verify",
        [](const std::string& suite, int max_degree, unsigned threads) {
          std::vector<verify::CheckResult> results;
          {
            py::gil_scoped_release release;
            results = verify::run_suite(suite, max_degree, threads);
          }
          py::list out;
          for (const auto& r : results) {
            py::dict row;
            row["name"] = r.name;
            row["passed"] = r.passed;
            row["cases"] = r.cases;
            row["detail"] = r.detail;
            out.append(row);
          }
          return out;
        },
        py::arg("suite"), py::arg("max_degree") = 8, py::arg("threads") = 1);
}
