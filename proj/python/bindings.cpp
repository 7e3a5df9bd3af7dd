#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hyperkernel/error.hpp"
#include "hyperkernel/fixtures.hpp"
#include "hyperkernel/freeprod.hpp"
#include "hyperkernel/hypfile.hpp"
#include "hyperkernel/quotients.hpp"
#include "hyperkernel/report.hpp"

namespace py = pybind11;
using namespace hyperkernel;

namespace {

using Labels = std::vector<std::string>;

py::object to_python(const report::Json& j) {
  static py::handle loads = py::object(py::module_::import("json").attr("loads")).release();
  return loads(j.dump());
}

ElementSet parse_set(const HyperTable& h, const Labels& labels) {
  ElementSet s;
  for (const std::string& l : labels) {
    const auto x = h.find(l);
    if (!x) fail(ErrorKind::UnknownLabel, "unknown label " + l);
    s.insert(*x);
  }
  return s;
}

Labels set_labels(const HyperTable& h, ElementSet s) {
  Labels out;
  for (Element x : s) out.push_back(h.name(x));
  return out;
}

std::vector<Labels> partition_labels(const HyperTable& h, const Partition& p) {
  std::vector<Labels> out;
  for (ElementSet c : p.classes()) out.push_back(set_labels(h, c));
  return out;
}

/// From a list of labels and a row-major nested list of label lists.
HyperTable make_table(Labels names, const std::vector<std::vector<Labels>>& rows) {
  const std::size_t n = names.size();
  if (rows.size() != n) fail(ErrorKind::InvalidTable, "expected " + std::to_string(n) + " rows");
  const HyperTable index(names, std::vector<ElementSet>(n * n, ElementSet::singleton(0)));
  std::vector<ElementSet> cells;
  for (const auto& row : rows) {
    if (row.size() != n) fail(ErrorKind::InvalidTable, "expected " + std::to_string(n) + " cells per row");
    for (const Labels& cell : row) cells.push_back(parse_set(index, cell));
  }
  return HyperTable(std::move(names), std::move(cells));
}

std::vector<HyperTable> factor_tables(const std::vector<std::string>& names) {
  std::vector<HyperTable> out;
  for (const std::string& n : names) out.push_back(load_document(n).table);
  return out;
}

}  // namespace

PYBIND11_MODULE(hyperkernel, m) {
  m.doc() = "Finite hypergroups: fundamental relations, hearts, quotients and free products";

  // Released so the type outlives interpreter teardown.
  static py::handle error_type = py::exception<Error>(m, "HyperkernelError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<HyperTable>(m, "HyperTable")
      .def(py::init(&make_table), py::arg("elements"), py::arg("table"))
      .def_property_readonly("elements", &HyperTable::names)
      .def("__len__", &HyperTable::size)
      .def("cell", [](const HyperTable& h, const std::string& a, const std::string& b) {
        return set_labels(h, h.cell(parse_set(h, {a}).first(), parse_set(h, {b}).first()));
      })
      .def("product", [](const HyperTable& h, const Labels& a, const Labels& b) {
        return set_labels(h, hyperproduct(h, parse_set(h, a), parse_set(h, b)));
      })
      .def("to_hyp", [](const HyperTable& h) { return emit_hyp(h); })
      .def("to_json", [](const HyperTable& h) { return emit_hyp_json(h); })
      .def(py::self == py::self)
      .def("__repr__", [](const HyperTable& h) { return "<HyperTable of order " + std::to_string(h.size()) + ">"; });

  m.def("fixture", [](const std::string& name) { return fixture(name); }, py::arg("name"));
  m.def("fixture_names", &fixture_names);
  m.def("parse_hyp", [](const std::string& text) { return parse_hyp(text).table; }, py::arg("text"));
  m.def("parse_hyp_json", [](const std::string& text) { return parse_hyp_json(text).table; }, py::arg("text"));
  m.def("load", [](const std::string& path) { return load_document(path).table; }, py::arg("path_or_fixture"));
  m.def("total_hypergroup", &total_hypergroup, py::arg("n"));
  m.def("direct_product", &direct_product);

  m.def("check", [](const HyperTable& h) { return to_python(report::structure_json(h, structure_report(h))); });
  m.def("beta", [](const HyperTable& h) { return partition_labels(h, beta(h)); });
  m.def("gamma", [](const HyperTable& h) { return partition_labels(h, gamma(h)); });
  m.def("gamma_oracle", [](const HyperTable& h, std::size_t nmax) { return partition_labels(h, gamma_oracle(h, nmax)); },
        py::arg("h"), py::arg("nmax") = 4);
  m.def("fundamental_group", [](const HyperTable& h) { return to_python(report::quotient_json(h, beta(h))); });
  m.def("heart", [](const HyperTable& h) { return set_labels(h, heart(h)); });
  m.def("derived", [](const HyperTable& h) { return set_labels(h, derived(h)); });
  m.def("subhypergroups", [](const HyperTable& h) { return to_python(report::sublattice_json(h, subhypergroups(h))); });
  m.def("quotient", [](const HyperTable& h, const Labels& k) {
    return to_python(report::coset_quotient_json(h, quotient_hypergroup(h, parse_set(h, k))));
  }, py::arg("h"), py::arg("sub"));
  m.def("quotient_table", [](const HyperTable& h, const Labels& k) { return quotient_hypergroup(h, parse_set(h, k)).table; },
        py::arg("h"), py::arg("sub"));
  m.def("check_group_quotient", [](const HyperTable& h, const Labels& k) { return check_group_quotient(h, parse_set(h, k)); });
  m.def("check_abelian_quotient", [](const HyperTable& h, const Labels& k) {
    return check_abelian_quotient(h, parse_set(h, k));
  });
  m.def("correspondence", [](const HyperTable& h, const Labels& k) {
    return to_python(report::correspondence_json(h, correspondence_check(h, parse_set(h, k))));
  });
  m.def("product_identities", [](const HyperTable& a, const HyperTable& b) {
    return to_python(report::product_json(product_identities_check(a, b)));
  });
  m.def("strongly_regular", [](const HyperTable& h) {
    std::vector<std::vector<Labels>> out;
    for (const Partition& p : enumerate_strongly_regular(h)) out.push_back(partition_labels(h, p));
    return out;
  });

  m.def("freeprod_multiply", [](const std::vector<std::string>& factors, const std::string& a, const std::string& b) {
    const FactorRegistry reg(factor_tables(factors));
    std::vector<std::string> out;
    for (const ReducedWord& w : multiply(reg, parse_word(reg, a), parse_word(reg, b))) out.push_back(format_word(reg, w));
    return out;
  }, py::arg("factors"), py::arg("w1"), py::arg("w2"));
  m.def("freeprod_closure", [](const std::vector<std::string>& factors, std::size_t max_len, std::size_t samples,
                               std::uint64_t seed) {
    const ClosureReport r = polygroup_closure_check(FactorRegistry(factor_tables(factors)), max_len, samples, seed);
    return py::make_tuple(r.triples, r.failures);
  }, py::arg("factors"), py::arg("max_len") = 4, py::arg("samples") = 500, py::arg("seed") = 1);
}
