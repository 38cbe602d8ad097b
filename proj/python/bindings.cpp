#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "itg/charpoly.hpp"
#include "itg/corpus.hpp"
#include "itg/error.hpp"
#include "itg/families.hpp"
#include "itg/graph.hpp"
#include "itg/graph_io.hpp"
#include "itg/isomorphism.hpp"
#include "itg/pattern_search.hpp"
#include "itg/spectral.hpp"
#include "itg/transforms.hpp"
#include "itg/verify.hpp"

namespace py = pybind11;
using namespace itg;

namespace {

Operator op_from(const std::string& name) {
  if (name == "total") return Operator::kTotal;
  if (name == "line") return Operator::kLine;
  throw PreconditionError("operator must be 'total' or 'line', got '" + name + "'");
}

MatrixKind matrix_from(const std::string& name) {
  if (name == "a") return MatrixKind::kAdjacency;
  if (name == "q") return MatrixKind::kSignlessLaplacian;
  throw PreconditionError("matrix must be 'a' or 'q', got '" + name + "'");
}

// Python ints are arbitrary precision; go through the decimal string.
py::list poly_to_list(const CharPoly& p) {
  py::list out;
  for (const BigInt& c : p.coefficients) out.append(py::int_(py::str(c.get_str())));
  return out;
}

py::object diameter_value(const Graph& g) {
  const Distance d = diameter(g);
  if (d == kInfinity) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(d);
}

}  // namespace

PYBIND11_MODULE(_itg, m) {
  m.doc() = "Iterated total and line graphs, diameters, signless-Laplacian spectra and incidence energy.";

  auto base = py::register_exception<Error>(m, "ItgError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<GraphError>(m, "GraphError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph::from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             const auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream out;
        out << "Graph(order=" << g.order() << ", size=" << g.size() << ")";
        return out.str();
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("to_graph6", &to_graph6);
  m.def("family", [](const std::string& spec) { return parse_family(spec).build(); }, py::arg("spec"));

  m.def("line_graph", [](const Graph& g) { return line_graph(g).graph; });
  m.def("total_graph", [](const Graph& g) { return total_graph(g).graph; });
  m.def(
      "iterate", [](const Graph& g, const std::string& op, std::size_t k, std::size_t max_vertices) {
        return iterate(g, op_from(op), k, max_vertices);
      },
      py::arg("g"), py::arg("op"), py::arg("k"), py::arg("max_vertices") = kDefaultMaxVertices);

  m.def("diameter", &diameter_value, "BFS diameter; inf when disconnected");
  m.def("is_connected", &is_connected);
  m.def("isomorphic", &isomorphic);
  m.def(
      "contains_induced",
      [](const Graph& host, const Graph& pattern) -> std::optional<std::vector<Vertex>> {
        auto e = contains_induced(host, pattern);
        if (!e) return std::nullopt;
        return e->map;
      },
      "Injective map pattern -> host, or None");

  m.def("adjacency_spectrum", [](const Graph& g) { return adjacency_spectrum(g).values; });
  m.def("q_spectrum", [](const Graph& g) { return q_spectrum(g).values; });
  m.def("incidence_energy", &incidence_energy);
  m.def(
      "char_poly", [](const Graph& g, const std::string& matrix) { return poly_to_list(char_poly(graph_matrix(g, matrix_from(matrix)))); },
      py::arg("g"), py::arg("matrix") = "a", "Exact coefficients, highest degree first");
  m.def("ie_total_bounds", [](double n, double r) {
    const auto b = ie_total_bounds(n, r);
    return std::make_pair(b.lower, b.upper);
  });
  m.def("ie_line_bound", &ie_line_bound);
  m.def("regular_iterate_params", [](std::uint64_t n0, std::uint64_t r0, std::size_t k, const std::string& op) {
    const auto p = regular_iterate_params(n0, r0, k, op_from(op));
    return std::make_pair(p.orders, p.degrees);
  });
  m.def(
      "cospectral",
      [](const Graph& a, const Graph& b, const std::string& matrix) {
        const auto c = cospectral_certificate(a, b, matrix_from(matrix));
        return std::make_pair(c.cospectral, c.isomorphic);
      },
      py::arg("a"), py::arg("b"), py::arg("matrix") = "a", "(cospectral, isomorphic)");

  m.def(
      "verify_json",
      [](const std::string& theorem, const std::string& corpus, const std::vector<long long>& ks,
         const std::string& reading, unsigned threads) {
        VerifyParams params;
        params.ks = ks;
        params.reading = parse_reading(reading);
        params.threads = threads;
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = run_corpus(parse_theorem_id(theorem), load_corpus(corpus), params);
        }
        return report_to_json(report);
      },
      py::arg("theorem"), py::arg("corpus"), py::arg("ks") = std::vector<long long>{},
      py::arg("reading") = "literal", py::arg("threads") = 0);
}
