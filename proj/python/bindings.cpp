#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chopf/corpus.hpp"
#include "chopf/error.hpp"
#include "chopf/suite.hpp"

namespace py = pybind11;
using namespace chopf;

namespace {

Json rows_json(const GradedSubspace& s, const GradedVectorSpace& space) {
  Json out = Json::array();
  for (const auto& r : s.rows()) out.push_back(space.format(r));
  return out;
}

/// A workspace plus its verification cache; everything crosses the boundary as JSON text.
class Session {
 public:
  explicit Session(const std::string& text) : ws_(workspace_from_json(Json::parse(text))), r_(ws_) {}

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  std::string to_json() const { return workspace_to_json(ws_).dump(); }

  std::vector<std::string> algebras() const { return keys(ws_.algebras); }
  std::vector<std::string> morphisms() const { return keys(ws_.morphisms); }
  std::vector<std::string> subspaces() const { return keys(ws_.subspaces); }

  std::string verify(const std::string& name) {
    if (ws_.algebras.count(name)) return verification_report_to_json(r_.algebra_report(name), ws_.algebras.at(name).space).dump();
    const auto& m = ws_.morphism(name);
    return verification_report_to_json(r_.morphism_report(name), ws_.algebras.at(m.source).space).dump();
  }

  std::string hkernel(const std::string& f) {
    const auto m = r_.morphism(f);
    return rows_json(chopf::hkernel(m).carrier, m.source().space()).dump();
  }

  std::string cokernel(const std::string& f) {
    const auto q = chopf::cokernel(r_.morphism(f));
    return Json{{"dim", q.quotient.dim()}, {"ideal", rows_json(q.ideal, q.parent.space())}}.dump();
  }

  std::string normal(const std::string& k) {
    const auto sub = r_.subalgebra(k);
    const auto n = is_normal(sub.parent, sub);
    Json out{{"normal", n.normal}};
    if (!n.normal) {
      out["left"] = sub.parent.space().name(n.basis_index);
      out["right"] = sub.parent.space().format(sub.carrier.rows()[n.row_index]);
      out["image"] = sub.parent.space().format(n.image);
    }
    return out.dump();
  }

  std::string twist(const std::string& a) {
    const auto t = chopf::twist(r_.algebra(a));
    return Json{{"algebra", hopf_to_json(t.target.data())}, {"gamma", bicharacter_to_json(t.gamma)}}.dump();
  }

  bool abelian(const std::string& a) { return is_abelian_object(r_.algebra(a)).abelian(); }

  std::string suite(bool quick, bool fail_fast) const {
    SuiteOptions o;
    o.pairwise_products = o.mutations = !quick;
    o.stop_at_first_failure = fail_fast;
    return run_suite(ws_, o).to_json().dump();
  }

  void mutate(const std::string& a, const std::string& kind, const std::string& name) {
    chopf::Mutation m = chopf::mutate(r_.algebra(a), parse_mutation(kind));
    const std::string key = name.empty() ? "mutated_" + a : name;
    m.data.name = key;
    ws_.algebras[key] = m.data;
  }

 private:
  template <class M>
  static std::vector<std::string> keys(const M& m) {
    std::vector<std::string> out;
    for (const auto& [k, _] : m) out.push_back(k);
    return out;
  }

  Workspace ws_;
  Resolver r_;
};

}  // namespace

PYBIND11_MODULE(_chopf, m) {
  m.doc() = "Colored Hopf algebra toolkit";
  static py::exception<chopf::Error> exc(m, "ChopfError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const chopf::Error& e) {
      PyErr_SetObject(exc.ptr(), py::make_tuple(std::string(error_code_name(e.code())), e.what()).ptr());
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetObject(exc.ptr(), py::make_tuple("ParseError", e.what()).ptr());
    }
  });

  m.def("contexts", &corpus_contexts);
  m.def("corpus_workspace", [](const std::string& c) { return workspace_to_json(corpus_workspace(c)).dump(); });

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&>())
      .def("to_json", &Session::to_json)
      .def("algebras", &Session::algebras)
      .def("morphisms", &Session::morphisms)
      .def("subspaces", &Session::subspaces)
      .def("verify", &Session::verify)
      .def("hkernel", &Session::hkernel)
      .def("cokernel", &Session::cokernel)
      .def("normal", &Session::normal)
      .def("twist", &Session::twist)
      .def("abelian", &Session::abelian)
      .def("suite", &Session::suite, py::arg("quick") = false, py::arg("fail_fast") = false)
      .def("mutate", &Session::mutate, py::arg("algebra"), py::arg("kind"), py::arg("name") = "");
}
