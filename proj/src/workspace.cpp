#include "chopf/workspace.hpp"

#include <fstream>
#include <sstream>

#include "chopf/error.hpp"

namespace chopf {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) parse_error(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t index_in(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    parse_error(where + ": expected a non-negative index");
  }
  const auto i = j.get<std::size_t>();
  if (i >= dim) throw Error(ErrorCode::DimensionMismatch, where + ": index " + std::to_string(i) + " out of range");
  return i;
}

Scalar scalar_from(const Json& j, const FieldSpec& f, const std::string& where) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  parse_error(where + ": expected a scalar string");
}

}  // namespace

const HopfData& Workspace::algebra(const std::string& name) const {
  auto it = algebras.find(name);
  if (it == algebras.end()) throw Error(ErrorCode::UnknownName, "unknown name " + name);
  return it->second;
}

const MorphismSpec& Workspace::morphism(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end()) throw Error(ErrorCode::UnknownName, "unknown name " + name);
  return it->second;
}

const SubspaceSpec& Workspace::subspace(const std::string& name) const {
  auto it = subspaces.find(name);
  if (it == subspaces.end()) throw Error(ErrorCode::UnknownName, "unknown name " + name);
  return it->second;
}

void Workspace::add(const ColorHopfAlgebra& h) { algebras[h.name()] = h.data(); }

void Workspace::add(const std::string& name, const HopfMorphism& f) {
  morphisms[name] = MorphismSpec{f.source().name(), f.target().name(), f.matrix()};
}

void Workspace::add(const std::string& name, const std::string& algebra, const GradedSubspace& s) {
  subspaces[name] = SubspaceSpec{algebra, s.rows()};
}

Json field_to_json(const FieldSpec& f) {
  if (f.is_prime_field()) return Json{{"kind", "prime"}, {"p", f.p}};
  return Json{{"kind", "rationals"}};
}

FieldSpec field_from_json(const Json& j) {
  const auto kind = member(j, "kind", "field").get<std::string>();
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime") return FieldSpec::prime(member(j, "p", "field").get<std::uint64_t>());
  parse_error("field: unknown kind " + kind);
}

Json group_to_json(const FgAbGroup& g) { return Json{{"free_rank", g.free_rank()}, {"torsion", g.torsion()}}; }

FgAbGroup group_from_json(const Json& j) {
  return FgAbGroup(member(j, "free_rank", "group").get<std::size_t>(),
                   member(j, "torsion", "group").get<std::vector<std::int64_t>>());
}

Json scalar_matrix_to_json(const std::vector<std::vector<Scalar>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json bicharacter_to_json(const Bicharacter& phi) { return scalar_matrix_to_json(phi.gen_values()); }

Bicharacter bicharacter_from_json(const Json& j, const FgAbGroup& g, const FieldSpec& f) {
  if (!j.is_array()) parse_error("phi: expected a matrix");
  std::vector<std::vector<Scalar>> values;
  for (const auto& row : j) {
    if (!row.is_array()) parse_error("phi: expected a matrix");
    std::vector<Scalar> r;
    for (const auto& x : row) r.push_back(scalar_from(x, f, "phi"));
    values.push_back(std::move(r));
  }
  return Bicharacter(g, f, std::move(values));
}

Json element_to_json(const GroupElement& g) { return g.coords; }

GroupElement element_from_json(const Json& j, const FgAbGroup& g) {
  auto coords = j.get<std::vector<std::int64_t>>();
  if (coords.size() != g.generator_count()) {
    throw Error(ErrorCode::LengthMismatch, "degree has " + std::to_string(coords.size()) + " coordinates");
  }
  return g.element(std::move(coords));
}

Json space_to_json(const GradedVectorSpace& v) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    basis.push_back(Json{{"name", v.name(i)}, {"degree", element_to_json(v.degree(i))}});
  }
  return Json{{"basis", std::move(basis)}};
}

GradedVectorSpace space_from_json(const Json& j, const FieldSpec& f, const FgAbGroup& g) {
  std::vector<GroupElement> degrees;
  std::vector<std::string> names;
  for (const auto& b : member(j, "basis", "space")) {
    names.push_back(member(b, "name", "basis").get<std::string>());
    degrees.push_back(element_from_json(member(b, "degree", "basis"), g));
  }
  return GradedVectorSpace(f, g, std::move(degrees), std::move(names));
}

Json vector_to_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [i, c] : v.entries()) out.push_back(Json::array({i, c.to_string()}));
  return out;
}

SparseVec vector_from_json(const Json& j, const FieldSpec& f, std::size_t dim) {
  if (!j.is_array()) parse_error("vector: expected [[index, scalar], ...]");
  std::vector<SparseVec::Entry> entries;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) parse_error("vector: expected [index, scalar] pairs");
    entries.emplace_back(index_in(e[0], dim, "vector"), scalar_from(e[1], f, "vector"));
  }
  return SparseVec::from_entries(std::move(entries));
}

Json matrix_to_json(const SparseMatrix& m, const FieldSpec& f) { return scalar_matrix_to_json(m.to_dense(f)); }

SparseMatrix matrix_from_json(const Json& j, const FieldSpec& f, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw Error(ErrorCode::DimensionMismatch, "matrix: expected " + std::to_string(rows) + " rows");
  }
  std::vector<std::vector<Scalar>> dense;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "matrix: expected " + std::to_string(cols) + " columns");
    }
    std::vector<Scalar> r;
    for (const auto& x : row) r.push_back(scalar_from(x, f, "matrix"));
    dense.push_back(std::move(r));
  }
  return SparseMatrix::from_dense(dense, cols);
}

Json hopf_to_json(const HopfData& d) {
  const std::size_t n = d.dim();
  const FieldSpec& f = d.space.field();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& col = d.mult.column(i * n + j);
      if (!col.is_zero()) mult.push_back(Json::array({i, j, vector_to_json(col)}));
    }
  }
  Json comult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json terms = Json::array();
    for (const auto& [p, c] : d.comult.column(i).entries()) terms.push_back(Json::array({p / n, p % n, c.to_string()}));
    comult.push_back(Json::array({i, std::move(terms)}));
  }
  return Json{{"space", space_to_json(d.space)}, {"phi", bicharacter_to_json(d.phi)},
              {"mult", std::move(mult)},         {"unit", vector_to_json(d.unit)},
              {"comult", std::move(comult)},     {"counit", vector_to_json(d.counit)},
              {"antipode", matrix_to_json(d.antipode, f)}};
}

HopfData hopf_from_json(const Json& j, const std::string& name, const FieldSpec& f, const FgAbGroup& g,
                        const Bicharacter& phi) {
  const std::string where = "algebra " + name;
  HopfData d;
  d.name = name;
  d.space = space_from_json(member(j, "space", where), f, g);
  d.phi = j.contains("phi") ? bicharacter_from_json(j.at("phi"), g, f) : phi;
  if (!(d.phi == phi)) throw Error(ErrorCode::InvalidArgument, where + ": phi differs from the workspace factor");
  const std::size_t n = d.space.dim();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, where + ": empty basis");
  d.mult = SparseMatrix(n, n * n);
  for (const auto& t : member(j, "mult", where)) {
    if (!t.is_array() || t.size() != 3) parse_error(where + ": mult entries are [i, j, vector]");
    const std::size_t a = index_in(t[0], n, where), b = index_in(t[1], n, where);
    d.mult.set_column(a * n + b, d.mult.column(a * n + b) + vector_from_json(t[2], f, n));
  }
  const Json& unit = member(j, "unit", where);
  d.unit = unit.is_number() ? SparseVec::unit(index_in(unit, n, where), f) : vector_from_json(unit, f, n);
  d.comult = SparseMatrix(n * n, n);
  for (const auto& t : member(j, "comult", where)) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array()) parse_error(where + ": comult entries are [i, terms]");
    const std::size_t i = index_in(t[0], n, where);
    std::vector<SparseVec::Entry> entries;
    for (const auto& term : t[1]) {
      if (!term.is_array() || term.size() != 3) parse_error(where + ": comult terms are [j, k, scalar]");
      entries.emplace_back(index_in(term[0], n, where) * n + index_in(term[1], n, where), scalar_from(term[2], f, where));
    }
    d.comult.set_column(i, d.comult.column(i) + SparseVec::from_entries(std::move(entries)));
  }
  d.counit = vector_from_json(member(j, "counit", where), f, n);
  d.antipode = matrix_from_json(member(j, "antipode", where), f, n, n);
  return d;
}

Json subspace_to_json(const GradedSubspace& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows()) rows.push_back(vector_to_json(r));
  return rows;
}

Json workspace_to_json(const Workspace& w) {
  Json algebras = Json::object();
  for (const auto& [name, d] : w.algebras) algebras[name] = hopf_to_json(d);
  Json morphisms = Json::object();
  for (const auto& [name, m] : w.morphisms) {
    morphisms[name] = Json{{"source", m.source}, {"target", m.target}, {"matrix", matrix_to_json(m.matrix, w.field)}};
  }
  Json subspaces = Json::object();
  for (const auto& [name, s] : w.subspaces) {
    Json rows = Json::array();
    for (const auto& r : s.rows) rows.push_back(vector_to_json(r));
    subspaces[name] = Json{{"algebra", s.algebra}, {"rows", std::move(rows)}};
  }
  return Json{{"field", field_to_json(w.field)}, {"group", group_to_json(w.group)},
              {"phi", bicharacter_to_json(w.phi)}, {"algebras", std::move(algebras)},
              {"morphisms", std::move(morphisms)}, {"subspaces", std::move(subspaces)}};
}

Workspace workspace_from_json(const Json& j) {
  try {
    Workspace w;
    if (!j.is_object()) parse_error("workspace: expected an object");
    w.field = j.contains("field") ? field_from_json(j.at("field")) : FieldSpec::rationals();
    w.group = j.contains("group") ? group_from_json(j.at("group")) : FgAbGroup(0, {});
    w.phi = j.contains("phi") ? bicharacter_from_json(j.at("phi"), w.group, w.field)
                              : Bicharacter::trivial(w.group, w.field);
    const ValidationReport v = validate_commutation_factor(w.phi);
    if (!v.ok()) throw Error(ErrorCode::InvalidArgument, "phi is not a commutation factor: " + v.failures.front());
    if (j.contains("algebras")) {
      for (const auto& [name, a] : j.at("algebras").items()) {
        w.algebras[name] = hopf_from_json(a, name, w.field, w.group, w.phi);
      }
    }
    if (j.contains("morphisms")) {
      for (const auto& [name, m] : j.at("morphisms").items()) {
        MorphismSpec spec;
        spec.source = member(m, "source", name).get<std::string>();
        spec.target = member(m, "target", name).get<std::string>();
        const std::size_t rows = w.algebra(spec.target).dim();
        const std::size_t cols = w.algebra(spec.source).dim();
        spec.matrix = matrix_from_json(member(m, "matrix", name), w.field, rows, cols);
        w.morphisms[name] = std::move(spec);
      }
    }
    if (j.contains("subspaces")) {
      for (const auto& [name, s] : j.at("subspaces").items()) {
        SubspaceSpec spec;
        spec.algebra = member(s, "algebra", name).get<std::string>();
        const std::size_t dim = w.algebra(spec.algebra).dim();
        for (const auto& r : member(s, "rows", name)) spec.rows.push_back(vector_from_json(r, w.field, dim));
        w.subspaces[name] = std::move(spec);
      }
    }
    return w;
  } catch (const Json::exception& e) {
    parse_error(e.what());
  }
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
  return workspace_from_json(j);
}

void save_workspace(const Workspace& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << workspace_to_json(w).dump(1) << "\n";
}

}  // namespace chopf
