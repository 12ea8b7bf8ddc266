#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "chopf/hopf.hpp"

namespace chopf {

using Json = nlohmann::ordered_json;

struct MorphismSpec {
  std::string source;
  std::string target;
  SparseMatrix matrix;
  friend bool operator==(const MorphismSpec&, const MorphismSpec&) = default;
};

struct SubspaceSpec {
  std::string algebra;
  std::vector<SparseVec> rows;
  friend bool operator==(const SubspaceSpec&, const SubspaceSpec&) = default;
};

/// Raw definitions sharing one field, grading group and commutation factor. Nothing is verified here.
struct Workspace {
  FieldSpec field;
  FgAbGroup group;
  Bicharacter phi;
  std::map<std::string, HopfData> algebras;
  std::map<std::string, MorphismSpec> morphisms;
  std::map<std::string, SubspaceSpec> subspaces;

  /// Throws UnknownName.
  const HopfData& algebra(const std::string& name) const;
  const MorphismSpec& morphism(const std::string& name) const;
  const SubspaceSpec& subspace(const std::string& name) const;

  /// Adds a verified algebra under its own name.
  void add(const ColorHopfAlgebra& h);
  void add(const std::string& name, const HopfMorphism& f);
  void add(const std::string& name, const std::string& algebra, const GradedSubspace& s);

  friend bool operator==(const Workspace&, const Workspace&) = default;
};

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);
Json group_to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);
Json scalar_matrix_to_json(const std::vector<std::vector<Scalar>>& rows);
Json bicharacter_to_json(const Bicharacter& phi);
Bicharacter bicharacter_from_json(const Json& j, const FgAbGroup& g, const FieldSpec& f);
Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j, const FgAbGroup& g);

Json space_to_json(const GradedVectorSpace& v);
GradedVectorSpace space_from_json(const Json& j, const FieldSpec& f, const FgAbGroup& g);
/// Sparse vector as [[index, "scalar"], ...].
Json vector_to_json(const SparseVec& v);
SparseVec vector_from_json(const Json& j, const FieldSpec& f, std::size_t dim);
/// Dense row-major matrix of scalar strings.
Json matrix_to_json(const SparseMatrix& m, const FieldSpec& f);
SparseMatrix matrix_from_json(const Json& j, const FieldSpec& f, std::size_t rows, std::size_t cols);

Json hopf_to_json(const HopfData& d);
/// The algebra must use the given field and group; phi defaults to the workspace factor.
HopfData hopf_from_json(const Json& j, const std::string& name, const FieldSpec& f, const FgAbGroup& g,
                        const Bicharacter& phi);

Json subspace_to_json(const GradedSubspace& s);

Json workspace_to_json(const Workspace& w);
/// Throws ParseError, UnknownName, DimensionMismatch or InvalidArgument on malformed input.
Workspace workspace_from_json(const Json& j);
Workspace load_workspace(const std::string& path);
void save_workspace(const Workspace& w, const std::string& path);

/// The stock contexts shipped with the library: "super", "z4", "klein", "f5".
std::vector<std::string> corpus_contexts();
Workspace corpus_workspace(const std::string& context);

}  // namespace chopf
