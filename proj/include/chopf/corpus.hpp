#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chopf/hopf.hpp"

namespace chopf {

/// Multiplication table of a finite group on indices 0..n-1.
struct FiniteGroupTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::vector<std::string> names;

  /// Z/n with elements 1, g, g^2, ...; prefix names the generator.
  static FiniteGroupTable cyclic(std::size_t n, const std::string& generator = "g");
  /// S3 with elements (), (12), (13), (23), (123), (132).
  static FiniteGroupTable s3();
  static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
  /// Builds from a raw table; identity and inverses are derived, the group laws are checked.
  static FiniteGroupTable from_table(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names);

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  bool is_abelian() const;
  std::size_t index_of(const std::string& name) const;
};

/// k Gamma with group-like basis. Group-likes can only live in degree 1_G, so any grading
/// that is not identically trivial raises GradingIncompatible (with a witness).
ColorHopfAlgebra group_algebra(const FiniteGroupTable& gamma, const FieldSpec& field, const Bicharacter& phi,
                               const std::vector<GroupElement>& grading = {}, const std::string& name = "");

/// Exterior Hopf algebra on primitive generators of the given degrees (each must satisfy phi(d,d) = -1).
ColorHopfAlgebra exterior_hopf(const FieldSpec& field, const Bicharacter& phi, const std::vector<GroupElement>& degrees,
                               std::vector<std::string> generator_names = {}, const std::string& name = "");

enum class MutationKind { FlipAntipodeSign, DropCompatScalar, BreakDegree };

std::string mutation_name(MutationKind kind);
MutationKind parse_mutation(const std::string& name);

struct Mutation {
  HopfData data;
  std::string target_check;
  std::string description;
};

/// Changes exactly one structure entry (or one basis degree) of a verified algebra.
Mutation mutate(const ColorHopfAlgebra& h, MutationKind kind);

}  // namespace chopf
