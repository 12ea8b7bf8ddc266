#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chopf/scalar.hpp"

namespace chopf {

/// An element of Z^r x Z/n_1 x ... x Z/n_k, stored with torsion coordinates in [0, n_i).
struct GroupElement {
  std::vector<std::int64_t> coords;

  std::string to_string() const;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finitely generated abelian group Z^r x Z/n_1 x ... x Z/n_k.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  FgAbGroup(std::size_t free_rank, std::vector<std::int64_t> torsion);

  static FgAbGroup cyclic(std::int64_t n) { return FgAbGroup(0, {n}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  std::size_t generator_count() const { return free_rank_ + torsion_.size(); }
  /// 0 for free generators.
  std::int64_t generator_order(std::size_t i) const;

  GroupElement identity() const;
  GroupElement generator(std::size_t i) const;
  /// Builds an element from raw coordinates, reducing torsion parts.
  GroupElement element(std::vector<std::int64_t> coords) const;

  GroupElement canonicalize(const GroupElement& a) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }
  GroupElement scale(const GroupElement& a, std::int64_t n) const;
  bool is_identity(const GroupElement& a) const;
  bool contains(const GroupElement& a) const;

  /// Every torsion combination times free coordinates in [-radius, radius].
  std::vector<GroupElement> box(std::int64_t radius) const;

  std::string to_string() const;
  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  void require_length(const GroupElement& a) const;

  std::size_t free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

enum class ElementOp { Add, Neg, Canonicalize };

GroupElement element_op(const FgAbGroup& group, ElementOp op, const GroupElement& a,
                        const std::optional<GroupElement>& b = std::nullopt);

/// A bicharacter given by its values on generator pairs; it is also the shape used for 2-cocycles.
class Bicharacter {
 public:
  Bicharacter() = default;
  Bicharacter(FgAbGroup group, FieldSpec field, std::vector<std::vector<Scalar>> gen_values);

  static Bicharacter trivial(const FgAbGroup& group, const FieldSpec& field);
  /// The super sign (x, y) -> (-1)^{xy} on Z/2.
  static Bicharacter eta(const FieldSpec& field);

  const FgAbGroup& group() const { return group_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::vector<Scalar>>& gen_values() const { return gen_values_; }

  Scalar eval(const GroupElement& g, const GroupElement& h) const;

  friend bool operator==(const Bicharacter&, const Bicharacter&) = default;

 private:
  FgAbGroup group_;
  FieldSpec field_;
  std::vector<std::vector<Scalar>> gen_values_;
};

using Cocycle2 = Bicharacter;

Scalar bichar_eval(const Bicharacter& phi, const GroupElement& g, const GroupElement& h);

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

ValidationReport validate_commutation_factor(const Bicharacter& phi);

/// 1 when phi(g, g) = -1, 0 when phi(g, g) = 1.
int u_bar(const Bicharacter& phi, const GroupElement& g);

/// -1 exactly when u_bar(g) = u_bar(h) = 1.
Scalar kappa_eval(const Bicharacter& phi, const GroupElement& g, const GroupElement& h);

/// Upper-triangular bicharacter gamma with phi(g,h) = eta(u g, u h) gamma(g,h) / gamma(h,g).
Cocycle2 build_gamma(const Bicharacter& phi);

/// gamma(g+h, k) gamma(g, h) == gamma(g, h+k) gamma(h, k) on the given triples; first failure.
std::optional<std::string> check_cocycle(const Cocycle2& gamma, const std::vector<GroupElement>& elements);

/// phi(g,h) == eta(u g, u h) gamma(g,h)/gamma(h,g) on all pairs; first failure.
std::optional<std::string> check_braided_twist(const Bicharacter& phi, const Cocycle2& gamma,
                                               const std::vector<GroupElement>& elements);

}  // namespace chopf
