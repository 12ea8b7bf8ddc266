#include "chopf/group.hpp"

#include <numeric>
#include <sstream>

#include "chopf/error.hpp"

namespace chopf {

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ']';
  return os.str();
}

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (auto n : torsion_) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "torsion moduli must be >= 2");
  }
}

std::int64_t FgAbGroup::generator_order(std::size_t i) const {
  return i < free_rank_ ? 0 : torsion_.at(i - free_rank_);
}

GroupElement FgAbGroup::identity() const { return GroupElement{std::vector<std::int64_t>(generator_count(), 0)}; }

GroupElement FgAbGroup::generator(std::size_t i) const {
  if (i >= generator_count()) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  GroupElement g = identity();
  g.coords[i] = 1;
  return g;
}

void FgAbGroup::require_length(const GroupElement& a) const {
  if (a.coords.size() != generator_count()) {
    throw Error(ErrorCode::LengthMismatch, "element " + a.to_string() + " has " + std::to_string(a.coords.size()) +
                                                " coordinates, group " + to_string() + " needs " +
                                                std::to_string(generator_count()));
  }
}

GroupElement FgAbGroup::canonicalize(const GroupElement& a) const {
  require_length(a);
  GroupElement out = a;
  for (std::size_t k = 0; k < torsion_.size(); ++k) {
    auto& c = out.coords[free_rank_ + k];
    c %= torsion_[k];
    if (c < 0) c += torsion_[k];
  }
  return out;
}

GroupElement FgAbGroup::element(std::vector<std::int64_t> coords) const {
  return canonicalize(GroupElement{std::move(coords)});
}

GroupElement FgAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  require_length(a);
  require_length(b);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return canonicalize(out);
}

GroupElement FgAbGroup::neg(const GroupElement& a) const {
  require_length(a);
  GroupElement out = a;
  for (auto& c : out.coords) c = -c;
  return canonicalize(out);
}

GroupElement FgAbGroup::scale(const GroupElement& a, std::int64_t n) const {
  require_length(a);
  GroupElement out = a;
  for (auto& c : out.coords) c *= n;
  return canonicalize(out);
}

bool FgAbGroup::is_identity(const GroupElement& a) const { return canonicalize(a) == identity(); }

bool FgAbGroup::contains(const GroupElement& a) const {
  return a.coords.size() == generator_count() && canonicalize(a) == a;
}

std::vector<GroupElement> FgAbGroup::box(std::int64_t radius) const {
  std::vector<GroupElement> out{identity()};
  for (std::size_t i = 0; i < generator_count(); ++i) {
    const bool free = i < free_rank_;
    const std::int64_t lo = free ? -radius : 0;
    const std::int64_t hi = free ? radius : generator_order(i) - 1;
    std::vector<GroupElement> next;
    for (const auto& e : out) {
      for (std::int64_t c = lo; c <= hi; ++c) {
        GroupElement x = e;
        x.coords[i] = c;
        next.push_back(x);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string FgAbGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (auto n : torsion_) {
    os << (first ? "" : " x ") << "Z/" << n;
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

GroupElement element_op(const FgAbGroup& group, ElementOp op, const GroupElement& a,
                        const std::optional<GroupElement>& b) {
  switch (op) {
    case ElementOp::Add:
      if (!b) throw Error(ErrorCode::InvalidArgument, "add needs two operands");
      return group.add(a, *b);
    case ElementOp::Neg: return group.neg(a);
    case ElementOp::Canonicalize: return group.canonicalize(a);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown element op");
}

Bicharacter::Bicharacter(FgAbGroup group, FieldSpec field, std::vector<std::vector<Scalar>> gen_values)
    : group_(std::move(group)), field_(field), gen_values_(std::move(gen_values)) {
  const std::size_t n = group_.generator_count();
  if (gen_values_.size() != n) throw Error(ErrorCode::DimensionMismatch, "bicharacter matrix must be square");
  for (const auto& row : gen_values_) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "bicharacter matrix must be square");
    for (const auto& v : row) {
      if (!(v.field() == field_)) throw Error(ErrorCode::FieldMismatch, "bicharacter entry in wrong field");
      if (v.is_zero()) throw Error(ErrorCode::InvalidArgument, "bicharacter values must be nonzero");
    }
  }
}

Bicharacter Bicharacter::trivial(const FgAbGroup& group, const FieldSpec& field) {
  const std::size_t n = group.generator_count();
  return Bicharacter(group, field, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::one(field))));
}

Bicharacter Bicharacter::eta(const FieldSpec& field) {
  return Bicharacter(FgAbGroup::cyclic(2), field, {{Scalar(field, -1)}});
}

Scalar Bicharacter::eval(const GroupElement& g, const GroupElement& h) const {
  if (!group_.contains(g) || !group_.contains(h)) {
    throw Error(ErrorCode::GroupMismatch, g.to_string() + "," + h.to_string() + " not in " + group_.to_string());
  }
  Scalar out = Scalar::one(field_);
  const std::size_t n = group_.generator_count();
  for (std::size_t i = 0; i < n; ++i) {
    if (g.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (h.coords[j] == 0) continue;
      out *= pow(gen_values_[i][j], g.coords[i] * h.coords[j]);
    }
  }
  return out;
}

Scalar bichar_eval(const Bicharacter& phi, const GroupElement& g, const GroupElement& h) { return phi.eval(g, h); }

ValidationReport validate_commutation_factor(const Bicharacter& phi) {
  ValidationReport report;
  const FgAbGroup& G = phi.group();
  const FieldSpec& f = phi.field();
  const std::size_t n = G.generator_count();
  const Scalar one = Scalar::one(f);
  auto label = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& v = phi.gen_values()[i][j];
      const std::int64_t ni = G.generator_order(i);
      const std::int64_t nj = G.generator_order(j);
      if (ni > 0 && !(pow(v, ni) == one)) {
        report.failures.push_back("torsion compatibility: phi" + label(i, j) + "^" + std::to_string(ni) + " = " +
                                  pow(v, ni).to_string() + " != 1");
      }
      if (nj > 0 && !(pow(v, nj) == one)) {
        report.failures.push_back("torsion compatibility: phi" + label(i, j) + "^" + std::to_string(nj) + " = " +
                                  pow(v, nj).to_string() + " != 1");
      }
      if (!(v * phi.gen_values()[j][i] == one)) {
        report.failures.push_back("skew-symmetry: phi" + label(i, j) + " phi" + label(j, i) + " != 1");
      }
      // Values on torsion generators must be roots of unity of an order the field supports.
      if (ni > 0 || nj > 0) {
        const std::uint64_t ord = multiplicative_order(v);
        const std::int64_t bound = ni > 0 && nj > 0 ? std::gcd(ni, nj) : (ni > 0 ? ni : nj);
        if (ord == 0 || bound % static_cast<std::int64_t>(ord) != 0 || !nth_roots_of_unity_exist(f, ord)) {
          report.failures.push_back("value availability: phi" + label(i, j) + " = " + v.to_string() +
                                    " is not a root of unity of order dividing " + std::to_string(bound));
        }
      }
    }
  }
  return report;
}

int u_bar(const Bicharacter& phi, const GroupElement& g) {
  const Scalar v = phi.eval(g, g);
  if (v.is_one()) return 0;
  if (v == Scalar(phi.field(), -1)) return 1;
  throw Error(ErrorCode::InvalidArgument, "phi(g,g) = " + v.to_string() + " is not +-1; not a commutation factor");
}

Scalar kappa_eval(const Bicharacter& phi, const GroupElement& g, const GroupElement& h) {
  return Scalar(phi.field(), (u_bar(phi, g) == 1 && u_bar(phi, h) == 1) ? -1 : 1);
}

Cocycle2 build_gamma(const Bicharacter& phi) {
  const auto report = validate_commutation_factor(phi);
  if (!report.ok()) throw Error(ErrorCode::InvalidArgument, "not a commutation factor: " + report.failures.front());
  const FgAbGroup& G = phi.group();
  const std::size_t n = G.generator_count();
  const Scalar one = Scalar::one(phi.field());
  std::vector<std::vector<Scalar>> values(n, std::vector<Scalar>(n, one));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto gi = G.generator(i);
      const auto gj = G.generator(j);
      values[i][j] = phi.eval(gi, gj) * kappa_eval(phi, gi, gj);
    }
  }
  return Cocycle2(G, phi.field(), std::move(values));
}

std::optional<std::string> check_cocycle(const Cocycle2& gamma, const std::vector<GroupElement>& elements) {
  const FgAbGroup& G = gamma.group();
  if (!gamma.eval(G.identity(), G.identity()).is_one()) return "gamma(1,1) != 1";
  for (const auto& g : elements) {
    for (const auto& h : elements) {
      for (const auto& k : elements) {
        const Scalar lhs = gamma.eval(G.add(g, h), k) * gamma.eval(g, h);
        const Scalar rhs = gamma.eval(g, G.add(h, k)) * gamma.eval(h, k);
        if (!(lhs == rhs)) {
          return "cocycle identity fails at " + g.to_string() + "," + h.to_string() + "," + k.to_string();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_braided_twist(const Bicharacter& phi, const Cocycle2& gamma,
                                               const std::vector<GroupElement>& elements) {
  for (const auto& g : elements) {
    for (const auto& h : elements) {
      const Scalar eta = Scalar(phi.field(), (u_bar(phi, g) == 1 && u_bar(phi, h) == 1) ? -1 : 1);
      const Scalar rhs = eta * gamma.eval(g, h) / gamma.eval(h, g);
      if (!(phi.eval(g, h) == rhs)) {
        return "phi(g,h) != eta(u g, u h) gamma(g,h)/gamma(h,g) at " + g.to_string() + "," + h.to_string();
      }
    }
  }
  return std::nullopt;
}

}  // namespace chopf
