#include "chopf/hopf.hpp"

#include <map>
#include <sstream>

#include "chopf/error.hpp"

namespace chopf {

namespace {

using Entries = std::vector<SparseVec::Entry>;

struct BraidTable {
  std::vector<std::size_t> cls;
  std::vector<std::vector<Scalar>> table;

  BraidTable() = default;
  BraidTable(const GradedVectorSpace& space, const Bicharacter& phi) {
    std::map<GroupElement, std::size_t> ids;
    std::vector<GroupElement> reps;
    for (const auto& d : space.degrees()) {
      auto [it, fresh] = ids.emplace(d, reps.size());
      if (fresh) reps.push_back(d);
      cls.push_back(it->second);
    }
    table.assign(reps.size(), std::vector<Scalar>(reps.size()));
    for (std::size_t a = 0; a < reps.size(); ++a) {
      for (std::size_t b = 0; b < reps.size(); ++b) table[a][b] = phi.eval(reps[a], reps[b]);
    }
  }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return table[cls[i]][cls[j]]; }
};

/// Evaluation helpers over raw (possibly invalid) structure tensors.
struct Raw {
  const HopfData& d;
  std::size_t n;
  FieldSpec f;
  BraidTable braid;

  explicit Raw(const HopfData& data) : d(data), n(data.dim()), f(data.space.field()), braid(data.space, data.phi) {}

  SparseVec e(std::size_t i) const { return SparseVec::unit(i, f); }

  SparseVec mul(const SparseVec& a, const SparseVec& b) const {
    Entries acc;
    for (const auto& [i, x] : a.entries()) {
      for (const auto& [j, y] : b.entries()) {
        const Scalar c = x * y;
        for (const auto& [k, z] : d.mult.column(i * n + j).entries()) acc.emplace_back(k, c * z);
      }
    }
    return SparseVec::from_entries(std::move(acc));
  }

  /// Braided product on H (x) H: (a (x) b)(c (x) d) = phi(|b|,|c|) ac (x) bd.
  SparseVec mul2(const SparseVec& x, const SparseVec& y) const {
    Entries acc;
    for (const auto& [p, xv] : x.entries()) {
      const std::size_t a = p / n, b = p % n;
      for (const auto& [q, yv] : y.entries()) {
        const std::size_t c = q / n, dd = q % n;
        const Scalar coeff = xv * yv * braid(b, c);
        const SparseVec& ac = d.mult.column(a * n + c);
        const SparseVec& bd = d.mult.column(b * n + dd);
        for (const auto& [r, rv] : ac.entries()) {
          for (const auto& [s, sv] : bd.entries()) acc.emplace_back(r * n + s, coeff * rv * sv);
        }
      }
    }
    return SparseVec::from_entries(std::move(acc));
  }

  Scalar eps(const SparseVec& a) const {
    Scalar out = Scalar::zero(f);
    for (const auto& [i, x] : a.entries()) {
      if (const Scalar* c = d.counit.find(i)) out += x * *c;
    }
    return out;
  }
};

void record(CheckResult& r, std::vector<std::size_t> witness, const SparseVec& lhs, const SparseVec& rhs) {
  if (!r.passed) return;
  r.passed = false;
  r.witness = std::move(witness);
  r.residual = lhs - rhs;
}

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

void check_indices(const SparseVec& v, std::size_t bound, const std::string& what) {
  for (const auto& [i, x] : v.entries()) require_shape(i < bound, what + " index " + std::to_string(i) + " out of range");
}

std::string format_witness(const std::vector<std::size_t>& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << "]";
  return os.str();
}

}  // namespace

bool VerificationReport::ok() const { return failures().empty(); }

std::vector<const CheckResult*> VerificationReport::failures() const {
  std::vector<const CheckResult*> out;
  for (const auto& c : checks) {
    if (c.required && !c.passed) out.push_back(&c);
  }
  return out;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool VerificationReport::failed(const std::string& name) const {
  const CheckResult* c = find(name);
  return c && !c->passed;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (subject.empty() ? "structure" : subject) << ": ";
  const auto bad = failures();
  if (bad.empty()) {
    os << "all " << checks.size() << " checks pass";
    return os.str();
  }
  os << "failed";
  for (const auto* c : bad) {
    os << " " << c->name << " at " << format_witness(c->witness);
    if (!c->detail.empty()) os << " (" << c->detail << ")";
  }
  return os.str();
}

VerificationReport verify_hopf(const HopfData& d, const VerifyFlags& flags) {
  const std::size_t n = d.dim();
  require_shape(d.mult.rows() == n && d.mult.cols() == n * n, "mult must be n x n^2");
  require_shape(d.comult.rows() == n * n && d.comult.cols() == n, "comult must be n^2 x n");
  require_shape(d.antipode.rows() == n && d.antipode.cols() == n, "antipode must be n x n");
  check_indices(d.unit, n, "unit");
  check_indices(d.counit, n, "counit");
  if (!(d.phi.group() == d.space.group())) throw Error(ErrorCode::GroupMismatch, "phi lives on another group");
  if (!(d.phi.field() == d.space.field())) throw Error(ErrorCode::FieldMismatch, "phi lives over another field");

  VerificationReport report;
  report.subject = d.name;
  const Raw h(d);
  const FgAbGroup& G = d.space.group();
  auto deg = [&](std::size_t i) -> const GroupElement& { return d.space.degree(i); };
  auto add_check = [&](const std::string& name, bool required = true) -> CheckResult& {
    report.checks.push_back(CheckResult{name, true, required, {}, {}, {}});
    return report.checks.back();
  };

  {
    CheckResult& r = add_check("commutation_factor");
    const auto v = validate_commutation_factor(d.phi);
    if (!v.ok()) {
      r.passed = false;
      r.detail = v.failures.front();
    }
  }

  {
    CheckResult& r = add_check("degree");
    auto bad = [&](std::vector<std::size_t> w, const std::string& what) {
      if (r.passed) {
        r.passed = false;
        r.witness = std::move(w);
        r.detail = what;
      }
    };
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [k, c] : d.mult.column(i * n + j).entries()) {
          if (!(deg(k) == G.add(deg(i), deg(j)))) bad({i, j, k}, "product");
        }
      }
    }
    for (const auto& [k, c] : d.unit.entries()) {
      if (!G.is_identity(deg(k))) bad({k}, "unit");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [p, c] : d.comult.column(i).entries()) {
        if (!(G.add(deg(p / n), deg(p % n)) == deg(i))) bad({i, p / n, p % n}, "coproduct");
      }
    }
    for (const auto& [k, c] : d.counit.entries()) {
      if (!G.is_identity(deg(k))) bad({k}, "counit");
    }
    if (auto v = degree_violation(d.space, d.space, d.antipode)) bad({v->second, v->first}, "antipode");
  }

  {
    CheckResult& r = add_check("associativity");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      for (std::size_t j = 0; j < n && r.passed; ++j) {
        const SparseVec& ij = d.mult.column(i * n + j);
        for (std::size_t k = 0; k < n; ++k) {
          SparseVec lhs = h.mul(ij, h.e(k));
          SparseVec rhs = h.mul(h.e(i), d.mult.column(j * n + k));
          if (!(lhs == rhs)) {
            record(r, {i, j, k}, lhs, rhs);
            break;
          }
        }
      }
    }
  }

  {
    CheckResult& r = add_check("unit");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      SparseVec left = h.mul(d.unit, h.e(i));
      SparseVec right = h.mul(h.e(i), d.unit);
      if (!(left == h.e(i))) record(r, {i}, left, h.e(i));
      else if (!(right == h.e(i))) record(r, {i}, right, h.e(i));
    }
  }

  {
    CheckResult& r = add_check("coassociativity");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      Entries l, rr;
      for (const auto& [p, c] : d.comult.column(i).entries()) {
        const std::size_t a = p / n, b = p % n;
        for (const auto& [q, x] : d.comult.column(a).entries()) l.emplace_back(q * n + b, c * x);
        for (const auto& [q, x] : d.comult.column(b).entries()) rr.emplace_back(a * n * n + q, c * x);
      }
      SparseVec lhs = SparseVec::from_entries(std::move(l)), rhs = SparseVec::from_entries(std::move(rr));
      if (!(lhs == rhs)) record(r, {i}, lhs, rhs);
    }
  }

  {
    CheckResult& r = add_check("counit");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      Entries l, rr;
      for (const auto& [p, c] : d.comult.column(i).entries()) {
        const std::size_t a = p / n, b = p % n;
        if (const Scalar* x = d.counit.find(a)) l.emplace_back(b, c * *x);
        if (const Scalar* x = d.counit.find(b)) rr.emplace_back(a, c * *x);
      }
      SparseVec lhs = SparseVec::from_entries(std::move(l)), rhs = SparseVec::from_entries(std::move(rr));
      if (!(lhs == h.e(i))) record(r, {i}, lhs, h.e(i));
      else if (!(rhs == h.e(i))) record(r, {i}, rhs, h.e(i));
    }
  }

  {
    CheckResult& r = add_check("compatibility");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      const SparseVec& di = d.comult.column(i);
      for (std::size_t j = 0; j < n; ++j) {
        SparseVec lhs = d.comult.apply(d.mult.column(i * n + j));
        SparseVec rhs = h.mul2(di, d.comult.column(j));
        if (!(lhs == rhs)) {
          record(r, {i, j}, lhs, rhs);
          break;
        }
      }
    }
  }

  {
    CheckResult& r = add_check("counit_multiplicative");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar lhs = h.eps(d.mult.column(i * n + j));
        Scalar rhs = h.eps(h.e(i)) * h.eps(h.e(j));
        if (!(lhs == rhs)) {
          record(r, {i, j}, SparseVec::single(0, lhs), SparseVec::single(0, rhs));
          break;
        }
      }
    }
  }

  {
    CheckResult& r = add_check("unit_coalgebra");
    SparseVec lhs = d.comult.apply(d.unit);
    SparseVec rhs = kron(d.unit, d.unit, n);
    if (!(lhs == rhs)) {
      record(r, {}, lhs, rhs);
      r.detail = "Delta(1) != 1 (x) 1";
    } else if (!h.eps(d.unit).is_one()) {
      record(r, {}, SparseVec::single(0, h.eps(d.unit)), SparseVec::unit(0, h.f));
      r.detail = "epsilon(1) != 1";
    }
  }

  for (int side = 0; side < 2; ++side) {
    CheckResult& r = add_check(side == 0 ? "antipode_left" : "antipode_right");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      SparseVec lhs;
      for (const auto& [p, c] : d.comult.column(i).entries()) {
        const std::size_t a = p / n, b = p % n;
        SparseVec term = side == 0 ? h.mul(d.antipode.column(a), h.e(b)) : h.mul(h.e(a), d.antipode.column(b));
        lhs.axpy(c, term);
      }
      SparseVec rhs = d.unit.scaled(h.eps(h.e(i)));
      if (!(lhs == rhs)) record(r, {i}, lhs, rhs);
    }
  }

  {
    CheckResult& r = add_check("cocommutativity", flags.require_cocommutative);
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      Entries acc;
      for (const auto& [p, c] : d.comult.column(i).entries()) {
        const std::size_t a = p / n, b = p % n;
        acc.emplace_back(b * n + a, c * h.braid(a, b));
      }
      SparseVec lhs = SparseVec::from_entries(std::move(acc));
      if (!(lhs == d.comult.column(i))) record(r, {i}, lhs, d.comult.column(i));
    }
  }

  if (flags.check_commutative) {
    CheckResult& r = add_check("commutativity", false);
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        SparseVec lhs = d.mult.column(j * n + i).scaled(h.braid(i, j));
        if (!(lhs == d.mult.column(i * n + j))) {
          record(r, {i, j}, lhs, d.mult.column(i * n + j));
          break;
        }
      }
    }
  }

  for (auto& c : report.checks) {
    if (!c.passed && c.detail.empty() && !c.residual.is_zero()) {
      std::ostringstream os;
      os << "residual";
      for (const auto& [k, v] : c.residual.entries()) os << " " << k << ":" << v.to_string();
      c.detail = os.str();
    }
  }
  return report;
}

ColorHopfAlgebra ColorHopfAlgebra::verify(HopfData data, const VerifyFlags& flags) {
  VerifyFlags all = flags;
  all.check_commutative = true;
  const VerificationReport report = verify_hopf(data, all);
  if (!report.ok()) throw Error(ErrorCode::VerificationFailed, report.summary());
  auto impl = std::make_shared<Impl>();
  impl->cocommutative = report.find("cocommutativity")->passed;
  impl->commutative = report.find("commutativity")->passed;
  BraidTable t(data.space, data.phi);
  impl->degree_class = std::move(t.cls);
  impl->braid_table = std::move(t.table);
  impl->data = std::move(data);
  ColorHopfAlgebra h;
  h.impl_ = std::move(impl);
  return h;
}

const Scalar& ColorHopfAlgebra::braid(std::size_t i, std::size_t j) const {
  return impl_->braid_table[impl_->degree_class[i]][impl_->degree_class[j]];
}

SparseVec ColorHopfAlgebra::multiply(const SparseVec& a, const SparseVec& b) const { return Raw(data()).mul(a, b); }

Scalar ColorHopfAlgebra::counit(const SparseVec& a) const {
  Scalar out = Scalar::zero(field());
  for (const auto& [i, x] : a.entries()) {
    if (const Scalar* c = data().counit.find(i)) out += x * *c;
  }
  return out;
}

GradedLinearMap ColorHopfAlgebra::mult_map() const {
  return GradedLinearMap(tensor_space(space(), space()), space(), data().mult);
}

GradedLinearMap ColorHopfAlgebra::comult_map() const {
  return GradedLinearMap(space(), tensor_space(space(), space()), data().comult);
}

GradedLinearMap ColorHopfAlgebra::antipode_map() const { return GradedLinearMap(space(), space(), data().antipode); }

GradedLinearMap ColorHopfAlgebra::counit_map() const {
  return GradedLinearMap(space(), GradedVectorSpace::unit(field(), group()), SparseMatrix::row(data().counit, dim()));
}

GradedLinearMap ColorHopfAlgebra::unit_map() const {
  return GradedLinearMap(GradedVectorSpace::unit(field(), group()), space(),
                         SparseMatrix::from_columns(dim(), {data().unit}));
}

void require_same_setting(const ColorHopfAlgebra& a, const ColorHopfAlgebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
  if (!(a.group() == b.group())) throw Error(ErrorCode::GroupMismatch, a.name() + " vs " + b.name());
  if (!(a.phi() == b.phi())) throw Error(ErrorCode::GroupMismatch, "different commutation factors on " + a.name() + " and " + b.name());
}

SparseVec apply_tensor(const SparseMatrix& f, const SparseMatrix& g, const SparseVec& x) {
  Entries acc;
  const std::size_t gc = g.cols(), gr = g.rows();
  for (const auto& [p, c] : x.entries()) {
    const SparseVec& fa = f.column(p / gc);
    const SparseVec& gb = g.column(p % gc);
    for (const auto& [i, u] : fa.entries()) {
      for (const auto& [j, v] : gb.entries()) acc.emplace_back(i * gr + j, c * u * v);
    }
  }
  return SparseVec::from_entries(std::move(acc));
}

VerificationReport verify_morphism(const ColorHopfAlgebra& src, const ColorHopfAlgebra& tgt, const SparseMatrix& m) {
  require_same_setting(src, tgt);
  require_shape(m.rows() == tgt.dim() && m.cols() == src.dim(),
                "morphism matrix must be " + std::to_string(tgt.dim()) + "x" + std::to_string(src.dim()));
  VerificationReport report;
  report.subject = src.name() + " -> " + tgt.name();
  const std::size_t n = src.dim();
  const FieldSpec& f = src.field();
  auto e = [&](std::size_t i) { return SparseVec::unit(i, f); };
  auto add_check = [&](const std::string& name) -> CheckResult& {
    report.checks.push_back(CheckResult{name, true, true, {}, {}, {}});
    return report.checks.back();
  };
  {
    CheckResult& r = add_check("degree");
    if (auto v = degree_violation(src.space(), tgt.space(), m)) {
      r.passed = false;
      r.witness = {v->second, v->first};
      r.detail = "entry maps degree " + src.space().degree(v->second).to_string() + " to " +
                 tgt.space().degree(v->first).to_string();
    }
  }
  {
    CheckResult& r = add_check("algebra_map");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        SparseVec lhs = m.apply(src.multiply_basis(i, j));
        SparseVec rhs = tgt.multiply(m.column(i), m.column(j));
        if (!(lhs == rhs)) {
          record(r, {i, j}, lhs, rhs);
          break;
        }
      }
    }
  }
  {
    CheckResult& r = add_check("unit_preserved");
    SparseVec lhs = m.apply(src.unit());
    if (!(lhs == tgt.unit())) record(r, {}, lhs, tgt.unit());
  }
  {
    CheckResult& r = add_check("coalgebra_map");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      SparseVec lhs = apply_tensor(m, m, src.data().comult.column(i));
      SparseVec rhs = tgt.comultiply(m.column(i));
      if (!(lhs == rhs)) record(r, {i}, lhs, rhs);
    }
  }
  {
    CheckResult& r = add_check("counit_preserved");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      Scalar lhs = tgt.counit(m.column(i));
      Scalar rhs = src.counit(e(i));
      if (!(lhs == rhs)) record(r, {i}, SparseVec::single(0, lhs), SparseVec::single(0, rhs));
    }
  }
  {
    CheckResult& r = add_check("antipode_compatible");
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      SparseVec lhs = tgt.antipode(m.column(i));
      SparseVec rhs = m.apply(src.data().antipode.column(i));
      if (!(lhs == rhs)) record(r, {i}, lhs, rhs);
    }
  }
  return report;
}

HopfMorphism HopfMorphism::make(ColorHopfAlgebra source, ColorHopfAlgebra target, SparseMatrix matrix,
                                std::string name) {
  const VerificationReport report = verify_morphism(source, target, matrix);
  if (!report.ok()) {
    throw Error(ErrorCode::VerificationFailed, (name.empty() ? std::string() : name + " ") + report.summary());
  }
  return HopfMorphism(std::move(source), std::move(target), std::move(matrix), std::move(name));
}

bool HopfMorphism::is_injective() const { return rank(matrix_) == source_.dim(); }
bool HopfMorphism::is_surjective() const { return rank(matrix_) == target_.dim(); }

ColorHopfAlgebra trivial_hopf(const FieldSpec& field, const Bicharacter& phi) {
  HopfData d;
  d.name = "k";
  d.space = GradedVectorSpace::unit(field, phi.group());
  d.phi = phi;
  d.mult = SparseMatrix::identity(1, field);
  d.unit = SparseVec::unit(0, field);
  d.comult = SparseMatrix::identity(1, field);
  d.counit = SparseVec::unit(0, field);
  d.antipode = SparseMatrix::identity(1, field);
  return ColorHopfAlgebra::verify(std::move(d));
}

HopfMorphism identity_morphism(const ColorHopfAlgebra& h) {
  return HopfMorphism::make(h, h, SparseMatrix::identity(h.dim(), h.field()), "id_" + h.name());
}

HopfMorphism counit_morphism(const ColorHopfAlgebra& h) {
  return HopfMorphism::make(h, trivial_hopf(h.field(), h.phi()), SparseMatrix::row(h.data().counit, h.dim()),
                            "eps_" + h.name());
}

HopfMorphism unit_morphism(const ColorHopfAlgebra& h) {
  return HopfMorphism::make(trivial_hopf(h.field(), h.phi()), h, SparseMatrix::from_columns(h.dim(), {h.unit()}),
                            "unit_" + h.name());
}

HopfMorphism zero_morphism(const ColorHopfAlgebra& a, const ColorHopfAlgebra& b) {
  SparseMatrix m(b.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) m.set_column(j, b.unit().scaled(a.counit(SparseVec::unit(j, a.field()))));
  return HopfMorphism::make(a, b, std::move(m), "zero_" + a.name() + "_" + b.name());
}

HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f) {
  if (!(g.source() == f.target())) {
    throw Error(ErrorCode::DimensionMismatch, "cannot compose " + g.name() + " after " + f.name());
  }
  std::string name = g.name().empty() || f.name().empty() ? std::string() : g.name() + "∘" + f.name();
  return HopfMorphism::make(f.source(), g.target(), g.matrix() * f.matrix(), std::move(name));
}

ColorHopfAlgebra tensor_hopf(const ColorHopfAlgebra& a, const ColorHopfAlgebra& b) {
  require_same_setting(a, b);
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  HopfData d;
  d.name = a.name() + "⊗" + b.name();
  d.space = tensor_space(a.space(), b.space());
  d.phi = a.phi();
  d.mult = SparseMatrix(n, n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t ia = x / nb, ib = x % nb;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t ic = y / nb, id = y % nb;
      const Scalar sign = a.phi().eval(b.space().degree(ib), a.space().degree(ic));
      d.mult.set_column(x * n + y, kron(a.multiply_basis(ia, ic), b.multiply_basis(ib, id), nb).scaled(sign));
    }
  }
  d.unit = kron(a.unit(), b.unit(), nb);
  d.comult = SparseMatrix(n * n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t ic = x / nb, id = x % nb;
    Entries acc;
    for (const auto& [p, cp] : a.data().comult.column(ic).entries()) {
      const std::size_t c1 = p / na, c2 = p % na;
      for (const auto& [q, cq] : b.data().comult.column(id).entries()) {
        const std::size_t d1 = q / nb, d2 = q % nb;
        const Scalar coeff = cp * cq * a.phi().eval(a.space().degree(c2), b.space().degree(d1));
        acc.emplace_back((c1 * nb + d1) * n + (c2 * nb + d2), coeff);
      }
    }
    d.comult.set_column(x, SparseVec::from_entries(std::move(acc)));
  }
  d.counit = kron(a.data().counit, b.data().counit, nb);
  d.antipode = kron(a.data().antipode, b.data().antipode);
  VerifyFlags flags;
  flags.require_cocommutative = a.is_cocommutative() && b.is_cocommutative();
  return ColorHopfAlgebra::verify(std::move(d), flags);
}

GradedLinearMap convolution(const ColorHopfAlgebra& c, const ColorHopfAlgebra& a, const GradedLinearMap& f,
                            const GradedLinearMap& g) {
  for (const auto* m : {&f, &g}) {
    if (!m->domain().same_grading(c.space()) || !m->codomain().same_grading(a.space())) {
      throw Error(ErrorCode::DimensionMismatch, "convolution factors must map " + c.name() + " to " + a.name());
    }
  }
  require_same_setting(c, a);
  SparseMatrix out(a.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    SparseVec col;
    for (const auto& [p, x] : c.data().comult.column(i).entries()) {
      col.axpy(x, a.multiply(f.matrix().column(p / c.dim()), g.matrix().column(p % c.dim())));
    }
    out.set_column(i, std::move(col));
  }
  return GradedLinearMap(c.space(), a.space(), std::move(out));
}

}  // namespace chopf
