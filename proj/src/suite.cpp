#include "chopf/suite.hpp"

#include <functional>
#include <sstream>

#include "chopf/corpus.hpp"
#include "chopf/error.hpp"

namespace chopf {

const VerificationReport& Resolver::algebra_report(const std::string& name) {
  auto it = reports_.find(name);
  if (it != reports_.end()) return it->second;
  return reports_.emplace(name, verify_hopf(w_->algebra(name))).first->second;
}

const ColorHopfAlgebra& Resolver::algebra(const std::string& name) {
  auto it = algebras_.find(name);
  if (it != algebras_.end()) return it->second;
  const VerificationReport& r = algebra_report(name);
  if (!r.ok()) throw Error(ErrorCode::VerificationFailed, r.summary());
  return algebras_.emplace(name, ColorHopfAlgebra::verify(w_->algebra(name))).first->second;
}

VerificationReport Resolver::morphism_report(const std::string& name) {
  const MorphismSpec& m = w_->morphism(name);
  VerificationReport r = verify_morphism(algebra(m.source), algebra(m.target), m.matrix);
  r.subject = name;
  return r;
}

HopfMorphism Resolver::morphism(const std::string& name) {
  const MorphismSpec& m = w_->morphism(name);
  return HopfMorphism::make(algebra(m.source), algebra(m.target), m.matrix, name);
}

GradedSubspace Resolver::subspace(const std::string& name) {
  const SubspaceSpec& s = w_->subspace(name);
  return GradedSubspace::span(w_->algebra(s.algebra).space, s.rows);
}

SubHopfPresentation Resolver::subalgebra(const std::string& name) {
  const SubspaceSpec& s = w_->subspace(name);
  return make_sub_hopf(algebra(s.algebra), subspace(name), name);
}

Json verification_report_to_json(const VerificationReport& r, const GradedVectorSpace& space) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json witness = Json::array();
    for (auto i : c.witness) witness.push_back(i < space.dim() ? space.name(i) : std::to_string(i));
    Json item{{"name", c.name}, {"passed", c.passed}, {"required", c.required}};
    if (!c.passed) {
      item["witness"] = std::move(witness);
      item["residual"] = vector_to_json(c.residual);
      if (!c.detail.empty()) item["detail"] = c.detail;
    }
    checks.push_back(std::move(item));
  }
  Json failing = Json::array();
  for (const auto* c : r.failures()) failing.push_back(c->name);
  return Json{{"subject", r.subject}, {"ok", r.ok()}, {"failing", std::move(failing)}, {"checks", std::move(checks)}};
}

bool SuiteReport::ok() const { return first_failure() == nullptr; }

std::size_t SuiteReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 1 : 0;
  return n;
}

std::size_t SuiteReport::failed() const { return checks.size() - passed(); }

const SuiteCheck* SuiteReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

Json check_to_json(const SuiteCheck& c) {
  Json j{{"module", c.module}, {"property", c.property}, {"subject", c.subject}, {"passed", c.passed}};
  if (!c.failing_check.empty()) j["failing_check"] = c.failing_check;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace

Json SuiteReport::to_json() const {
  Json results = Json::array();
  for (const auto& c : checks) results.push_back(check_to_json(c));
  const SuiteCheck* f = first_failure();
  return Json{{"ok", ok()},
              {"checks", checks.size()},
              {"passed", passed()},
              {"failed", failed()},
              {"skipped", skipped},
              {"counterexample", f ? check_to_json(*f) : Json(nullptr)},
              {"results", std::move(results)}};
}

namespace {

struct Outcome {
  bool passed = true;
  std::string failing;
  std::string detail;
};

Outcome pass() { return {}; }
Outcome expect(bool ok, const std::string& failing, const std::string& detail = "") {
  return ok ? Outcome{} : Outcome{false, failing, detail};
}

std::string joined_failures(const VerificationReport& r) {
  std::string out;
  for (const auto* c : r.failures()) out += (out.empty() ? "" : ",") + c->name;
  return out;
}

Outcome from_report(const VerificationReport& r) { return expect(r.ok(), joined_failures(r), r.summary()); }

Outcome from_lines(const PreservationReport& r) {
  for (const auto& l : r.lines) {
    if (!l.passed) return {false, l.name, l.detail};
  }
  return pass();
}

class Battery {
 public:
  Battery(const Workspace& w, const SuiteOptions& opt) : w_(w), opt_(opt), r_(w) {}

  SuiteReport run() {
    if (w_.algebras.empty() && w_.morphisms.empty() && w_.subspaces.empty()) return {};
    group_checks();
    scalar_checks();
    for (const auto& [name, _] : w_.algebras) algebra_checks(name);
    if (opt_.pairwise_products) product_checks();
    for (const auto& [name, _] : w_.morphisms) morphism_checks(name);
    for (const auto& [name, _] : w_.subspaces) subspace_checks(name);
    composite_checks();
    check("cli", "workspace_round_trip", "workspace", [&] {
      const Json j = workspace_to_json(w_);
      const Workspace back = workspace_from_json(j);
      return expect(back == w_ && workspace_to_json(back).dump() == j.dump(), "round_trip");
    });
    return std::move(out_);
  }

 private:
  void check(const std::string& module, const std::string& property, const std::string& subject,
             const std::function<Outcome()>& fn) {
    if (stopped_) return;
    SuiteCheck c{module, property, subject, true, "", ""};
    try {
      Outcome o = fn();
      c.passed = o.passed;
      c.failing_check = std::move(o.failing);
      c.detail = std::move(o.detail);
    } catch (const Error& e) {
      c.passed = false;
      c.failing_check = std::string(error_code_name(e.code()));
      c.detail = e.what();
    }
    if (!c.passed && opt_.stop_at_first_failure) stopped_ = true;
    out_.checks.push_back(std::move(c));
  }

  void skip(std::size_t n = 1) { out_.skipped += n; }

  bool usable(const std::string& algebra) {
    try {
      return r_.algebra_ok(algebra);
    } catch (const Error&) {
      return false;
    }
  }

  void group_checks() {
    const FgAbGroup& G = w_.group;
    const Bicharacter& phi = w_.phi;
    const auto box = G.box(G.free_rank() > 0 ? 2 : 0);
    check("fgab-group", "commutation_factor", "phi", [&] {
      auto v = validate_commutation_factor(phi);
      return expect(v.ok(), "commutation_factor", v.ok() ? "" : v.failures.front());
    });
    check("fgab-group", "bicharacter_additivity", "phi", [&] {
      for (const auto& g : box) {
        for (const auto& h : box) {
          for (const auto& k : box) {
            if (!(phi.eval(G.add(g, h), k) == phi.eval(g, k) * phi.eval(h, k)) ||
                !(phi.eval(k, G.add(g, h)) == phi.eval(k, g) * phi.eval(k, h))) {
              return expect(false, "additivity", g.to_string() + "," + h.to_string() + "," + k.to_string());
            }
          }
        }
      }
      return pass();
    });
    check("fgab-group", "u_bar_homomorphism", "phi", [&] {
      for (const auto& g : box) {
        for (const auto& h : box) {
          if (u_bar(phi, G.add(g, h)) != (u_bar(phi, g) ^ u_bar(phi, h))) {
            return expect(false, "u_bar", g.to_string() + "," + h.to_string());
          }
        }
      }
      return pass();
    });
    check("fgab-group", "gamma_mon1", "phi", [&] {
      std::vector<GroupElement> gens;
      for (std::size_t i = 0; i < G.generator_count(); ++i) gens.push_back(G.generator(i));
      auto f = check_cocycle(build_gamma(phi), gens);
      return expect(!f, "mon1", f.value_or(""));
    });
    check("fgab-group", "gamma_mon2", "phi", [&] {
      auto f = check_braided_twist(phi, build_gamma(phi), box);
      return expect(!f, "mon2", f.value_or(""));
    });
  }

  void scalar_checks() {
    const FieldSpec& F = w_.field;
    std::vector<Scalar> sample{Scalar(F, 0), Scalar(F, 1), Scalar(F, -1), Scalar(F, 2), Scalar(F, 3)};
    if (!F.is_prime_field()) sample.push_back(Scalar::fraction(F, 1, 2));
    check("scalars", "field_axioms", F.to_string(), [&] {
      for (const auto& a : sample) {
        for (const auto& b : sample) {
          for (const auto& c : sample) {
            if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c) ||
                !(a + b == b + a) || !(a * b == b * a)) {
              return expect(false, "field_axioms", a.to_string() + "," + b.to_string() + "," + c.to_string());
            }
          }
        }
        if (!a.is_zero() && !(a * a.inverse()).is_one()) return expect(false, "inverse", a.to_string());
      }
      return pass();
    });
    check("scalars", "pow_law", F.to_string(), [&] {
      for (const auto& a : sample) {
        if (a.is_zero()) continue;
        for (int n = -4; n <= 4; ++n) {
          for (int m = -4; m <= 4; ++m) {
            if (!(pow(a, n) * pow(a, m) == pow(a, n + m))) return expect(false, "pow", a.to_string());
          }
        }
      }
      return pass();
    });
  }

  void algebra_checks(const std::string& name) {
    check("hopf-core", "verify_hopf", name, [&] { return from_report(r_.algebra_report(name)); });
    if (!usable(name)) {
      skip(12);
      return;
    }
    const ColorHopfAlgebra& h = r_.algebra(name);
    const std::size_t n = h.dim();
    const FieldSpec& F = h.field();
    const SparseMatrix I = SparseMatrix::identity(n, F);
    const SparseMatrix c = braiding_map(h.phi(), h.space(), h.space()).matrix();
    const auto& d = h.data();

    check("hopf-core", "antipode_identities", name, [&] {
      if (!(d.antipode * d.mult == d.mult * c * kron(d.antipode, d.antipode))) return expect(false, "S_anti_multiplicative");
      if (!(kron(d.antipode, d.antipode) * d.comult == c * d.comult * d.antipode)) {
        return expect(false, "S_anti_comultiplicative");
      }
      if (!(d.antipode * d.antipode == I)) return expect(false, "S_squared");
      return expect(SparseMatrix::row(d.counit, n) * d.antipode == SparseMatrix::row(d.counit, n), "counit_S");
    });
    check("hopf-core", "comult_is_morphism", name, [&] {
      auto r = verify_morphism(h, tensor_hopf(h, h), d.comult);
      return from_report(r);
    });
    check("graded-linalg", "rank_nullity", name, [&] {
      const GradedLinearMap m = h.mult_map();
      const GradedLinearMap dm = h.comult_map();
      return expect(map_kernel(m).dim() + map_image(m).dim() == n * n && map_kernel(dm).dim() + map_image(dm).dim() == n,
                    "rank_nullity");
    });
    check("graded-linalg", "hexagon", name, [&] {
      const GradedVectorSpace& V = h.space();
      const GradedVectorSpace VV = tensor_space(V, V);
      const SparseMatrix cv_vv = braiding_map(h.phi(), V, VV).matrix();
      const SparseMatrix cvv_v = braiding_map(h.phi(), VV, V).matrix();
      return expect(cv_vv == kron(I, c) * kron(c, I) && cvv_v == kron(c, I) * kron(I, c), "hexagon");
    });
    check("graded-linalg", "homogeneous_structure", name, [&] {
      return expect(!degree_violation(tensor_space(h.space(), h.space()), h.space(), d.mult) &&
                        !degree_violation(h.space(), tensor_space(h.space(), h.space()), d.comult),
                    "degree");
    });
    if (opt_.mutations) {
      check("corpus", "mutations_fail_targeted", name, [&] {
        for (auto kind : {MutationKind::FlipAntipodeSign, MutationKind::DropCompatScalar, MutationKind::BreakDegree}) {
          Mutation m;
          try {
            m = mutate(h, kind);
          } catch (const Error& e) {
            if (e.code() == ErrorCode::InvalidArgument) continue;
            throw;
          }
          if (!verify_hopf(m.data).failed(m.target_check)) return expect(false, mutation_name(kind), m.description);
        }
        return pass();
      });
    }
    check("normality", "xi_coalgebra_map", name, [&] {
      const SparseMatrix xi = xi_map(h).matrix();
      const SparseMatrix c2 = kron(kron(I, c), I) * kron(d.comult, d.comult);
      const SparseMatrix eps = SparseMatrix::row(d.counit, n);
      if (!(d.comult * xi == kron(xi, xi) * c2)) return expect(false, "xi_comult");
      return expect(eps * xi == kron(eps, eps), "xi_counit");
    });
    if (h.is_commutative()) {
      check("normality", "xi_commutative", name, [&] {
        return expect(xi_map(h).matrix() == kron(SparseMatrix::row(d.counit, n), I), "xi_is_counit_action");
      });
    }
    check("normality", "abelian_routes_agree", name, [&] {
      auto a = is_abelian_object(h);
      return expect(a.agree(), "abelian", std::string("commutative=") + (a.commutative ? "1" : "0") +
                                              " diagonal_normal=" + (a.diagonal_normal ? "1" : "0"));
    });
    check("super-twist", "twist_verifies", name, [&] {
      auto t = twist(h);
      if (auto f = check_cocycle(t.gamma, h.space().degrees())) return expect(false, "mon1", *f);
      if (auto f = check_braided_twist(h.phi(), t.gamma, h.space().degrees())) return expect(false, "mon2", *f);
      return from_report(verify_hopf(t.target.data()));
    });
    check("super-twist", "twist_flags", name, [&] { return from_lines(twist_preserves_structure_checks(h)); });
  }

  void product_checks() {
    std::vector<std::string> names;
    for (const auto& [name, _] : w_.algebras) {
      if (usable(name)) names.push_back(name);
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i; j < names.size(); ++j) {
        check("hopf-core", "tensor_hopf", names[i] + "⊗" + names[j], [&] {
          const auto& a = r_.algebra(names[i]);
          const auto& b = r_.algebra(names[j]);
          return from_report(verify_hopf(tensor_hopf(a, b).data()));
        });
      }
    }
  }

  const SubHopfPresentation& hker(const HopfMorphism& f) {
    auto it = hkernels_.find(f.name());
    if (it == hkernels_.end()) it = hkernels_.emplace(f.name(), hkernel(f)).first;
    return it->second;
  }

  const QuotientHopfPresentation& coker(const HopfMorphism& f) {
    auto it = cokernels_.find(f.name());
    if (it == cokernels_.end()) it = cokernels_.emplace(f.name(), cokernel(f)).first;
    return it->second;
  }

  void morphism_checks(const std::string& name) {
    const MorphismSpec& spec = w_.morphism(name);
    if (!usable(spec.source) || !usable(spec.target)) {
      skip(12);
      return;
    }
    check("hopf-core", "verify_morphism", name, [&] { return from_report(r_.morphism_report(name)); });
    if (!r_.morphism_report(name).ok()) {
      skip(11);
      return;
    }
    const HopfMorphism f = r_.morphism(name);
    verified_morphisms_.push_back(f);
    const ColorHopfAlgebra& a = f.source();
    const ColorHopfAlgebra& b = f.target();

    check("graded-linalg", "rank_nullity", name, [&] {
      return expect(map_kernel(f.map()).dim() + map_image(f.map()).dim() == a.dim(), "rank_nullity");
    });
    check("graded-linalg", "braiding_naturality", name, [&] {
      const SparseMatrix ca = braiding_map(a.phi(), a.space(), a.space()).matrix();
      const SparseMatrix cb = braiding_map(b.phi(), b.space(), b.space()).matrix();
      return expect(cb * kron(f.matrix(), f.matrix()) == kron(f.matrix(), f.matrix()) * ca, "naturality");
    });
    check("cat-ops", "hkernel_closed", name, [&] {
      return expect(sub_hopf_closure(a, hker(f).carrier).ok(), "closure");
    });
    check("cat-ops", "factorize", name, [&] {
      auto fz = factorize(f);
      if (!fz.composite_matches) return expect(false, "composite_matches");
      if (!fz.i_injective) return expect(false, "i_injective");
      if (!fz.p_surjective) return expect(false, "p_surjective");
      return pass();
    });
    check("cat-ops", "kernel_identity", name, [&] {
      const GradedSubspace closure =
          ideal_closure(a, GradedSubspace::span(a.space(), augmentation_vectors(a, hker(f).carrier)));
      return expect(closure == map_kernel(f.map()), "kernel_matches",
                    "dim ker " + std::to_string(map_kernel(f.map()).dim()) + " vs closure " +
                        std::to_string(closure.dim()));
    });
    check("cat-ops", "mono_iff_injective", name, [&] {
      return expect((hker(f).carrier.dim() == 1) == f.is_injective(), "mono_iff_injective");
    });
    check("cat-ops", "cokernel", name, [&] {
      const auto& q = coker(f);
      if (!(q.projection.matrix() * f.matrix() == zero_morphism(a, q.quotient).matrix())) {
        return expect(false, "pi_f_trivial");
      }
      if (!q.quotient.is_cocommutative()) return expect(false, "quotient_cocommutative");
      return expect(coequalizer(f, zero_morphism(a, b)).ideal == q.ideal, "coequalizer_matches");
    });
    check("normality", "hkernel_normal", name, [&] { return expect(is_normal(a, hker(f)).normal, "normal"); });
    check("normality", "phi_psi_round_trip", name, [&] {
      const auto& q = coker(f);
      auto psi = newman_psi(b, q.projection.map());
      return expect(newman_phi(b, psi).module_quotient.ideal == q.ideal, "round_trip");
    });
    if (f.is_surjective()) {
      check("normality", "xi_naturality", name, [&] {
        return expect(xi_map(b).matrix() * kron(f.matrix(), f.matrix()) == f.matrix() * xi_map(a).matrix(),
                      "naturality");
      });
    }
    check("super-twist", "twist_equalizers", name, [&] {
      return from_lines(twist_preserves_structure_checks(a, hker(f).carrier, std::pair{f, zero_morphism(a, b)}));
    });
    check("super-twist", "twist_morphism", name, [&] {
      return from_report(twist_morphism_report(f, twist(a), twist(b)));
    });
  }

  void subspace_checks(const std::string& name) {
    const SubspaceSpec& spec = w_.subspace(name);
    if (!usable(spec.algebra)) {
      skip(5);
      return;
    }
    const ColorHopfAlgebra& h = r_.algebra(spec.algebra);
    check("graded-linalg", "homogeneous_rows", name, [&] {
      const GradedSubspace s = r_.subspace(name);
      for (const auto& row : s.rows()) {
        if (!h.space().degree_of(row)) return expect(false, "homogeneous", h.space().format(row));
      }
      for (const auto& v : spec.rows) {
        for (const auto& comp : h.space().homogeneous_components(v)) {
          if (!s.member(comp)) return expect(false, "component_membership", h.space().format(comp));
        }
      }
      return pass();
    });
    check("cat-ops", "sub_hopf", name, [&] {
      auto r = sub_hopf_closure(h, r_.subspace(name));
      return expect(r.ok(), "closure", r.detail);
    });
    if (!sub_hopf_closure(h, r_.subspace(name)).ok()) {
      skip(4);
      return;
    }
    const SubHopfPresentation k = r_.subalgebra(name);
    check("normality", "newman_round_trip", name, [&] {
      auto ph = newman_phi(h, k);
      auto back = newman_psi(h, ph.module_quotient.presentation.projection_map());
      return expect(back.carrier == k.carrier, "psi_phi");
    });
    check("normality", "kernel_equivalence", name, [&] {
      const bool normal = is_normal(h, k).normal;
      auto ph = newman_phi(h, k);
      const bool quotient = ph.hopf_quotient.has_value();
      const bool kernel = quotient && hkernel(ph.hopf_quotient->projection).carrier == k.carrier;
      return expect(normal == quotient && quotient == kernel, "three_way",
                    std::string("normal=") + (normal ? "1" : "0") + " quotient=" + (quotient ? "1" : "0") +
                        " kernel=" + (kernel ? "1" : "0"));
    });
    check("super-twist", "twist_subalgebra", name, [&] {
      return from_lines(twist_preserves_structure_checks(h, k.carrier));
    });
    pullback_targets_.push_back(k);
  }

  void composite_checks() {
    for (const auto& p : verified_morphisms_) {
      if (!p.is_surjective()) continue;
      for (const auto& c : pullback_targets_) {
        if (!(c.parent == p.target())) continue;
        check("cat-ops", "pullback_surjective", p.name() + " / " + c.sub.name(), [&] {
          auto pb = pullback_inclusion(p, c);
          if (!pb.image_inside) return expect(false, "image_inside");
          return expect(pb.restriction_surjective, "restriction_surjective");
        });
      }
    }
    for (const auto& f : verified_morphisms_) {
      for (const auto& g : verified_morphisms_) {
        if (!(f.target() == g.source())) continue;
        check("normality", "images_of_kernels", f.name() + " ; " + g.name(), [&] {
          const auto& mu = coker(f);
          auto image = make_sub_hopf(mu.quotient, image_of(mu.projection.map(), hker(g).carrier));
          return expect(is_normal(mu.quotient, image).normal, "normal");
        });
      }
    }
  }

  const Workspace& w_;
  SuiteOptions opt_;
  Resolver r_;
  SuiteReport out_;
  bool stopped_ = false;
  std::map<std::string, SubHopfPresentation> hkernels_;
  std::map<std::string, QuotientHopfPresentation> cokernels_;
  std::vector<HopfMorphism> verified_morphisms_;
  std::vector<SubHopfPresentation> pullback_targets_;
};

}  // namespace

SuiteReport run_suite(const Workspace& w, const SuiteOptions& options) { return Battery(w, options).run(); }

}  // namespace chopf
