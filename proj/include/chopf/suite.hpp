#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chopf/normality.hpp"
#include "chopf/twist.hpp"
#include "chopf/workspace.hpp"

namespace chopf {

/// Verified views of workspace entries, computed on demand and cached.
class Resolver {
 public:
  explicit Resolver(const Workspace& w) : w_(&w) {}

  const Workspace& workspace() const { return *w_; }

  const VerificationReport& algebra_report(const std::string& name);
  /// Throws VerificationFailed when the algebra does not verify.
  const ColorHopfAlgebra& algebra(const std::string& name);
  bool algebra_ok(const std::string& name) { return algebra_report(name).ok(); }

  VerificationReport morphism_report(const std::string& name);
  HopfMorphism morphism(const std::string& name);
  GradedSubspace subspace(const std::string& name);
  /// Throws NotClosed when the subspace is not a Hopf subalgebra.
  SubHopfPresentation subalgebra(const std::string& name);

 private:
  const Workspace* w_;
  std::map<std::string, VerificationReport> reports_;
  std::map<std::string, ColorHopfAlgebra> algebras_;
};

Json verification_report_to_json(const VerificationReport& r, const GradedVectorSpace& space);

struct SuiteCheck {
  std::string module;
  std::string property;
  std::string subject;
  bool passed = true;
  std::string failing_check;  // verifier check names or the failed sub-property
  std::string detail;
};

struct SuiteOptions {
  bool pairwise_products = true;
  bool mutations = true;
  bool stop_at_first_failure = false;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  std::size_t skipped = 0;

  bool ok() const;
  std::size_t passed() const;
  std::size_t failed() const;
  const SuiteCheck* first_failure() const;
  Json to_json() const;
};

/// Runs the invariant battery of every module over the workspace objects.
SuiteReport run_suite(const Workspace& w, const SuiteOptions& options = {});

}  // namespace chopf
