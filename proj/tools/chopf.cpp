#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "chopf/corpus.hpp"
#include "chopf/error.hpp"
#include "chopf/suite.hpp"

using namespace chopf;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Options {
  std::string workspace;
  std::string out;
  bool json = false;
};

/// Mathematical failures exit 1; everything about malformed or unresolvable input exits 2.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotParallel:
    case ErrorCode::NotCocommutative:
    case ErrorCode::NotClosed:
    case ErrorCode::NotModuleCoalgebra:
    case ErrorCode::DoesNotCommute:
    case ErrorCode::VerificationFailed:
    case ErrorCode::GradingIncompatible:
    case ErrorCode::NotOddDegree:
    case ErrorCode::ValueUnavailable:
      return kFail;
    default:
      return kInput;
  }
}

void emit(const Options& o, const Json& j) {
  const std::string text = o.json ? j.dump(2) : j.dump();
  std::cout << text << "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out);
    f << j.dump(1) << "\n";
  }
}

Json rows_json(const GradedSubspace& s) { return subspace_to_json(s); }

Json names_json(const GradedSubspace& s) {
  Json out = Json::array();
  for (const auto& r : s.rows()) out.push_back(s.ambient().format(r));
  return out;
}

Json sub_json(const SubHopfPresentation& p) {
  return Json{{"kind", "sub_hopf"},
              {"parent", p.parent.name()},
              {"dim", p.carrier.dim()},
              {"carrier", rows_json(p.carrier)},
              {"carrier_text", names_json(p.carrier)},
              {"algebra", hopf_to_json(p.sub.data())}};
}

Json morphism_json(const HopfMorphism& f) {
  return Json{{"name", f.name()},
              {"source", f.source().name()},
              {"target", f.target().name()},
              {"matrix", matrix_to_json(f.matrix(), f.source().field())}};
}

Json quotient_json(const QuotientHopfPresentation& q) {
  Json reps = Json::array();
  for (auto i : q.presentation.rep_indices) reps.push_back(q.parent.space().name(i));
  return Json{{"kind", "quotient"},
              {"parent", q.parent.name()},
              {"dim", q.quotient.dim()},
              {"ideal", rows_json(q.ideal)},
              {"ideal_text", names_json(q.ideal)},
              {"representatives", std::move(reps)},
              {"algebra", hopf_to_json(q.quotient.data())},
              {"projection", morphism_json(q.projection)}};
}

struct Properties {
  Json list = Json::array();
  bool ok = true;
  void add(const std::string& name, bool passed) {
    list.push_back(Json{{"property", name}, {"status", passed ? "pass" : "fail"}});
    ok = ok && passed;
  }
};

Workspace load(const Options& o) {
  if (o.workspace.empty()) throw Error(ErrorCode::InvalidArgument, "--workspace is required");
  return load_workspace(o.workspace);
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cout << Json{{"ok", false}, {"error", error_code_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cout << Json{{"ok", false}, {"error", "InvalidArgument"}, {"message", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

int cmd_verify(const Options& o, const std::string& name) {
  Workspace w = load(o);
  Resolver r(w);
  if (w.algebras.count(name)) {
    const VerificationReport& rep = r.algebra_report(name);
    emit(o, verification_report_to_json(rep, w.algebra(name).space));
    std::cerr << rep.summary() << "\n";
    return rep.ok() ? kPass : kFail;
  }
  if (w.morphisms.count(name)) {
    const VerificationReport rep = r.morphism_report(name);
    emit(o, verification_report_to_json(rep, w.algebra(w.morphism(name).source).space));
    std::cerr << rep.summary() << "\n";
    return rep.ok() ? kPass : kFail;
  }
  throw Error(ErrorCode::UnknownName, "unknown name " + name);
}

/// A projection given either as a morphism name or as a subspace naming its kernel.
GradedLinearMap projection_arg(Workspace& w, Resolver& r, const std::string& name, ColorHopfAlgebra& h) {
  if (w.morphisms.count(name)) {
    HopfMorphism f = r.morphism(name);
    h = f.source();
    return f.map();
  }
  const SubspaceSpec& s = w.subspace(name);
  h = r.algebra(s.algebra);
  return quotient_space(h.space(), r.subspace(name)).projection_map();
}

int cmd_construct(const Options& o, const std::string& op, const std::vector<std::string>& args) {
  Workspace w = load(o);
  Resolver r(w);
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw Error(ErrorCode::InvalidArgument, op + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  Json result{{"op", op}, {"args", args}};
  Properties props;

  if (op == "hker") {
    need(1);
    auto f = r.morphism(args[0]);
    auto k = hkernel(f);
    result["result"] = sub_json(k);
    props.add("closed under m, Delta, S", sub_hopf_closure(f.source(), k.carrier).ok());
    props.add("Hker(f) normal", is_normal(f.source(), k).normal);
  } else if (op == "coker") {
    need(1);
    auto f = r.morphism(args[0]);
    auto q = cokernel(f);
    result["result"] = quotient_json(q);
    props.add("pi o f = u o eps", q.projection.matrix() * f.matrix() == zero_morphism(f.source(), q.quotient).matrix());
  } else if (op == "equalizer") {
    need(2);
    auto f = r.morphism(args[0]);
    auto g = r.morphism(args[1]);
    auto e = equalizer(f, g);
    result["result"] = sub_json(e);
    props.add("f o j = g o j", f.matrix() * e.inclusion.matrix() == g.matrix() * e.inclusion.matrix());
  } else if (op == "coequalizer") {
    need(2);
    auto f = r.morphism(args[0]);
    auto g = r.morphism(args[1]);
    auto q = coequalizer(f, g);
    result["result"] = quotient_json(q);
    props.add("pi o f = pi o g", q.projection.matrix() * f.matrix() == q.projection.matrix() * g.matrix());
    props.add("quotient cocommutative", q.quotient.is_cocommutative());
  } else if (op == "product") {
    need(2);
    auto p = binary_product(r.algebra(args[0]), r.algebra(args[1]));
    result["result"] = Json{{"algebra", hopf_to_json(p.product.data())},
                            {"pi_a", morphism_json(p.pi_a)},
                            {"pi_b", morphism_json(p.pi_b)}};
    const SparseMatrix id = SparseMatrix::identity(p.product.dim(), p.product.field());
    props.add("(pi_A (x) pi_B) o Delta = Id",
              kron(p.pi_a.matrix(), p.pi_b.matrix()) * p.product.data().comult == id);
  } else if (op == "factorize") {
    need(1);
    auto f = r.morphism(args[0]);
    auto fz = factorize(f);
    result["result"] = Json{{"image", quotient_json(fz.image)},
                            {"p", morphism_json(fz.p)},
                            {"i", morphism_json(fz.i)},
                            {"hker", sub_json(fz.hker)}};
    props.add("ker(f)=A(Hker f)+A", fz.kernel_matches);
    props.add("i injective", fz.i_injective);
    props.add("p surjective", fz.p_surjective);
    props.add("i o p = f", fz.composite_matches);
  } else if (op == "pullback") {
    need(2);
    auto p = r.morphism(args[0]);
    auto c = r.subalgebra(args[1]);
    auto pb = pullback_inclusion(p, c);
    result["result"] = Json{{"pullback", sub_json(pb.sub)}, {"restriction", morphism_json(pb.restriction)}};
    props.add("p(p^-1(C)) in C", pb.image_inside);
    if (pb.p_surjective) props.add("restriction surjective", pb.restriction_surjective);
  } else if (op == "normal") {
    need(1);
    auto k = r.subalgebra(args[0]);
    auto n = is_normal(k.parent, k);
    result["result"] = Json{{"normal", n.normal}};
    if (!n.normal) {
      const auto& sp = k.parent.space();
      result["result"]["witness"] = Json{{"a", sp.name(n.basis_index)},
                                         {"k", sp.format(k.carrier.rows()[n.row_index])},
                                         {"xi", vector_to_json(n.image)},
                                         {"xi_text", sp.format(n.image)}};
    }
  } else if (op == "newman_phi") {
    need(1);
    auto k = r.subalgebra(args[0]);
    auto ph = newman_phi(k.parent, k);
    Json res{{"ideal", rows_json(ph.module_quotient.ideal)},
             {"ideal_text", names_json(ph.module_quotient.ideal)},
             {"dim", ph.module_quotient.presentation.quotient.dim()},
             {"coalgebra_comult", matrix_to_json(ph.module_quotient.comult, k.parent.field())},
             {"counit", vector_to_json(ph.module_quotient.counit)},
             {"action", matrix_to_json(ph.module_quotient.action, k.parent.field())},
             {"hopf_quotient", ph.hopf_quotient ? quotient_json(*ph.hopf_quotient) : Json(nullptr)}};
    result["result"] = std::move(res);
    props.add("K normal iff H/HK+ is a Hopf quotient", is_normal(k.parent, k).normal == ph.hopf_quotient.has_value());
  } else if (op == "newman_psi") {
    need(1);
    ColorHopfAlgebra h;
    auto pi = projection_arg(w, r, args[0], h);
    auto k = newman_psi(h, pi);
    result["result"] = sub_json(k);
    props.add("closed under m, Delta, S", sub_hopf_closure(h, k.carrier).ok());
  } else if (op == "newman") {
    need(1);
    auto k = r.subalgebra(args[0]);
    auto ph = newman_phi(k.parent, k);
    auto back = newman_psi(k.parent, ph.module_quotient.presentation.projection_map());
    result["result"] = Json{{"phi_ideal", rows_json(ph.module_quotient.ideal)}, {"psi_phi", sub_json(back)}};
    props.add("psi(phi(K)) = K", back.carrier == k.carrier);
  } else if (op == "twist") {
    need(1);
    auto h = r.algebra(args[0]);
    auto t = twist(h);
    Workspace tw;
    tw.field = h.field();
    tw.group = t.target.group();
    tw.phi = t.target.phi();
    tw.add(t.target);
    result["result"] = Json{{"algebra", hopf_to_json(t.target.data())},
                            {"gamma", bicharacter_to_json(t.gamma)},
                            {"workspace", workspace_to_json(tw)}};
    props.add("super verifier", verify_hopf(t.target.data()).ok());
    props.add("mon1", !check_cocycle(t.gamma, h.space().degrees()));
    props.add("mon2", !check_braided_twist(h.phi(), t.gamma, h.space().degrees()));
    for (const auto& l : twist_preserves_structure_checks(h).lines) props.add(l.name, l.passed);
  } else if (op == "abelian") {
    need(1);
    auto a = is_abelian_object(r.algebra(args[0]));
    result["result"] = Json{{"abelian", a.abelian()}, {"commutative", a.commutative}, {"diagonal_normal", a.diagonal_normal}};
    props.add("routes agree", a.agree());
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown operation " + op);
  }
  result["properties"] = props.list;
  result["ok"] = props.ok;
  emit(o, result);
  for (const auto& p : props.list) {
    std::cerr << p["property"].get<std::string>() << ": " << p["status"].get<std::string>() << "\n";
  }
  return props.ok ? kPass : kFail;
}

int cmd_suite(const Options& o, bool quick, bool fail_fast) {
  Workspace w = load(o);
  SuiteOptions opts;
  opts.pairwise_products = !quick;
  opts.stop_at_first_failure = fail_fast;
  SuiteReport rep = run_suite(w, opts);
  Json j = rep.to_json();
  if (!o.json) j.erase("results");
  emit(o, j);
  std::cerr << rep.passed() << "/" << rep.checks.size() << " checks passed, " << rep.skipped << " skipped\n";
  if (const SuiteCheck* f = rep.first_failure()) {
    std::cerr << "counterexample: " << f->module << "/" << f->property << " on " << f->subject << " [" << f->failing_check
              << "] " << f->detail << "\n";
  }
  return rep.ok() ? kPass : kFail;
}

Workspace source_workspace(const std::string& context, const std::string& path) {
  if (!path.empty()) return load_workspace(path);
  return corpus_workspace(context.empty() ? "super" : context);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional cocommutative color Hopf algebras: verification and constructions"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--workspace,-w", o.workspace, "workspace JSON file");
    sub->add_option("--out,-o", o.out, "also write the JSON result here");
    sub->add_flag("--json", o.json, "pretty-print the full JSON report");
  };

  std::string name;
  auto* verify = app.add_subcommand("verify", "verify an algebra or morphism");
  common(verify);
  verify->add_option("name", name, "algebra or morphism name")->required();

  std::string op;
  std::vector<std::string> args;
  auto* construct = app.add_subcommand("construct", "run a categorical construction");
  common(construct);
  construct
      ->add_option("op", op,
                   "hker | coker | equalizer | coequalizer | product | factorize | pullback | normal | newman_phi | "
                   "newman_psi | newman | twist | abelian")
      ->required();
  construct->add_option("args", args, "object names");

  bool quick = false;
  auto* suite = app.add_subcommand("suite", "run every invariant over the workspace");
  common(suite);
  suite->add_flag("--quick", quick, "skip pairwise tensor products");
  bool fail_fast = false;
  suite->add_flag("--fail-fast", fail_fast, "stop at the first counterexample");

  auto* corpus = app.add_subcommand("corpus", "stock example workspaces");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "list contexts and their algebras");
  std::string context, algebra, kind, new_name, from;
  auto* emit_cmd = corpus->add_subcommand("emit", "write a context workspace, or one algebra of it");
  emit_cmd->add_option("context", context, "super | z4 | klein | f5")->required();
  emit_cmd->add_option("algebra", algebra, "only this algebra");
  emit_cmd->add_option("--out,-o", o.out, "output file");
  emit_cmd->add_flag("--json", o.json, "pretty-print");
  auto* mutate_cmd = corpus->add_subcommand("mutate", "add a mutated copy of an algebra to a workspace");
  mutate_cmd->add_option("algebra", algebra, "algebra to mutate")->required();
  mutate_cmd->add_option("kind", kind, "flip_antipode_sign | drop_compat_scalar | break_degree")->required();
  mutate_cmd->add_option("--context", context, "stock context (default super)");
  mutate_cmd->add_option("--workspace,-w", from, "start from this workspace instead");
  mutate_cmd->add_option("--name", new_name, "name of the mutated copy (default mutated_<algebra>)");
  mutate_cmd->add_option("--out,-o", o.out, "output file");
  mutate_cmd->add_flag("--json", o.json, "pretty-print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }

  if (verify->parsed()) return guarded([&] { return cmd_verify(o, name); });
  if (construct->parsed()) return guarded([&] { return cmd_construct(o, op, args); });
  if (suite->parsed()) return guarded([&] { return cmd_suite(o, quick, fail_fast); });
  if (list->parsed()) {
    return guarded([&] {
      Json j = Json::object();
      for (const auto& c : corpus_contexts()) {
        Workspace w = corpus_workspace(c);
        Json names = Json::array();
        for (const auto& [n, _] : w.algebras) names.push_back(n);
        j[c] = std::move(names);
      }
      std::cout << j.dump(2) << "\n";
      return kPass;
    });
  }
  if (emit_cmd->parsed()) {
    return guarded([&] {
      Workspace w = corpus_workspace(context);
      emit(o, algebra.empty() ? workspace_to_json(w) : hopf_to_json(w.algebra(algebra)));
      return kPass;
    });
  }
  if (mutate_cmd->parsed()) {
    return guarded([&] {
      Workspace w = source_workspace(context, from);
      Resolver r(w);
      Mutation m = mutate(r.algebra(algebra), parse_mutation(kind));
      const std::string key = new_name.empty() ? "mutated_" + algebra : new_name;
      m.data.name = key;
      w.algebras[key] = m.data;
      emit(o, workspace_to_json(w));
      std::cerr << key << ": " << m.description << " (expected failing check: " << m.target_check << ")\n";
      return kPass;
    });
  }
  return kInput;
}
