#include "nacech/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "nacech/bundle.hpp"
#include "nacech/gauge.hpp"
#include "nacech/io.hpp"

namespace nacech {

namespace {

std::string join(const std::vector<Elem>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

const char* yes(bool b) { return b ? "yes" : "no"; }

void need(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorKind::InvalidInput, std::string("missing ") + flag);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  f << text;
}

struct Session {
  const RunConfig& cfg;
  std::ostream& out;
  Loader load;
  SearchOptions opt{cfg.budget, cfg.workers};

  Cocycle cocycle() {
    if (!cfg.cocycle.empty()) return load.cocycle(cfg.cocycle);
    need(cfg.complex, "--complex or --cocycle");
    need(cfg.cm, "--cm");
    return trivial_cocycle(load.complex(cfg.complex), load.crossed_module(cfg.cm));
  }

  void header(const Cocycle& z) {
    out << "complex: " << name(z.complex.get(), z.complex->name()) << '\n';
    out << "cm: " << name(z.cm.get(), z.cm->name()) << '\n';
  }

  std::string name(const void* p, const std::string& fallback) {
    auto n = load.name_of(p);
    return n.empty() ? fallback : n;
  }

  int negative(const std::string& reason) {
    out << "REASON: " << reason << '\n';
    return kExitNegative;
  }

  int validate();
  int classify();
  int cohomologous();
  int stabilizer_cmd();
  int bundle_check();
  int band_cmd();
  int reduce_central();
  int lift();
  int quotient();
  int gauge();
  int aut2group();
  int oracle();
};

int Session::validate() {
  const std::string& kind = cfg.kind;
  out << "kind: " << kind << '\n';
  if (kind == "group") {
    need(cfg.group, "--group");
    auto g = load.group(cfg.group);
    out << "order: " << g->order() << '\n' << "abelian: " << yes(g->is_abelian()) << '\n';
  } else if (kind == "cm") {
    need(cfg.cm, "--cm");
    auto cm = load.crossed_module(cfg.cm);
    out << "G_order: " << cm->G().order() << '\n' << "H_order: " << cm->H().order() << '\n';
    verify_strict_2group(Strict2Group(cm));
    out << "two_group_axioms: pass\n";
  } else if (kind == "complex") {
    need(cfg.complex, "--complex");
    auto k = load.complex(cfg.complex);
    out << "vertices: " << k->vertex_count() << '\n' << "dimension: " << k->dimension() << '\n';
    for (int d = 0; d <= k->dimension(); ++d)
      out << "simplices_" << d << ": " << k->simplex_count(d) << '\n';
  } else if (kind == "cocycle") {
    need(cfg.cocycle, "--cocycle");
    header(load.cocycle(cfg.cocycle));
  } else {
    throw Error(ErrorKind::InvalidInput, "validate takes group, cm, complex or cocycle");
  }
  out << "valid: yes\n";
  return kExitOk;
}

int Session::classify() {
  need(cfg.complex, "--complex");
  need(cfg.cm, "--cm");
  auto k = load.complex(cfg.complex);
  auto cm = load.crossed_module(cfg.cm);
  out << "complex: " << cfg.complex << '\n' << "cm: " << cfg.cm << '\n';
  out << "strategy: " << (cfg.strategy == Strategy::Brute ? "brute" : "abelian") << '\n';
  const auto c = nacech::classify(k, cm, cfg.strategy, opt);
  out << "classes: " << c.class_count << '\n';
  out << "cocycles_examined: " << c.cocycles_examined << '\n';
  std::ostringstream est;
  est.precision(3);
  est << std::fixed << c.log10_estimate;
  out << "log10_naive_space: " << est.str() << '\n';
  if (!cfg.out.empty()) {
    std::filesystem::create_directories(cfg.out);
    for (std::size_t i = 0; i < c.representatives.size(); ++i) {
      std::ostringstream s;
      write_cocycle(s, c.representatives[i], cfg.complex, cfg.cm);
      write_file(cfg.out + "/class" + std::to_string(i) + ".cocycle", s.str());
    }
    out << "written: " << c.representatives.size() << '\n';
  }
  return kExitOk;
}

int Session::cohomologous() {
  need(cfg.cocycle, "--cocycle");
  need(cfg.cocycle2, "--cocycle2");
  auto z = load.cocycle(cfg.cocycle);
  auto z2 = load.cocycle(cfg.cocycle2);
  header(z);
  if (!same_complex(z.complex, z2.complex) || !same_crossed_module(z.cm, z2.cm))
    throw Error(ErrorKind::InvalidInput, "cocycles live over different complexes or crossed modules");
  auto w = are_cohomologous(z, z2, opt);
  out << "cohomologous: " << yes(w.has_value()) << '\n';
  if (!w) return negative("no coboundary carries the first cocycle to the second");
  out << "witness_gamma: " << join(w->gamma) << '\n';
  out << "witness_eta: " << join(w->eta) << '\n';
  if (!cfg.out.empty()) {
    std::ostringstream s;
    write_coboundary(s, *w);
    write_file(cfg.out, s.str());
  }
  return kExitOk;
}

int Session::stabilizer_cmd() {
  auto z = cocycle();
  header(z);
  auto st = nacech::stabilizer(z, opt);
  out << "stabilizer_order: " << st.size() << '\n';
  if (!cfg.out.empty()) {
    std::ostringstream s;
    for (std::size_t i = 0; i < st.size(); ++i) {
      s << "coboundary # " << i << '\n';
      write_coboundary(s, st[i]);
    }
    write_file(cfg.out, s.str());
  }
  return kExitOk;
}

int Session::bundle_check() {
  auto z = cocycle();
  header(z);
  BundleGroupoid p(z);
  const auto& P = *p.groupoid();
  out << "objects: " << P.object_count() << '\n' << "morphisms: " << P.morphism_count() << '\n';
  std::string reason;
  auto report = [&](const char* key, const CheckReport& r) {
    out << key << ": " << (r.ok ? "pass" : "fail") << '\n';
    if (!r.ok && reason.empty()) reason = std::string(key) + ": " + r.failure;
  };
  report("groupoid_axioms", check_groupoid_axioms(P));
  report("action_functor", check_action_functor(p.bundle()));
  check_action_free_transitive(p.bundle());
  out << "action_free_transitive: pass\n";
  const auto family = canonical_trivializations(p);
  CheckReport triv;
  for (const auto& t : family) {
    auto r = check_trivialization(p.bundle(), t);
    for (const CheckReport* c : {&r.phi, &r.phibar, &r.taubar, &r.retraction, &r.equivariance})
      if (!c->ok) triv.fail("vertex " + std::to_string(t.vertex) + ": " + c->failure, c->witness);
  }
  report("trivializations", triv);
  const bool round = extract_cocycle(p.bundle(), family) == z;
  out << "round_trip: " << (round ? "pass" : "fail") << '\n';
  if (!round && reason.empty()) reason = "extracted cocycle differs from the input";
  if (!reason.empty()) return negative(reason);
  return kExitOk;
}

int Session::band_cmd() {
  auto z = cocycle();
  header(z);
  auto b = band(z);
  out << "band_group_order: " << b.group->order() << '\n';
  out << "band: " << join(b.k) << '\n';
  const bool trivial = are_cohomologous_1(b, trivial_one_cocycle(b.complex, b.group)).has_value();
  out << "band_class_trivial: " << yes(trivial) << '\n';
  if (!cfg.out.empty()) {
    std::ostringstream s;
    write_one_cocycle(s, b);
    write_file(cfg.out, s.str());
  }
  return kExitOk;
}

int Session::reduce_central() {
  auto z = cocycle();
  header(z);
  auto r = central_reduction(z);
  out << "kernel_order: " << r.kernel.group->order() << '\n';
  out << "reduced_h: " << join(r.a) << '\n';
  out << "class_vanishes: " << yes(r.class_vanishes) << '\n';
  if (!cfg.out.empty()) {
    std::ostringstream s;
    write_cocycle(s, r.reduced, name(z.complex.get(), z.complex->name()), name(z.cm.get(), z.cm->name()));
    write_file(cfg.out, s.str());
  }
  return kExitOk;
}

int Session::lift() {
  need(cfg.complex, "--complex");
  need(cfg.cm, "--cm");
  auto k = load.complex(cfg.complex);
  auto cm = load.crossed_module(cfg.cm);
  out << "complex: " << cfg.complex << '\n' << "cm: " << cfg.cm << '\n';
  OneCocycle g = trivial_one_cocycle(k, cm->G_ptr());
  if (cfg.cocycle == "nontrivial") {
    auto reps = classify_one_cocycles(k, cm->G_ptr(), opt);
    bool found = false;
    for (const auto& r : reps)
      if (!are_cohomologous_1(r, g)) {
        g = r;
        found = true;
        break;
      }
    if (!found) return negative("every G-bundle over the complex is trivial");
  } else if (!cfg.cocycle.empty() && cfg.cocycle != "trivial") {
    g = load.one_cocycle(cfg.cocycle, k, cm->G_ptr());
  }
  out << "bundle: " << join(g.k) << '\n';
  auto r = lifting_obstruction(g, cm);
  out << "obstruction: " << join(r.obstruction) << '\n';
  out << "obstruction_class: " << (r.class_vanishes ? "vanishing" : "nonvanishing") << '\n';
  out << "lift: " << yes(r.lift_exists) << '\n';
  if (r.lift) out << "lift_values: " << join(r.lift->k) << '\n';
  if (!r.lift_exists) return negative("obstruction class nonvanishing");
  return kExitOk;
}

int Session::quotient() {
  auto z = cocycle();
  header(z);
  BundleGroupoid p(z);
  auto q = quotient_by_structure_group(p);
  const auto& Q = *q.quotient.groupoid;
  out << "objects: " << Q.object_count() << '\n' << "morphisms: " << Q.morphism_count() << '\n';
  auto cls = Q.isomorphism_classes();
  int n = 0;
  for (int o = 0; o < Q.object_count(); ++o) n = std::max(n, cls[o] + 1);
  out << "components: " << n << '\n';
  out << "groupoid_axioms: " << (check_groupoid_axioms(Q).ok ? "pass" : "fail") << '\n';
  return kExitOk;
}

int Session::gauge() {
  auto z = cocycle();
  header(z);
  BundleGroupoid p(z);
  auto objs = gauge_objects(p, opt);
  out << "gauge_objects: " << objs.size() << '\n';
  auto ad = ad_equivariant_functor_count(p, opt);
  out << "ad_equivariant_functors: " << ad << '\n';
  auto g = gauge_crossed_module(z, opt);
  out << "Gstar_order: " << g.cm->G().order() << '\n';
  out << "Hstar_order: " << g.cm->H().order() << '\n';
  out << "pi0_order: " << g.pi0_order << '\n';
  out << "pi1_order: " << g.pi1_order << '\n';
  out << "convention: " << (g.left_convention ? "left" : "right") << '\n';
  if (!cfg.out.empty()) {
    std::ostringstream s;
    for (std::size_t i = 0; i < g.gauge.size(); ++i) {
      s << "coboundary # " << i << '\n';
      write_coboundary(s, g.gauge[i]);
    }
    write_file(cfg.out, s.str());
  }
  if (ad != objs.size()) return negative("ad-equivariant functor count differs from gauge object count");
  return kExitOk;
}

int Session::aut2group() {
  need(cfg.cm, "--cm");
  auto cm = load.crossed_module(cfg.cm);
  out << "cm: " << cfg.cm << '\n';
  out << "G_order: " << cm->G().order() << '\n' << "H_order: " << cm->H().order() << '\n';
  auto e = equivariant_endofunctors_of_2group(cm);
  out << "endofunctors: " << e.functors.size() << '\n';
  out << "transformations: " << e.transformations.size() << '\n';
  out << "candidates_checked: " << e.candidates << '\n';
  return kExitOk;
}

int Session::oracle() {
  need(cfg.complex, "--complex");
  auto k = load.complex(cfg.complex);
  if (cfg.coeff < 1) throw Error(ErrorKind::InvalidInput, "--coeff must be positive");
  if (cfg.degree < 0) throw Error(ErrorKind::InvalidInput, "--degree must be non-negative");
  out << "complex: " << cfg.complex << '\n' << "coeff: " << cfg.coeff << '\n' << "degree: " << cfg.degree << '\n';
  out << "order: " << abelian_cohomology_oracle(*k, cfg.coeff, cfg.degree) << '\n';
  return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& report) {
  std::ostringstream buf;
  Session s{cfg, buf, Loader{}};
  int code = kExitOk;
  buf << "command: " << cfg.command << '\n';
  try {
    if (cfg.budget == 0) throw Error(ErrorKind::InvalidInput, "--budget must be positive");
    if (cfg.workers < 1) throw Error(ErrorKind::InvalidInput, "--workers must be positive");
    const std::string& c = cfg.command;
    if (c == "validate") code = s.validate();
    else if (c == "classify") code = s.classify();
    else if (c == "cohomologous") code = s.cohomologous();
    else if (c == "stabilizer") code = s.stabilizer_cmd();
    else if (c == "bundle-check") code = s.bundle_check();
    else if (c == "band") code = s.band_cmd();
    else if (c == "reduce-central") code = s.reduce_central();
    else if (c == "lift") code = s.lift();
    else if (c == "quotient") code = s.quotient();
    else if (c == "gauge") code = s.gauge();
    else if (c == "aut2group") code = s.aut2group();
    else if (c == "oracle-h") code = s.oracle();
    else throw Error(ErrorKind::InvalidInput, "unknown command '" + c + "'");
  } catch (const Error& e) {
    buf << "error: " << to_string(e.kind()) << '\n';
    buf << "REASON: " << e.what() << '\n';
    code = e.kind() == ErrorKind::ParseError            ? kExitParse
           : e.kind() == ErrorKind::SearchSpaceTooLarge ? kExitBudget
                                                        : kExitNegative;
  }
  buf << "exit: " << code << '\n';
  report << buf.str();
  return code;
}

}  // namespace nacech
