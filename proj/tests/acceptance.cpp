// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "nacech/gauge.hpp"
#include "nacech/io.hpp"
#include "oracles.hpp"

using namespace nacech;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

std::vector<Cocycle> reps_of(const ComplexPtr& k, const CrossedModulePtr& cm) {
  return classify(k, cm, Strategy::Brute).representatives;
}

bool full_suite(const BundleGroupoid& p) {
  if (!check_groupoid_axioms(*p.groupoid()).ok || !check_action_functor(p.bundle()).ok) return false;
  try {
    check_action_free_transitive(p.bundle());
  } catch (const Error&) {
    return false;
  }
  for (const auto& t : canonical_trivializations(p))
    if (!check_trivialization(p.bundle(), t).ok()) return false;
  return true;
}

void ac1(Outcome& o) {
  struct Case {
    const char* complex;
    int n;
    std::uint64_t expect;
  };
  const std::vector<Case> cases = {{"boundary3", 2, 2}, {"boundary3", 3, 3}, {"rp26", 2, 2}, {"rp26", 3, 1},
                                   {"torus7", 2, 2},    {"simplex2", 2, 1},  {"simplex2", 3, 1},
                                   {"simplex2", 4, 1},  {"simplex2", 6, 1}};
  for (const auto& c : cases) {
    auto k = builtin_complex(c.complex);
    auto cm = builtin_crossed_module("z" + std::to_string(c.n) + "_to_star");
    const auto got = classify(k, cm, Strategy::Abelian).class_count;
    const auto lib = abelian_cohomology_oracle(*k, c.n, 2);
    std::string tag = std::string(c.complex) + "/Z" + std::to_string(c.n);
    o.expect(got == c.expect, tag + " classes " + std::to_string(got));
    o.expect(lib == c.expect, tag + " oracle " + std::to_string(lib));
    const bool prime = c.n == 2 || c.n == 3;
    if (prime) {
      const auto ind = oracle::cohomology_order_prime(k->maximal_simplices(), c.n, 2);
      o.expect(ind == c.expect, tag + " GF(p) " + std::to_string(ind));
    }
  }
  if (o.ok) o.detail << cases.size() << " (K,n) pairs match";
}

void ac2(Outcome& o) {
  for (const auto& [cmn, gn, expect] : std::vector<std::tuple<std::string, std::string, int>>{
           {"star_to_z2", "z2", 2}, {"star_to_z3", "z3", 3}, {"star_to_s3", "s3", 3}}) {
    const auto got = classify(builtin_complex("circle"), builtin_crossed_module(cmn), Strategy::Brute).class_count;
    const int hol = oracle::circle_holonomy_classes(oracle::table_of(*builtin_group(gn)));
    o.expect(static_cast<int>(got) == expect, cmn + " classes " + std::to_string(got));
    o.expect(hol == expect, cmn + " holonomy oracle " + std::to_string(hol));
    if (o.ok) o.detail << gn << "=" << got << " ";
  }
}

void ac3(Outcome& o) {
  auto k = builtin_complex("simplex2");
  for (const auto& m : {"z2_to_star", "star_to_z2", "z4_onto_z2"}) {
    const auto got = classify(k, builtin_crossed_module(m), Strategy::Brute).class_count;
    o.expect(got == 1, std::string(m) + " classes " + std::to_string(got));
    if (o.ok) o.detail << m << "=" << got << " ";
  }
}

void ac4(Outcome& o) {
  auto cm = builtin_crossed_module("z4_onto_z2");
  for (const auto& [kn, expect] :
       std::vector<std::pair<std::string, std::uint64_t>>{{"boundary3", 2}, {"circle", 1}, {"simplex2", 1}}) {
    auto k = builtin_complex(kn);
    const auto cls = classify(k, cm, Strategy::Brute);
    const auto ind = oracle::cohomology_order_prime(k->maximal_simplices(), 2, 2);
    o.expect(cls.class_count == expect, kn + " classes " + std::to_string(cls.class_count));
    o.expect(ind == expect, kn + " oracle " + std::to_string(ind));
    // exactly one class reduces to a vanishing abelian class
    int vanishing = 0;
    for (const auto& z : cls.representatives) vanishing += central_reduction(z).class_vanishes;
    o.expect(vanishing == 1, kn + " vanishing reductions " + std::to_string(vanishing));
    if (o.ok) o.detail << kn << "=" << cls.class_count << " ";
  }
}

void ac5(Outcome& o) {
  std::mt19937 rng(2024);
  int done = 0;
  for (const auto& kn : {"circle", "simplex2", "boundary3"})
    for (const auto& cmn : {"z2_trivial", "z4_over_z2"}) {
      auto k = builtin_complex(kn);
      auto cm = builtin_crossed_module(cmn);
      auto reps = reps_of(k, cm);
      for (int t = 0; t < 17; ++t, ++done) {
        auto z = oracle::random_cocycle(reps, rng);
        auto p = build_total_groupoid(z);
        const std::string tag = std::string(kn) + "/" + cmn + " sample " + std::to_string(t);
        o.expect(full_suite(p), tag + " axiom suite");
        o.expect(extract_cocycle(p.bundle(), canonical_trivializations(p)) == z, tag + " round trip");
      }
    }
  if (o.ok) o.detail << done << " round trips exact";
}

void ac6(Outcome& o) {
  std::mt19937 rng(77);
  int done = 0;
  for (const auto& [kn, cmn] : std::vector<std::pair<const char*, const char*>>{
           {"circle", "z2_trivial"}, {"simplex2", "z4_over_z2"}, {"boundary3", "z2_trivial"}, {"circle", "conj_s3"}}) {
    auto k = builtin_complex(kn);
    auto cm = builtin_crossed_module(cmn);
    auto reps = reps_of(k, cm);
    for (int t = 0; t < 13; ++t, ++done) {
      auto z = oracle::random_cocycle(reps, rng);
      auto c = oracle::random_coboundary(k, cm, rng);
      auto z2 = apply_coboundary(z, c);
      auto p = build_total_groupoid(z);
      auto p2 = build_total_groupoid(z2);
      const std::string tag = std::string(kn) + "/" + cmn + " sample " + std::to_string(t);
      o.expect(is_weak_equivalence(coboundary_to_bundle_morphism(p, p2, c)).ok(), tag + " Phi' weak equivalence");
      auto w = are_cohomologous(z, z2);
      o.expect(w && apply_coboundary(z, *w) == z2, tag + " witness");
      auto family = canonical_trivializations(p);
      auto pz = build_total_groupoid(extract_cocycle(p.bundle(), family));
      o.expect(is_weak_equivalence(reconstruction_morphism(p.bundle(), family, pz)).ok(), tag + " reconstruction");
    }
  }
  if (o.ok) o.detail << done << " pairs";
}

void ac7(Outcome& o) {
  std::mt19937 rng(91);
  int done = 0;
  for (const auto& [kn, cmn] : std::vector<std::pair<const char*, const char*>>{
           {"circle", "z4_over_z2"}, {"boundary3", "z4_over_z2"}, {"circle", "star_to_s3"}, {"simplex2", "conj_s3"}}) {
    auto k = builtin_complex(kn);
    auto cm = builtin_crossed_module(cmn);
    auto reps = reps_of(k, cm);
    for (int t = 0; t < 13; ++t, ++done) {
      auto z = oracle::random_cocycle(reps, rng);
      auto z2 = apply_coboundary(z, oracle::random_coboundary(k, cm, rng));
      auto b = band(z), b2 = band(z2);
      bool strict = true;
      for (const auto& tr : k->triples())
        strict = strict && b.group->mul(b.at(tr[0], tr[1]), b.at(tr[1], tr[2])) == b.at(tr[0], tr[2]);
      const std::string tag = std::string(kn) + "/" + cmn + " sample " + std::to_string(t);
      o.expect(strict, tag + " band identity");
      o.expect(are_cohomologous_1(b, b2).has_value(), tag + " band class");
    }
  }
  if (o.ok) o.detail << done << " cohomologous pairs";
}

void ac8(Outcome& o) {
  for (const auto& m : {"z2_trivial", "z4_onto_z2", "conj_s3"}) {
    auto cm = builtin_crossed_module(m);
    auto r = equivariant_endofunctors_of_2group(cm);
    const int G = cm->G().order(), H = cm->H().order();
    o.expect(static_cast<int>(r.functors.size()) == G, std::string(m) + " functors");
    o.expect(static_cast<int>(r.transformations.size()) == G * H, std::string(m) + " transformations");
    if (o.ok) o.detail << m << "=(" << r.functors.size() << "," << r.transformations.size() << ") ";
  }
}

void ac9(Outcome& o) {
  int instances = 0;
  std::mt19937 rng(5);
  for (const auto& kn : {"point", "circle"})
    for (const auto& m : {"z2_trivial", "z4_over_z2", "z4_onto_z2", "conj_s3", "s3_identity"}) {
      auto k = builtin_complex(kn);
      auto cm = builtin_crossed_module(m);
      for (const auto& rep : reps_of(k, cm)) {
        auto z = apply_coboundary(rep, oracle::random_coboundary(k, cm, rng));
        BundleGroupoid p(z);
        const std::string tag = std::string(kn) + "/" + m;
        const auto ad = ad_equivariant_functor_count(p);
        const auto objs = gauge_objects(p).size();
        o.expect(ad == objs, tag + " ad " + std::to_string(ad) + " vs gauge " + std::to_string(objs));
        try {
          auto g = gauge_crossed_module(z);
          validate_crossed_module(g.cm->G_ptr(), g.cm->H_ptr(), g.cm->beta_hom().image, g.cm->alpha().act);
        } catch (const Error& e) {
          o.expect(false, tag + " gauge crossed module: " + e.what());
        }
        ++instances;
      }
    }
  if (o.ok) o.detail << instances << " instances";
}

void ac10(Outcome& o) {
  auto cm = builtin_crossed_module("z4_onto_z2");
  auto rp = builtin_complex("rp26");
  auto classes = classify_one_cocycles(rp, cm->G_ptr());
  o.expect(classes.size() == 2, "rp26 has two Z/2 bundles");
  if (classes.size() == 2) {
    auto triv = lifting_obstruction(classes[0], cm);
    auto twist = lifting_obstruction(classes[1], cm);
    o.expect(triv.lift_exists && triv.class_vanishes && triv.lift, "rp26 trivial bundle lifts");
    o.expect(!twist.lift_exists && !twist.class_vanishes && !twist.lift, "rp26 twisted bundle has no lift");
  }
  int b3 = 0;
  for (const auto& g : enumerate_one_cocycles(builtin_complex("boundary3"), cm->G_ptr())) {
    auto r = lifting_obstruction(g, cm);
    o.expect(r.lift_exists && r.class_vanishes, "boundary3 bundle lifts");
    ++b3;
  }
  int crossed = 0;
  for (const auto& kn : {"circle", "simplex2"})
    for (const auto& g : enumerate_one_cocycles(builtin_complex(kn), cm->G_ptr())) {
      const bool exists = oracle::count_lifts(g, *cm) > 0;
      auto r = lifting_obstruction(g, cm);
      o.expect(r.lift_exists == exists && r.class_vanishes == exists, std::string(kn) + " verdict vs exhaustive");
      o.expect(search_lift(g, cm).has_value() == exists, std::string(kn) + " search_lift vs exhaustive");
      ++crossed;
    }
  if (o.ok) o.detail << "rp26 twisted blocked, " << b3 << " boundary3 bundles lift, " << crossed << " cross-checked";
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail.str("");
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string detail = o.detail.str();
    while (!detail.empty() && detail.back() == ' ') detail.pop_back();
    std::printf("AC%zu %s %s (%.2fs)\n", i + 1, o.ok ? "PASS" : "FAIL", detail.c_str(), secs);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
