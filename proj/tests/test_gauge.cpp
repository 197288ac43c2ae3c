#include <catch_amalgamated.hpp>

#include "nacech/gauge.hpp"
#include "nacech/io.hpp"
#include "oracles.hpp"

using namespace nacech;

namespace {

CrossedModulePtr e_to_z3() {
  // ({e}, Z/3): H = Z/3 over the trivial group
  return builtin_crossed_module("z3_to_star");
}

}  // namespace

TEST_CASE("equivariant endofunctors of small 2-groups") {
  auto a = equivariant_endofunctors_of_2group(builtin_crossed_module("z2_trivial"));
  CHECK(a.functors.size() == 2);
  CHECK(a.transformations.size() == 4);

  auto b = equivariant_endofunctors_of_2group(e_to_z3());
  CHECK(b.functors.size() == 1);
  CHECK(b.transformations.size() == 3);

  for (const auto& name : builtin_crossed_module_names()) {
    INFO(name);
    auto cm = builtin_crossed_module(name);
    auto r = equivariant_endofunctors_of_2group(cm);
    CHECK(static_cast<int>(r.functors.size()) == cm->G().order());
    CHECK(static_cast<int>(r.transformations.size()) == cm->G().order() * cm->H().order());
    // left translation by e is the identity functor
    CHECK(std::find(r.functors.begin(), r.functors.end(), cm->G().identity()) != r.functors.end());
  }
}

TEST_CASE("gauge objects of a trivial cocycle over a point") {
  for (const auto& name : {"z2_trivial", "conj_s3", "z4_onto_z2"}) {
    auto cm = builtin_crossed_module(name);
    BundleGroupoid p(trivial_cocycle(builtin_complex("point"), cm));
    auto objs = gauge_objects(p);
    CHECK(static_cast<int>(objs.size()) == cm->G().order());
    CHECK(objs.size() == equivariant_endofunctors_of_2group(cm).functors.size());
    CHECK(ad_equivariant_functor_count(p) == objs.size());
  }
}

TEST_CASE("identity coboundary realizes the identity") {
  auto cm = builtin_crossed_module("z4_over_z2");
  auto z = classify(builtin_complex("circle"), cm, Strategy::Brute).representatives.back();
  BundleGroupoid p(z);
  auto objs = gauge_objects(p);
  auto id = identity_coboundary(z.complex, cm);
  bool found = false;
  for (const auto& o : objs)
    if (o.coboundary == id) {
      found = true;
      CHECK(o.functor == identity_functor(p.groupoid()));
    }
  CHECK(found);
}

TEST_CASE("realization is a homomorphism") {
  auto k = builtin_complex("circle");
  for (const auto& name : {"z2_trivial", "conj_s3"}) {
    auto cm = builtin_crossed_module(name);
    auto reps = classify(k, cm, Strategy::Brute).representatives;
    std::mt19937 rng(47);
    for (int trial = 0; trial < 3; ++trial) {
      auto z = oracle::random_cocycle(reps, rng);
      BundleGroupoid p(z);
      auto objs = gauge_objects(p);
      REQUIRE(!objs.empty());
      std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
      for (int s = 0; s < 10; ++s) {
        const auto& a = objs[pick(rng)];
        const auto& b = objs[pick(rng)];
        auto composite = compose_coboundaries(b.coboundary, a.coboundary);
        CHECK(compose_functors(a.functor, b.functor) == coboundary_to_bundle_morphism(p, p, composite));
      }
    }
  }
}

TEST_CASE("ad-equivariant functors match gauge objects on the circle") {
  auto k = builtin_complex("circle");
  for (const auto& name : {"z2_trivial", "z4_over_z2", "z4_onto_z2", "s3_identity"}) {
    INFO(name);
    auto cm = builtin_crossed_module(name);
    auto reps = classify(k, cm, Strategy::Brute).representatives;
    std::mt19937 rng(53);
    for (const auto& rep : reps) {
      auto z = apply_coboundary(rep, oracle::random_coboundary(k, cm, rng));
      BundleGroupoid p(z);
      CHECK(ad_equivariant_functor_count(p) == gauge_objects(p).size());
    }
  }
}

TEST_CASE("gauge crossed module") {
  auto cm = builtin_crossed_module("z2_trivial");
  auto pt = gauge_crossed_module(trivial_cocycle(builtin_complex("point"), cm));
  CHECK(pt.cm->G().order() == 2);
  CHECK(pt.cm->H().order() == 2);

  auto k = builtin_complex("circle");
  for (const auto& name : {"z2_trivial", "z4_over_z2", "z4_onto_z2", "conj_s3"}) {
    INFO(name);
    auto m = builtin_crossed_module(name);
    for (const auto& z : classify(k, m, Strategy::Brute).representatives) {
      auto g = gauge_crossed_module(z);
      // revalidate from raw tables
      CHECK_NOTHROW(validate_crossed_module(g.cm->G_ptr(), g.cm->H_ptr(), g.cm->beta_hom().image, g.cm->alpha().act));
      CHECK(g.cm->G().order() % g.pi0_order == 0);
      CHECK(g.cm->H().order() % g.pi1_order == 0);
      CHECK(g.cm->beta(g.cm->H().identity()) == g.cm->G().identity());
      CHECK(g.gauge[g.cm->G().identity()] == identity_coboundary(k, m));
      for (Elem a = 0; a < g.cm->H().order(); ++a) CHECK(g.index(g.tuple(a)) == a);
    }
  }
}
