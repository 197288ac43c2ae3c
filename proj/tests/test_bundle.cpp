#include <catch_amalgamated.hpp>

#include "nacech/bundle.hpp"
#include "nacech/io.hpp"
#include "oracles.hpp"

using namespace nacech;

namespace {

std::vector<Cocycle> reps_of(const char* k, const char* cm) {
  return classify(builtin_complex(k), builtin_crossed_module(cm), Strategy::Brute).representatives;
}

bool full_suite(const BundleGroupoid& p) {
  if (!check_groupoid_axioms(*p.groupoid()).ok) return false;
  if (!check_action_functor(p.bundle()).ok) return false;
  for (const auto& t : canonical_trivializations(p))
    if (!check_trivialization(p.bundle(), t).ok()) return false;
  return true;
}

}  // namespace

TEST_CASE("bundle groupoid sizes") {
  auto k = builtin_complex("boundary3");
  auto p = build_total_groupoid(trivial_cocycle(k, builtin_crossed_module("z2_trivial")));
  CHECK(p.groupoid()->object_count() == (4 * 1 + 6 * 2 + 4 * 3) * 2);
  CHECK(p.groupoid()->object_count() == 56);

  // one vertex: the underlying groupoid of the 2-group
  auto cm = builtin_crossed_module("conj_s3");
  auto pt = build_total_groupoid(trivial_cocycle(builtin_complex("point"), cm));
  Strict2Group two(cm);
  CHECK(pt.groupoid()->object_count() == two.object_count());
  CHECK(pt.groupoid()->morphism_count() == two.morphism_count());
  for (int m = 0; m < two.morphism_count(); ++m) {
    auto d = pt.morphism_data(pt.morphism(0, 0, 0, two.h_part(m), two.g_part(m)));
    CHECK(pt.groupoid()->target(pt.morphism(0, 0, 0, d.h, d.g)) == pt.object(0, 0, two.target(m)));
  }
}

TEST_CASE("composition in P_z follows the displayed formula") {
  auto k = builtin_complex("simplex2");
  auto cm = builtin_crossed_module("conj_s3");
  std::mt19937 rng(19);
  const FiniteGroup& G = cm->G();
  const FiniteGroup& H = cm->H();
  const int sigma = k->simplex_index(vertex_mask({0, 1, 2}));
  for (int trial = 0; trial < 20; ++trial) {
    auto z = oracle::random_cocycle({trivial_cocycle(k, cm)}, rng);
    BundleGroupoid p(z);
    std::uniform_int_distribution<int> hg(0, H.order() - 1), gg(0, G.order() - 1);
    Elem h = hg(rng), g = gg(rng), h2 = hg(rng);
    // source of the second morphism is the target of the first
    Elem g2 = G.mul(G.inv(z.g_at(0, 1)), G.mul(cm->beta(h), g));
    int first = p.morphism(0, 1, sigma, h, g);
    int second = p.morphism(1, 2, sigma, h2, g2);
    REQUIRE(p.groupoid()->target(first) == p.groupoid()->source(second));
    Elem expect = H.mul(H.mul(z.h_at(0, 1, 2), cm->act(z.g_at(0, 1), h2)), h);
    CHECK(p.groupoid()->compose(second, first) == p.morphism(0, 2, sigma, expect, g));
  }
}

TEST_CASE("axiom suite over enumerated cocycles") {
  for (const auto& [kn, cmn] : std::vector<std::pair<const char*, const char*>>{
           {"circle", "z2_trivial"}, {"circle", "z4_over_z2"}, {"simplex2", "conj_s3"}, {"boundary3", "z2_trivial"}}) {
    INFO(kn << " " << cmn);
    std::mt19937 rng(23);
    auto reps = reps_of(kn, cmn);
    for (int trial = 0; trial < 4; ++trial) {
      auto z = oracle::random_cocycle(reps, rng);
      auto p = build_total_groupoid(z);
      CHECK(full_suite(p));
      CHECK_NOTHROW(check_action_free_transitive(p.bundle()));
      CHECK(extract_cocycle(p.bundle(), canonical_trivializations(p)) == z);
    }
  }
}

TEST_CASE("acting by identities is the identity") {
  auto z = reps_of("circle", "z4_over_z2").back();
  BundleGroupoid p(z);
  Strict2Group two(z.cm);
  const Elem e = z.cm->G().identity();
  for (int o = 0; o < p.groupoid()->object_count(); ++o) CHECK(p.act_object(o, e) == o);
  for (int m = 0; m < p.groupoid()->morphism_count(); ++m) CHECK(p.act_morphism(m, two.identity(e)) == m);
}

TEST_CASE("trivializations") {
  auto z = reps_of("circle", "z4_over_z2").back();
  BundleGroupoid p(z);
  auto t = trivialization(p, 1);
  for (int pos = 0; pos < static_cast<int>(t.chart.simplices.size()); ++pos) {
    int sigma = t.chart.simplices[pos];
    for (Elem g = 0; g < z.cm->G().order(); ++g) {
      int o = t.restricted.object_index[p.object(1, sigma, g)];
      CHECK(t.phi.objects[o] == t.chart.object(pos, g));
    }
  }
  CHECK_THROWS_AS(trivialization(p, 7), Error);
}

TEST_CASE("translated trivializations give cohomologous cocycles") {
  auto k = builtin_complex("boundary3");
  auto cm = builtin_crossed_module("z4_over_z2");
  auto reps = reps_of("boundary3", "z4_over_z2");
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> gg(0, cm->G().order() - 1);
  for (int trial = 0; trial < 6; ++trial) {
    auto z = oracle::random_cocycle(reps, rng);
    auto p = build_total_groupoid(z);
    auto family = canonical_trivializations(p);
    for (auto& t : family) {
      t = translate_trivialization(t, gg(rng));
      CHECK(check_trivialization(p.bundle(), t).ok());
    }
    auto z2 = extract_cocycle(p.bundle(), family);
    auto w = are_cohomologous(z, z2);
    REQUIRE(w);
    CHECK(apply_coboundary(z, *w) == z2);
  }
}

TEST_CASE("coboundaries realize as weak equivalences") {
  auto k = builtin_complex("circle");
  auto cm = builtin_crossed_module("z2_trivial");
  auto reps = reps_of("circle", "z2_trivial");
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto z = oracle::random_cocycle(reps, rng);
    auto c = oracle::random_coboundary(k, cm, rng);
    auto p = build_total_groupoid(z);
    auto p2 = build_total_groupoid(apply_coboundary(z, c));
    auto f = coboundary_to_bundle_morphism(p, p2, c);
    CHECK(check_functor(f).ok);
    CHECK(is_equivariant(f, p.bundle(), p2.bundle()));
    CHECK(is_weak_equivalence(f).ok());
    // functoriality in c
    auto c2 = oracle::random_coboundary(k, cm, rng);
    auto p3 = build_total_groupoid(apply_coboundary(p2.cocycle(), c2));
    auto g = coboundary_to_bundle_morphism(p2, p3, c2);
    auto fg = coboundary_to_bundle_morphism(p, p3, compose_coboundaries(c, c2));
    CHECK(compose_functors(g, f) == fg);
  }
  auto z = reps.front();
  auto p = build_total_groupoid(z);
  CHECK(coboundary_to_bundle_morphism(p, p, identity_coboundary(k, cm)) == identity_functor(p.groupoid()));
}

TEST_CASE("reconstruction morphism") {
  for (const auto& [kn, cmn] :
       std::vector<std::pair<const char*, const char*>>{{"circle", "z4_over_z2"}, {"point", "conj_s3"}}) {
    for (const auto& z : reps_of(kn, cmn)) {
      auto p = build_total_groupoid(z);
      auto family = canonical_trivializations(p);
      auto pz = build_total_groupoid(extract_cocycle(p.bundle(), family));
      auto r = reconstruction_morphism(p.bundle(), family, pz);
      CHECK(check_functor(r).ok);
      CHECK(is_faithful(r));
      CHECK(is_weak_equivalence(r).ok());
      CHECK(r == identity_functor(p.groupoid()));
    }
  }
}

TEST_CASE("weak equivalence detects a non-full collapse") {
  auto two = std::make_shared<const FiniteGroupoid>(2, std::vector<int>{0, 1}, std::vector<int>{0, 1},
                                                    std::vector<int>{0, 1}, std::vector<int>{0, 1},
                                                    [](int s, int) { return s; });
  auto one = std::make_shared<const FiniteGroupoid>(1, std::vector<int>{0}, std::vector<int>{0},
                                                    std::vector<int>{0}, std::vector<int>{0},
                                                    [](int, int) { return 0; });
  GroupoidFunctor f{two, one, {0, 0}, {0, 0}};
  auto r = is_weak_equivalence(f);
  CHECK(r.functor);
  CHECK(r.essentially_surjective);
  CHECK_FALSE(r.fully_faithful);
  CHECK(is_weak_equivalence(identity_functor(two)).ok());
}

TEST_CASE("Morita equivalence matches cohomology") {
  auto k = builtin_complex("circle");
  auto cm = builtin_crossed_module("star_to_z2");
  auto zero = trivial_cocycle(k, cm);
  auto one = zero;
  one.g[k->pair_index(0, 1)] = one.g[k->pair_index(1, 0)] = 1;
  CHECK_FALSE(morita_equivalent(build_total_groupoid(zero), build_total_groupoid(one)).equivalent);
  std::mt19937 rng(37);
  auto moved = apply_coboundary(one, oracle::random_coboundary(k, cm, rng));
  auto m = morita_equivalent(build_total_groupoid(one), build_total_groupoid(moved));
  REQUIRE(m.equivalent);
  REQUIRE(m.left);
  REQUIRE(m.right);
  CHECK(is_weak_equivalence(*m.left).ok());
  CHECK(is_weak_equivalence(*m.right).ok());
}

TEST_CASE("band") {
  auto k = builtin_complex("circle");
  auto cm = builtin_crossed_module("z4_over_z2");
  auto z = trivial_cocycle(k, cm);
  auto set = [&](int i, int j, int v) {
    z.g[k->pair_index(i, j)] = v;
    z.g[k->pair_index(j, i)] = (4 - v) % 4;
  };
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 0, 1);
  validate_cocycle(z);
  auto b = band(z);
  CHECK(b.at(0, 1) == 1);
  CHECK(b.at(1, 2) == 1);
  CHECK(b.at(2, 0) == 1);
  CHECK_FALSE(are_cohomologous_1(b, trivial_one_cocycle(k, b.group)));

  // beta onto: band trivial
  for (const auto& r : reps_of("boundary3", "z4_onto_z2")) {
    auto bb = band(r);
    CHECK(bb.group->order() == 1);
  }
  std::mt19937 rng(41);
  auto reps = reps_of("circle", "z4_over_z2");
  for (int trial = 0; trial < 20; ++trial) {
    auto w = oracle::random_cocycle(reps, rng);
    auto w2 = apply_coboundary(w, oracle::random_coboundary(k, cm, rng));
    CHECK_NOTHROW(validate_one_cocycle(band(w)));
    CHECK(are_cohomologous_1(band(w), band(w2)));
  }
}

TEST_CASE("central reduction") {
  auto k = builtin_complex("boundary3");
  auto cm = builtin_crossed_module("z4_onto_z2");
  auto reps = reps_of("boundary3", "z4_onto_z2");
  REQUIRE(reps.size() == 2);
  auto triv = trivial_cocycle(k, cm);
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    auto z = oracle::random_cocycle(reps, rng);
    auto r = central_reduction(z);
    for (Elem g : r.reduced.g) CHECK(g == cm->G().identity());
    CHECK(apply_coboundary(z, r.coboundary) == r.reduced);
    CHECK(is_abelian_2_cocycle(*k, *r.kernel.group, r.a));
    CHECK(r.class_vanishes == are_cohomologous(z, triv).has_value());
  }
  CHECK(central_reduction(triv).class_vanishes);
  CHECK_THROWS_AS(central_reduction(trivial_cocycle(k, builtin_crossed_module("z4_over_z2"))), Error);
}

TEST_CASE("lifting obstruction against exhaustive lifts") {
  auto cm = builtin_crossed_module("z4_onto_z2");
  for (const auto& kn : {"circle", "simplex2", "boundary3"}) {
    auto k = builtin_complex(kn);
    for (const auto& g : enumerate_one_cocycles(k, cm->G_ptr())) {
      INFO(kn);
      auto r = lifting_obstruction(g, cm);
      const bool exists = oracle::count_lifts(g, *cm) > 0;
      CHECK(r.lift_exists == exists);
      CHECK(r.class_vanishes == exists);
      CHECK(search_lift(g, cm).has_value() == exists);
      if (r.lift) {
        for (std::size_t p = 0; p < g.k.size(); ++p) CHECK(cm->beta(r.lift->k[p]) == g.k[p]);
        CHECK_NOTHROW(validate_one_cocycle(*r.lift));
      }
    }
  }
}

TEST_CASE("lifting on the projective plane") {
  auto k = builtin_complex("rp26");
  auto cm = builtin_crossed_module("z4_onto_z2");
  auto classes = classify_one_cocycles(k, cm->G_ptr());
  REQUIRE(classes.size() == 2);
  auto trivial = lifting_obstruction(classes[0], cm);
  CHECK(trivial.lift_exists);
  auto twisted = lifting_obstruction(classes[1], cm);
  CHECK_FALSE(twisted.class_vanishes);
  CHECK_FALSE(twisted.lift_exists);
  CHECK_FALSE(twisted.lift);
  CHECK(is_abelian_2_cocycle(*k, *twisted.kernel.group, twisted.obstruction));
}

TEST_CASE("quotient by the structure group") {
  for (const auto& m : {"z2_trivial", "conj_s3", "z4_onto_z2"}) {
    auto cm = builtin_crossed_module(m);
    auto q = quotient_by_structure_group(BundleGroupoid(trivial_cocycle(builtin_complex("point"), cm)));
    CHECK(q.quotient.groupoid->object_count() == 1);
    CHECK(q.quotient.groupoid->morphism_count() == cm->H().order());
    CHECK(check_groupoid_axioms(*q.quotient.groupoid).ok);
  }
  auto z = reps_of("circle", "z4_over_z2").back();
  BundleGroupoid p(z);
  auto q = quotient_by_structure_group(p);
  CHECK(q.quotient.groupoid->object_count() == p.flag_count());
  CHECK(check_groupoid_axioms(*q.quotient.groupoid).ok);
  for (int x = 0; x < q.quotient.groupoid->object_count(); ++x)
    for (int y = 0; y < q.quotient.groupoid->object_count(); ++y) {
      auto hs = q.quotient.groupoid->hom(x, y);
      if (!hs.empty()) CHECK(static_cast<int>(hs.size()) == z.cm->H().order());
    }
}
