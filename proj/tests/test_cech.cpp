#include <catch_amalgamated.hpp>

#include "nacech/cech.hpp"
#include "nacech/io.hpp"
#include "oracles.hpp"

using namespace nacech;

namespace {

// {*} -> Z/2 on the circle; g given on 01, 12, 02 and filled antisymmetrically.
Cocycle circle_z2(int g01, int g12, int g02) {
  auto k = builtin_complex("circle");
  auto z = trivial_cocycle(k, builtin_crossed_module("star_to_z2"));
  auto set = [&](int i, int j, int v) {
    z.g[k->pair_index(i, j)] = v;
    z.g[k->pair_index(j, i)] = v;
  };
  set(0, 1, g01);
  set(1, 2, g12);
  set(0, 2, g02);
  return z;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("trivial cocycles are valid") {
  for (const auto& c : builtin_complex_names())
    for (const auto& m : {"z2_trivial", "conj_s3", "z4_onto_z2"}) {
      auto z = trivial_cocycle(builtin_complex(c), builtin_crossed_module(m));
      CHECK(is_cocycle(z));
    }
}

TEST_CASE("circle cocycle with values in {*} -> Z/2") {
  CHECK_NOTHROW(validate_cocycle(circle_z2(1, 0, 1)));
  auto bad = circle_z2(1, 0, 1);
  bad.g[bad.complex->pair_index(1, 0)] = 0;
  try {
    validate_cocycle(bad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cocyc1Failure);
    CHECK(e.witness() == std::vector<long long>{0, 1, 0});
  }
}

TEST_CASE("non-normalized and incomplete data are rejected") {
  auto z = circle_z2(0, 0, 0);
  z.g[z.complex->pair_index(1, 1)] = 1;
  CHECK(kind_of([&] { validate_cocycle(z); }) == ErrorKind::NormalizationFailure);
  auto short_h = circle_z2(0, 0, 0);
  short_h.h.pop_back();
  CHECK(kind_of([&] { validate_cocycle(short_h); }) == ErrorKind::MissingEntry);
}

TEST_CASE("coboundary action on the circle") {
  auto z = circle_z2(1, 0, 1);
  auto c = identity_coboundary(z.complex, z.cm);
  CHECK(apply_coboundary(z, c) == z);
  c.gamma = {1, 0, 0};
  auto z2 = apply_coboundary(z, c);
  CHECK(z2.g_at(0, 1) == 0);
  CHECK(z2.g_at(0, 2) == 0);
  CHECK(z2.g_at(1, 2) == 0);
}

TEST_CASE("abelian coboundary is h - delta eta") {
  auto k = builtin_complex("simplex2");
  auto cm = builtin_crossed_module("z3_to_star");
  auto z = trivial_cocycle(k, cm);
  auto c = identity_coboundary(k, cm);
  c.eta[k->pair_index(0, 1)] = 1;
  c.eta[k->pair_index(1, 2)] = 2;
  c.eta[k->pair_index(0, 2)] = 2;
  auto z2 = apply_coboundary_unchecked(z, c);
  // (delta eta)_012 = eta_12 - eta_02 + eta_01 = 2 - 2 + 1
  CHECK(z2.h_at(0, 1, 2) == (3 - 1) % 3);
}

TEST_CASE("composition of coboundaries is sequential application") {
  auto k = builtin_complex("circle");
  auto cm = builtin_crossed_module("z2_trivial");
  auto reps = classify(k, cm, Strategy::Brute).representatives;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto z = oracle::random_cocycle(reps, rng);
    auto c = oracle::random_coboundary(k, cm, rng);
    auto c2 = oracle::random_coboundary(k, cm, rng);
    CHECK(apply_coboundary(z, compose_coboundaries(c, c2)) == apply_coboundary(apply_coboundary(z, c), c2));
    CHECK(apply_coboundary(apply_coboundary(z, c), inverse_coboundary(c)) == z);
    CHECK(compose_coboundaries(c, identity_coboundary(k, cm)) == c);
  }
}

TEST_CASE("composition contract with a nonabelian crossed module") {
  auto k = builtin_complex("simplex2");
  auto cm = builtin_crossed_module("conj_s3");
  std::vector<Cocycle> reps{trivial_cocycle(k, cm)};
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto z = oracle::random_cocycle(reps, rng);
    auto c = oracle::random_coboundary(k, cm, rng);
    auto c2 = oracle::random_coboundary(k, cm, rng);
    CHECK(apply_coboundary(z, compose_coboundaries(c, c2)) == apply_coboundary(apply_coboundary(z, c), c2));
    auto id = compose_coboundaries(c, inverse_coboundary(c));
    CHECK(id == identity_coboundary(k, cm));
  }
}

TEST_CASE("holonomy separates classes on the circle") {
  auto zero = circle_z2(0, 0, 0);
  auto one = circle_z2(1, 0, 0);
  CHECK_FALSE(are_cohomologous(zero, one));
  auto w = are_cohomologous(one, circle_z2(0, 1, 0));
  REQUIRE(w);
  CHECK(apply_coboundary(one, *w) == circle_z2(0, 1, 0));
  auto self = are_cohomologous(one, one);
  REQUIRE(self);
  CHECK(apply_coboundary(one, *self) == one);
}

TEST_CASE("cohomologous is an equivalence relation on enumerated cocycles") {
  auto k = builtin_complex("circle");
  auto cm = builtin_crossed_module("z4_over_z2");
  auto all = enumerate_cocycles(k, cm);
  REQUIRE(all.size() > 4);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    const auto& c = all[pick(rng)];
    auto ab = are_cohomologous(a, b);
    CHECK(ab.has_value() == are_cohomologous(b, a).has_value());
    if (ab && are_cohomologous(b, c)) CHECK(are_cohomologous(a, c));
  }
  for (const auto& z : all) CHECK(is_cocycle(z));
}

TEST_CASE("classification of {*} -> G on the circle counts conjugacy classes") {
  for (const auto& [name, group] : std::vector<std::pair<std::string, std::string>>{
           {"star_to_z2", "z2"}, {"star_to_z3", "z3"}, {"star_to_s3", "s3"}}) {
    INFO(name);
    auto cls = classify(builtin_complex("circle"), builtin_crossed_module(name), Strategy::Brute);
    CHECK(static_cast<int>(cls.class_count) ==
          oracle::circle_holonomy_classes(oracle::table_of(*builtin_group(group))));
    CHECK(static_cast<int>(cls.class_count) ==
          oracle::conjugacy_class_count(oracle::table_of(*builtin_group(group))));
  }
}

TEST_CASE("representatives are sorted and pairwise non-cohomologous") {
  auto cls = classify(builtin_complex("circle"), builtin_crossed_module("conj_s3"), Strategy::Brute);
  const auto& reps = cls.representatives;
  REQUIRE(reps.size() == cls.class_count);
  for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1].encoding() < reps[i].encoding());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(are_cohomologous(reps[i], reps[j]));
}

TEST_CASE("contractible complexes have one class") {
  for (const auto& m : {"z2_to_star", "star_to_z2", "z4_onto_z2", "z4_over_z2", "conj_s3"})
    CHECK(classify(builtin_complex("simplex2"), builtin_crossed_module(m), Strategy::Brute).class_count == 1);
}

TEST_CASE("brute and abelian strategies agree on A -> {*}") {
  for (const auto& k : {"circle", "simplex2", "boundary3"})
    for (const auto& m : {"z2_to_star", "z3_to_star"}) {
      INFO(k << " " << m);
      auto brute = classify(builtin_complex(k), builtin_crossed_module(m), Strategy::Brute);
      auto lin = classify(builtin_complex(k), builtin_crossed_module(m), Strategy::Abelian);
      CHECK(brute.class_count == lin.class_count);
      for (std::size_t i = 0; i < std::min(brute.representatives.size(), lin.representatives.size()); ++i)
        CHECK(brute.representatives[i] == lin.representatives[i]);
    }
}

TEST_CASE("abelian strategy requires A -> {*}") {
  CHECK(kind_of([] {
          classify(builtin_complex("circle"), builtin_crossed_module("z2_trivial"), Strategy::Abelian);
        }) == ErrorKind::StrategyMismatch);
}

TEST_CASE("budget exhaustion is reported") {
  SearchOptions opt;
  opt.budget = 50;
  CHECK(kind_of([&] {
          classify(builtin_complex("boundary3"), builtin_crossed_module("z4_over_z2"), Strategy::Brute, opt);
        }) == ErrorKind::SearchSpaceTooLarge);
  // memory cap trips before the default node budget
  CHECK(kind_of([] {
          classify(builtin_complex("torus7"), builtin_crossed_module("z2_to_star"), Strategy::Brute);
        }) == ErrorKind::SearchSpaceTooLarge);
}

TEST_CASE("worker count does not change the result") {
  auto k = builtin_complex("boundary3");
  auto cm = builtin_crossed_module("z4_onto_z2");
  SearchOptions one, many;
  many.workers = 3;
  auto a = classify(k, cm, Strategy::Brute, one);
  auto b = classify(k, cm, Strategy::Brute, many);
  CHECK(a.class_count == b.class_count);
  CHECK(a.representatives.size() == b.representatives.size());
  for (std::size_t i = 0; i < a.representatives.size(); ++i) CHECK(a.representatives[i] == b.representatives[i]);
  CHECK(a.cocycles_examined == b.cocycles_examined);
}

TEST_CASE("stabilizers") {
  auto pt = builtin_complex("point");
  for (const auto& m : {"z2_trivial", "conj_s3", "z4_over_z2"}) {
    auto cm = builtin_crossed_module(m);
    CHECK(static_cast<int>(stabilizer(trivial_cocycle(pt, cm)).size()) == cm->G().order());
  }
  auto k = builtin_complex("circle");
  auto cm = builtin_crossed_module("z2_trivial");
  auto reps = classify(k, cm, Strategy::Brute).representatives;
  std::mt19937 rng(5);
  for (const auto& rep : reps) {
    auto st = stabilizer(rep);
    CHECK(std::find(st.begin(), st.end(), identity_coboundary(k, cm)) != st.end());
    for (int trial = 0; trial < 5; ++trial) {
      auto z = apply_coboundary(rep, oracle::random_coboundary(k, cm, rng));
      CHECK(stabilizer(z).size() == st.size());
    }
    // closed under composition
    for (const auto& a : st)
      for (const auto& b : st) CHECK(apply_coboundary(rep, compose_coboundaries(a, b)) == rep);
  }
}

TEST_CASE("one-cocycles") {
  auto k = builtin_complex("circle");
  CHECK(classify_one_cocycles(k, builtin_group("s3")).size() == 3);
  CHECK(enumerate_one_cocycles(k, builtin_group("z2")).size() == 8);
  auto bad = trivial_one_cocycle(k, builtin_group("z2"));
  bad.k[k->pair_index(0, 1)] = 1;
  CHECK(kind_of([&] { validate_one_cocycle(bad); }) == ErrorKind::NotA1Cocycle);
  bad.k[k->pair_index(1, 0)] = 1;
  CHECK_NOTHROW(validate_one_cocycle(bad));
  auto gamma = are_cohomologous_1(bad, trivial_one_cocycle(k, builtin_group("z2")));
  CHECK_FALSE(gamma);
}

TEST_CASE("cyclic decomposition") {
  auto d = decompose_abelian(*builtin_group("z4"));
  CHECK(d.moduli == std::vector<int>{4});
  CHECK(d.standard_cyclic);
  auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  auto e = decompose_abelian(v4);
  CHECK(e.moduli == std::vector<int>{2, 2});
  for (Elem x = 0; x < 4; ++x) CHECK(e.element(e.coords[x]) == x);
}
