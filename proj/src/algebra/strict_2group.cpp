#include "nacech/algebra.hpp"

namespace nacech {

Strict2Group::Strict2Group(CrossedModulePtr cm) : cm_(std::move(cm)) {
  const int n = morphism_count();
  const int ng = cm_->G().order();
  tensor_.resize(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elem h = a / ng, g = a % ng, hb = b / ng, gb = b % ng;
      tensor_(a, b) = morphism(cm_->H().mul(h, cm_->act(g, hb)), cm_->G().mul(g, gb));
    }
}

int Strict2Group::compose(int second, int first) const {
  if (target(first) != source(second))
    throw Error(ErrorKind::InvalidInput, "morphisms are not composable", {second, first});
  return morphism(cm_->H().mul(h_part(second), h_part(first)), g_part(first));
}

int Strict2Group::invert(int m) const { return morphism(cm_->H().inv(h_part(m)), target(m)); }

long long Strict2Group::composable_pair_count() const {
  long long k = 0;
  for (int f = 0; f < morphism_count(); ++f)
    for (int s = 0; s < morphism_count(); ++s) k += target(f) == source(s);
  return k;
}

void verify_strict_2group(const Strict2Group& g2) {
  const int n = g2.morphism_count();
  auto fail = [](const std::string& what, std::vector<long long> w) {
    throw Error(ErrorKind::AxiomFailure, what, std::move(w));
  };
  const FiniteGroup& G = g2.base().G();
  for (int m = 0; m < n; ++m) {
    if (g2.target(m) != G.mul(g2.base().beta(g2.h_part(m)), g2.g_part(m)))
      fail("target disagrees with beta", {m});
    if (g2.compose(g2.identity(g2.target(m)), m) != m || g2.compose(m, g2.identity(g2.source(m))) != m)
      fail("identity law", {m});
    int i = g2.invert(m);
    if (g2.compose(i, m) != g2.identity(g2.source(m)) || g2.compose(m, i) != g2.identity(g2.target(m)))
      fail("inverse law", {m});
  }
  for (int f = 0; f < n; ++f)
    for (int s = 0; s < n; ++s) {
      if (g2.target(f) != g2.source(s)) continue;
      int sf = g2.compose(s, f);
      if (g2.source(sf) != g2.source(f) || g2.target(sf) != g2.target(s))
        fail("source/target of composite", {s, f});
      for (int t = 0; t < n; ++t)
        if (g2.target(s) == g2.source(t) &&
            g2.compose(t, sf) != g2.compose(g2.compose(t, s), f))
          fail("associativity", {t, s, f});
    }
  // Tensor is a functor: interchange on all matching quadruples.
  for (int f2 = 0; f2 < n; ++f2)
    for (int f1 = 0; f1 < n; ++f1) {
      if (g2.target(f2) != g2.source(f1)) continue;
      int a = g2.compose(f1, f2);
      for (int f4 = 0; f4 < n; ++f4)
        for (int f3 = 0; f3 < n; ++f3) {
          if (g2.target(f4) != g2.source(f3)) continue;
          int lhs = g2.tensor(a, g2.compose(f3, f4));
          int rhs = g2.compose(g2.tensor(f1, f3), g2.tensor(f2, f4));
          if (lhs != rhs) fail("interchange law", {f1, f2, f3, f4});
        }
    }
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      if (g2.source(g2.tensor(g2.identity(a), g2.identity(b))) != G.mul(a, b))
        fail("tensor on objects", {a, b});
}

Strict2Group two_group_from_crossed_module(const CrossedModulePtr& cm) {
  Strict2Group g2(cm);
  verify_strict_2group(g2);
  return g2;
}

}  // namespace nacech
