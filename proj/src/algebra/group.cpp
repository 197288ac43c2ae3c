#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "nacech/algebra.hpp"

namespace nacech {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotAction: return "NotAction";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EquivarianceFailure: return "EquivarianceFailure";
    case ErrorKind::PeifferFailure: return "PeifferFailure";
    case ErrorKind::MissingEntry: return "MissingEntry";
    case ErrorKind::NormalizationFailure: return "NormalizationFailure";
    case ErrorKind::Cocyc1Failure: return "Cocyc1Failure";
    case ErrorKind::Cocyc2Failure: return "Cocyc2Failure";
    case ErrorKind::ResultNotCocycle: return "ResultNotCocycle";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::StrategyMismatch: return "StrategyMismatch";
    case ErrorKind::ActionNotFreeTransitive: return "ActionNotFreeTransitive";
    case ErrorKind::ActionNotFree: return "ActionNotFree";
    case ErrorKind::TrivializationInvalid: return "TrivializationInvalid";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::BetaNotSurjective: return "BetaNotSurjective";
    case ErrorKind::KernelNotCentral: return "KernelNotCentral";
    case ErrorKind::NotA1Cocycle: return "NotA1Cocycle";
    case ErrorKind::ConventionMismatch: return "ConventionMismatch";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

FiniteGroup validate_group(int order, const IndexTable& mul, std::string name) {
  if (order <= 0) throw Error(ErrorKind::EmptyInput, "group order must be positive");
  if (mul.rows() != order || mul.cols() != order)
    throw Error(ErrorKind::InvalidInput, "multiplication table is not order x order");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (mul(a, b) < 0 || mul(a, b) >= order)
        throw Error(ErrorKind::IndexOutOfRange, "table entry out of range", {a, b});

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
                          " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
                          std::to_string(c) + ")",
                      {a, b, c});

  int e = -1;
  for (int x = 0; x < order && e < 0; ++x) {
    bool unit = true;
    for (int a = 0; a < order && unit; ++a) unit = mul(x, a) == a && mul(a, x) == a;
    if (unit) e = x;
  }
  if (e < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity");

  std::vector<Elem> inv(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (mul(a, b) == e && mul(b, a) == e) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse", {a});
  }

  FiniteGroup g;
  g.mul_ = mul;
  g.inv_ = std::move(inv);
  g.e_ = e;
  g.name_ = std::move(name);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_central(Elem a) const {
  for (int b = 0; b < order(); ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != e_; x = mul(x, a)) ++k;
  return k;
}

std::vector<Elem> FiniteGroup::generated_by(const std::vector<Elem>& gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<Elem> out{e_};
  seen[e_] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem s : gens) {
      Elem y = mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> FiniteGroup::generators() const {
  std::vector<Elem> gens;
  std::vector<char> in(order(), 0);
  in[e_] = 1;
  for (Elem a = 0; a < order(); ++a) {
    if (in[a]) continue;
    gens.push_back(a);
    for (Elem x : generated_by(gens)) in[x] = 1;
  }
  return gens;
}

std::vector<std::vector<Elem>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> cls(order(), -1);
  std::vector<std::vector<Elem>> out;
  for (Elem a = 0; a < order(); ++a) {
    if (cls[a] >= 0) continue;
    std::vector<Elem> c;
    for (Elem g = 0; g < order(); ++g) {
      Elem x = conj(g, a);
      if (cls[x] < 0) {
        cls[x] = static_cast<int>(out.size());
        c.push_back(x);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw Error(ErrorKind::InvalidInput, "cyclic group order must be positive");
  IndexTable t(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b) = (a + b) % n;
  return validate_group(n, t, "Z" + std::to_string(n));
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& perms, std::string name) {
  if (perms.empty()) throw Error(ErrorKind::EmptyInput, "no permutations");
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(perms.size());
  IndexTable t(n, n);
  std::vector<int> pq(perms[0].size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < pq.size(); ++x) pq[x] = perms[a][perms[b][x]];
      auto it = index.find(pq);
      if (it == index.end())
        throw Error(ErrorKind::InvalidInput, "permutation set not closed", {a, b});
      t(a, b) = it->second;
    }
  return validate_group(n, t, std::move(name));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw Error(ErrorKind::TooLarge, "symmetric_group supports n <= 5");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return group_from_permutations(perms, "S" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  IndexTable t(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t(x, y) = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return validate_group(n, t, a.name() + "x" + b.name());
}

namespace {

// Extends a generator assignment to a homomorphism by BFS over words;
// returns an empty vector if the assignment is inconsistent.
std::vector<Elem> extend_on_generators(const FiniteGroup& src, const FiniteGroup& dst,
                                       const std::vector<Elem>& gens,
                                       const std::vector<Elem>& imgs) {
  std::vector<Elem> f(src.order(), -1);
  f[src.identity()] = dst.identity();
  std::vector<Elem> queue{src.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = src.mul(x, gens[k]);
      Elem fy = dst.mul(f[x], imgs[k]);
      if (f[y] < 0) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return {};
      }
    }
  }
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (f[src.mul(a, b)] != dst.mul(f[a], f[b])) return {};
  return f;
}

template <class Visit>
void for_each_generator_image(const FiniteGroup& src, const FiniteGroup& dst,
                              const std::vector<Elem>& gens, Visit&& visit) {
  std::vector<Elem> imgs(gens.size(), 0);
  const int m = dst.order();
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < gens.size() && ok; ++k)
      ok = src.element_order(gens[k]) % dst.element_order(imgs[k]) == 0;
    if (ok && !visit(imgs)) return;
    std::size_t k = 0;
    while (k < imgs.size() && ++imgs[k] == m) imgs[k++] = 0;
    if (k == imgs.size()) return;
  }
}

}  // namespace

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > 64) throw Error(ErrorKind::TooLarge, "isomorphism test limited to order 64");
  auto gens = a.generators();
  if (gens.empty()) return true;
  bool found = false;
  for_each_generator_image(a, b, gens, [&](const std::vector<Elem>& imgs) {
    auto f = extend_on_generators(a, b, gens, imgs);
    if (f.empty()) return true;
    std::vector<char> hit(b.order(), 0);
    for (Elem y : f) hit[y] = 1;
    found = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    return !found;
  });
  return found;
}

bool GroupHom::is_injective() const {
  int k = 0;
  for (Elem x : image) k += x == target->identity();
  return k == 1;
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target->order(), 0);
  for (Elem y : image) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

GroupHom validate_hom(GroupPtr source, GroupPtr target, std::vector<Elem> image) {
  if (static_cast<int>(image.size()) != source->order())
    throw Error(ErrorKind::InvalidInput, "homomorphism table has wrong length");
  for (std::size_t a = 0; a < image.size(); ++a)
    if (image[a] < 0 || image[a] >= target->order())
      throw Error(ErrorKind::IndexOutOfRange, "homomorphism image out of range",
                  {static_cast<long long>(a)});
  for (int a = 0; a < source->order(); ++a)
    for (int b = 0; b < source->order(); ++b)
      if (image[source->mul(a, b)] != target->mul(image[a], image[b]))
        throw Error(ErrorKind::NotHomomorphism, "f(ab) != f(a)f(b)", {a, b});
  return GroupHom{std::move(source), std::move(target), std::move(image)};
}

GroupAction validate_action(GroupPtr actor, GroupPtr space, IndexTable act) {
  const int ng = actor->order(), nh = space->order();
  if (act.rows() != ng || act.cols() != nh)
    throw Error(ErrorKind::InvalidInput, "action table has wrong shape");
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h)
      if (act(g, h) < 0 || act(g, h) >= nh)
        throw Error(ErrorKind::IndexOutOfRange, "action entry out of range", {g, h});
  for (int h = 0; h < nh; ++h)
    if (act(actor->identity(), h) != h)
      throw Error(ErrorKind::NotAction, "identity does not act trivially", {h});
  for (int g = 0; g < ng; ++g) {
    std::vector<char> hit(nh, 0);
    for (int h = 0; h < nh; ++h) hit[act(g, h)] = 1;
    for (int h = 0; h < nh; ++h)
      if (!hit[h]) throw Error(ErrorKind::NotAction, "action element is not a bijection", {g});
    for (int a = 0; a < nh; ++a)
      for (int b = 0; b < nh; ++b)
        if (act(g, space->mul(a, b)) != space->mul(act(g, a), act(g, b)))
          throw Error(ErrorKind::NotAction, "action element is not an automorphism", {g, a, b});
  }
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2)
      for (int h = 0; h < nh; ++h)
        if (act(actor->mul(g1, g2), h) != act(g1, act(g2, h)))
          throw Error(ErrorKind::NotAction, "(g1 g2).h != g1.(g2.h)", {g1, g2, h});
  return GroupAction{std::move(actor), std::move(space), std::move(act)};
}

GroupAction trivial_action(GroupPtr actor, GroupPtr space) {
  IndexTable t(actor->order(), space->order());
  for (int g = 0; g < t.rows(); ++g)
    for (int h = 0; h < t.cols(); ++h) t(g, h) = h;
  return GroupAction{std::move(actor), std::move(space), std::move(t)};
}

GroupAction conjugation_action(GroupPtr g) {
  IndexTable t(g->order(), g->order());
  for (int a = 0; a < t.rows(); ++a)
    for (int x = 0; x < t.cols(); ++x) t(a, x) = g->conj(a, x);
  return GroupAction{g, g, std::move(t)};
}

Subgroup subgroup_from_elements(const FiniteGroup& ambient, const std::vector<Elem>& elems) {
  Subgroup s;
  s.inclusion = elems;
  std::sort(s.inclusion.begin(), s.inclusion.end());
  s.index_of.assign(ambient.order(), -1);
  for (std::size_t i = 0; i < s.inclusion.size(); ++i)
    s.index_of[s.inclusion[i]] = static_cast<int>(i);
  const int n = static_cast<int>(s.inclusion.size());
  IndexTable t(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int k = s.index_of[ambient.mul(s.inclusion[a], s.inclusion[b])];
      if (k < 0) throw Error(ErrorKind::InvalidInput, "subset not closed under product", {a, b});
      t(a, b) = k;
    }
  s.group = std::make_shared<FiniteGroup>(validate_group(n, t));
  s.central = std::all_of(s.inclusion.begin(), s.inclusion.end(),
                          [&](Elem x) { return ambient.is_central(x); });
  return s;
}

QuotientGroup quotient_group(const GroupPtr& g, const std::vector<Elem>& normal) {
  const int n = g->order();
  std::vector<int> coset(n, -1);
  std::vector<Elem> rep;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int c = static_cast<int>(rep.size());
    rep.push_back(x);
    for (Elem k : normal) coset[g->mul(x, k)] = c;
  }
  const int m = static_cast<int>(rep.size());
  if (m * static_cast<int>(normal.size()) != n)
    throw Error(ErrorKind::InvalidInput, "subset is not a subgroup");
  IndexTable t(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t(a, b) = coset[g->mul(rep[a], rep[b])];
  // Well-definedness of the product on cosets is normality.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (coset[g->mul(x, y)] != t(coset[x], coset[y]))
        throw Error(ErrorKind::InvalidInput, "subgroup is not normal", {x, y});
  QuotientGroup q;
  q.group = std::make_shared<FiniteGroup>(validate_group(m, t, g->name() + "/N"));
  q.projection = validate_hom(g, q.group, coset);
  q.rep = std::move(rep);
  return q;
}

Automorphisms automorphism_group(const GroupPtr& h) {
  if (h->order() > kAutomorphismOrderLimit)
    throw Error(ErrorKind::TooLarge,
                "automorphism search limited to order " + std::to_string(kAutomorphismOrderLimit),
                {h->order()});
  auto gens = h->generators();
  std::vector<std::vector<Elem>> maps;
  for_each_generator_image(*h, *h, gens, [&](const std::vector<Elem>& imgs) {
    auto f = extend_on_generators(*h, *h, gens, imgs);
    if (f.empty()) return true;
    std::vector<char> hit(h->order(), 0);
    for (Elem y : f) hit[y] = 1;
    if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) maps.push_back(f);
    return true;
  });
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  Automorphisms out;
  out.group = std::make_shared<FiniteGroup>(group_from_permutations(maps, "Aut(" + h->name() + ")"));
  IndexTable act(static_cast<int>(maps.size()), h->order());
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (int x = 0; x < h->order(); ++x) act(static_cast<int>(k), x) = maps[k][x];
  out.action = validate_action(out.group, h, std::move(act));
  out.maps = std::move(maps);
  return out;
}

}  // namespace nacech
