#include <algorithm>
#include <map>
#include <numeric>

#include "nacech/groupoid.hpp"

namespace nacech {

FiniteGroupoid::FiniteGroupoid(int objects, std::vector<int> source, std::vector<int> target,
                               std::vector<int> identity, std::vector<int> inverse,
                               const ComposeFn& compose)
    : source_(std::move(source)),
      target_(std::move(target)),
      identity_(std::move(identity)),
      inverse_(std::move(inverse)) {
  const int nm = morphism_count();
  if (static_cast<int>(identity_.size()) != objects || static_cast<int>(target_.size()) != nm ||
      static_cast<int>(inverse_.size()) != nm)
    throw Error(ErrorKind::InvalidInput, "groupoid tables have inconsistent sizes");
  out_.assign(objects, {});
  pos_in_out_.assign(nm, -1);
  for (int m = 0; m < nm; ++m) {
    if (source_[m] < 0 || source_[m] >= objects || target_[m] < 0 || target_[m] >= objects)
      throw Error(ErrorKind::IndexOutOfRange, "morphism endpoint out of range", {m});
    pos_in_out_[m] = static_cast<int>(out_[source_[m]].size());
    out_[source_[m]].push_back(m);
  }
  offset_.assign(nm + 1, 0);
  for (int m = 0; m < nm; ++m) offset_[m + 1] = offset_[m] + out_[target_[m]].size();
  comp_.assign(offset_[nm], -1);
  for (int f = 0; f < nm; ++f)
    for (int s : out_[target_[f]]) {
      int c = compose(s, f);
      if (c < 0 || c >= nm) throw Error(ErrorKind::IndexOutOfRange, "composite out of range", {s, f});
      comp_[offset_[f] + pos_in_out_[s]] = c;
    }
}

int FiniteGroupoid::compose(int second, int first) const {
  if (target_[first] != source_[second])
    throw Error(ErrorKind::InvalidInput, "morphisms are not composable", {second, first});
  return comp_[offset_[first] + pos_in_out_[second]];
}

std::vector<int> FiniteGroupoid::hom(int x, int y) const {
  std::vector<int> out;
  for (int m : out_[x])
    if (target_[m] == y) out.push_back(m);
  return out;
}

std::vector<int> FiniteGroupoid::isomorphism_classes() const {
  std::vector<int> parent(object_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int m = 0; m < morphism_count(); ++m) parent[find(source_[m])] = find(target_[m]);
  std::vector<int> label(object_count(), -1), root_label(object_count(), -1);
  int next = 0;
  for (int o = 0; o < object_count(); ++o) {
    int r = find(o);
    if (root_label[r] < 0) root_label[r] = next++;
    label[o] = root_label[r];
  }
  return label;
}

CheckReport check_groupoid_axioms(const FiniteGroupoid& g) {
  CheckReport r;
  for (int o = 0; o < g.object_count() && r.ok; ++o) {
    int id = g.identity(o);
    ++r.checks;
    if (g.source(id) != o || g.target(id) != o) r.fail("identity endpoints", {o});
  }
  for (int m = 0; m < g.morphism_count() && r.ok; ++m) {
    r.checks += 4;
    if (g.compose(g.identity(g.target(m)), m) != m) r.fail("left identity", {m});
    if (g.compose(m, g.identity(g.source(m))) != m) r.fail("right identity", {m});
    int i = g.inverse(m);
    if (g.source(i) != g.target(m) || g.target(i) != g.source(m)) r.fail("inverse endpoints", {m});
    else if (g.compose(i, m) != g.identity(g.source(m)) || g.compose(m, i) != g.identity(g.target(m)))
      r.fail("inverse law", {m});
  }
  for (int f = 0; f < g.morphism_count() && r.ok; ++f)
    for (int s : g.out_morphisms(g.target(f))) {
      int sf = g.compose(s, f);
      ++r.checks;
      if (g.source(sf) != g.source(f) || g.target(sf) != g.target(s)) {
        r.fail("composite endpoints", {s, f});
        break;
      }
      for (int t : g.out_morphisms(g.target(s))) {
        ++r.checks;
        if (g.compose(t, sf) != g.compose(g.compose(t, s), f)) {
          r.fail("associativity", {t, s, f});
          break;
        }
      }
      if (!r.ok) break;
    }
  return r;
}

CheckReport check_functor(const GroupoidFunctor& F) {
  CheckReport r;
  const FiniteGroupoid& A = *F.domain;
  const FiniteGroupoid& B = *F.codomain;
  if (static_cast<int>(F.objects.size()) != A.object_count() ||
      static_cast<int>(F.morphisms.size()) != A.morphism_count()) {
    r.fail("functor tables have wrong size", {});
    return r;
  }
  for (int o = 0; o < A.object_count() && r.ok; ++o) {
    ++r.checks;
    if (F.objects[o] < 0 || F.objects[o] >= B.object_count()) r.fail("object image out of range", {o});
    else if (F.morphisms[A.identity(o)] != B.identity(F.objects[o])) r.fail("identity not preserved", {o});
  }
  for (int m = 0; m < A.morphism_count() && r.ok; ++m) {
    ++r.checks;
    int fm = F.morphisms[m];
    if (fm < 0 || fm >= B.morphism_count()) r.fail("morphism image out of range", {m});
    else if (B.source(fm) != F.objects[A.source(m)] || B.target(fm) != F.objects[A.target(m)])
      r.fail("source/target not preserved", {m});
  }
  for (int f = 0; f < A.morphism_count() && r.ok; ++f)
    for (int s : A.out_morphisms(A.target(f))) {
      ++r.checks;
      if (F.morphisms[A.compose(s, f)] != B.compose(F.morphisms[s], F.morphisms[f])) {
        r.fail("composition not preserved", {s, f});
        break;
      }
    }
  return r;
}

GroupoidFunctor identity_functor(const GroupoidPtr& g) {
  GroupoidFunctor F{g, g, std::vector<int>(g->object_count()), std::vector<int>(g->morphism_count())};
  std::iota(F.objects.begin(), F.objects.end(), 0);
  std::iota(F.morphisms.begin(), F.morphisms.end(), 0);
  return F;
}

GroupoidFunctor compose_functors(const GroupoidFunctor& second, const GroupoidFunctor& first) {
  if (first.codomain != second.domain)
    throw Error(ErrorKind::InvalidInput, "functors are not composable");
  GroupoidFunctor F{first.domain, second.codomain, first.objects, first.morphisms};
  for (int& o : F.objects) o = second.objects[o];
  for (int& m : F.morphisms) m = second.morphisms[m];
  return F;
}

CheckReport check_natural(const NaturalTransformation& t) {
  CheckReport r;
  const FiniteGroupoid& A = *t.from.domain;
  const FiniteGroupoid& B = *t.from.codomain;
  if (t.to.domain != t.from.domain || t.to.codomain != t.from.codomain ||
      static_cast<int>(t.components.size()) != A.object_count()) {
    r.fail("natural transformation has mismatched data", {});
    return r;
  }
  for (int x = 0; x < A.object_count() && r.ok; ++x) {
    ++r.checks;
    int c = t.components[x];
    if (B.source(c) != t.from.objects[x] || B.target(c) != t.to.objects[x])
      r.fail("component has wrong endpoints", {x});
  }
  for (int m = 0; m < A.morphism_count() && r.ok; ++m) {
    ++r.checks;
    int lhs = B.compose(t.components[A.target(m)], t.from.morphisms[m]);
    int rhs = B.compose(t.to.morphisms[m], t.components[A.source(m)]);
    if (lhs != rhs) r.fail("naturality square", {m});
  }
  return r;
}

bool is_faithful(const GroupoidFunctor& F) {
  const FiniteGroupoid& A = *F.domain;
  for (int x = 0; x < A.object_count(); ++x) {
    std::map<std::pair<int, int>, int> seen;
    for (int m : A.out_morphisms(x))
      if (!seen.emplace(std::make_pair(A.target(m), F.morphisms[m]), m).second) return false;
  }
  return true;
}

WeakEquivalenceReport is_weak_equivalence(const GroupoidFunctor& F) {
  WeakEquivalenceReport rep;
  const FiniteGroupoid& A = *F.domain;
  const FiniteGroupoid& B = *F.codomain;
  auto fr = check_functor(F);
  rep.functor = fr.ok;
  if (!fr.ok) {
    rep.detail = "not a functor: " + fr.failure;
    rep.witness = fr.witness;
    return rep;
  }
  auto cls = B.isomorphism_classes();
  std::vector<char> hit(B.object_count(), 0);
  for (int o : F.objects) hit[cls[o]] = 1;
  rep.essentially_surjective = true;
  for (int y = 0; y < B.object_count(); ++y)
    if (!hit[cls[y]]) {
      rep.essentially_surjective = false;
      rep.detail = "object " + std::to_string(y) + " is not isomorphic to any image";
      rep.witness = {y};
      break;
    }
  rep.fully_faithful = true;
  const int na = A.object_count();
  for (int x = 0; x < na && rep.fully_faithful; ++x) {
    std::vector<int> count(B.object_count(), 0);
    for (int m : B.out_morphisms(F.objects[x])) ++count[B.target(m)];
    std::vector<std::vector<int>> by_target(na);
    for (int m : A.out_morphisms(x)) by_target[A.target(m)].push_back(F.morphisms[m]);
    for (int y = 0; y < na; ++y) {
      auto& imgs = by_target[y];
      std::sort(imgs.begin(), imgs.end());
      bool injective = std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end();
      if (!injective || static_cast<int>(imgs.size()) != count[F.objects[y]]) {
        rep.fully_faithful = false;
        if (rep.detail.empty())
          rep.detail = "Hom(" + std::to_string(x) + "," + std::to_string(y) + ") of size " +
                       std::to_string(imgs.size()) + " maps " +
                       (injective ? "onto a hom-set of size " + std::to_string(count[F.objects[y]])
                                  : std::string("non-injectively"));
        rep.witness = {x, y};
        break;
      }
    }
  }
  return rep;
}

Subgroupoid full_subgroupoid(const GroupoidPtr& gp, const std::vector<int>& objects) {
  const FiniteGroupoid& g = *gp;
  Subgroupoid s;
  s.object_index.assign(g.object_count(), -1);
  std::vector<int> obj(objects);
  std::sort(obj.begin(), obj.end());
  obj.erase(std::unique(obj.begin(), obj.end()), obj.end());
  for (std::size_t i = 0; i < obj.size(); ++i) s.object_index[obj[i]] = static_cast<int>(i);
  s.morphism_index.assign(g.morphism_count(), -1);
  std::vector<int> mor;
  for (int m = 0; m < g.morphism_count(); ++m)
    if (s.object_index[g.source(m)] >= 0 && s.object_index[g.target(m)] >= 0) {
      s.morphism_index[m] = static_cast<int>(mor.size());
      mor.push_back(m);
    }
  std::vector<int> src, tgt, id, inv;
  for (int m : mor) {
    src.push_back(s.object_index[g.source(m)]);
    tgt.push_back(s.object_index[g.target(m)]);
    inv.push_back(s.morphism_index[g.inverse(m)]);
  }
  for (int o : obj) id.push_back(s.morphism_index[g.identity(o)]);
  s.groupoid = std::make_shared<FiniteGroupoid>(
      static_cast<int>(obj.size()), src, tgt, id, inv,
      [&](int second, int first) { return s.morphism_index[g.compose(mor[second], mor[first])]; });
  s.inclusion = GroupoidFunctor{s.groupoid, gp, obj, mor};
  return s;
}

GroupoidQuotient quotient_by_free_action(const GroupoidPtr& gp, int n,
                                         const std::vector<int>& oact,
                                         const std::vector<int>& mact) {
  const FiniteGroupoid& g = *gp;
  const int no = g.object_count(), nm = g.morphism_count();
  for (int o = 0; o < no; ++o)
    for (int a = 1; a < n; ++a)
      for (int b = 0; b < a; ++b)
        if (oact[o * n + a] == oact[o * n + b])
          throw Error(ErrorKind::ActionNotFree, "object action is not free", {o, a, b});
  for (int m = 0; m < nm; ++m) {
    for (int a = 0; a < n; ++a) {
      int ma = mact[m * n + a];
      if (g.source(ma) != oact[g.source(m) * n + a] || g.target(ma) != oact[g.target(m) * n + a])
        throw Error(ErrorKind::InvalidInput, "action does not commute with source/target", {m, a});
    }
  }
  GroupoidQuotient q;
  q.object_class.assign(no, -1);
  for (int o = 0; o < no; ++o) {
    if (q.object_class[o] >= 0) continue;
    int c = static_cast<int>(q.object_rep.size());
    q.object_rep.push_back(o);
    for (int a = 0; a < n; ++a) q.object_class[oact[o * n + a]] = c;
  }
  q.morphism_class.assign(nm, -1);
  for (int m = 0; m < nm; ++m) {
    if (q.morphism_class[m] >= 0) continue;
    int c = static_cast<int>(q.morphism_rep.size());
    q.morphism_rep.push_back(m);
    for (int a = 0; a < n; ++a) q.morphism_class[mact[m * n + a]] = c;
  }
  std::vector<int> src, tgt, id, inv;
  for (int m : q.morphism_rep) {
    src.push_back(q.object_class[g.source(m)]);
    tgt.push_back(q.object_class[g.target(m)]);
    inv.push_back(q.morphism_class[g.inverse(m)]);
  }
  for (int o : q.object_rep) id.push_back(q.morphism_class[g.identity(o)]);
  auto qcompose = [&](int second, int first) {
    int m1 = q.morphism_rep[first];
    int m2 = q.morphism_rep[second];
    for (int a = 0; a < n; ++a) {
      int t = mact[m2 * n + a];
      if (g.source(t) == g.target(m1)) return q.morphism_class[g.compose(t, m1)];
    }
    throw Error(ErrorKind::InvalidInput, "quotient composition has no lift", {second, first});
  };
  q.groupoid = std::make_shared<FiniteGroupoid>(static_cast<int>(q.object_rep.size()), src, tgt, id,
                                                inv, qcompose);
  // Every parent composite must land in the composite of the classes.
  for (int f = 0; f < nm; ++f)
    for (int s : g.out_morphisms(g.target(f)))
      if (q.morphism_class[g.compose(s, f)] !=
          q.groupoid->compose(q.morphism_class[s], q.morphism_class[f]))
        throw Error(ErrorKind::InvalidInput, "composition does not descend to the quotient", {s, f});
  return q;
}

}  // namespace nacech
