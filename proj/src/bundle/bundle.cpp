#include <algorithm>

#include "nacech/bundle.hpp"

namespace nacech {

BundleGroupoid::BundleGroupoid(Cocycle z) : z_(std::move(z)) {
  validate_cocycle(z_);
  const SimplicialComplex& K = *z_.complex;
  const CrossedModule& cm = *z_.cm;
  const FiniteGroup& G = cm.G();
  const FiniteGroup& H = cm.H();
  const int n = K.vertex_count(), ng = G.order(), nh = H.order();
  const int ns = static_cast<int>(K.simplices().size());

  flag_index_.assign(static_cast<std::size_t>(ns) * n, -1);
  pair_flag_index_.assign(static_cast<std::size_t>(ns) * n * n, -1);
  for (int s = 0; s < ns; ++s) {
    const auto& sigma = K.simplices()[s];
    for (int i : sigma) {
      flag_index_[s * n + i] = static_cast<int>(flags_.size());
      flags_.push_back({i, s});
    }
    for (int i : sigma)
      for (int j : sigma) {
        pair_flag_index_[(s * n + i) * n + j] = static_cast<int>(pair_flags_.size());
        pair_flags_.push_back({i, j, s});
      }
  }
  const int no = flag_count() * ng;
  const int nm = static_cast<int>(pair_flags_.size()) * nh * ng;
  std::vector<int> src(nm), tgt(nm), inv(nm), id(no);
  for (int m = 0; m < nm; ++m) {
    auto [i, j, s, h, g] = morphism_data(m);
    Elem gij = z_.g_at(i, j);
    Elem g2 = G.mul(G.mul(G.inv(gij), cm.beta(h)), g);
    src[m] = object(i, s, g);
    tgt[m] = object(j, s, g2);
    Elem hinv = cm.act(G.inv(gij), H.inv(H.mul(h, z_.h_at(i, j, i))));
    inv[m] = morphism(j, i, s, hinv, g2);
  }
  for (int o = 0; o < no; ++o) {
    auto [i, s, g] = object_data(o);
    id[o] = morphism(i, i, s, H.identity(), g);
  }
  auto compose = [&](int second, int first) {
    auto a = morphism_data(first);
    auto b = morphism_data(second);
    Elem h = H.mul(H.mul(z_.h_at(a.i, a.j, b.j), cm.act(z_.g_at(a.i, a.j), b.h)), a.h);
    return morphism(a.i, b.j, a.sigma, h, a.g);
  };
  bundle_.base = z_.complex;
  bundle_.cm = z_.cm;
  bundle_.groupoid = std::make_shared<FiniteGroupoid>(no, src, tgt, id, inv, compose);
  bundle_.object_point.resize(no);
  bundle_.object_action.resize(no, ng);
  for (int o = 0; o < no; ++o) {
    auto [i, s, g] = object_data(o);
    bundle_.object_point[o] = s;
    for (Elem a = 0; a < ng; ++a) bundle_.object_action(o, a) = object(i, s, G.mul(g, a));
  }
  bundle_.morphism_action.resize(nm, nh * ng);
  for (int m = 0; m < nm; ++m) {
    auto [i, j, s, h, g] = morphism_data(m);
    for (Elem hb = 0; hb < nh; ++hb)
      for (Elem gb = 0; gb < ng; ++gb)
        bundle_.morphism_action(m, hb * ng + gb) =
            morphism(i, j, s, H.mul(h, cm.act(g, hb)), G.mul(g, gb));
  }
}

int BundleGroupoid::flag(int i, int sigma) const {
  return flag_index_[sigma * base().vertex_count() + i];
}

int BundleGroupoid::object(int i, int sigma, Elem g) const {
  return flag(i, sigma) * cm().G().order() + g;
}

int BundleGroupoid::morphism(int i, int j, int sigma, Elem h, Elem g) const {
  const int n = base().vertex_count();
  const int pf = pair_flag_index_[(sigma * n + i) * n + j];
  return (pf * cm().H().order() + h) * cm().G().order() + g;
}

BundleGroupoid::ObjectData BundleGroupoid::object_data(int o) const {
  const int ng = cm().G().order();
  auto [i, s] = flags_[o / ng];
  return {i, s, o % ng};
}

BundleGroupoid::MorphismData BundleGroupoid::morphism_data(int m) const {
  const int ng = cm().G().order(), nh = cm().H().order();
  const auto& pf = pair_flags_[m / (ng * nh)];
  return {pf[0], pf[1], pf[2], (m / ng) % nh, m % ng};
}

BundleGroupoid build_total_groupoid(const Cocycle& z) { return BundleGroupoid(z); }

CheckReport check_action_functor(const Principal2Bundle& p) {
  CheckReport r;
  const FiniteGroupoid& P = *p.groupoid;
  const Strict2Group two(p.cm);
  const FiniteGroup& G = p.cm->G();
  const int ng = G.order(), n2 = two.morphism_count();
  for (int o = 0; o < P.object_count() && r.ok; ++o) {
    ++r.checks;
    if (p.object_action(o, G.identity()) != o) r.fail("identity object acts nontrivially", {o});
    for (Elem a = 0; a < ng && r.ok; ++a)
      for (Elem b = 0; b < ng && r.ok; ++b) {
        ++r.checks;
        if (p.object_action(p.object_action(o, a), b) != p.object_action(o, G.mul(a, b)))
          r.fail("object action not associative", {o, a, b});
      }
    for (Elem a = 0; a < ng && r.ok; ++a) {
      ++r.checks;
      if (p.morphism_action(P.identity(o), two.identity(a)) != P.identity(p.object_action(o, a)))
        r.fail("identities not preserved by the action", {o, a});
    }
  }
  for (int m = 0; m < P.morphism_count() && r.ok; ++m)
    for (int f = 0; f < n2 && r.ok; ++f) {
      ++r.checks;
      int mf = p.morphism_action(m, f);
      if (P.source(mf) != p.object_action(P.source(m), two.source(f)) ||
          P.target(mf) != p.object_action(P.target(m), two.target(f)))
        r.fail("action does not respect source/target", {m, f});
      for (int f2 = 0; f2 < n2 && r.ok; ++f2) {
        ++r.checks;
        if (p.morphism_action(mf, f2) != p.morphism_action(m, two.tensor(f, f2)))
          r.fail("morphism action not associative", {m, f, f2});
      }
    }
  for (int m1 = 0; m1 < P.morphism_count() && r.ok; ++m1)
    for (int m2 : P.out_morphisms(P.target(m1))) {
      int m21 = P.compose(m2, m1);
      for (int f1 = 0; f1 < n2 && r.ok; ++f1)
        for (Elem h2 = 0; h2 < p.cm->H().order() && r.ok; ++h2) {
          int f2 = two.morphism(h2, two.target(f1));
          ++r.checks;
          int lhs = p.morphism_action(m21, two.compose(f2, f1));
          int rhs = P.compose(p.morphism_action(m2, f2), p.morphism_action(m1, f1));
          if (lhs != rhs) r.fail("action is not functorial", {m2, m1, f2, f1});
        }
      if (!r.ok) break;
    }
  return r;
}

void check_action_free_transitive(const Principal2Bundle& p) {
  const FiniteGroupoid& P = *p.groupoid;
  const int ng = p.cm->G().order();
  const int n2 = static_cast<int>(p.morphism_action.cols());
  for (int o = 0; o < P.object_count(); ++o) {
    std::vector<char> seen(P.object_count(), 0);
    for (Elem a = 0; a < ng; ++a) {
      int x = p.object_action(o, a);
      if (seen[x]) throw Error(ErrorKind::ActionNotFreeTransitive, "object action is not free", {o, a});
      seen[x] = 1;
    }
  }
  for (int m = 0; m < P.morphism_count(); ++m) {
    if (p.object_point[P.source(m)] != p.object_point[P.target(m)])
      throw Error(ErrorKind::ActionNotFreeTransitive, "morphism leaves its fiber", {m});
    std::vector<int> imgs(n2);
    for (int f = 0; f < n2; ++f) imgs[f] = p.morphism_action(m, f);
    std::sort(imgs.begin(), imgs.end());
    if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end())
      throw Error(ErrorKind::ActionNotFreeTransitive, "morphism action is not free", {m});
  }
  const auto cls = P.isomorphism_classes();
  const int npts = 1 + *std::max_element(p.object_point.begin(), p.object_point.end());
  std::vector<int> first(npts, -1);
  for (int o = 0; o < P.object_count(); ++o)
    if (first[p.object_point[o]] < 0) first[p.object_point[o]] = o;
  std::vector<std::vector<char>> reached(npts);
  for (int s = 0; s < npts; ++s) {
    if (first[s] < 0) continue;
    reached[s].assign(P.object_count(), 0);
    for (Elem a = 0; a < ng; ++a) reached[s][cls[p.object_action(first[s], a)]] = 1;
  }
  for (int o = 0; o < P.object_count(); ++o)
    if (!reached[p.object_point[o]][cls[o]])
      throw Error(ErrorKind::ActionNotFreeTransitive,
                  "action is not transitive on isomorphism classes of a fiber", {o});
}

int Chart::position(int sigma) const {
  auto it = std::lower_bound(simplices.begin(), simplices.end(), sigma);
  return it != simplices.end() && *it == sigma ? static_cast<int>(it - simplices.begin()) : -1;
}

Chart make_chart(const ComplexPtr& k, const CrossedModulePtr& cm, int vertex) {
  if (vertex < 0 || vertex >= k->vertex_count())
    throw Error(ErrorKind::VertexOutOfRange, "no vertex " + std::to_string(vertex), {vertex});
  Chart c;
  c.vertex = vertex;
  c.cm = cm;
  for (std::size_t s = 0; s < k->simplices().size(); ++s)
    if (std::binary_search(k->simplices()[s].begin(), k->simplices()[s].end(), vertex))
      c.simplices.push_back(static_cast<int>(s));
  const FiniteGroup& G = cm->G();
  const FiniteGroup& H = cm->H();
  const int ng = G.order(), nh = H.order(), np = static_cast<int>(c.simplices.size());
  const int no = np * ng, nm = np * nh * ng;
  std::vector<int> src(nm), tgt(nm), inv(nm), id(no);
  for (int m = 0; m < nm; ++m) {
    int pos = m / (nh * ng);
    Elem h = (m / ng) % nh, g = m % ng;
    Elem t = G.mul(cm->beta(h), g);
    src[m] = c.object(pos, g);
    tgt[m] = c.object(pos, t);
    inv[m] = c.morphism(pos, H.inv(h), t);
  }
  for (int o = 0; o < no; ++o) id[o] = c.morphism(o / ng, H.identity(), o % ng);
  c.groupoid = std::make_shared<FiniteGroupoid>(no, src, tgt, id, inv, [&](int second, int first) {
    int pos = first / (nh * ng);
    Elem h = (first / ng) % nh, g = first % ng;
    Elem h2 = (second / ng) % nh;
    return c.morphism(pos, H.mul(h2, h), g);
  });
  return c;
}

Trivialization trivialization(const BundleGroupoid& p, int vertex) {
  const CrossedModule& cm = p.cm();
  const FiniteGroup& G = cm.G();
  const FiniteGroup& H = cm.H();
  const Cocycle& z = p.cocycle();
  Trivialization t{vertex, make_chart(z.complex, z.cm, vertex), {}, {}, {}, {}};
  const Chart& ch = t.chart;
  const int i = vertex;

  std::vector<int> objs;
  for (int o = 0; o < p.groupoid()->object_count(); ++o)
    if (ch.position(p.object_data(o).sigma) >= 0) objs.push_back(o);
  t.restricted = full_subgroupoid(p.groupoid(), objs);
  const Subgroupoid& R = t.restricted;
  const auto& incl = R.inclusion;

  t.phi = GroupoidFunctor{R.groupoid, ch.groupoid, {}, {}};
  for (int o : incl.objects) {
    auto [j, s, g] = p.object_data(o);
    t.phi.objects.push_back(ch.object(ch.position(s), G.mul(z.g_at(i, j), g)));
  }
  for (int m : incl.morphisms) {
    auto [j, k, s, h, g] = p.morphism_data(m);
    Elem gij = z.g_at(i, j);
    Elem hh = H.mul(z.h_at(i, j, k), cm.act(gij, h));
    t.phi.morphisms.push_back(ch.morphism(ch.position(s), hh, G.mul(gij, g)));
  }

  const int ng = G.order(), nh = H.order();
  t.phibar = GroupoidFunctor{ch.groupoid, R.groupoid, {}, {}};
  for (int o = 0; o < ch.groupoid->object_count(); ++o)
    t.phibar.objects.push_back(R.object_index[p.object(i, ch.simplices[o / ng], o % ng)]);
  for (int m = 0; m < ch.groupoid->morphism_count(); ++m) {
    int s = ch.simplices[m / (nh * ng)];
    t.phibar.morphisms.push_back(R.morphism_index[p.morphism(i, i, s, (m / ng) % nh, m % ng)]);
  }

  t.taubar.from = compose_functors(t.phibar, t.phi);
  t.taubar.to = identity_functor(R.groupoid);
  for (int o : incl.objects) {
    auto [j, s, g] = p.object_data(o);
    Elem c = G.mul(z.g_at(i, j), g);
    t.taubar.components.push_back(R.morphism_index[p.morphism(i, j, s, H.identity(), c)]);
  }
  return t;
}

std::vector<Trivialization> canonical_trivializations(const BundleGroupoid& p) {
  std::vector<Trivialization> out;
  for (int i = 0; i < p.base().vertex_count(); ++i) out.push_back(trivialization(p, i));
  return out;
}

namespace {

// Left translation on a chart, as object and morphism maps.
GroupoidFunctor chart_translation(const Chart& ch, Elem c) {
  const CrossedModule& cm = *ch.cm;
  const int ng = cm.G().order(), nh = cm.H().order();
  GroupoidFunctor L{ch.groupoid, ch.groupoid, {}, {}};
  for (int o = 0; o < ch.groupoid->object_count(); ++o)
    L.objects.push_back(ch.object(o / ng, cm.G().mul(c, o % ng)));
  for (int m = 0; m < ch.groupoid->morphism_count(); ++m)
    L.morphisms.push_back(ch.morphism(m / (nh * ng), cm.act(c, (m / ng) % nh), cm.G().mul(c, m % ng)));
  return L;
}

}  // namespace

Trivialization translate_trivialization(const Trivialization& t, Elem c) {
  Trivialization out = t;
  const auto L = chart_translation(t.chart, c);
  const auto Linv = chart_translation(t.chart, t.chart.cm->G().inv(c));
  out.phibar = compose_functors(t.phibar, L);
  out.phi = compose_functors(Linv, t.phi);
  out.taubar.from = compose_functors(out.phibar, out.phi);
  return out;
}

TrivializationReport check_trivialization(const Principal2Bundle& p, const Trivialization& t) {
  TrivializationReport r;
  r.phi = check_functor(t.phi);
  r.phibar = check_functor(t.phibar);
  r.taubar = check_natural(t.taubar);
  const auto round = compose_functors(t.phi, t.phibar);
  const auto id = identity_functor(t.chart.groupoid);
  ++r.retraction.checks;
  if (!(round == id)) {
    int bad = 0;
    while (bad < static_cast<int>(round.objects.size()) && round.objects[bad] == id.objects[bad]) ++bad;
    r.retraction.fail("Phi o Phibar is not the identity", {bad});
  }
  const CrossedModule& cm = *p.cm;
  const int ng = cm.G().order(), nh = cm.H().order();
  const auto& incl = t.restricted.inclusion;
  const auto& back = t.restricted.object_index;
  const auto& back_m = t.restricted.morphism_index;
  const Chart& ch = t.chart;
  auto chart_obj_act = [&](int o, Elem a) { return ch.object(o / ng, cm.G().mul(o % ng, a)); };
  auto chart_mor_act = [&](int m, int f) {
    Elem h = (m / ng) % nh, g = m % ng, hb = f / ng, gb = f % ng;
    return ch.morphism(m / (nh * ng), cm.H().mul(h, cm.act(g, hb)), cm.G().mul(g, gb));
  };
  auto& eq = r.equivariance;
  for (int x = 0; x < t.restricted.groupoid->object_count() && eq.ok; ++x)
    for (Elem a = 0; a < ng && eq.ok; ++a) {
      ++eq.checks;
      int xa = back[p.object_action(incl.objects[x], a)];
      if (t.phi.objects[xa] != chart_obj_act(t.phi.objects[x], a)) eq.fail("Phi not equivariant on objects", {x, a});
    }
  for (int m = 0; m < t.restricted.groupoid->morphism_count() && eq.ok; ++m)
    for (int f = 0; f < nh * ng && eq.ok; ++f) {
      ++eq.checks;
      int mf = back_m[p.morphism_action(incl.morphisms[m], f)];
      if (t.phi.morphisms[mf] != chart_mor_act(t.phi.morphisms[m], f))
        eq.fail("Phi not equivariant on morphisms", {m, f});
    }
  for (int x = 0; x < ch.groupoid->object_count() && eq.ok; ++x)
    for (Elem a = 0; a < ng && eq.ok; ++a) {
      ++eq.checks;
      int lhs = incl.objects[t.phibar.objects[chart_obj_act(x, a)]];
      int rhs = p.object_action(incl.objects[t.phibar.objects[x]], a);
      if (lhs != rhs) eq.fail("Phibar not equivariant on objects", {x, a});
    }
  for (int m = 0; m < ch.groupoid->morphism_count() && eq.ok; ++m)
    for (int f = 0; f < nh * ng && eq.ok; ++f) {
      ++eq.checks;
      int lhs = incl.morphisms[t.phibar.morphisms[chart_mor_act(m, f)]];
      int rhs = p.morphism_action(incl.morphisms[t.phibar.morphisms[m]], f);
      if (lhs != rhs) eq.fail("Phibar not equivariant on morphisms", {m, f});
    }
  return r;
}

namespace {

// P object of Phibar_v(sigma, g).
int phibar_object(const Trivialization& t, int sigma, Elem g) {
  int pos = t.chart.position(sigma);
  if (pos < 0) throw Error(ErrorKind::TrivializationInvalid, "simplex outside the chart", {sigma});
  return t.restricted.inclusion.objects[t.phibar.objects[t.chart.object(pos, g)]];
}

int taubar_at(const Trivialization& t, int object) {
  int x = t.restricted.object_index[object];
  if (x < 0) throw Error(ErrorKind::TrivializationInvalid, "object outside the chart", {object});
  return t.restricted.inclusion.morphisms[t.taubar.components[x]];
}

int phi_object(const Trivialization& t, int object) {
  int x = t.restricted.object_index[object];
  if (x < 0) throw Error(ErrorKind::TrivializationInvalid, "object outside the chart", {object});
  return t.phi.objects[x];
}

int phi_morphism(const Trivialization& t, int morphism) {
  int x = t.restricted.morphism_index[morphism];
  if (x < 0) throw Error(ErrorKind::TrivializationInvalid, "morphism outside the chart", {morphism});
  return t.phi.morphisms[x];
}

std::vector<int> simplices_containing(const SimplicialComplex& K, std::initializer_list<int> v) {
  std::uint64_t m = 0;
  for (int x : v) m |= std::uint64_t{1} << x;
  std::vector<int> out;
  for (std::size_t s = 0; s < K.simplices().size(); ++s)
    if ((vertex_mask(K.simplices()[s]) & m) == m) out.push_back(static_cast<int>(s));
  return out;
}

void check_family(const Principal2Bundle& p, const std::vector<Trivialization>& family) {
  if (static_cast<int>(family.size()) != p.base->vertex_count())
    throw Error(ErrorKind::TrivializationInvalid, "need one trivialization per vertex");
  for (std::size_t v = 0; v < family.size(); ++v) {
    if (family[v].vertex != static_cast<int>(v))
      throw Error(ErrorKind::TrivializationInvalid, "trivializations out of vertex order",
                  {static_cast<long long>(v)});
    auto rep = check_trivialization(p, family[v]);
    for (const CheckReport* c : {&rep.phi, &rep.phibar, &rep.taubar, &rep.retraction, &rep.equivariance})
      if (!c->ok)
        throw Error(ErrorKind::TrivializationInvalid,
                    "vertex " + std::to_string(v) + ": " + c->failure, c->witness);
  }
}

}  // namespace

Cocycle extract_cocycle(const Principal2Bundle& p, const std::vector<Trivialization>& family) {
  check_action_free_transitive(p);
  check_family(p, family);
  const SimplicialComplex& K = *p.base;
  const FiniteGroup& G = p.cm->G();
  const int ng = G.order(), nh = p.cm->H().order();
  const FiniteGroupoid& P = *p.groupoid;
  Cocycle z = trivial_cocycle(p.base, p.cm);

  for (std::size_t q = 0; q < K.pairs().size(); ++q) {
    auto [i, j] = K.pairs()[q];
    int value = -1;
    for (int s : simplices_containing(K, {i, j})) {
      Elem g = phi_object(family[i], phibar_object(family[j], s, G.identity())) % ng;
      if (value >= 0 && g != value)
        throw Error(ErrorKind::TrivializationInvalid, "g is not constant over the intersection",
                    {i, j, s});
      value = g;
    }
    z.g[q] = value;
  }
  for (std::size_t q = 0; q < K.triples().size(); ++q) {
    auto [i, j, k] = K.triples()[q];
    int value = -1;
    for (int s : simplices_containing(K, {i, j, k})) {
      int X = phibar_object(family[k], s, G.identity());
      int m1 = taubar_at(family[j], X);
      int m2 = taubar_at(family[i], P.source(m1));
      int m3 = taubar_at(family[i], X);
      int f = P.compose(P.inverse(m3), P.compose(m1, m2));
      Elem h = (phi_morphism(family[i], f) / ng) % nh;
      if (value >= 0 && h != value)
        throw Error(ErrorKind::TrivializationInvalid, "h is not constant over the intersection",
                    {i, j, k, s});
      value = h;
    }
    z.h[q] = value;
  }
  try {
    validate_cocycle(z);
  } catch (const Error& e) {
    throw Error(ErrorKind::TrivializationInvalid, std::string("extracted data: ") + e.what(),
                e.witness());
  }
  return z;
}

GroupoidFunctor coboundary_to_bundle_morphism(const BundleGroupoid& pz, const BundleGroupoid& pz2,
                                              const Coboundary& c) {
  validate_coboundary(c);
  if (!(apply_coboundary(pz.cocycle(), c) == pz2.cocycle()))
    throw Error(ErrorKind::InvalidInput, "target bundle is not built from the transformed cocycle");
  const CrossedModule& cm = pz.cm();
  const FiniteGroup& G = cm.G();
  const FiniteGroup& H = cm.H();
  GroupoidFunctor F{pz.groupoid(), pz2.groupoid(), {}, {}};
  for (int o = 0; o < pz.groupoid()->object_count(); ++o) {
    auto [i, s, g] = pz.object_data(o);
    F.objects.push_back(pz2.object(i, s, G.mul(G.inv(c.gamma[i]), g)));
  }
  for (int m = 0; m < pz.groupoid()->morphism_count(); ++m) {
    auto [i, j, s, h, g] = pz.morphism_data(m);
    Elem gi = G.inv(c.gamma[i]);
    F.morphisms.push_back(pz2.morphism(i, j, s, cm.act(gi, H.mul(c.eta_at(i, j), h)), G.mul(gi, g)));
  }
  return F;
}

bool is_equivariant(const GroupoidFunctor& F, const Principal2Bundle& a, const Principal2Bundle& b) {
  const int ng = static_cast<int>(a.object_action.cols());
  const int n2 = static_cast<int>(a.morphism_action.cols());
  for (int o = 0; o < F.domain->object_count(); ++o)
    for (int x = 0; x < ng; ++x)
      if (F.objects[a.object_action(o, x)] != b.object_action(F.objects[o], x)) return false;
  for (int m = 0; m < F.domain->morphism_count(); ++m)
    for (int f = 0; f < n2; ++f)
      if (F.morphisms[a.morphism_action(m, f)] != b.morphism_action(F.morphisms[m], f)) return false;
  return true;
}

GroupoidFunctor reconstruction_morphism(const Principal2Bundle& p,
                                        const std::vector<Trivialization>& family,
                                        const BundleGroupoid& pz) {
  const Cocycle& z = pz.cocycle();
  const FiniteGroup& G = p.cm->G();
  const int ng = G.order();
  GroupoidFunctor F{pz.groupoid(), p.groupoid, {}, {}};
  for (int o = 0; o < pz.groupoid()->object_count(); ++o) {
    auto [i, s, g] = pz.object_data(o);
    F.objects.push_back(phibar_object(family[i], s, g));
  }
  for (int m = 0; m < pz.groupoid()->morphism_count(); ++m) {
    auto [i, j, s, h, g] = pz.morphism_data(m);
    int base = taubar_at(family[i], phibar_object(family[j], s, G.inv(z.g_at(i, j))));
    F.morphisms.push_back(p.morphism_action(base, h * ng + g));
  }
  return F;
}

MoritaResult morita_equivalent(const BundleGroupoid& pz, const BundleGroupoid& pz2,
                               const SearchOptions& opt) {
  MoritaResult r;
  r.witness = are_cohomologous(pz.cocycle(), pz2.cocycle(), opt);
  r.equivalent = r.witness.has_value();
  if (r.equivalent) {
    r.left = identity_functor(pz.groupoid());
    r.right = coboundary_to_bundle_morphism(pz, pz2, *r.witness);
  }
  return r;
}

}  // namespace nacech
