#include "nacech/gauge.hpp"

#include <algorithm>
#include <map>

namespace nacech {

namespace {

// Tensor inverse of (h, g): (g^-1 . h^-1, g^-1).
int tensor_inverse(const Strict2Group& two, int m) {
  const CrossedModule& cm = two.base();
  Elem gi = cm.G().inv(two.g_part(m));
  return two.morphism(cm.act(gi, cm.H().inv(two.h_part(m))), gi);
}

GroupoidPtr underlying_groupoid(const Strict2Group& two) {
  const int n = two.morphism_count(), no = two.object_count();
  std::vector<int> src(n), tgt(n), inv(n), id(no);
  for (int m = 0; m < n; ++m) {
    src[m] = two.source(m);
    tgt[m] = two.target(m);
    inv[m] = two.invert(m);
  }
  for (Elem g = 0; g < no; ++g) id[g] = two.identity(g);
  return std::make_shared<FiniteGroupoid>(no, src, tgt, id, inv,
                                          [&](int s, int f) { return two.compose(s, f); });
}

void charge(std::uint64_t& nodes, const SearchOptions& opt, const char* what) {
  if (++nodes > opt.budget)
    throw Error(ErrorKind::SearchSpaceTooLarge,
                std::string(what) + " exceeded budget of " + std::to_string(opt.budget) + " nodes");
}

}  // namespace

EndofunctorEnumeration equivariant_endofunctors_of_2group(const CrossedModulePtr& cm) {
  const Strict2Group two(cm);
  const int n = two.morphism_count(), ng = two.object_count();
  EndofunctorEnumeration out;
  // Equivariance forces F(m) = F(id_e) (x) m; keep the candidates that are functors.
  for (int m0 = 0; m0 < n; ++m0) {
    ++out.candidates;
    const Elem k = two.source(m0);
    bool ok = true;
    for (int m = 0; m < n && ok; ++m) {
      int fm = two.tensor(m0, m);
      if (two.source(fm) != cm->G().mul(k, two.source(m)) ||
          two.target(fm) != cm->G().mul(k, two.target(m)))
        ok = false;
    }
    for (Elem g = 0; g < ng && ok; ++g) ok = two.tensor(m0, two.identity(g)) == two.identity(cm->G().mul(k, g));
    for (int f = 0; f < n && ok; ++f)
      for (int s = 0; s < n && ok; ++s) {
        if (two.target(f) != two.source(s)) continue;
        ok = two.tensor(m0, two.compose(s, f)) == two.compose(two.tensor(m0, s), two.tensor(m0, f));
      }
    if (ok) out.functors.push_back(k);
  }
  // theta_g = theta_e (x) id_g, natural in g.
  for (Elem k : out.functors)
    for (Elem k2 : out.functors)
      for (Elem h = 0; h < cm->H().order(); ++h) {
        ++out.candidates;
        const int t0 = two.morphism(h, k);
        if (two.target(t0) != k2) continue;
        bool ok = true;
        for (int m = 0; m < n && ok; ++m) {
          const int fm = two.tensor(two.identity(k), m), f2m = two.tensor(two.identity(k2), m);
          const int ts = two.tensor(t0, two.identity(two.source(m)));
          const int tt = two.tensor(t0, two.identity(two.target(m)));
          ok = two.compose(f2m, ts) == two.compose(tt, fm);
        }
        if (ok) out.transformations.push_back({k, k2, t0});
      }
  return out;
}

std::vector<GaugeObject> gauge_objects(const BundleGroupoid& pz, const SearchOptions& opt) {
  const auto stab = stabilizer(pz.cocycle(), opt);
  std::vector<GaugeObject> out;
  for (const auto& c : stab) {
    GaugeObject g{c, coboundary_to_bundle_morphism(pz, pz, c)};
    if (!is_equivariant(g.functor, pz.bundle(), pz.bundle()))
      throw Error(ErrorKind::EquivarianceFailure, "gauge functor is not equivariant");
    auto w = is_weak_equivalence(g.functor);
    if (!w.ok()) throw Error(ErrorKind::InvalidInput, "gauge functor: " + w.detail, w.witness);
    for (int o = 0; o < pz.groupoid()->object_count(); ++o)
      if (pz.bundle().object_point[g.functor.objects[o]] != pz.bundle().object_point[o])
        throw Error(ErrorKind::InvalidInput, "gauge functor moves a fiber", {o});
    out.push_back(std::move(g));
  }
  // Realization is a homomorphism: F_c o F_c' = F_{compose(c', c)}.
  std::map<Coboundary, int> where;
  for (std::size_t i = 0; i < out.size(); ++i) where[out[i].coboundary] = static_cast<int>(i);
  for (const auto& a : out)
    for (const auto& b : out) {
      auto it = where.find(compose_coboundaries(b.coboundary, a.coboundary));
      if (it == where.end())
        throw Error(ErrorKind::InvalidInput, "stabilizer is not closed under composition");
      if (!(compose_functors(a.functor, b.functor) == out[it->second].functor))
        throw Error(ErrorKind::InvalidInput, "realization is not a homomorphism");
    }
  return out;
}

std::uint64_t ad_equivariant_functor_count(const BundleGroupoid& pz, const SearchOptions& opt) {
  const Cocycle& z = pz.cocycle();
  const SimplicialComplex& K = pz.base();
  const CrossedModule& cm = pz.cm();
  const FiniteGroup& G = cm.G();
  const FiniteGroup& H = cm.H();
  const Strict2Group two(z.cm);
  const GroupoidPtr ad = underlying_groupoid(two);
  const int n = K.vertex_count(), ng = G.order();
  const FiniteGroupoid& P = *pz.groupoid();

  std::vector<std::vector<Elem>> fiber(ng);
  for (Elem h = 0; h < H.order(); ++h) fiber[cm.beta(h)].push_back(h);
  std::vector<int> offdiag;
  for (std::size_t q = 0; q < K.pairs().size(); ++q)
    if (K.pairs()[q][0] != K.pairs()[q][1]) offdiag.push_back(static_cast<int>(q));

  std::vector<Elem> x(n, G.identity());
  std::vector<Elem> y(K.pairs().size(), H.identity());
  std::uint64_t nodes = 0, count = 0;

  auto conj = [&](int f, int m) { return two.tensor(two.tensor(tensor_inverse(two, m), f), m); };
  auto finish = [&] {
    GroupoidFunctor F{pz.groupoid(), ad, std::vector<int>(P.object_count()),
                      std::vector<int>(P.morphism_count())};
    for (int o = 0; o < P.object_count(); ++o) {
      auto d = pz.object_data(o);
      F.objects[o] = G.mul(G.mul(G.inv(d.g), x[d.i]), d.g);
    }
    for (int m = 0; m < P.morphism_count(); ++m) {
      auto d = pz.morphism_data(m);
      const int base = two.morphism(y[K.pair_index(d.i, d.j)], x[d.i]);
      F.morphisms[m] = conj(base, two.morphism(d.h, d.g));
    }
    if (!check_functor(F).ok) return;
    for (int m = 0; m < P.morphism_count(); ++m)
      for (int f = 0; f < two.morphism_count(); ++f)
        if (F.morphisms[pz.act_morphism(m, f)] != conj(F.morphisms[m], f))
          throw Error(ErrorKind::EquivarianceFailure, "extended functor is not equivariant", {m, f});
    ++count;
  };
  auto pairs = [&](auto&& self, std::size_t s) -> void {
    if (s == offdiag.size()) return finish();
    auto [i, j] = K.pairs()[offdiag[s]];
    Elem gij = z.g[offdiag[s]];
    Elem want = G.mul(G.mul(G.mul(gij, x[j]), G.inv(gij)), G.inv(x[i]));
    for (Elem h : fiber[want]) {
      charge(nodes, opt, "ad-equivariant functor search");
      y[offdiag[s]] = h;
      self(self, s + 1);
    }
  };
  auto vertices = [&](auto&& self, int v) -> void {
    if (v == n) return pairs(pairs, 0);
    for (Elem g = 0; g < ng; ++g) {
      charge(nodes, opt, "ad-equivariant functor search");
      x[v] = g;
      self(self, v + 1);
    }
  };
  vertices(vertices, 0);
  return count;
}

std::vector<Elem> GaugeCrossedModule::tuple(Elem a) const {
  std::vector<Elem> out(vertices);
  for (int v = vertices; v-- > 0;) {
    out[v] = a % h_order;
    a /= h_order;
  }
  return out;
}

Elem GaugeCrossedModule::index(const std::vector<Elem>& values) const {
  Elem a = 0;
  for (Elem x : values) a = a * h_order + x;
  return a;
}

GaugeCrossedModule gauge_crossed_module(const Cocycle& z, const SearchOptions& opt) {
  validate_cocycle(z);
  const SimplicialComplex& K = *z.complex;
  const CrossedModule& cm = *z.cm;
  const FiniteGroup& G = cm.G();
  const FiniteGroup& H = cm.H();
  const int n = K.vertex_count(), nh = H.order();
  long long hs = 1;
  for (int v = 0; v < n; ++v)
    if ((hs *= nh) > kGaugeTupleLimit)
      throw Error(ErrorKind::TooLarge, "|H|^V exceeds " + std::to_string(kGaugeTupleLimit));

  GaugeCrossedModule out;
  out.vertices = n;
  out.h_order = nh;
  out.gauge = stabilizer(z, opt);
  const int ns = static_cast<int>(out.gauge.size());
  std::map<Coboundary, int> where;
  for (int i = 0; i < ns; ++i) where[out.gauge[i]] = i;
  IndexTable gmul(ns, ns);
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b) gmul(a, b) = where.at(compose_coboundaries(out.gauge[b], out.gauge[a]));
  auto Gstar = std::make_shared<const FiniteGroup>(validate_group(ns, gmul, "gauge"));

  const int nt = static_cast<int>(hs);
  auto decode = [&](int a) { return out.tuple(a); };
  auto encode = [&](const std::vector<Elem>& t) { return out.index(t); };
  IndexTable hmul(nt, nt);
  for (int a = 0; a < nt; ++a)
    for (int b = 0; b < nt; ++b) {
      auto ta = decode(a), tb = decode(b);
      for (int v = 0; v < n; ++v) ta[v] = H.mul(ta[v], tb[v]);
      hmul(a, b) = encode(ta);
    }
  auto Hstar = std::make_shared<const FiniteGroup>(validate_group(nt, hmul, "tuples"));

  IndexTable alpha(ns, nt);
  for (int c = 0; c < ns; ++c)
    for (int a = 0; a < nt; ++a) {
      auto t = decode(a);
      for (int v = 0; v < n; ++v) t[v] = cm.act(G.inv(out.gauge[c].gamma[v]), t[v]);
      alpha(c, a) = encode(t);
    }

  auto betastar = [&](bool left) -> std::optional<std::vector<Elem>> {
    std::vector<Elem> beta(nt);
    for (int a = 0; a < nt; ++a) {
      auto t = decode(a);
      Coboundary c = identity_coboundary(z.complex, z.cm);
      for (int v = 0; v < n; ++v) c.gamma[v] = left ? G.inv(cm.beta(t[v])) : cm.beta(t[v]);
      for (std::size_t q = 0; q < K.pairs().size(); ++q) {
        auto [i, j] = K.pairs()[q];
        Elem gij = z.g[q];
        c.eta[q] = left ? H.mul(H.inv(t[i]), cm.act(gij, t[j]))
                        : H.mul(t[i], cm.act(gij, H.inv(t[j])));
      }
      auto it = where.find(c);
      if (it == where.end()) return std::nullopt;
      beta[a] = it->second;
    }
    return beta;
  };

  std::string failures;
  for (bool left : {true, false}) {
    auto beta = betastar(left);
    if (!beta) {
      failures += left ? "left: image leaves the stabilizer; " : "right: image leaves the stabilizer";
      continue;
    }
    try {
      out.cm = std::make_shared<const CrossedModule>(
          validate_crossed_module(Gstar, Hstar, *beta, alpha, "gauge"));
    } catch (const Error& e) {
      failures += std::string(left ? "left: " : "right: ") + e.what() + (left ? "; " : "");
      continue;
    }
    out.left_convention = left;
    break;
  }
  if (!out.cm) throw Error(ErrorKind::ConventionMismatch, failures);

  std::vector<char> image(ns, 0);
  int image_size = 0, kernel_size = 0;
  for (int a = 0; a < nt; ++a) {
    Elem b = out.cm->beta(a);
    if (!image[b]) ++image_size;
    image[b] = 1;
    kernel_size += b == Gstar->identity();
  }
  out.pi0_order = ns / image_size;
  out.pi1_order = kernel_size;
  return out;
}

}  // namespace nacech
