#include "nacech/cech.hpp"

namespace nacech {

namespace {

std::string tuple_text(std::initializer_list<int> t) {
  std::string s = "(";
  for (int v : t) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + ")";
}

void require_same_base(const Cocycle& z, const Coboundary& c) {
  if (!same_complex(z.complex, c.complex) || !same_crossed_module(z.cm, c.cm))
    throw Error(ErrorKind::InvalidInput, "cocycle and coboundary live over different data");
}

}  // namespace

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
  if (a == b) return true;
  return a && b && a->vertex_count() == b->vertex_count() && a->simplices() == b->simplices();
}

bool same_crossed_module(const CrossedModulePtr& a, const CrossedModulePtr& b) {
  if (a == b) return true;
  return a && b && a->G() == b->G() && a->H() == b->H() && a->beta_hom().image == b->beta_hom().image &&
         a->alpha().act == b->alpha().act;
}

std::vector<Elem> Cocycle::encoding() const {
  std::vector<Elem> v(g);
  v.insert(v.end(), h.begin(), h.end());
  return v;
}

Cocycle trivial_cocycle(const ComplexPtr& k, const CrossedModulePtr& cm) {
  return Cocycle{k, cm, std::vector<Elem>(k->pairs().size(), cm->G().identity()),
                 std::vector<Elem>(k->triples().size(), cm->H().identity())};
}

const Cocycle& validate_cocycle(const Cocycle& z) {
  const SimplicialComplex& K = *z.complex;
  const CrossedModule& cm = *z.cm;
  const FiniteGroup& G = cm.G();
  const FiniteGroup& H = cm.H();
  if (z.g.size() != K.pairs().size()) {
    auto p = K.pairs()[std::min(z.g.size(), K.pairs().size() - 1)];
    throw Error(ErrorKind::MissingEntry, "g missing at " + tuple_text({p[0], p[1]}), {p[0], p[1]});
  }
  if (z.h.size() != K.triples().size()) {
    auto t = K.triples()[std::min(z.h.size(), K.triples().size() - 1)];
    throw Error(ErrorKind::MissingEntry, "h missing at " + tuple_text({t[0], t[1], t[2]}),
                {t[0], t[1], t[2]});
  }
  for (std::size_t p = 0; p < z.g.size(); ++p)
    if (z.g[p] < 0 || z.g[p] >= G.order())
      throw Error(ErrorKind::IndexOutOfRange, "g value out of range",
                  {K.pairs()[p][0], K.pairs()[p][1]});
  for (std::size_t t = 0; t < z.h.size(); ++t)
    if (z.h[t] < 0 || z.h[t] >= H.order())
      throw Error(ErrorKind::IndexOutOfRange, "h value out of range",
                  {K.triples()[t][0], K.triples()[t][1], K.triples()[t][2]});

  for (std::size_t p = 0; p < z.g.size(); ++p) {
    auto [i, j] = K.pairs()[p];
    if (i == j && z.g[p] != G.identity())
      throw Error(ErrorKind::NormalizationFailure, "g" + tuple_text({i, i}) + " != e", {i, i});
  }
  for (std::size_t t = 0; t < z.h.size(); ++t) {
    auto [i, j, k] = K.triples()[t];
    if ((i == j || j == k) && z.h[t] != H.identity())
      throw Error(ErrorKind::NormalizationFailure, "h" + tuple_text({i, j, k}) + " != e", {i, j, k});
  }
  for (std::size_t t = 0; t < z.h.size(); ++t) {
    auto [i, j, k] = K.triples()[t];
    if (G.mul(G.mul(cm.beta(z.h[t]), z.g_at(i, j)), z.g_at(j, k)) != z.g_at(i, k))
      throw Error(ErrorKind::Cocyc1Failure, "at " + tuple_text({i, j, k}), {i, j, k});
  }
  for (const auto& q : K.quadruples()) {
    auto [i, j, k, l] = q;
    Elem lhs = H.mul(z.h_at(i, k, l), z.h_at(i, j, k));
    Elem rhs = H.mul(z.h_at(i, j, l), cm.act(z.g_at(i, j), z.h_at(j, k, l)));
    if (lhs != rhs)
      throw Error(ErrorKind::Cocyc2Failure, "at " + tuple_text({i, j, k, l}), {i, j, k, l});
  }
  return z;
}

bool is_cocycle(const Cocycle& z) {
  try {
    validate_cocycle(z);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Coboundary identity_coboundary(const ComplexPtr& k, const CrossedModulePtr& cm) {
  return Coboundary{k, cm, std::vector<Elem>(k->vertex_count(), cm->G().identity()),
                    std::vector<Elem>(k->pairs().size(), cm->H().identity())};
}

void validate_coboundary(const Coboundary& c) {
  const SimplicialComplex& K = *c.complex;
  if (static_cast<int>(c.gamma.size()) != K.vertex_count() || c.eta.size() != K.pairs().size())
    throw Error(ErrorKind::MissingEntry, "coboundary data has wrong length");
  for (int v = 0; v < K.vertex_count(); ++v)
    if (c.gamma[v] < 0 || c.gamma[v] >= c.cm->G().order())
      throw Error(ErrorKind::IndexOutOfRange, "gamma value out of range", {v});
  for (std::size_t p = 0; p < c.eta.size(); ++p) {
    auto [i, j] = K.pairs()[p];
    if (c.eta[p] < 0 || c.eta[p] >= c.cm->H().order())
      throw Error(ErrorKind::IndexOutOfRange, "eta value out of range", {i, j});
    if (i == j && c.eta[p] != c.cm->H().identity())
      throw Error(ErrorKind::NormalizationFailure, "eta" + tuple_text({i, i}) + " != e", {i, i});
  }
}

Cocycle apply_coboundary_unchecked(const Cocycle& z, const Coboundary& c) {
  const SimplicialComplex& K = *z.complex;
  const CrossedModule& cm = *z.cm;
  const FiniteGroup& G = cm.G();
  const FiniteGroup& H = cm.H();
  Cocycle out{z.complex, z.cm, z.g, z.h};
  for (std::size_t p = 0; p < z.g.size(); ++p) {
    auto [i, j] = K.pairs()[p];
    out.g[p] = G.mul(G.mul(G.inv(c.gamma[i]), cm.beta(c.eta[p])), G.mul(z.g[p], c.gamma[j]));
  }
  for (std::size_t t = 0; t < z.h.size(); ++t) {
    auto [i, j, k] = K.triples()[t];
    Elem x = H.mul(c.eta_at(i, k), z.h[t]);
    x = H.mul(x, H.inv(cm.act(z.g_at(i, j), c.eta_at(j, k))));
    x = H.mul(x, H.inv(c.eta_at(i, j)));
    out.h[t] = cm.act(G.inv(c.gamma[i]), x);
  }
  return out;
}

Cocycle apply_coboundary(const Cocycle& z, const Coboundary& c) {
  require_same_base(z, c);
  validate_coboundary(c);
  Cocycle out = apply_coboundary_unchecked(z, c);
  try {
    validate_cocycle(out);
  } catch (const Error& e) {
    throw Error(ErrorKind::ResultNotCocycle, e.what(), e.witness());
  }
  return out;
}

Coboundary compose_coboundaries(const Coboundary& c, const Coboundary& c2) {
  if (!same_complex(c.complex, c2.complex) || !same_crossed_module(c.cm, c2.cm))
    throw Error(ErrorKind::InvalidInput, "coboundaries live over different data");
  const SimplicialComplex& K = *c.complex;
  const CrossedModule& cm = *c.cm;
  Coboundary out{c.complex, c.cm, c.gamma, c.eta};
  for (std::size_t v = 0; v < c.gamma.size(); ++v) out.gamma[v] = cm.G().mul(c.gamma[v], c2.gamma[v]);
  for (std::size_t p = 0; p < c.eta.size(); ++p) {
    int i = K.pairs()[p][0];
    out.eta[p] = cm.H().mul(cm.act(c.gamma[i], c2.eta[p]), c.eta[p]);
  }
  return out;
}

Coboundary inverse_coboundary(const Coboundary& c) {
  const SimplicialComplex& K = *c.complex;
  const CrossedModule& cm = *c.cm;
  Coboundary out{c.complex, c.cm, c.gamma, c.eta};
  for (std::size_t v = 0; v < c.gamma.size(); ++v) out.gamma[v] = cm.G().inv(c.gamma[v]);
  for (std::size_t p = 0; p < c.eta.size(); ++p) {
    int i = K.pairs()[p][0];
    out.eta[p] = cm.act(cm.G().inv(c.gamma[i]), cm.H().inv(c.eta[p]));
  }
  return out;
}

}  // namespace nacech
