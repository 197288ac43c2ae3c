#include <algorithm>

#include "nacech/bundle.hpp"

namespace nacech {

OneCocycle band(const Cocycle& z) {
  validate_cocycle(z);
  const QuotientGroup q = quotient_by_image(*z.cm);
  OneCocycle k{z.complex, q.group, {}};
  for (Elem g : z.g) k.k.push_back(q.projection(g));
  validate_one_cocycle(k);
  return k;
}

std::vector<Elem> beta_section(const CrossedModule& cm) {
  std::vector<Elem> s(cm.G().order(), -1);
  for (Elem h = cm.H().order(); h-- > 0;) s[cm.beta(h)] = h;
  s[cm.G().identity()] = cm.H().identity();
  return s;
}

namespace {

Subgroup central_kernel(const CrossedModule& cm) {
  if (!cm.beta_surjective()) throw Error(ErrorKind::BetaNotSurjective, "beta is not onto G");
  Subgroup k = kernel_of_beta(cm);
  for (Elem a : k.inclusion)
    if (!cm.H().is_central(a))
      throw Error(ErrorKind::KernelNotCentral, "ker beta is not central in H", {a});
  return k;
}

// Coordinate vectors over the nondegenerate ordered triples, one per factor.
std::vector<std::vector<int>> factor_vectors(const SimplicialComplex& k,
                                             const OrderedCochainComplex& cc,
                                             const AbelianDecomposition& dec,
                                             const std::vector<Elem>& values) {
  std::vector<std::vector<int>> out(dec.moduli.size(), std::vector<int>(cc.basis[2].size()));
  for (std::size_t r = 0; r < cc.basis[2].size(); ++r) {
    const auto& t = cc.basis[2][r];
    Elem x = values[k.triple_index(t[0], t[1], t[2])];
    for (std::size_t f = 0; f < dec.moduli.size(); ++f) out[f][r] = dec.coords[x][f];
  }
  return out;
}

IntMatrix<std::int64_t> reduce(const IntMatrix<std::int64_t>& m, int n) {
  IntMatrix<std::int64_t> r = m;
  for (Eigen::Index i = 0; i < r.size(); ++i) r.data()[i] = ((r.data()[i] % n) + n) % n;
  return r;
}

}  // namespace

CentralReduction central_reduction(const Cocycle& z) {
  validate_cocycle(z);
  const CrossedModule& cm = *z.cm;
  CentralReduction out{identity_coboundary(z.complex, z.cm), z, {}, central_kernel(cm), false};
  const auto s = beta_section(cm);
  for (std::size_t q = 0; q < z.g.size(); ++q) out.coboundary.eta[q] = cm.H().inv(s[z.g[q]]);
  out.reduced = apply_coboundary(z, out.coboundary);
  for (Elem h : out.reduced.h) {
    int a = out.kernel.index_of[h];
    if (a < 0) throw Error(ErrorKind::InvalidInput, "reduced h leaves ker beta", {h});
    out.a.push_back(a);
  }
  out.class_vanishes = abelian_class_vanishes(*z.complex, *out.kernel.group, out.a);
  return out;
}

bool is_abelian_2_cocycle(const SimplicialComplex& k, const FiniteGroup& a,
                          const std::vector<Elem>& values) {
  if (values.size() != k.triples().size()) return false;
  for (const auto& q : k.quadruples()) {
    auto v = [&](int x, int y, int z) { return values[k.triple_index(q[x], q[y], q[z])]; };
    if (a.mul(v(0, 2, 3), v(0, 1, 2)) != a.mul(v(0, 1, 3), v(1, 2, 3))) return false;
  }
  return true;
}

bool abelian_class_vanishes(const SimplicialComplex& k, const FiniteGroup& a,
                            const std::vector<Elem>& values) {
  if (!is_abelian_2_cocycle(k, a, values))
    throw Error(ErrorKind::InvalidInput, "values are not a 2-cocycle");
  const auto dec = decompose_abelian(a);
  const auto cc = ordered_cochain_complex(k, 2);
  const auto vecs = factor_vectors(k, cc, dec, values);
  const int n1 = static_cast<int>(cc.basis[1].size());
  const int n2 = static_cast<int>(cc.basis[2].size());
  for (std::size_t f = 0; f < dec.moduli.size(); ++f) {
    const int n = dec.moduli[f];
    const auto d = reduce(cc.delta[1], n);
    std::vector<std::vector<int>> cols(n1, std::vector<int>(n2));
    for (int c = 0; c < n1; ++c)
      for (int r = 0; r < n2; ++r) cols[c][r] = static_cast<int>(d(r, c));
    if (!ModSubgroup(n, n2, cols).contains(vecs[f])) return false;
  }
  return true;
}

LiftingResult lifting_obstruction(const OneCocycle& g, const CrossedModulePtr& cmp) {
  validate_one_cocycle(g);
  const CrossedModule& cm = *cmp;
  if (!(*g.group == cm.G())) throw Error(ErrorKind::InvalidInput, "1-cocycle is not G-valued");
  const SimplicialComplex& K = *g.complex;
  const FiniteGroup& H = cm.H();
  LiftingResult r{central_kernel(cm), beta_section(cm), {}, false, false, std::nullopt};
  const auto& s = r.section;
  for (const auto& t : K.triples()) {
    Elem x = H.mul(H.mul(s[g.at(t[0], t[1])], s[g.at(t[1], t[2])]), H.inv(s[g.at(t[0], t[2])]));
    r.obstruction.push_back(r.kernel.index_of[x]);
  }
  const FiniteGroup& A = *r.kernel.group;
  r.class_vanishes = abelian_class_vanishes(K, A, r.obstruction);

  // delta b = -a per cyclic factor, b over ordered pairs i != j.
  const auto dec = decompose_abelian(A);
  const auto cc = ordered_cochain_complex(K, 2);
  const auto vecs = factor_vectors(K, cc, dec, r.obstruction);
  std::vector<std::vector<int>> b(dec.moduli.size());
  r.lift_exists = true;
  for (std::size_t f = 0; f < dec.moduli.size() && r.lift_exists; ++f) {
    const int n = dec.moduli[f];
    std::vector<int> rhs(vecs[f].size());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = (n - vecs[f][i]) % n;
    auto sol = solve_mod(cc.delta[1], rhs, n);
    if (sol) b[f] = std::move(*sol);
    else r.lift_exists = false;
  }
  if (r.lift_exists) {
    OneCocycle lift{g.complex, cm.H_ptr(), std::vector<Elem>(K.pairs().size(), H.identity())};
    for (std::size_t q = 0; q < K.pairs().size(); ++q) {
      auto [i, j] = K.pairs()[q];
      if (i == j) continue;
      std::vector<int> c(dec.moduli.size());
      int row = cc.index_of({i, j});
      for (std::size_t f = 0; f < c.size(); ++f) c[f] = b[f][row];
      Elem bij = dec.moduli.empty() ? A.identity() : dec.element(c);
      lift.k[q] = H.mul(s[g.k[q]], r.kernel.inclusion[bij]);
    }
    validate_one_cocycle(lift);
    for (std::size_t q = 0; q < lift.k.size(); ++q)
      if (cm.beta(lift.k[q]) != g.k[q])
        throw Error(ErrorKind::InvalidInput, "lift does not cover g", {static_cast<long long>(q)});
    r.lift = std::move(lift);
  }
  return r;
}

std::optional<OneCocycle> search_lift(const OneCocycle& g, const CrossedModulePtr& cmp,
                                      const SearchOptions& opt) {
  validate_one_cocycle(g);
  const CrossedModule& cm = *cmp;
  const FiniteGroup& H = cm.H();
  const SimplicialComplex& K = *g.complex;
  std::vector<std::vector<Elem>> fiber(cm.G().order());
  for (Elem h = 0; h < H.order(); ++h) fiber[cm.beta(h)].push_back(h);

  // Off-diagonal pairs in lex order; each triple is checked once its last pair is set.
  std::vector<int> order;
  for (std::size_t q = 0; q < K.pairs().size(); ++q)
    if (K.pairs()[q][0] != K.pairs()[q][1]) order.push_back(static_cast<int>(q));
  std::vector<int> step_of(K.pairs().size(), -1);
  for (std::size_t s = 0; s < order.size(); ++s) step_of[order[s]] = static_cast<int>(s);
  std::vector<std::vector<std::array<int, 3>>> checks(order.size());
  for (const auto& t : K.triples()) {
    int p[3] = {K.pair_index(t[0], t[1]), K.pair_index(t[1], t[2]), K.pair_index(t[0], t[2])};
    int last = -1;
    for (int x : p) last = std::max(last, step_of[x]);
    if (last >= 0) checks[last].push_back({p[0], p[1], p[2]});
  }

  OneCocycle cur{g.complex, cm.H_ptr(), std::vector<Elem>(K.pairs().size(), H.identity())};
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t step) -> bool {
    if (step == order.size()) return true;
    const int q = order[step];
    for (Elem h : fiber[g.k[q]]) {
      if (++nodes > opt.budget)
        throw Error(ErrorKind::SearchSpaceTooLarge,
                    "lift search exceeded budget of " + std::to_string(opt.budget) + " nodes");
      cur.k[q] = h;
      bool ok = true;
      for (const auto& c : checks[step])
        if (H.mul(cur.k[c[0]], cur.k[c[1]]) != cur.k[c[2]]) {
          ok = false;
          break;
        }
      if (ok && self(self, step + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  validate_one_cocycle(cur);
  return cur;
}

BundleQuotient quotient_by_structure_group(const BundleGroupoid& p) {
  const auto& b = p.bundle();
  const FiniteGroup& G = p.cm().G();
  const int ng = G.order();
  const int no = p.groupoid()->object_count(), nm = p.groupoid()->morphism_count();
  std::vector<int> oact(static_cast<std::size_t>(no) * ng), mact(static_cast<std::size_t>(nm) * ng);
  for (int o = 0; o < no; ++o)
    for (Elem a = 0; a < ng; ++a) oact[o * ng + a] = b.object_action(o, a);
  const Elem e = p.cm().H().identity();
  for (int m = 0; m < nm; ++m)
    for (Elem a = 0; a < ng; ++a) mact[m * ng + a] = b.morphism_action(m, e * ng + a);
  BundleQuotient out{quotient_by_free_action(p.groupoid(), ng, oact, mact), {}, {}};
  for (int o : out.quotient.object_rep) {
    auto d = p.object_data(o);
    out.object_flags.emplace_back(d.i, d.sigma);
  }
  for (int m : out.quotient.morphism_rep) {
    auto d = p.morphism_data(m);
    out.morphism_labels.push_back({d.i, d.j, d.sigma, d.h});
  }
  return out;
}

}  // namespace nacech
