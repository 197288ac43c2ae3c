#include <algorithm>
#include <set>

#include "internal.hpp"

namespace nacech {

Elem AbelianDecomposition::element(const std::vector<int>& c) const {
  int idx = 0;
  for (std::size_t t = 0; t < moduli.size(); ++t) {
    int x = c[t] % moduli[t];
    idx += (x < 0 ? x + moduli[t] : x) * strides[t];
  }
  return lookup[idx];
}

AbelianDecomposition decompose_abelian(const FiniteGroup& a) {
  if (!a.is_abelian()) throw Error(ErrorKind::InvalidInput, "group is not abelian");
  const int n = a.order();
  AbelianDecomposition d;
  bool standard = n > 1;
  for (int x = 0; x < n && standard; ++x)
    for (int y = 0; y < n && standard; ++y) standard = a.mul(x, y) == (x + y) % n;
  d.coords.assign(n, {});
  if (standard) {
    d.standard_cyclic = true;
    d.moduli = {n};
    for (int x = 0; x < n; ++x) d.coords[x] = {x};
  } else if (n > 1) {
    // A = Z^n / rows(R); x -> xV carries rows(R) onto rows(D).
    IntMatrix<std::int64_t> R = IntMatrix<std::int64_t>::Zero(n * n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        R(x * n + y, x) += 1;
        R(x * n + y, y) += 1;
        R(x * n + y, a.mul(x, y)) -= 1;
      }
    const auto f = smith_normal_form<std::int64_t>(R, false, true);
    if (f.rank() != n) throw Error(ErrorKind::InvalidInput, "relation lattice has wrong rank");
    std::vector<int> cols;
    for (int i = 0; i < n; ++i)
      if (f.diagonal[i] > 1) {
        cols.push_back(i);
        d.moduli.push_back(static_cast<int>(f.diagonal[i]));
      }
    for (int x = 0; x < n; ++x)
      for (std::size_t t = 0; t < cols.size(); ++t) {
        long long v = f.V(x, cols[t]) % d.moduli[t];
        d.coords[x].push_back(static_cast<int>(v < 0 ? v + d.moduli[t] : v));
      }
  }
  int total = 1;
  d.strides.assign(d.moduli.size(), 1);
  for (std::size_t t = d.moduli.size(); t-- > 0;) {
    d.strides[t] = total;
    total *= d.moduli[t];
  }
  if (total != n) throw Error(ErrorKind::InvalidInput, "cyclic decomposition has wrong order");
  d.lookup.assign(total, -1);
  for (int x = 0; x < n; ++x) {
    int idx = 0;
    for (std::size_t t = 0; t < d.moduli.size(); ++t) idx += d.coords[x][t] * d.strides[t];
    if (d.lookup[idx] >= 0) throw Error(ErrorKind::InvalidInput, "decomposition is not injective");
    d.lookup[idx] = x;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<int> s(d.moduli.size());
      for (std::size_t t = 0; t < s.size(); ++t) s[t] = d.coords[x][t] + d.coords[y][t];
      if (d.element(s) != a.mul(x, y))
        throw Error(ErrorKind::InvalidInput, "decomposition is not a homomorphism", {x, y});
    }
  return d;
}

namespace detail {

Classification classify_abelian(const ComplexPtr& kp, const CrossedModulePtr& cmp) {
  const SimplicialComplex& K = *kp;
  const FiniteGroup& A = cmp->H();
  const AbelianDecomposition dec = decompose_abelian(A);
  const auto cc = ordered_cochain_complex(K, 3);
  const int n1 = static_cast<int>(cc.basis[1].size());
  const int n2 = static_cast<int>(cc.basis[2].size());

  // Per cyclic factor: canonical coset representatives of Z^2 / B^2.
  std::vector<std::vector<std::vector<int>>> reps(dec.moduli.size());
  std::uint64_t cocycle_total = 1;
  for (std::size_t t = 0; t < dec.moduli.size(); ++t) {
    const int n = dec.moduli[t];
    std::vector<std::vector<int>> cols(n1, std::vector<int>(n2));
    for (int c = 0; c < n1; ++c)
      for (int r = 0; r < n2; ++r) cols[c][r] = static_cast<int>(cc.delta[1](r, c) % n);
    const ModSubgroup B(n, n2, cols);
    const auto zgens = kernel_mod(cc.delta[2], n);
    const ModSubgroup Z(n, n2, zgens);
    std::set<std::vector<int>> seen{std::vector<int>(n2, 0)};
    std::vector<std::vector<int>> queue{std::vector<int>(n2, 0)};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& z : zgens) {
        std::vector<int> v(queue[q]);
        for (int r = 0; r < n2; ++r) v[r] += z[r];
        v = B.canonical(std::move(v));
        if (seen.insert(v).second) queue.push_back(v);
      }
    if (Z.size() % B.size() != 0 || Z.size() / B.size() != seen.size())
      throw Error(ErrorKind::InvalidInput, "coset enumeration disagrees with subgroup orders");
    cocycle_total *= Z.size();
    reps[t].assign(seen.begin(), seen.end());
  }

  Classification out;
  std::vector<std::size_t> pick(dec.moduli.size(), 0);
  while (true) {
    Cocycle z = trivial_cocycle(kp, cmp);
    for (std::size_t tr = 0; tr < K.triples().size(); ++tr) {
      const auto& t = K.triples()[tr];
      if (t[0] == t[1] || t[1] == t[2]) continue;
      int r = cc.index_of({t[0], t[1], t[2]});
      std::vector<int> c(dec.moduli.size());
      for (std::size_t f = 0; f < c.size(); ++f) c[f] = reps[f][pick[f]][r];
      z.h[tr] = dec.element(c);
    }
    validate_cocycle(z);
    out.representatives.push_back(std::move(z));
    std::size_t f = 0;
    while (f < pick.size() && ++pick[f] == reps[f].size()) pick[f++] = 0;
    if (f == pick.size()) break;
  }
  std::sort(out.representatives.begin(), out.representatives.end(),
            [](const Cocycle& a, const Cocycle& b) { return a.encoding() < b.encoding(); });
  out.class_count = out.representatives.size();
  out.cocycles_examined = cocycle_total;
  out.log10_estimate = naive_search_estimate(K, *cmp);
  return out;
}

}  // namespace detail

}  // namespace nacech
