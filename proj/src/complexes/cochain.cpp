#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "nacech/complexes.hpp"

namespace nacech {

namespace {

std::uint64_t tuple_key(const std::vector<int>& t) {
  std::uint64_t k = t.size();
  for (int v : t) k = k * 64 + static_cast<std::uint64_t>(v);
  return k;
}

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// s with s*a = gcd(a, n) mod n.
std::pair<int, int> gcd_multiplier(int a, int n) {
  long long r0 = n, r1 = mod(a, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return {static_cast<int>(r0), mod(s0, n)};
}

}  // namespace

int OrderedCochainComplex::index_of(const std::vector<int>& t) const {
  const std::size_t d = t.size() - 1;
  if (t.empty() || d >= lookup.size()) return -1;
  auto it = lookup[d].find(tuple_key(t));
  return it == lookup[d].end() ? -1 : it->second;
}

OrderedCochainComplex ordered_cochain_complex(const SimplicialComplex& k, int top) {
  OrderedCochainComplex cc;
  cc.basis.resize(top + 1);
  cc.lookup.resize(top + 1);
  const int n = k.vertex_count();
  for (int d = 0; d <= top; ++d) {
    std::vector<int> cur;
    auto dfs = [&](auto&& self, std::uint64_t mask) -> void {
      if (static_cast<int>(cur.size()) == d + 1) {
        cc.lookup[d][tuple_key(cur)] = static_cast<int>(cc.basis[d].size());
        cc.basis[d].push_back(cur);
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (!cur.empty() && cur.back() == v) continue;
        std::uint64_t m = mask | std::uint64_t{1} << v;
        if (!k.is_simplex(m)) continue;
        cur.push_back(v);
        self(self, m);
        cur.pop_back();
      }
    };
    dfs(dfs, 0);
  }
  for (int d = 0; d < top; ++d) {
    IntMatrix<std::int64_t> m =
        IntMatrix<std::int64_t>::Zero(static_cast<Eigen::Index>(cc.basis[d + 1].size()),
                                      static_cast<Eigen::Index>(cc.basis[d].size()));
    for (std::size_t r = 0; r < cc.basis[d + 1].size(); ++r) {
      const auto& t = cc.basis[d + 1][r];
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<int> face;
        for (std::size_t j = 0; j < t.size(); ++j)
          if (j != i) face.push_back(t[j]);
        int c = cc.index_of(face);
        if (c < 0) continue;  // adjacent repeat: normalized cochains vanish there
        m(static_cast<Eigen::Index>(r), c) += (i % 2 == 0) ? 1 : -1;
      }
    }
    cc.delta.push_back(std::move(m));
  }
  return cc;
}

std::uint64_t abelian_cohomology_oracle(const SimplicialComplex& k, int n, int degree) {
  if (degree < 0 || degree > 2) throw Error(ErrorKind::InvalidInput, "degree must be 0, 1 or 2");
  if (n < 2) throw Error(ErrorKind::InvalidInput, "modulus must be at least 2");
  using boost::multiprecision::cpp_int;
  auto cc = ordered_cochain_complex(k, degree + 1);
  const auto out = smith_normal_form<std::int64_t>(cc.delta[degree]);
  // |ker delta^k| = n^(N - r) * prod gcd(d_i, n)
  cpp_int ker = 1;
  const int dim = static_cast<int>(cc.basis[degree].size());
  for (int i = 0; i < dim - out.rank(); ++i) ker *= n;
  for (auto d : out.diagonal) ker *= std::gcd<long long, long long>(d, n);
  cpp_int im = 1;
  if (degree > 0) {
    const auto in = smith_normal_form<std::int64_t>(cc.delta[degree - 1]);
    for (auto d : in.diagonal) im *= n / std::gcd<long long, long long>(d, n);
  }
  if (ker % im != 0) throw Error(ErrorKind::InvalidInput, "image not contained in kernel");
  cpp_int h = ker / im;
  if (h > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorKind::Overflow, "cohomology cardinality exceeds 64 bits");
  return static_cast<std::uint64_t>(h);
}

ModSubgroup::ModSubgroup(int n, int length, const std::vector<std::vector<int>>& generators)
    : n_(n), len_(length) {
  std::vector<std::vector<int>> w;
  for (const auto& g : generators) {
    std::vector<int> v(length);
    bool nz = false;
    for (int p = 0; p < length; ++p) nz |= (v[p] = mod(g[p], n)) != 0;
    if (nz) w.push_back(std::move(v));
  }
  for (int p = 0; p < length && !w.empty(); ++p) {
    // Combine all entries at p into a single row w* with ideal gcd(entries, n).
    std::vector<int> star;
    for (const auto& v : w) {
      if (v[p] == 0) continue;
      if (star.empty()) {
        star = v;
        continue;
      }
      // Bezout on the two entries keeps everything else in the span.
      long long a = star[p], b = v[p], x0 = 1, x1 = 0, y0 = 0, y1 = 1;
      while (b != 0) {
        long long q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
      }
      for (int q = 0; q < length; ++q) star[q] = mod(x0 * star[q] + y0 * v[q], n);
    }
    if (star.empty()) continue;
    auto [g, s] = gcd_multiplier(star[p], n);
    std::vector<std::vector<int>> next;
    for (const auto& v : w) {
      std::vector<int> r(v);
      if (r[p] != 0) {
        long long c = static_cast<long long>(r[p] / g) * s % n;
        for (int q = 0; q < length; ++q) r[q] = mod(r[q] - c * star[q], n);
      }
      if (std::any_of(r.begin(), r.end(), [](int x) { return x != 0; })) next.push_back(std::move(r));
    }
    std::vector<int> ann(length);
    for (int q = 0; q < length; ++q) ann[q] = mod(static_cast<long long>(n / g) * star[q], n);
    if (std::any_of(ann.begin(), ann.end(), [](int x) { return x != 0; })) next.push_back(ann);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rows_.push_back(Row{p, g, s, std::move(star)});
    w = std::move(next);
  }
}

std::vector<int> ModSubgroup::canonical(std::vector<int> v) const {
  for (int& x : v) x = mod(x, n_);
  for (const auto& r : rows_) {
    int target = v[r.pos] % r.g;
    if (v[r.pos] == target) continue;
    long long c = static_cast<long long>((v[r.pos] - target) / r.g) * r.s % n_;
    for (int q = 0; q < len_; ++q) v[q] = mod(v[q] - c * r.w[q], n_);
  }
  return v;
}

bool ModSubgroup::contains(const std::vector<int>& v) const {
  auto c = canonical(v);
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

std::uint64_t ModSubgroup::size() const {
  boost::multiprecision::cpp_int s = 1;
  for (const auto& r : rows_) s *= n_ / r.g;
  if (s > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorKind::Overflow, "subgroup size exceeds 64 bits");
  return static_cast<std::uint64_t>(s);
}

std::vector<std::vector<int>> kernel_mod(const IntMatrix<std::int64_t>& m, int n) {
  const auto f = smith_normal_form<std::int64_t>(m, false, true);
  const Eigen::Index cols = m.cols();
  std::vector<std::vector<int>> gens;
  for (Eigen::Index i = 0; i < cols; ++i) {
    long long scale = 1;
    if (i < f.rank()) scale = n / std::gcd<long long, long long>(f.diagonal[i], n);
    if (scale == n) continue;
    std::vector<int> x(cols);
    for (Eigen::Index r = 0; r < cols; ++r) x[r] = mod(mod(f.V(r, i), n) * scale, n);
    gens.push_back(std::move(x));
  }
  return gens;
}

std::optional<std::vector<int>> solve_mod(const IntMatrix<std::int64_t>& m,
                                          const std::vector<int>& c, int n) {
  const auto f = smith_normal_form<std::int64_t>(m, true, true);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<long long> uc(rows, 0);
  for (Eigen::Index i = 0; i < rows; ++i) {
    long long acc = 0;
    for (Eigen::Index j = 0; j < rows; ++j) acc = (acc + mod(f.U(i, j), n) * static_cast<long long>(mod(c[j], n))) % n;
    uc[i] = acc;
  }
  std::vector<long long> y(cols, 0);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (i < f.rank()) {
      auto [g, s] = gcd_multiplier(mod(f.diagonal[i], n), n);
      if (uc[i] % g != 0) return std::nullopt;
      y[i] = (uc[i] / g) * s % n;
    } else if (uc[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<int> x(cols);
  for (Eigen::Index r = 0; r < cols; ++r) {
    long long acc = 0;
    for (Eigen::Index i = 0; i < cols; ++i) acc = (acc + mod(f.V(r, i), n) * y[i]) % n;
    x[r] = static_cast<int>(acc);
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    long long acc = 0;
    for (Eigen::Index j = 0; j < cols; ++j) acc += mod(m(i, j), n) * static_cast<long long>(x[j]);
    if (mod(acc, n) != mod(c[i], n))
      throw Error(ErrorKind::InvalidInput, "modular solve failed verification", {i});
  }
  return x;
}

}  // namespace nacech
