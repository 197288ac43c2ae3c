#include <algorithm>
#include <bit>
#include <numeric>

#include "nacech/complexes.hpp"

namespace nacech {

namespace {

std::vector<int> mask_vertices(std::uint64_t m) {
  std::vector<int> v;
  while (m) {
    v.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return v;
}

template <std::size_t A>
std::vector<std::array<int, A>> tuples_of(const SimplicialComplex& k) {
  std::vector<std::array<int, A>> out;
  for (const auto& s : k.simplices()) {
    if (s.size() > A) continue;
    const std::uint64_t want = vertex_mask(s);
    const int b = static_cast<int>(s.size());
    std::array<int, A> digits{};
    while (true) {
      std::array<int, A> t;
      std::uint64_t m = 0;
      for (std::size_t p = 0; p < A; ++p) {
        t[p] = s[digits[p]];
        m |= std::uint64_t{1} << t[p];
      }
      if (m == want) out.push_back(t);
      std::size_t p = A;
      while (p > 0 && ++digits[p - 1] == b) digits[--p] = 0;
      if (p == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicialComplex build_complex(const std::vector<std::vector<int>>& maximal, int vertex_count,
                                std::string name) {
  if (maximal.empty()) throw Error(ErrorKind::EmptyInput, "no simplices given");
  int top = -1;
  for (std::size_t s = 0; s < maximal.size(); ++s) {
    if (maximal[s].empty())
      throw Error(ErrorKind::EmptyInput, "empty simplex", {static_cast<long long>(s)});
    for (int v : maximal[s]) {
      if (v < 0 || v >= SimplicialComplex::kMaxVertices || (vertex_count >= 0 && v >= vertex_count))
        throw Error(ErrorKind::IndexOutOfRange, "vertex index out of range", {v});
      top = std::max(top, v);
    }
    if (maximal[s].size() > 20) throw Error(ErrorKind::TooLarge, "simplex dimension above 19");
  }
  SimplicialComplex k;
  k.n_ = vertex_count >= 0 ? vertex_count : top + 1;
  k.name_ = std::move(name);

  std::vector<std::uint64_t> masks;
  for (const auto& s : maximal) {
    std::vector<int> vs(s);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const std::uint64_t full = std::uint64_t{1} << vs.size();
    for (std::uint64_t sub = 1; sub < full; ++sub) {
      std::uint64_t m = 0;
      for (std::size_t b = 0; b < vs.size(); ++b)
        if (sub >> b & 1) m |= std::uint64_t{1} << vs[b];
      masks.push_back(m);
    }
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (auto m : masks) k.simplices_.push_back(mask_vertices(m));
  std::sort(k.simplices_.begin(), k.simplices_.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (std::size_t i = 0; i < k.simplices_.size(); ++i)
    k.index_[vertex_mask(k.simplices_[i])] = static_cast<int>(i);
  for (int v = 0; v < k.n_; ++v)
    if (!k.is_simplex(std::uint64_t{1} << v))
      throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " lies in no simplex", {v});

  for (const auto& s : k.simplices_) {
    const std::uint64_t m = vertex_mask(s);
    bool is_max = true;
    for (int v = 0; v < k.n_ && is_max; ++v)
      if (!(m >> v & 1) && k.is_simplex(m | std::uint64_t{1} << v)) is_max = false;
    if (is_max) k.maximal_.push_back(s);
  }
  std::sort(k.maximal_.begin(), k.maximal_.end());

  k.pairs_ = tuples_of<2>(k);
  k.triples_ = tuples_of<3>(k);
  k.quads_ = tuples_of<4>(k);
  const int n = k.n_;
  k.pair_idx_.assign(static_cast<std::size_t>(n) * n, -1);
  k.triple_idx_.assign(static_cast<std::size_t>(n) * n * n, -1);
  for (std::size_t p = 0; p < k.pairs_.size(); ++p)
    k.pair_idx_[k.pairs_[p][0] * n + k.pairs_[p][1]] = static_cast<int>(p);
  for (std::size_t p = 0; p < k.triples_.size(); ++p) {
    const auto& t = k.triples_[p];
    k.triple_idx_[(t[0] * n + t[1]) * n + t[2]] = static_cast<int>(p);
  }
  return k;
}

int SimplicialComplex::dimension() const {
  return static_cast<int>(simplices_.back().size()) - 1;
}

int SimplicialComplex::simplex_count(int dim) const {
  return static_cast<int>(std::count_if(simplices_.begin(), simplices_.end(), [&](const auto& s) {
    return static_cast<int>(s.size()) == dim + 1;
  }));
}

int SimplicialComplex::simplex_index(std::uint64_t mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::vector<int>> SimplicialComplex::star(int vertex) const {
  std::vector<std::vector<int>> out;
  for (const auto& s : simplices_)
    if (std::binary_search(s.begin(), s.end(), vertex)) out.push_back(s);
  return out;
}

int SimplicialComplex::connected_components() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : pairs_) parent[find(p[0])] = find(p[1]);
  int c = 0;
  for (int v = 0; v < n_; ++v) c += find(v) == v;
  return c;
}

SimplicialComplex point() { return build_complex({{0}}, -1, "point"); }

SimplicialComplex full_simplex(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative simplex dimension");
  std::vector<int> s(n + 1);
  std::iota(s.begin(), s.end(), 0);
  return build_complex({s}, -1, "simplex" + std::to_string(n));
}

SimplicialComplex simplex_boundary(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "boundary needs dimension at least 1");
  std::vector<std::vector<int>> faces;
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != drop) f.push_back(v);
    faces.push_back(f);
  }
  return build_complex(faces, -1, "boundary" + std::to_string(n));
}

SimplicialComplex circle() {
  auto k = simplex_boundary(2);
  return build_complex(k.maximal_simplices(), -1, "circle");
}

SimplicialComplex torus_7() {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return build_complex(f, -1, "torus7");
}

SimplicialComplex rp2_6() {
  const std::vector<std::vector<int>> f = {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                           {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
  return build_complex(f, -1, "rp26");
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto f = a.maximal_simplices();
  for (auto s : b.maximal_simplices()) {
    for (int& v : s) v += a.vertex_count();
    f.push_back(s);
  }
  return build_complex(f, a.vertex_count() + b.vertex_count(), a.name() + "+" + b.name());
}

std::vector<OrderedTuple> valid_tuples(const SimplicialComplex& k, int arity) {
  std::vector<OrderedTuple> out;
  auto emit = [&](const auto& list) {
    for (const auto& t : list) {
      OrderedTuple o;
      o.indices.assign(t.begin(), t.end());
      o.support = o.indices;
      std::sort(o.support.begin(), o.support.end());
      o.support.erase(std::unique(o.support.begin(), o.support.end()), o.support.end());
      out.push_back(std::move(o));
    }
  };
  switch (arity) {
    case 2: emit(k.pairs()); break;
    case 3: emit(k.triples()); break;
    case 4: emit(k.quadruples()); break;
    default: throw Error(ErrorKind::InvalidInput, "arity must be 2, 3 or 4", {arity});
  }
  return out;
}

}  // namespace nacech
