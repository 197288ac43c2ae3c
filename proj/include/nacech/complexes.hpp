#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nacech/smith.hpp"

namespace nacech {

class SimplicialComplex {
 public:
  static constexpr int kMaxVertices = 64;

  int vertex_count() const { return n_; }
  int dimension() const;
  const std::string& name() const { return name_; }
  // All simplices as sorted vertex lists, ordered by dimension then lexicographically.
  const std::vector<std::vector<int>>& simplices() const { return simplices_; }
  const std::vector<std::vector<int>>& maximal_simplices() const { return maximal_; }
  int simplex_count(int dim) const;
  bool is_simplex(std::uint64_t mask) const { return index_.count(mask) != 0; }
  int simplex_index(std::uint64_t mask) const;
  template <class It>
  bool spans_simplex(It first, It last) const {
    std::uint64_t m = 0;
    for (; first != last; ++first) m |= std::uint64_t{1} << *first;
    return is_simplex(m);
  }

  // Valid ordered tuples, lexicographic.
  const std::vector<std::array<int, 2>>& pairs() const { return pairs_; }
  const std::vector<std::array<int, 3>>& triples() const { return triples_; }
  const std::vector<std::array<int, 4>>& quadruples() const { return quads_; }
  int pair_index(int i, int j) const { return pair_idx_[i * n_ + j]; }
  int triple_index(int i, int j, int k) const { return triple_idx_[(i * n_ + j) * n_ + k]; }

  std::vector<std::vector<int>> star(int vertex) const;  // simplices containing vertex
  int connected_components() const;

 private:
  friend SimplicialComplex build_complex(const std::vector<std::vector<int>>&, int, std::string);
  int n_ = 0;
  std::string name_;
  std::vector<std::vector<int>> simplices_, maximal_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::array<int, 2>> pairs_;
  std::vector<std::array<int, 3>> triples_;
  std::vector<std::array<int, 4>> quads_;
  std::vector<int> pair_idx_, triple_idx_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline std::uint64_t vertex_mask(const std::vector<int>& v) {
  std::uint64_t m = 0;
  for (int x : v) m |= std::uint64_t{1} << x;
  return m;
}

// vertex_count < 0 means max index + 1.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& maximal_simplices,
                                int vertex_count = -1, std::string name = {});

SimplicialComplex point();
SimplicialComplex full_simplex(int n);
SimplicialComplex simplex_boundary(int n);
SimplicialComplex circle();
SimplicialComplex torus_7();
SimplicialComplex rp2_6();
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

struct OrderedTuple {
  std::vector<int> indices;
  std::vector<int> support;
};

std::vector<OrderedTuple> valid_tuples(const SimplicialComplex& k, int arity);

// Ordered normalized cochains: basis in degree d is the valid (d+1)-tuples
// with no adjacent repeat; faces with an adjacent repeat contribute zero.
struct OrderedCochainComplex {
  std::vector<std::vector<std::vector<int>>> basis;  // degrees 0..top
  std::vector<IntMatrix<std::int64_t>> delta;        // delta[d]: C^d -> C^{d+1}
  int index_of(const std::vector<int>& tuple) const;

  std::vector<std::unordered_map<std::uint64_t, int>> lookup;
};

OrderedCochainComplex ordered_cochain_complex(const SimplicialComplex& k, int top_degree);

std::uint64_t abelian_cohomology_oracle(const SimplicialComplex& k, int n, int degree);

// Subgroup of (Z/n)^N in echelon form; canonical() returns the
// lexicographically least element of the coset v + S.
class ModSubgroup {
 public:
  ModSubgroup(int n, int length, const std::vector<std::vector<int>>& generators);
  std::vector<int> canonical(std::vector<int> v) const;
  bool contains(const std::vector<int>& v) const;
  // log base n is not integral in general; the size is returned exactly when it fits.
  std::uint64_t size() const;
  int modulus() const { return n_; }
  int length() const { return len_; }

 private:
  struct Row {
    int pos;
    int g;  // gcd(entry, n)
    int s;  // s * entry == g mod n
    std::vector<int> w;
  };
  int n_, len_;
  std::vector<Row> rows_;
};

// Generators of {x : M x = 0 mod n}.
std::vector<std::vector<int>> kernel_mod(const IntMatrix<std::int64_t>& m, int n);
// Some x with M x = c mod n, if any.
std::optional<std::vector<int>> solve_mod(const IntMatrix<std::int64_t>& m,
                                          const std::vector<int>& c, int n);

}  // namespace nacech
