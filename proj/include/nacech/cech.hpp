#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nacech/algebra.hpp"
#include "nacech/complexes.hpp"

namespace nacech {

// g is indexed by complex->pairs(), h by complex->triples().
struct Cocycle {
  ComplexPtr complex;
  CrossedModulePtr cm;
  std::vector<Elem> g;
  std::vector<Elem> h;

  Elem g_at(int i, int j) const { return g[complex->pair_index(i, j)]; }
  Elem h_at(int i, int j, int k) const { return h[complex->triple_index(i, j, k)]; }
  // Concatenated (g, h) vector; classes are compared on this.
  std::vector<Elem> encoding() const;
  bool operator==(const Cocycle& o) const { return g == o.g && h == o.h; }
};

// gamma per vertex, eta indexed by complex->pairs().
struct Coboundary {
  ComplexPtr complex;
  CrossedModulePtr cm;
  std::vector<Elem> gamma;
  std::vector<Elem> eta;

  Elem eta_at(int i, int j) const { return eta[complex->pair_index(i, j)]; }
  bool operator==(const Coboundary& o) const { return gamma == o.gamma && eta == o.eta; }
  bool operator<(const Coboundary& o) const {
    return gamma != o.gamma ? gamma < o.gamma : eta < o.eta;
  }
};

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // visited partial assignments plus orbit steps
  int workers = 1;
};

// Structural equality; shared pointers compare equal without a scan.
bool same_complex(const ComplexPtr& a, const ComplexPtr& b);
bool same_crossed_module(const CrossedModulePtr& a, const CrossedModulePtr& b);

Cocycle trivial_cocycle(const ComplexPtr& k, const CrossedModulePtr& cm);
// Throws MissingEntry, NormalizationFailure, Cocyc1Failure, Cocyc2Failure.
const Cocycle& validate_cocycle(const Cocycle& z);
bool is_cocycle(const Cocycle& z);

Coboundary identity_coboundary(const ComplexPtr& k, const CrossedModulePtr& cm);
void validate_coboundary(const Coboundary& c);

// Raw formula evaluation, no validation of the result.
Cocycle apply_coboundary_unchecked(const Cocycle& z, const Coboundary& c);
// Validates the result; a failure is ResultNotCocycle.
Cocycle apply_coboundary(const Cocycle& z, const Coboundary& c);
Coboundary compose_coboundaries(const Coboundary& c, const Coboundary& c2);
Coboundary inverse_coboundary(const Coboundary& c);

std::optional<Coboundary> are_cohomologous(const Cocycle& z, const Cocycle& z2,
                                           const SearchOptions& opt = {});
std::vector<Coboundary> stabilizer(const Cocycle& z, const SearchOptions& opt = {});

enum class Strategy { Brute, Abelian };

struct Classification {
  std::vector<Cocycle> representatives;  // sorted by encoding
  std::size_t class_count = 0;
  std::uint64_t cocycles_examined = 0;  // gauge-fixed cocycles (brute) or |Z^2| (abelian)
  std::uint64_t nodes = 0;
  double log10_estimate = 0;  // naive search-space estimate
};

Classification classify(const ComplexPtr& k, const CrossedModulePtr& cm, Strategy strategy,
                        const SearchOptions& opt = {});

// Naive estimate |G|^(#distinct pairs) * |ker beta|^(#triples), log10.
double naive_search_estimate(const SimplicialComplex& k, const CrossedModule& cm);

// Every valid cocycle, by brute force over the full coboundary orbits of the
// class representatives. Intended for small instances.
std::vector<Cocycle> enumerate_cocycles(const ComplexPtr& k, const CrossedModulePtr& cm,
                                        const SearchOptions& opt = {});

// Ordinary 1-cocycles: k_ii = e, k_ij k_jk = k_ik.
struct OneCocycle {
  ComplexPtr complex;
  GroupPtr group;
  std::vector<Elem> k;  // indexed by complex->pairs()

  Elem at(int i, int j) const { return k[complex->pair_index(i, j)]; }
  bool operator==(const OneCocycle& o) const { return k == o.k; }
};

OneCocycle trivial_one_cocycle(const ComplexPtr& c, const GroupPtr& g);
// Throws NotA1Cocycle.
const OneCocycle& validate_one_cocycle(const OneCocycle& k);
// gamma with k2_ij = gamma_i^-1 k_ij gamma_j.
std::optional<std::vector<Elem>> are_cohomologous_1(const OneCocycle& a, const OneCocycle& b);
std::vector<OneCocycle> enumerate_one_cocycles(const ComplexPtr& c, const GroupPtr& g,
                                               const SearchOptions& opt = {});
// One representative per class, smallest k vector first.
std::vector<OneCocycle> classify_one_cocycles(const ComplexPtr& c, const GroupPtr& g,
                                              const SearchOptions& opt = {});

// Cyclic decomposition of a finite abelian group.
struct AbelianDecomposition {
  std::vector<int> moduli;               // invariant factors > 1
  std::vector<std::vector<int>> coords;  // element -> coordinates
  Elem element(const std::vector<int>& c) const;
  bool standard_cyclic = false;  // element index is its own coordinate

  std::vector<int> strides;
  std::vector<Elem> lookup;
};

AbelianDecomposition decompose_abelian(const FiniteGroup& a);

}  // namespace nacech
