#pragma once

#include <array>
#include <vector>

#include "nacech/bundle.hpp"

namespace nacech {

// Strictly right-equivariant endofunctors of the 2-group and the
// equivariant natural transformations between them.
struct EndofunctorEnumeration {
  std::vector<Elem> functors;  // F is left translation by this object
  // (source functor, target functor, component at e as a 2-group morphism)
  std::vector<std::array<int, 3>> transformations;
  std::uint64_t candidates = 0;  // candidate data checked exhaustively
};

EndofunctorEnumeration equivariant_endofunctors_of_2group(const CrossedModulePtr& cm);

struct GaugeObject {
  Coboundary coboundary;
  GroupoidFunctor functor;  // P_z -> P_z
};

// Throws SearchSpaceTooLarge.
std::vector<GaugeObject> gauge_objects(const BundleGroupoid& pz, const SearchOptions& opt = {});

// Equivariant functors P_z -> G_Ad that are constant over each chart, found by
// direct search over (x_i, y_ij). Throws SearchSpaceTooLarge.
std::uint64_t ad_equivariant_functor_count(const BundleGroupoid& pz, const SearchOptions& opt = {});

inline constexpr int kGaugeTupleLimit = 1024;

struct GaugeCrossedModule {
  std::vector<Coboundary> gauge;  // Gstar element index -> coboundary
  CrossedModulePtr cm;            // Hstar -> Gstar
  int vertices = 0;
  int h_order = 1;
  bool left_convention = true;
  int pi0_order = 0;
  int pi1_order = 0;

  std::vector<Elem> tuple(Elem a) const;  // Hstar index -> per-vertex H values
  Elem index(const std::vector<Elem>& values) const;
};

// Throws ConventionMismatch, TooLarge, SearchSpaceTooLarge.
GaugeCrossedModule gauge_crossed_module(const Cocycle& z, const SearchOptions& opt = {});

}  // namespace nacech
