#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nacech/cech.hpp"
#include "nacech/groupoid.hpp"

namespace nacech {

// A finite groupoid over K with a strict right action of the 2-group of cm.
// object_action is objects x |G|; morphism_action is morphisms x |H||G| with
// the 2-group morphism (h,g) at column h*|G| + g.
struct Principal2Bundle {
  ComplexPtr base;
  CrossedModulePtr cm;
  GroupoidPtr groupoid;
  std::vector<int> object_point;  // simplex index under each object
  IndexTable object_action;
  IndexTable morphism_action;
};

// Checks strict functoriality of P x G -> P. Returns the first failure.
CheckReport check_action_functor(const Principal2Bundle& p);
// Free on objects and on morphisms, and transitive on the isomorphism
// classes of each fiber. Throws ActionNotFreeTransitive.
void check_action_free_transitive(const Principal2Bundle& p);

// The bundle groupoid P_z. Objects (i, sigma, g) and morphisms
// (i, j, sigma, h, g) with i, j in sigma.
class BundleGroupoid {
 public:
  explicit BundleGroupoid(Cocycle z);

  struct ObjectData {
    int i, sigma;
    Elem g;
  };
  struct MorphismData {
    int i, j, sigma;
    Elem h, g;
  };

  const Cocycle& cocycle() const { return z_; }
  const SimplicialComplex& base() const { return *z_.complex; }
  const CrossedModule& cm() const { return *z_.cm; }
  const GroupoidPtr& groupoid() const { return bundle_.groupoid; }
  const Principal2Bundle& bundle() const { return bundle_; }

  int flag_count() const { return static_cast<int>(flags_.size()); }
  int flag(int i, int sigma) const;  // -1 if i not in sigma
  std::pair<int, int> flag_data(int f) const { return flags_[f]; }
  int object(int i, int sigma, Elem g) const;
  int morphism(int i, int j, int sigma, Elem h, Elem g) const;
  ObjectData object_data(int o) const;
  MorphismData morphism_data(int m) const;

  int act_object(int o, Elem g) const { return bundle_.object_action(o, g); }
  int act_morphism(int m, int two_morphism) const { return bundle_.morphism_action(m, two_morphism); }

 private:
  Cocycle z_;
  std::vector<std::pair<int, int>> flags_;  // (vertex, simplex), simplex-major
  std::vector<int> flag_index_;             // sigma * n + i
  std::vector<std::array<int, 3>> pair_flags_;
  std::vector<int> pair_flag_index_;        // (sigma * n + i) * n + j
  Principal2Bundle bundle_;
};

BundleGroupoid build_total_groupoid(const Cocycle& z);

// The chart star(i) x G: objects (sigma, g), morphisms (sigma, h, g).
struct Chart {
  int vertex;
  CrossedModulePtr cm;
  std::vector<int> simplices;  // simplex indices containing the vertex
  GroupoidPtr groupoid;
  int object(int pos, Elem g) const { return pos * cm->G().order() + g; }
  int morphism(int pos, Elem h, Elem g) const {
    return (pos * cm->H().order() + h) * cm->G().order() + g;
  }
  int position(int sigma) const;  // -1 if sigma not in the star
};

Chart make_chart(const ComplexPtr& k, const CrossedModulePtr& cm, int vertex);

// Phi : P|star(i) -> chart, Phibar : chart -> P|star(i), and
// taubar : Phibar o Phi => id on P|star(i).
struct Trivialization {
  int vertex;
  Chart chart;
  Subgroupoid restricted;
  GroupoidFunctor phi;
  GroupoidFunctor phibar;
  NaturalTransformation taubar;
};

Trivialization trivialization(const BundleGroupoid& p, int vertex);
std::vector<Trivialization> canonical_trivializations(const BundleGroupoid& p);
// Replaces Phibar by Phibar o L_c and Phi by L_c^-1 o Phi, where L_c is left
// translation by c on the chart.
Trivialization translate_trivialization(const Trivialization& t, Elem c);

struct TrivializationReport {
  CheckReport phi, phibar, taubar, retraction, equivariance;
  bool ok() const { return phi.ok && phibar.ok && taubar.ok && retraction.ok && equivariance.ok; }
};

TrivializationReport check_trivialization(const Principal2Bundle& p, const Trivialization& t);

// Reads z(P) off a family of trivializations. Throws ActionNotFreeTransitive,
// TrivializationInvalid.
Cocycle extract_cocycle(const Principal2Bundle& p, const std::vector<Trivialization>& family);

// Phi' : P_z -> P_z' for z' = apply_coboundary(z, c).
GroupoidFunctor coboundary_to_bundle_morphism(const BundleGroupoid& pz, const BundleGroupoid& pz2,
                                              const Coboundary& c);
// True when F commutes with the 2-group actions on both sides.
bool is_equivariant(const GroupoidFunctor& f, const Principal2Bundle& a, const Principal2Bundle& b);

// P_{z(P)} -> P for the extracted cocycle of the family.
GroupoidFunctor reconstruction_morphism(const Principal2Bundle& p,
                                        const std::vector<Trivialization>& family,
                                        const BundleGroupoid& pz);

struct MoritaResult {
  bool equivalent = false;
  std::optional<Coboundary> witness;
  // Span P_z <- P_z -> P_z' with the identity on the left.
  std::optional<GroupoidFunctor> left, right;
};

MoritaResult morita_equivalent(const BundleGroupoid& pz, const BundleGroupoid& pz2,
                               const SearchOptions& opt = {});

OneCocycle band(const Cocycle& z);

// Section of beta with s(e) = e: least H index in each fiber.
std::vector<Elem> beta_section(const CrossedModule& cm);

struct CentralReduction {
  Coboundary coboundary;     // gamma = e, eta_ij = s(g_ij)^-1
  Cocycle reduced;           // g' = e, h' in ker beta
  std::vector<Elem> a;       // h' as ker beta indices, by triple
  Subgroup kernel;
  bool class_vanishes = false;
};

// Throws BetaNotSurjective, KernelNotCentral.
CentralReduction central_reduction(const Cocycle& z);

// Checks h'_ikl + h'_ijk = h'_ijl + h'_jkl for an A-valued 2-cochain given by triple.
bool is_abelian_2_cocycle(const SimplicialComplex& k, const FiniteGroup& a,
                          const std::vector<Elem>& values);
// Whether an A-valued normalized 2-cocycle (indexed by K.triples()) is a coboundary.
bool abelian_class_vanishes(const SimplicialComplex& k, const FiniteGroup& a,
                            const std::vector<Elem>& values);

struct LiftingResult {
  Subgroup kernel;
  std::vector<Elem> section;
  std::vector<Elem> obstruction;      // a_ijk as ker beta indices, by triple
  bool class_vanishes = false;        // class of a in H^2(K; A)
  bool lift_exists = false;           // linear system verdict
  std::optional<OneCocycle> lift;     // H-valued 1-cocycle with beta o lift = g
};

// Throws NotA1Cocycle, BetaNotSurjective, KernelNotCentral.
LiftingResult lifting_obstruction(const OneCocycle& g, const CrossedModulePtr& cm);
// Exhaustive search for an H-valued lift; small complexes only.
std::optional<OneCocycle> search_lift(const OneCocycle& g, const CrossedModulePtr& cm,
                                      const SearchOptions& opt = {});

struct BundleQuotient {
  GroupoidQuotient quotient;
  std::vector<std::pair<int, int>> object_flags;      // quotient object -> (i, sigma)
  std::vector<std::array<int, 4>> morphism_labels;    // (i, j, sigma, h)
};

// P_z / G. Throws ActionNotFree.
BundleQuotient quotient_by_structure_group(const BundleGroupoid& p);

}  // namespace nacech
