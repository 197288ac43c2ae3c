#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>
#include <vector>

#include "nacech/error.hpp"

namespace nacech {

// Group elements are dense indices 0..n-1.
using Elem = int;
using IndexTable = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class FiniteGroup {
 public:
  int order() const { return static_cast<int>(inv_.size()); }
  Elem identity() const { return e_; }
  Elem mul(Elem a, Elem b) const { return mul_(a, b); }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem x) const { return mul_(mul_(g, x), inv_[g]); }
  const IndexTable& table() const { return mul_; }
  const std::vector<Elem>& inverses() const { return inv_; }
  const std::string& name() const { return name_; }

  bool is_abelian() const;
  bool is_trivial() const { return order() == 1; }
  int element_order(Elem a) const;
  // Greedy generating set: scan indices, keep anything not yet generated.
  std::vector<Elem> generators() const;
  // Closure of a subset under multiplication, sorted.
  std::vector<Elem> generated_by(const std::vector<Elem>& gens) const;
  std::vector<std::vector<Elem>> conjugacy_classes() const;
  bool is_central(Elem a) const;

  // Group equality is table identity.
  bool operator==(const FiniteGroup& o) const { return mul_ == o.mul_; }

 private:
  friend FiniteGroup validate_group(int, const IndexTable&, std::string);
  IndexTable mul_;
  std::vector<Elem> inv_;
  Elem e_ = 0;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Checks range, associativity, identity, inverses in that order.
FiniteGroup validate_group(int order, const IndexTable& mul, std::string name = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
// Permutations of {0..n-1} in lexicographic order; index 0 is the identity.
// Product is composition (p*q)(x) = p(q(x)).
FiniteGroup symmetric_group(int n);
// Elements indexed (a,b) -> a*|B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// Closed set of permutations, product p(q(x)); index order is as given.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& perms,
                                    std::string name = {});

// Brute-force isomorphism test for small orders (generator image search).
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> image;
  Elem operator()(Elem a) const { return image[a]; }
  bool is_injective() const;
  bool is_surjective() const;
};

GroupHom validate_hom(GroupPtr source, GroupPtr target, std::vector<Elem> image);

struct GroupAction {
  GroupPtr actor;
  GroupPtr space;
  IndexTable act;  // |actor| x |space|
  Elem operator()(Elem g, Elem h) const { return act(g, h); }
};

GroupAction validate_action(GroupPtr actor, GroupPtr space, IndexTable act);
GroupAction trivial_action(GroupPtr actor, GroupPtr space);
// G acting on itself by conjugation.
GroupAction conjugation_action(GroupPtr g);

class CrossedModule {
 public:
  const FiniteGroup& G() const { return *beta_.target; }
  const FiniteGroup& H() const { return *beta_.source; }
  const GroupPtr& G_ptr() const { return beta_.target; }
  const GroupPtr& H_ptr() const { return beta_.source; }
  Elem beta(Elem h) const { return beta_.image[h]; }
  Elem act(Elem g, Elem h) const { return alpha_.act(g, h); }
  const GroupHom& beta_hom() const { return beta_; }
  const GroupAction& alpha() const { return alpha_; }
  const std::string& name() const { return name_; }
  bool beta_surjective() const { return beta_.is_surjective(); }

 private:
  friend CrossedModule validate_crossed_module(GroupHom, GroupAction, std::string);
  GroupHom beta_;
  GroupAction alpha_;
  std::string name_;
};

using CrossedModulePtr = std::shared_ptr<const CrossedModule>;

CrossedModule validate_crossed_module(GroupHom beta, GroupAction alpha, std::string name = {});
CrossedModule validate_crossed_module(GroupPtr G, GroupPtr H, std::vector<Elem> beta,
                                      IndexTable alpha, std::string name = {});

// Pairs (h,g) indexed h*|G| + g.
FiniteGroup semidirect_product(const CrossedModule& cm);

struct QuotientGroup {
  GroupPtr group;          // K = G / beta(H)
  GroupHom projection;     // G -> K
  std::vector<Elem> rep;   // smallest G index in each coset
};

QuotientGroup quotient_by_image(const CrossedModule& cm);
// Quotient of G by a normal subgroup; cosets are ordered by their minimum.
QuotientGroup quotient_group(const GroupPtr& g, const std::vector<Elem>& normal_subgroup);

struct Subgroup {
  GroupPtr group;
  std::vector<Elem> inclusion;  // subgroup index -> ambient index
  std::vector<int> index_of;    // ambient index -> subgroup index or -1
  bool central = false;
};

Subgroup kernel_of_beta(const CrossedModule& cm);
Subgroup subgroup_from_elements(const FiniteGroup& ambient, const std::vector<Elem>& elems);

struct Automorphisms {
  GroupPtr group;
  GroupAction action;  // tautological action on H
  std::vector<std::vector<Elem>> maps;
};

inline constexpr int kAutomorphismOrderLimit = 24;

Automorphisms automorphism_group(const GroupPtr& h);

// Objects are G; morphism (h,g) has index h*|G| + g.
class Strict2Group {
 public:
  explicit Strict2Group(CrossedModulePtr cm);

  const CrossedModule& base() const { return *cm_; }
  const CrossedModulePtr& base_ptr() const { return cm_; }
  int object_count() const { return cm_->G().order(); }
  int morphism_count() const { return cm_->G().order() * cm_->H().order(); }
  int morphism(Elem h, Elem g) const { return h * cm_->G().order() + g; }
  Elem h_part(int m) const { return m / cm_->G().order(); }
  Elem g_part(int m) const { return m % cm_->G().order(); }

  Elem source(int m) const { return g_part(m); }
  Elem target(int m) const { return cm_->G().mul(cm_->beta(h_part(m)), g_part(m)); }
  int identity(Elem g) const { return morphism(cm_->H().identity(), g); }
  // second o first; requires target(first) == source(second).
  int compose(int second, int first) const;
  int tensor(int a, int b) const { return tensor_(a, b); }
  int tensor_objects(Elem a, Elem b) const { return cm_->G().mul(a, b); }
  int invert(int m) const;
  long long composable_pair_count() const;

 private:
  CrossedModulePtr cm_;
  IndexTable tensor_;
};

// Exhaustive category, group and interchange checks; throws AxiomFailure.
void verify_strict_2group(const Strict2Group& g2);

Strict2Group two_group_from_crossed_module(const CrossedModulePtr& cm);

}  // namespace nacech
