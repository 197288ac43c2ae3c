#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "nacech/error.hpp"

namespace nacech {

// Finite groupoid as tables. Composition is stored densely: for each
// morphism f, the composites g o f for g leaving target(f), in out-list order.
class FiniteGroupoid {
 public:
  using ComposeFn = std::function<int(int second, int first)>;

  FiniteGroupoid(int objects, std::vector<int> source, std::vector<int> target,
                 std::vector<int> identity, std::vector<int> inverse, const ComposeFn& compose);

  int object_count() const { return static_cast<int>(identity_.size()); }
  int morphism_count() const { return static_cast<int>(source_.size()); }
  int source(int m) const { return source_[m]; }
  int target(int m) const { return target_[m]; }
  int identity(int o) const { return identity_[o]; }
  int inverse(int m) const { return inverse_[m]; }
  int compose(int second, int first) const;
  const std::vector<int>& out_morphisms(int o) const { return out_[o]; }
  std::vector<int> hom(int x, int y) const;
  // Connected-component label of each object.
  std::vector<int> isomorphism_classes() const;

 private:
  std::vector<int> source_, target_, identity_, inverse_;
  std::vector<std::vector<int>> out_;
  std::vector<int> pos_in_out_;
  std::vector<std::size_t> offset_;
  std::vector<int> comp_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

struct CheckReport {
  bool ok = true;
  std::string failure;
  std::vector<long long> witness;
  std::uint64_t checks = 0;

  void fail(std::string what, std::vector<long long> w) {
    if (!ok) return;
    ok = false;
    failure = std::move(what);
    witness = std::move(w);
  }
};

// Source/target of composites, identities, inverses, associativity.
CheckReport check_groupoid_axioms(const FiniteGroupoid& g);

struct GroupoidFunctor {
  GroupoidPtr domain;
  GroupoidPtr codomain;
  std::vector<int> objects;
  std::vector<int> morphisms;
  bool operator==(const GroupoidFunctor& o) const {
    return objects == o.objects && morphisms == o.morphisms;
  }
};

CheckReport check_functor(const GroupoidFunctor& f);
GroupoidFunctor identity_functor(const GroupoidPtr& g);
GroupoidFunctor compose_functors(const GroupoidFunctor& second, const GroupoidFunctor& first);

// components[x] : from(x) -> to(x) in the common codomain.
struct NaturalTransformation {
  GroupoidFunctor from;
  GroupoidFunctor to;
  std::vector<int> components;
};

CheckReport check_natural(const NaturalTransformation& t);

struct WeakEquivalenceReport {
  bool essentially_surjective = false;
  bool fully_faithful = false;
  bool functor = false;
  std::string detail;
  std::vector<long long> witness;
  bool ok() const { return functor && essentially_surjective && fully_faithful; }
};

WeakEquivalenceReport is_weak_equivalence(const GroupoidFunctor& f);
bool is_faithful(const GroupoidFunctor& f);

struct Subgroupoid {
  GroupoidPtr groupoid;
  GroupoidFunctor inclusion;
  std::vector<int> object_index;    // parent object -> sub object or -1
  std::vector<int> morphism_index;  // parent morphism -> sub morphism or -1
};

Subgroupoid full_subgroupoid(const GroupoidPtr& g, const std::vector<int>& objects);

// Quotient by a free action of a finite group given as tables
// object_action[o * n + a], morphism_action[m * n + a]; action compatibility
// and freeness are checked. Throws ActionNotFree.
struct GroupoidQuotient {
  GroupoidPtr groupoid;
  std::vector<int> object_class;    // parent object -> quotient object
  std::vector<int> morphism_class;  // parent morphism -> quotient morphism
  std::vector<int> object_rep;      // quotient object -> least parent object
  std::vector<int> morphism_rep;
};

GroupoidQuotient quotient_by_free_action(const GroupoidPtr& g, int group_order,
                                         const std::vector<int>& object_action,
                                         const std::vector<int>& morphism_action);

}  // namespace nacech
