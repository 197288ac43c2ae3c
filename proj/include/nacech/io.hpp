#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "nacech/cech.hpp"

namespace nacech {

// Built-in objects by name; nullptr when the name is unknown.
// Complexes: point, edge, simplex2, circle, boundary3, torus7, rp26,
// simplex<n>, boundary<n>.
ComplexPtr builtin_complex(const std::string& name);
// Groups: trivial, z<n>, s3, s4.
GroupPtr builtin_group(const std::string& name);
// Crossed modules: z2_trivial, z4_over_z2, z4_onto_z2, star_to_<group>,
// <group>_to_star, s3_identity, conj_s3.
CrossedModulePtr builtin_crossed_module(const std::string& name);
std::vector<std::string> builtin_complex_names();
std::vector<std::string> builtin_crossed_module_names();

// Readers resolve a name as a built-in first, then as a path relative to the
// referencing file. Objects are cached so equal names share one pointer.
class Loader {
 public:
  GroupPtr group(const std::string& ref, const std::string& from = {});
  CrossedModulePtr crossed_module(const std::string& ref, const std::string& from = {});
  ComplexPtr complex(const std::string& ref, const std::string& from = {});
  Cocycle cocycle(const std::string& path);
  Coboundary coboundary(const std::string& path, const ComplexPtr& k, const CrossedModulePtr& cm);
  OneCocycle one_cocycle(const std::string& path, const ComplexPtr& k, const GroupPtr& g);

  // Name a loaded object was requested under.
  std::string name_of(const void* object) const;

 private:
  std::string resolve(const std::string& ref, const std::string& from) const;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, CrossedModulePtr> cms_;
  std::map<std::string, ComplexPtr> complexes_;
  std::map<const void*, std::string> names_;
};

// Stream parsers; `file` is only used in diagnostics.
FiniteGroup read_group(std::istream& in, const std::string& file);
SimplicialComplex read_complex(std::istream& in, const std::string& file);

void write_group(std::ostream& out, const FiniteGroup& g);
void write_complex(std::ostream& out, const SimplicialComplex& k);
void write_cocycle(std::ostream& out, const Cocycle& z, const std::string& complex_ref,
                   const std::string& cm_ref);
void write_coboundary(std::ostream& out, const Coboundary& c);
void write_one_cocycle(std::ostream& out, const OneCocycle& k);

}  // namespace nacech
