#include <cctype>

#include "nacech/io.hpp"

namespace nacech {

namespace {

bool numeric_suffix(const std::string& name, const std::string& prefix, int& n) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
  n = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])) || n > 1000) return false;
    n = n * 10 + (name[i] - '0');
  }
  return true;
}

CrossedModulePtr make_cm(GroupPtr G, GroupPtr H, std::vector<Elem> beta, std::string name) {
  IndexTable alpha(G->order(), H->order());
  for (int g = 0; g < G->order(); ++g)
    for (int h = 0; h < H->order(); ++h) alpha(g, h) = h;
  return std::make_shared<const CrossedModule>(
      validate_crossed_module(std::move(G), std::move(H), std::move(beta), alpha, std::move(name)));
}

}  // namespace

ComplexPtr builtin_complex(const std::string& name) {
  int n = 0;
  if (name == "point") return std::make_shared<const SimplicialComplex>(point());
  if (name == "edge") return std::make_shared<const SimplicialComplex>(full_simplex(1));
  if (name == "circle") return std::make_shared<const SimplicialComplex>(circle());
  if (name == "torus7") return std::make_shared<const SimplicialComplex>(torus_7());
  if (name == "rp26") return std::make_shared<const SimplicialComplex>(rp2_6());
  if (numeric_suffix(name, "simplex", n) && n <= 8)
    return std::make_shared<const SimplicialComplex>(full_simplex(n));
  if (numeric_suffix(name, "boundary", n) && n >= 1 && n <= 8)
    return std::make_shared<const SimplicialComplex>(simplex_boundary(n));
  return nullptr;
}

GroupPtr builtin_group(const std::string& name) {
  int n = 0;
  if (name == "trivial") return std::make_shared<const FiniteGroup>(trivial_group());
  if (name == "s3") return std::make_shared<const FiniteGroup>(symmetric_group(3));
  if (name == "s4") return std::make_shared<const FiniteGroup>(symmetric_group(4));
  if (numeric_suffix(name, "z", n) && n >= 1 && n <= 64)
    return std::make_shared<const FiniteGroup>(cyclic_group(n));
  return nullptr;
}

CrossedModulePtr builtin_crossed_module(const std::string& name) {
  if (name == "z2_trivial") {
    auto z2 = builtin_group("z2");
    return make_cm(z2, z2, {0, 1}, name);
  }
  if (name == "z4_over_z2") return make_cm(builtin_group("z4"), builtin_group("z2"), {0, 2}, name);
  if (name == "z4_onto_z2") return make_cm(builtin_group("z2"), builtin_group("z4"), {0, 1, 0, 1}, name);
  if (name == "s3_identity") {
    auto s3 = builtin_group("s3");
    std::vector<Elem> id(s3->order());
    for (int i = 0; i < s3->order(); ++i) id[i] = i;
    return std::make_shared<const CrossedModule>(
        validate_crossed_module(validate_hom(s3, s3, id), conjugation_action(s3), name));
  }
  if (name == "conj_s3") {
    auto s3 = builtin_group("s3");
    auto aut = automorphism_group(s3);
    std::vector<Elem> beta(s3->order(), -1);
    for (Elem h = 0; h < s3->order(); ++h) {
      std::vector<Elem> c(s3->order());
      for (Elem x = 0; x < s3->order(); ++x) c[x] = s3->conj(h, x);
      for (std::size_t k = 0; k < aut.maps.size(); ++k)
        if (aut.maps[k] == c) beta[h] = static_cast<Elem>(k);
    }
    return std::make_shared<const CrossedModule>(
        validate_crossed_module(validate_hom(s3, aut.group, beta), aut.action, name));
  }
  const std::string star = "star_to_", suffix = "_to_star";
  if (name.compare(0, star.size(), star) == 0) {
    auto g = builtin_group(name.substr(star.size()));
    if (g) return make_cm(g, builtin_group("trivial"), {g->identity()}, name);
  }
  if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
    auto h = builtin_group(name.substr(0, name.size() - suffix.size()));
    if (h) return make_cm(builtin_group("trivial"), h, std::vector<Elem>(h->order(), 0), name);
  }
  return nullptr;
}

std::vector<std::string> builtin_complex_names() {
  return {"point", "edge", "simplex2", "circle", "boundary3", "torus7", "rp26"};
}

std::vector<std::string> builtin_crossed_module_names() {
  return {"z2_trivial", "z4_over_z2",  "z4_onto_z2",  "star_to_z2", "star_to_z3",
          "star_to_s3", "z2_to_star",  "z3_to_star",  "s3_identity", "conj_s3"};
}

}  // namespace nacech
