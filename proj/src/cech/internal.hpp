#pragma once

#include <atomic>
#include <functional>

#include "nacech/cech.hpp"

namespace nacech::detail {

struct VectorHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

Classification classify_abelian(const ComplexPtr& k, const CrossedModulePtr& cm);

}  // namespace nacech::detail
