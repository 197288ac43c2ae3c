#include <algorithm>

#include "nacech/algebra.hpp"

namespace nacech {

CrossedModule validate_crossed_module(GroupHom beta, GroupAction alpha, std::string name) {
  const FiniteGroup& G = *beta.target;
  const FiniteGroup& H = *beta.source;
  if (!(*alpha.actor == G) || !(*alpha.space == H))
    throw Error(ErrorKind::InvalidInput, "beta and alpha refer to different groups");

  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      if (beta(alpha(g, h)) != G.conj(g, beta(h)))
        throw Error(ErrorKind::EquivarianceFailure,
                    "beta(g.h) != g beta(h) g^-1 at g=" + std::to_string(g) +
                        " h=" + std::to_string(h),
                    {g, h});

  for (int h = 0; h < H.order(); ++h)
    for (int k = 0; k < H.order(); ++k)
      if (alpha(beta(h), k) != H.conj(h, k))
        throw Error(ErrorKind::PeifferFailure,
                    "beta(h).h' != h h' h^-1 at h=" + std::to_string(h) +
                        " h'=" + std::to_string(k),
                    {h, k});

  std::vector<char> in_image(G.order(), 0);
  for (Elem y : beta.image) in_image[y] = 1;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < H.order(); ++h)
      if (!in_image[G.conj(g, beta(h))])
        throw Error(ErrorKind::EquivarianceFailure, "beta(H) is not normal", {g, h});

  CrossedModule cm;
  cm.beta_ = std::move(beta);
  cm.alpha_ = std::move(alpha);
  cm.name_ = std::move(name);
  return cm;
}

CrossedModule validate_crossed_module(GroupPtr G, GroupPtr H, std::vector<Elem> beta,
                                      IndexTable alpha, std::string name) {
  auto b = validate_hom(H, G, std::move(beta));
  auto a = validate_action(G, H, std::move(alpha));
  return validate_crossed_module(std::move(b), std::move(a), std::move(name));
}

FiniteGroup semidirect_product(const CrossedModule& cm) {
  const FiniteGroup& G = cm.G();
  const FiniteGroup& H = cm.H();
  const int ng = G.order(), n = ng * H.order();
  IndexTable t(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Elem h = x / ng, g = x % ng, hb = y / ng, gb = y % ng;
      t(x, y) = H.mul(h, cm.act(g, hb)) * ng + G.mul(g, gb);
    }
  return validate_group(n, t, cm.H().name() + "x|" + cm.G().name());
}

QuotientGroup quotient_by_image(const CrossedModule& cm) {
  std::vector<Elem> image = cm.beta_hom().image;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return quotient_group(cm.G_ptr(), image);
}

Subgroup kernel_of_beta(const CrossedModule& cm) {
  std::vector<Elem> k;
  for (int h = 0; h < cm.H().order(); ++h)
    if (cm.beta(h) == cm.G().identity()) k.push_back(h);
  return subgroup_from_elements(cm.H(), k);
}

}  // namespace nacech
