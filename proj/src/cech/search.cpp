#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "nacech/cech.hpp"

namespace nacech {

namespace {

std::vector<std::vector<Elem>> beta_fibers(const CrossedModule& cm) {
  std::vector<std::vector<Elem>> f(cm.G().order());
  for (Elem h = 0; h < cm.H().order(); ++h) f[cm.beta(h)].push_back(h);
  return f;
}

void charge(std::atomic<std::uint64_t>& nodes, std::uint64_t budget) {
  if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "search exceeded the node budget of " + std::to_string(budget),
                {static_cast<long long>(budget)});
}

// Vertex-by-vertex search for coboundaries c with apply(z, c) = z2. After
// vertex v, the pairs whose larger endpoint is v are assigned from the beta
// fiber forced by the g equation; triples are checked once fully determined.
class CoboundarySearch {
 public:
  CoboundarySearch(const Cocycle& z, const Cocycle& z2, std::uint64_t budget,
                   std::atomic<std::uint64_t>& nodes)
      : z_(z), z2_(z2), K_(*z.complex), cm_(*z.cm), budget_(budget), nodes_(nodes) {
    fibers_ = beta_fibers(cm_);
    const int n = K_.vertex_count();
    std::vector<int> pair_step(K_.pairs().size(), -1);
    std::vector<int> vertex_step(n);
    for (int v = 0; v < n; ++v) {
      vertex_step[v] = static_cast<int>(steps_.size());
      steps_.push_back({v, -1});
      for (std::size_t p = 0; p < K_.pairs().size(); ++p) {
        auto [i, j] = K_.pairs()[p];
        if (i != j && std::max(i, j) == v) {
          pair_step[p] = static_cast<int>(steps_.size());
          steps_.push_back({-1, static_cast<int>(p)});
        }
      }
    }
    checks_.resize(steps_.size());
    for (std::size_t t = 0; t < K_.triples().size(); ++t) {
      auto [i, j, k] = K_.triples()[t];
      int s = vertex_step[i];
      for (int p : {K_.pair_index(i, j), K_.pair_index(j, k), K_.pair_index(i, k)})
        s = std::max(s, pair_step[p]);
      checks_[s].push_back(static_cast<int>(t));
    }
    c_ = identity_coboundary(z.complex, z.cm);
  }

  // visit returns false to stop. first_gamma < 0 leaves gamma_0 free.
  void run(const std::function<bool(const Coboundary&)>& visit, int first_gamma = -1) {
    visit_ = &visit;
    first_gamma_ = first_gamma;
    stop_ = false;
    dfs(0);
  }

 private:
  bool triples_ok(int step) const {
    const FiniteGroup& G = cm_.G();
    const FiniteGroup& H = cm_.H();
    for (int t : checks_[step]) {
      auto [i, j, k] = K_.triples()[t];
      Elem x = H.mul(c_.eta_at(i, k), z_.h[t]);
      x = H.mul(x, H.inv(cm_.act(z_.g_at(i, j), c_.eta_at(j, k))));
      x = H.mul(x, H.inv(c_.eta_at(i, j)));
      if (cm_.act(G.inv(c_.gamma[i]), x) != z2_.h[t]) return false;
    }
    return true;
  }

  void dfs(std::size_t s) {
    if (stop_) return;
    if (s == steps_.size()) {
      if (!(*visit_)(c_)) stop_ = true;
      return;
    }
    const FiniteGroup& G = cm_.G();
    auto [v, p] = steps_[s];
    if (v >= 0) {
      for (Elem g = 0; g < G.order() && !stop_; ++g) {
        if (v == 0 && first_gamma_ >= 0 && g != first_gamma_) continue;
        charge(nodes_, budget_);
        c_.gamma[v] = g;
        if (triples_ok(static_cast<int>(s))) dfs(s + 1);
      }
      c_.gamma[v] = G.identity();
      return;
    }
    auto [i, j] = K_.pairs()[p];
    Elem b = G.mul(G.mul(c_.gamma[i], z2_.g[p]), G.mul(G.inv(c_.gamma[j]), G.inv(z_.g[p])));
    for (Elem eta : fibers_[b]) {
      if (stop_) break;
      charge(nodes_, budget_);
      c_.eta[p] = eta;
      if (triples_ok(static_cast<int>(s))) dfs(s + 1);
    }
    c_.eta[p] = cm_.H().identity();
  }

  const Cocycle& z_;
  const Cocycle& z2_;
  const SimplicialComplex& K_;
  const CrossedModule& cm_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<std::vector<Elem>> fibers_;
  std::vector<std::pair<int, int>> steps_;  // (vertex, -1) or (-1, pair)
  std::vector<std::vector<int>> checks_;
  Coboundary c_;
  const std::function<bool(const Coboundary&)>* visit_ = nullptr;
  int first_gamma_ = -1;
  bool stop_ = false;
};

void require_same_base(const Cocycle& a, const Cocycle& b) {
  if (!same_complex(a.complex, b.complex) || !same_crossed_module(a.cm, b.cm))
    throw Error(ErrorKind::InvalidInput, "cocycles live over different data");
}

}  // namespace

std::optional<Coboundary> are_cohomologous(const Cocycle& z, const Cocycle& z2,
                                           const SearchOptions& opt) {
  require_same_base(z, z2);
  validate_cocycle(z);
  validate_cocycle(z2);
  std::atomic<std::uint64_t> nodes{0};
  std::optional<Coboundary> found;
  CoboundarySearch search(z, z2, opt.budget, nodes);
  search.run([&](const Coboundary& c) {
    found = c;
    return false;
  });
  if (found && !(apply_coboundary(z, *found) == z2))
    throw Error(ErrorKind::ResultNotCocycle, "witness failed verification");
  return found;
}

std::vector<Coboundary> stabilizer(const Cocycle& z, const SearchOptions& opt) {
  validate_cocycle(z);
  const int ng = z.cm->G().order();
  const int workers = std::max(1, std::min(opt.workers, ng));
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<Coboundary>> found(ng);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  auto work = [&] {
    try {
      CoboundarySearch search(z, z, opt.budget, nodes);
      for (int g0; (g0 = next.fetch_add(1)) < ng;)
        search.run(
            [&](const Coboundary& c) {
              found[g0].push_back(c);
              return true;
            },
            g0);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_lock);
      if (!error) error = std::current_exception();
      next = ng;
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<Coboundary> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  for (const auto& c : out)
    if (!(apply_coboundary(z, c) == z))
      throw Error(ErrorKind::ResultNotCocycle, "stabilizer element failed verification");
  return out;
}

OneCocycle trivial_one_cocycle(const ComplexPtr& c, const GroupPtr& g) {
  return OneCocycle{c, g, std::vector<Elem>(c->pairs().size(), g->identity())};
}

const OneCocycle& validate_one_cocycle(const OneCocycle& k) {
  const SimplicialComplex& K = *k.complex;
  const FiniteGroup& G = *k.group;
  if (k.k.size() != K.pairs().size())
    throw Error(ErrorKind::NotA1Cocycle, "1-cochain has wrong length");
  for (std::size_t p = 0; p < k.k.size(); ++p) {
    auto [i, j] = K.pairs()[p];
    if (k.k[p] < 0 || k.k[p] >= G.order())
      throw Error(ErrorKind::NotA1Cocycle, "value out of range", {i, j});
    if (i == j && k.k[p] != G.identity())
      throw Error(ErrorKind::NotA1Cocycle, "k_ii != e", {i, i});
  }
  for (const auto& t : K.triples()) {
    auto [i, j, l] = t;
    if (G.mul(k.at(i, j), k.at(j, l)) != k.at(i, l))
      throw Error(ErrorKind::NotA1Cocycle,
                  "k_ij k_jk != k_ik at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(l) + ")",
                  {i, j, l});
  }
  return k;
}

std::optional<std::vector<Elem>> are_cohomologous_1(const OneCocycle& a, const OneCocycle& b) {
  if (!same_complex(a.complex, b.complex) || !(*a.group == *b.group))
    throw Error(ErrorKind::InvalidInput, "1-cocycles live over different data");
  validate_one_cocycle(a);
  validate_one_cocycle(b);
  const SimplicialComplex& K = *a.complex;
  const FiniteGroup& G = *a.group;
  const int n = K.vertex_count();
  std::vector<std::vector<int>> pairs_at(n);
  for (std::size_t p = 0; p < K.pairs().size(); ++p)
    pairs_at[std::max(K.pairs()[p][0], K.pairs()[p][1])].push_back(static_cast<int>(p));
  std::vector<Elem> gamma(n, G.identity());
  std::function<bool(int)> dfs = [&](int v) {
    if (v == n) return true;
    for (Elem g = 0; g < G.order(); ++g) {
      gamma[v] = g;
      bool ok = true;
      for (int p : pairs_at[v]) {
        auto [i, j] = K.pairs()[p];
        ok = ok && G.mul(G.mul(G.inv(gamma[i]), a.k[p]), gamma[j]) == b.k[p];
      }
      if (ok && dfs(v + 1)) return true;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return gamma;
}

namespace {

void for_each_one_cocycle(const SimplicialComplex& K, const FiniteGroup& G, std::uint64_t budget,
                          std::atomic<std::uint64_t>& nodes,
                          const std::function<void(const std::vector<Elem>&)>& visit) {
  std::vector<int> order;
  std::vector<int> step_of(K.pairs().size(), -1);
  for (std::size_t p = 0; p < K.pairs().size(); ++p)
    if (K.pairs()[p][0] != K.pairs()[p][1]) {
      step_of[p] = static_cast<int>(order.size());
      order.push_back(static_cast<int>(p));
    }
  std::vector<std::vector<int>> checks(order.size() + 1);
  for (std::size_t t = 0; t < K.triples().size(); ++t) {
    auto [i, j, l] = K.triples()[t];
    int s = -1;
    for (int p : {K.pair_index(i, j), K.pair_index(j, l), K.pair_index(i, l)})
      s = std::max(s, step_of[p]);
    checks[s < 0 ? order.size() : s].push_back(static_cast<int>(t));
  }
  std::vector<Elem> k(K.pairs().size(), G.identity());
  auto ok = [&](std::size_t s) {
    for (int t : checks[s]) {
      auto [i, j, l] = K.triples()[t];
      if (G.mul(k[K.pair_index(i, j)], k[K.pair_index(j, l)]) != k[K.pair_index(i, l)]) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t s) {
    if (s == order.size()) {
      if (ok(order.size())) visit(k);
      return;
    }
    for (Elem g = 0; g < G.order(); ++g) {
      charge(nodes, budget);
      k[order[s]] = g;
      if (ok(s)) dfs(s + 1);
    }
    k[order[s]] = G.identity();
  };
  dfs(0);
}

}  // namespace

std::vector<OneCocycle> enumerate_one_cocycles(const ComplexPtr& c, const GroupPtr& g,
                                               const SearchOptions& opt) {
  std::atomic<std::uint64_t> nodes{0};
  std::vector<OneCocycle> out;
  for_each_one_cocycle(*c, *g, opt.budget, nodes, [&](const std::vector<Elem>& k) {
    out.push_back(OneCocycle{c, g, k});
  });
  return out;
}

std::vector<OneCocycle> classify_one_cocycles(const ComplexPtr& c, const GroupPtr& g,
                                              const SearchOptions& opt) {
  auto all = enumerate_one_cocycles(c, g, opt);
  std::vector<OneCocycle> reps;
  for (const auto& k : all) {
    bool seen = false;
    for (const auto& r : reps)
      if (are_cohomologous_1(r, k)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(k);
  }
  return reps;
}

}  // namespace nacech
