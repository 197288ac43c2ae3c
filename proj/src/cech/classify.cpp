#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "internal.hpp"

namespace nacech {

namespace {

[[noreturn]] void too_large(const std::string& what, std::uint64_t limit, double log10_estimate) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", log10_estimate);
  throw Error(ErrorKind::SearchSpaceTooLarge, what + "; naive estimate 10^" + buf,
              {static_cast<long long>(limit)});
}

void charge(std::atomic<std::uint64_t>& nodes, std::uint64_t budget, double log10_estimate) {
  if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
    too_large("visited more than " + std::to_string(budget) + " nodes", budget, log10_estimate);
}

// Stored gauge-fixed cocycles are held twice (list and index); cap the
// element count so large instances fail on the budget path instead of
// exhausting memory.
constexpr std::uint64_t kStoredEntryLimit = std::uint64_t{1} << 25;

// Quadruple relation h_ikl h_ijk = h_ijl (g_ij . h_jkl) on triple slots.
struct Relation {
  int a, b, c, d;  // ikl, ijk, ijl, jkl
  int pair;        // ij
};

struct Shared {
  const SimplicialComplex& K;
  const CrossedModule& cm;
  std::vector<std::vector<Elem>> fibers;
  std::vector<Relation> relations;
  std::vector<std::vector<int>> relations_of;  // triple -> relations
  std::vector<int> free_triples;
  std::uint64_t budget;
  double log10_estimate;
  std::atomic<std::uint64_t>& nodes;
};

// Enumerates h for a fixed g with unit propagation over the quadruple relations.
class TripleSolver {
 public:
  TripleSolver(const Shared& s, const std::vector<Elem>& g) : s_(s), g_(g) {
    const FiniteGroup& G = s.cm.G();
    const auto& T = s.K.triples();
    h_.assign(T.size(), s.cm.H().identity());
    target_.assign(T.size(), G.identity());
    for (int t : s.free_triples) {
      auto [i, j, k] = T[t];
      Elem gij = g[s.K.pair_index(i, j)], gjk = g[s.K.pair_index(j, k)], gik = g[s.K.pair_index(i, k)];
      target_[t] = G.mul(gik, G.inv(G.mul(gij, gjk)));
      h_[t] = -1;
    }
  }

  void run(const std::function<void(const std::vector<Elem>&)>& visit) {
    visit_ = &visit;
    for (int t : s_.free_triples)
      if (s_.fibers[target_[t]].empty()) return;
    dfs(0);
  }

 private:
  bool assign(int t, Elem v) {
    if (s_.cm.beta(v) != target_[t]) return false;
    h_[t] = v;
    trail_.push_back(t);
    return true;
  }

  bool propagate(int start) {
    const FiniteGroup& H = s_.cm.H();
    const FiniteGroup& G = s_.cm.G();
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int t = queue.back();
      queue.pop_back();
      for (int r : s_.relations_of[t]) {
        const Relation& q = s_.relations[r];
        Elem A = h_[q.a], B = h_[q.b], C = h_[q.c], D = h_[q.d];
        int unknown = (A < 0) + (B < 0) + (C < 0) + (D < 0);
        if (unknown > 1) continue;
        Elem gij = g_[q.pair];
        if (unknown == 0) {
          if (H.mul(A, B) != H.mul(C, s_.cm.act(gij, D))) return false;
          continue;
        }
        int slot;
        Elem v;
        if (A < 0) {
          slot = q.a;
          v = H.mul(H.mul(C, s_.cm.act(gij, D)), H.inv(B));
        } else if (B < 0) {
          slot = q.b;
          v = H.mul(H.inv(A), H.mul(C, s_.cm.act(gij, D)));
        } else if (C < 0) {
          slot = q.c;
          v = H.mul(H.mul(A, B), H.inv(s_.cm.act(gij, D)));
        } else {
          slot = q.d;
          v = s_.cm.act(G.inv(gij), H.mul(H.inv(C), H.mul(A, B)));
        }
        if (!assign(slot, v)) return false;
        queue.push_back(slot);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      h_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void dfs(std::size_t pos) {
    while (pos < s_.free_triples.size() && h_[s_.free_triples[pos]] >= 0) ++pos;
    if (pos == s_.free_triples.size()) {
      (*visit_)(h_);
      return;
    }
    int t = s_.free_triples[pos];
    for (Elem v : s_.fibers[target_[t]]) {
      charge(s_.nodes, s_.budget, s_.log10_estimate);
      std::size_t mark = trail_.size();
      assign(t, v);
      if (propagate(t)) dfs(pos + 1);
      undo(mark);
    }
  }

  const Shared& s_;
  const std::vector<Elem>& g_;
  std::vector<Elem> h_;
  std::vector<Elem> target_;
  std::vector<int> trail_;
  const std::function<void(const std::vector<Elem>&)>* visit_ = nullptr;
};

std::vector<std::vector<Elem>> enumerate_bands(const SimplicialComplex& K, const FiniteGroup& Q,
                                               const Shared& s) {
  std::vector<int> order;
  std::vector<int> step_of(K.pairs().size(), -1);
  for (std::size_t p = 0; p < K.pairs().size(); ++p)
    if (K.pairs()[p][0] != K.pairs()[p][1]) {
      step_of[p] = static_cast<int>(order.size());
      order.push_back(static_cast<int>(p));
    }
  std::vector<std::vector<int>> checks(order.size() + 1);
  for (const auto& t : K.triples()) {
    int s_max = -1;
    for (int p : {K.pair_index(t[0], t[1]), K.pair_index(t[1], t[2]), K.pair_index(t[0], t[2])})
      s_max = std::max(s_max, step_of[p]);
    checks[s_max < 0 ? order.size() : s_max].push_back(K.triple_index(t[0], t[1], t[2]));
  }
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> k(K.pairs().size(), Q.identity());
  auto ok = [&](std::size_t st) {
    for (int t : checks[st]) {
      auto [i, j, l] = K.triples()[t];
      if (Q.mul(k[K.pair_index(i, j)], k[K.pair_index(j, l)]) != k[K.pair_index(i, l)]) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t st) {
    if (st == order.size()) {
      if (ok(order.size())) out.push_back(k);
      return;
    }
    for (Elem x = 0; x < Q.order(); ++x) {
      charge(s.nodes, s.budget, s.log10_estimate);
      k[order[st]] = x;
      if (ok(st)) dfs(st + 1);
    }
    k[order[st]] = Q.identity();
  };
  dfs(0);
  return out;
}

Classification classify_brute(const ComplexPtr& kp, const CrossedModulePtr& cmp,
                              const SearchOptions& opt) {
  const SimplicialComplex& K = *kp;
  const CrossedModule& cm = *cmp;
  const FiniteGroup& G = cm.G();
  const FiniteGroup& H = cm.H();
  std::atomic<std::uint64_t> nodes{0};
  Shared s{K, cm, {}, {}, {}, {}, opt.budget, naive_search_estimate(K, cm), nodes};
  s.fibers.assign(G.order(), {});
  for (Elem h = 0; h < H.order(); ++h) s.fibers[cm.beta(h)].push_back(h);
  s.relations_of.assign(K.triples().size(), {});
  for (std::size_t t = 0; t < K.triples().size(); ++t) {
    auto [i, j, k] = K.triples()[t];
    if (i != j && j != k) s.free_triples.push_back(static_cast<int>(t));
  }
  for (const auto& q : K.quadruples()) {
    auto [i, j, k, l] = q;
    if (i == j || j == k || k == l) continue;  // satisfied by normalization
    Relation r{K.triple_index(i, k, l), K.triple_index(i, j, k), K.triple_index(i, j, l),
               K.triple_index(j, k, l), K.pair_index(i, j)};
    int id = static_cast<int>(s.relations.size());
    s.relations.push_back(r);
    for (int t : {r.a, r.b, r.c, r.d}) s.relations_of[t].push_back(id);
  }

  // Gauge fixing: every class has its lexicographic minimum among cocycles
  // whose g values are the least elements of their beta(H)-cosets.
  const QuotientGroup quot = quotient_by_image(cm);
  const auto bands = enumerate_bands(K, *quot.group, s);

  std::vector<std::vector<std::vector<Elem>>> per_band(bands.size());
  std::vector<std::vector<Elem>> band_g(bands.size());
  for (std::size_t b = 0; b < bands.size(); ++b) {
    band_g[b].resize(K.pairs().size());
    for (std::size_t p = 0; p < K.pairs().size(); ++p) band_g[b][p] = quot.rep[bands[b][p]];
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> stored{0};
  const std::uint64_t entry_size = K.pairs().size() + K.triples().size();
  std::exception_ptr error;
  std::mutex error_lock;
  auto work = [&] {
    try {
      for (std::size_t b; (b = next.fetch_add(1)) < bands.size();) {
        TripleSolver solver(s, band_g[b]);
        solver.run([&](const std::vector<Elem>& h) {
          if (stored.fetch_add(entry_size) + entry_size > kStoredEntryLimit)
            too_large("gauge-fixed cocycle set exceeds " + std::to_string(kStoredEntryLimit) +
                          " stored entries",
                      kStoredEntryLimit, s.log10_estimate);
          per_band[b].push_back(h);
        });
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_lock);
      if (!error) error = std::current_exception();
      next = bands.size();
    }
  };
  const int workers = std::max(1, std::min<int>(opt.workers, static_cast<int>(bands.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<Cocycle> gauge_fixed;
  for (std::size_t b = 0; b < bands.size(); ++b)
    for (auto& h : per_band[b]) gauge_fixed.push_back(Cocycle{kp, cmp, band_g[b], std::move(h)});
  for (const auto& z : gauge_fixed) validate_cocycle(z);

  std::unordered_map<std::vector<Elem>, int, detail::VectorHash> index;
  for (std::size_t x = 0; x < gauge_fixed.size(); ++x)
    index.emplace(gauge_fixed[x].encoding(), static_cast<int>(x));

  // Moves: one vertex by a generator of G followed by renormalizing g to the
  // coset minima, and one pair by a generator of ker beta.
  std::vector<Coboundary> vertex_moves, pair_moves;
  for (int v = 0; v < K.vertex_count(); ++v)
    for (Elem gen : G.generators()) {
      Coboundary c = identity_coboundary(kp, cmp);
      c.gamma[v] = gen;
      vertex_moves.push_back(c);
    }
  const Subgroup ker = kernel_of_beta(cm);
  std::vector<Elem> ker_gens;
  for (Elem a : ker.group->generators()) ker_gens.push_back(ker.inclusion[a]);
  for (std::size_t p = 0; p < K.pairs().size(); ++p) {
    if (K.pairs()[p][0] == K.pairs()[p][1]) continue;
    for (Elem a : ker_gens) {
      Coboundary c = identity_coboundary(kp, cmp);
      c.eta[p] = a;
      pair_moves.push_back(c);
    }
  }
  auto renormalize = [&](const Cocycle& z) {
    Coboundary c = identity_coboundary(kp, cmp);
    for (std::size_t p = 0; p < K.pairs().size(); ++p) {
      Elem r = quot.rep[quot.projection(z.g[p])];
      c.eta[p] = s.fibers[G.mul(r, G.inv(z.g[p]))].front();
    }
    return apply_coboundary_unchecked(z, c);
  };

  std::vector<int> label(gauge_fixed.size(), -1);
  std::vector<int> best;
  for (std::size_t start = 0; start < gauge_fixed.size(); ++start) {
    if (label[start] >= 0) continue;
    const int cls = static_cast<int>(best.size());
    best.push_back(static_cast<int>(start));
    label[start] = cls;
    std::vector<int> queue{static_cast<int>(start)};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Cocycle& z = gauge_fixed[queue[q]];
      auto visit = [&](const Cocycle& w) {
        charge(nodes, opt.budget, s.log10_estimate);
        auto it = index.find(w.encoding());
        if (it == index.end())
          throw Error(ErrorKind::ResultNotCocycle, "orbit move left the gauge-fixed set");
        if (label[it->second] < 0) {
          label[it->second] = cls;
          queue.push_back(it->second);
          if (gauge_fixed[it->second].encoding() < gauge_fixed[best[cls]].encoding())
            best[cls] = it->second;
        }
      };
      for (const auto& c : vertex_moves) visit(renormalize(apply_coboundary_unchecked(z, c)));
      for (const auto& c : pair_moves) visit(apply_coboundary_unchecked(z, c));
    }
  }

  Classification out;
  for (int b : best) out.representatives.push_back(gauge_fixed[b]);
  std::sort(out.representatives.begin(), out.representatives.end(),
            [](const Cocycle& a, const Cocycle& b) { return a.encoding() < b.encoding(); });
  out.class_count = out.representatives.size();
  out.cocycles_examined = gauge_fixed.size();
  out.nodes = nodes.load();
  out.log10_estimate = s.log10_estimate;
  return out;
}

}  // namespace

double naive_search_estimate(const SimplicialComplex& K, const CrossedModule& cm) {
  std::size_t distinct = 0;
  for (const auto& p : K.pairs()) distinct += p[0] != p[1];
  const double ker = static_cast<double>(kernel_of_beta(cm).group->order());
  return static_cast<double>(distinct) * std::log10(static_cast<double>(cm.G().order())) +
         static_cast<double>(K.triples().size()) * std::log10(ker);
}

Classification classify(const ComplexPtr& k, const CrossedModulePtr& cm, Strategy strategy,
                        const SearchOptions& opt) {
  if (opt.budget == 0 || opt.workers <= 0)
    throw Error(ErrorKind::InvalidInput, "budget and worker count must be positive");
  if (strategy == Strategy::Abelian) {
    if (!cm->G().is_trivial() || !cm->H().is_abelian())
      throw Error(ErrorKind::StrategyMismatch,
                  "abelian strategy needs trivial G and abelian H");
    return detail::classify_abelian(k, cm);
  }
  return classify_brute(k, cm, opt);
}

std::vector<Cocycle> enumerate_cocycles(const ComplexPtr& k, const CrossedModulePtr& cm,
                                        const SearchOptions& opt) {
  const auto cls = classify(k, cm, Strategy::Brute, opt);
  const FiniteGroup& G = cm->G();
  const FiniteGroup& H = cm->H();
  std::vector<Coboundary> moves;
  for (int v = 0; v < k->vertex_count(); ++v)
    for (Elem gen : G.generators()) {
      Coboundary c = identity_coboundary(k, cm);
      c.gamma[v] = gen;
      moves.push_back(c);
    }
  for (std::size_t p = 0; p < k->pairs().size(); ++p) {
    if (k->pairs()[p][0] == k->pairs()[p][1]) continue;
    for (Elem gen : H.generators()) {
      Coboundary c = identity_coboundary(k, cm);
      c.eta[p] = gen;
      moves.push_back(c);
    }
  }
  std::unordered_map<std::vector<Elem>, int, detail::VectorHash> seen;
  std::vector<Cocycle> all;
  std::uint64_t steps = 0;
  for (const auto& r : cls.representatives) {
    if (!seen.emplace(r.encoding(), static_cast<int>(all.size())).second) continue;
    all.push_back(r);
    for (std::size_t q = all.size() - 1; q < all.size(); ++q)
      for (const auto& c : moves) {
        if (++steps > opt.budget)
          throw Error(ErrorKind::SearchSpaceTooLarge, "cocycle enumeration exceeded the budget");
        Cocycle w = apply_coboundary_unchecked(all[q], c);
        if (seen.emplace(w.encoding(), static_cast<int>(all.size())).second) all.push_back(std::move(w));
      }
  }
  std::sort(all.begin(), all.end(),
            [](const Cocycle& a, const Cocycle& b) { return a.encoding() < b.encoding(); });
  return all;
}

}  // namespace nacech
