#include "cofree/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace cofree {

bool is_proper_colouring(const Graph& g, const Colouring& c) {
  if (static_cast<int>(c.colour.size()) != g.order()) return false;
  std::set<int> used;
  for (int v = 0; v < g.order(); ++v) {
    int cv = c.colour[static_cast<std::size_t>(v)];
    if (cv < 0 || cv >= c.k) return false;
    used.insert(cv);
    for (int w : g.neighbours(v))
      if (c.colour[static_cast<std::size_t>(w)] == cv) return false;
  }
  return static_cast<int>(used.size()) == c.k;
}

bool is_clique_cover(const Graph& g, const CliqueCover& cover) {
  VertexSet seen(g.order());
  for (const auto& part : cover.parts) {
    if (part.empty()) return false;
    VertexSet s(g.order());
    for (int v : part) {
      if (v < 0 || v >= g.order() || seen.test(v)) return false;
      seen.set(v);
      s.set(v);
    }
    if (!is_clique(g, s)) return false;
  }
  return seen.count() == g.order();
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
  explicit Deadline(const Budget& b) {
    if (b.limit) at_ = Clock::now() + *b.limit;
  }
  bool expired() const { return at_ && Clock::now() >= *at_; }

private:
  std::optional<Clock::time_point> at_;
};

class DsaturSearch {
public:
  DsaturSearch(const Graph& g, const Budget& budget) : g_(g), n_(g.order()), deadline_(budget) {}

  // Looks for colourings with fewer than `bound` colours. Stops at the first
  // one when `first_only`, otherwise keeps improving until `target` colours.
  void run(int bound, int target, bool first_only) {
    best_ = bound;
    target_ = target;
    first_only_ = first_only;
    width_ = std::max(bound, 1);
    colour_.assign(static_cast<std::size_t>(n_), -1);
    counts_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(width_), 0);
    sat_.assign(static_cast<std::size_t>(n_), 0);
    free_deg_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) free_deg_[static_cast<std::size_t>(v)] = g_.degree(v);
    descend(0, 0);
  }

  bool found() const { return !best_colouring_.empty() || (n_ == 0 && best_ >= 1); }
  bool aborted() const { return aborted_; }
  int best() const { return best_; }
  Colouring colouring() const {
    Colouring c;
    c.colour = best_colouring_;
    c.k = found_k_;
    return c;
  }

private:
  int& count(int v, int c) {
    return counts_[static_cast<std::size_t>(v) * static_cast<std::size_t>(width_) +
                   static_cast<std::size_t>(c)];
  }

  void assign(int v, int c) {
    colour_[static_cast<std::size_t>(v)] = c;
    for (int w : g_.neighbours(v)) {
      if (count(w, c)++ == 0) ++sat_[static_cast<std::size_t>(w)];
      --free_deg_[static_cast<std::size_t>(w)];
    }
  }

  void unassign(int v, int c) {
    colour_[static_cast<std::size_t>(v)] = -1;
    for (int w : g_.neighbours(v)) {
      if (--count(w, c) == 0) --sat_[static_cast<std::size_t>(w)];
      ++free_deg_[static_cast<std::size_t>(w)];
    }
  }

  int select() const {
    int best = -1;
    for (int v = 0; v < n_; ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (colour_[vi] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      auto bi = static_cast<std::size_t>(best);
      if (sat_[vi] > sat_[bi] || (sat_[vi] == sat_[bi] && free_deg_[vi] > free_deg_[bi])) best = v;
    }
    return best;
  }

  void descend(int coloured, int used) {
    if (stop_ || aborted_) return;
    if ((++nodes_ & 1023u) == 0 && deadline_.expired()) {
      aborted_ = true;
      return;
    }
    if (coloured == n_) {
      best_ = used;
      found_k_ = used;
      best_colouring_ = colour_;
      if (first_only_ || best_ <= target_) stop_ = true;
      return;
    }
    int v = select();
    for (int c = 0; c <= used && c + 1 < best_; ++c) {
      if (count(v, c) != 0) continue;
      assign(v, c);
      descend(coloured + 1, std::max(used, c + 1));
      unassign(v, c);
      if (stop_ || aborted_) return;
    }
  }

  const Graph& g_;
  int n_;
  Deadline deadline_;
  int best_ = 0;
  int target_ = 0;
  bool first_only_ = false;
  int width_ = 1;
  std::vector<int> colour_;
  std::vector<int> counts_;
  std::vector<int> sat_;
  std::vector<int> free_deg_;
  std::vector<int> best_colouring_;
  int found_k_ = 0;
  bool stop_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<int> greedy_clique(const Graph& g) {
  std::vector<int> best;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> clique{s};
    VertexSet cand = g.neighbours(s);
    while (cand.any()) {
      int pick = -1;
      int pick_deg = -1;
      for (int u : cand) {
        int d = (g.neighbours(u) & cand).count();
        if (d > pick_deg) {
          pick = u;
          pick_deg = d;
        }
      }
      clique.push_back(pick);
      cand &= g.neighbours(pick);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

ChromaticResult chromatic_number(const Graph& g, Budget budget) {
  ChromaticResult out;
  int n = g.order();
  if (n == 0) return out;
  int lower = static_cast<int>(greedy_clique(g).size());
  DsaturSearch search(g, budget);
  search.run(n + 1, lower, false);
  out.colouring = search.colouring();
  out.chi = out.colouring.k;
  if (search.aborted()) out.status = SolveStatus::BudgetExceeded;
  return out;
}

KColourResult is_k_colourable(const Graph& g, int k, Budget budget) {
  if (k < 0) throw InvalidArgument("k must be non-negative");
  KColourResult out;
  if (g.order() == 0) {
    out.status = KColourStatus::Colourable;
    out.colouring = Colouring{};
    return out;
  }
  if (static_cast<int>(greedy_clique(g).size()) > k) return out;
  DsaturSearch search(g, budget);
  search.run(k + 1, 0, true);
  if (search.aborted()) {
    out.status = KColourStatus::BudgetExceeded;
  } else if (search.found()) {
    out.status = KColourStatus::Colourable;
    out.colouring = search.colouring();
  }
  return out;
}

CliqueCoverResult clique_cover_number(const Graph& g, Budget budget) {
  auto chi = chromatic_number(complement(g), budget);
  CliqueCoverResult out;
  out.status = chi.status;
  out.size = chi.chi;
  out.cover.parts.assign(static_cast<std::size_t>(chi.colouring.k), {});
  for (int v = 0; v < static_cast<int>(chi.colouring.colour.size()); ++v)
    out.cover.parts[static_cast<std::size_t>(chi.colouring.colour[static_cast<std::size_t>(v)])]
        .push_back(v);
  return out;
}

namespace {

class CliqueSearch {
public:
  CliqueSearch(const Graph& g, const Budget& budget) : g_(g), deadline_(budget) {}

  void run() {
    best_ = greedy_clique(g_);
    std::vector<int> current;
    expand(current, g_.vertices());
  }

  const std::vector<int>& best() const { return best_; }
  bool aborted() const { return aborted_; }

private:
  // Greedy colouring of `p`; returns vertices ordered by colour with the
  // colour number of each as an upper bound on cliques through it.
  void colour_order(const VertexSet& p, std::vector<int>& order, std::vector<int>& bound) const {
    VertexSet left = p;
    int colour = 0;
    while (left.any()) {
      ++colour;
      VertexSet avail = left;
      while (avail.any()) {
        int v = avail.first();
        order.push_back(v);
        bound.push_back(colour);
        left.reset(v);
        avail.reset(v);
        avail -= g_.neighbours(v);
      }
    }
  }

  void expand(std::vector<int>& current, VertexSet p) {
    if (aborted_) return;
    if ((++nodes_ & 1023u) == 0 && deadline_.expired()) {
      aborted_ = true;
      return;
    }
    std::vector<int> order, bound;
    colour_order(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best_.size())) return;
      int v = order[i];
      current.push_back(v);
      VertexSet next = p & g_.neighbours(v);
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      p.reset(v);
      if (aborted_) return;
    }
  }

  const Graph& g_;
  Deadline deadline_;
  std::vector<int> best_;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

CliqueResult max_clique(const Graph& g, Budget budget) {
  CliqueResult out;
  if (g.order() == 0) return out;
  CliqueSearch search(g, budget);
  search.run();
  out.clique = search.best();
  std::sort(out.clique.begin(), out.clique.end());
  out.omega = static_cast<int>(out.clique.size());
  if (search.aborted()) out.status = SolveStatus::BudgetExceeded;
  return out;
}

std::optional<std::vector<int>> solve_x3c_brute(const X3CInstance& inst) {
  inst.validate();
  if (inst.k > 25) throw InvalidArgument("x3c brute force supports k <= 25");
  int ground = inst.ground_size();
  std::vector<VertexSet> sets;
  for (const auto& t : inst.triples) sets.push_back(VertexSet(ground, {t[0], t[1], t[2]}));

  std::uint64_t limit = std::uint64_t{1} << inst.k;
  std::uint64_t mask = (std::uint64_t{1} << inst.q) - 1;
  while (mask < limit) {
    VertexSet covered(ground);
    bool disjoint = true;
    for (int i = 0; i < inst.k && disjoint; ++i) {
      if (!((mask >> i) & 1u)) continue;
      if (covered.intersects(sets[static_cast<std::size_t>(i)])) disjoint = false;
      covered |= sets[static_cast<std::size_t>(i)];
    }
    if (disjoint && covered.count() == ground) {
      std::vector<int> chosen;
      for (int i = 0; i < inst.k; ++i)
        if ((mask >> i) & 1u) chosen.push_back(i);
      return chosen;
    }
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return std::nullopt;
}

std::optional<std::vector<bool>> solve_sat_brute(const SatInstance& inst) {
  inst.validate();
  if (inst.num_vars > 20) throw InvalidArgument("sat brute force supports n <= 20");
  std::vector<bool> assignment(static_cast<std::size_t>(inst.num_vars));
  for (std::uint32_t bits = 0; bits < (1u << inst.num_vars); ++bits) {
    for (int v = 0; v < inst.num_vars; ++v) assignment[static_cast<std::size_t>(v)] = (bits >> v) & 1u;
    if (inst.satisfied_by(assignment)) return assignment;
  }
  return std::nullopt;
}

}  // namespace cofree
