#include "cofree/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>

namespace cofree {

bool is_induced_embedding(const Graph& host, const Graph& pattern, std::span<const int> f) {
  if (static_cast<int>(f.size()) != pattern.order()) return false;
  VertexSet seen(host.order());
  for (int x : f) {
    if (x < 0 || x >= host.order() || seen.test(x)) return false;
    seen.set(x);
  }
  for (int u = 0; u < pattern.order(); ++u)
    for (int v = u + 1; v < pattern.order(); ++v)
      if (pattern.adjacent(u, v) !=
          host.adjacent(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)]))
        return false;
  return true;
}

namespace {

class InducedSearch {
public:
  InducedSearch(const Graph& host, const Graph& pattern,
                const std::function<bool(const Embedding&)>& visit)
      : host_(host), pattern_(pattern), visit_(visit),
        k_(pattern.order()), f_(static_cast<std::size_t>(k_)), used_(host.order()) {}

  void run() {
    if (k_ > host_.order()) return;
    descend(0);
  }

private:
  bool descend(int level) {
    if (level == k_) return visit_(f_);
    VertexSet cand = ~used_;
    for (int j = 0; j < level; ++j) {
      const auto& row = host_.neighbours(f_[static_cast<std::size_t>(j)]);
      if (pattern_.adjacent(j, level))
        cand &= row;
      else
        cand -= row;
    }
    for (int x : cand) {
      f_[static_cast<std::size_t>(level)] = x;
      used_.set(x);
      bool go_on = descend(level + 1);
      used_.reset(x);
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  const std::function<bool(const Embedding&)>& visit_;
  int k_;
  Embedding f_;
  VertexSet used_;
};

}  // namespace

void for_each_induced(const Graph& host, const Graph& pattern,
                      const std::function<bool(const Embedding&)>& visit) {
  InducedSearch(host, pattern, visit).run();
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
  std::optional<Embedding> found;
  for_each_induced(host, pattern, [&](const Embedding& f) {
    found = f;
    return false;
  });
  return found;
}

FreenessWitness is_free(const Graph& g, std::span<const Graph> patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (auto e = find_induced(g, patterns[i])) return {false, i, std::move(e)};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Isomorphism.

namespace {

// Vertex invariant: degree, then the sorted degrees of its neighbours.
std::vector<std::vector<int>> vertex_invariants(const Graph& g) {
  std::vector<std::vector<int>> inv(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto& key = inv[static_cast<std::size_t>(v)];
    key.push_back(g.degree(v));
    std::vector<int> nd;
    for (int w : g.neighbours(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
  }
  return inv;
}

class IsoSearch {
public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()) {}

  std::optional<std::vector<int>> run() {
    if (b_.order() != n_ || a_.edge_count() != b_.edge_count()) return std::nullopt;
    auto ia = vertex_invariants(a_);
    auto ib = vertex_invariants(b_);
    std::map<std::vector<int>, int> classes;
    for (const auto& k : ia) classes.emplace(k, 0);
    for (const auto& k : ib)
      if (!classes.count(k)) return std::nullopt;
    std::map<std::vector<int>, int> count_a, count_b;
    for (const auto& k : ia) ++count_a[k];
    for (const auto& k : ib) ++count_b[k];
    if (count_a != count_b) return std::nullopt;
    int id = 0;
    for (auto& [k, c] : classes) c = id++;
    cls_a_.resize(static_cast<std::size_t>(n_));
    cls_b_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      cls_a_[static_cast<std::size_t>(v)] = classes[ia[static_cast<std::size_t>(v)]];
      cls_b_[static_cast<std::size_t>(v)] = classes[ib[static_cast<std::size_t>(v)]];
    }
    build_order(count_a, ia);
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_ = VertexSet(n_);
    if (!descend(0)) return std::nullopt;
    return map_;
  }

private:
  // Connectivity-first order: each next vertex has the most already-ordered
  // neighbours; ties go to the rarer invariant class, then the lower id.
  void build_order(const std::map<std::vector<int>, int>& counts,
                   const std::vector<std::vector<int>>& ia) {
    VertexSet placed(n_);
    std::vector<int> links(static_cast<std::size_t>(n_), 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed.test(v)) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        auto lv = links[static_cast<std::size_t>(v)];
        auto lb = links[static_cast<std::size_t>(best)];
        auto rv = counts.at(ia[static_cast<std::size_t>(v)]);
        auto rb = counts.at(ia[static_cast<std::size_t>(best)]);
        if (lv > lb || (lv == lb && rv < rb)) best = v;
      }
      placed.set(best);
      order_.push_back(best);
      for (int w : a_.neighbours(best)) ++links[static_cast<std::size_t>(w)];
    }
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    int u = order_[depth];
    for (int x = 0; x < n_; ++x) {
      if (used_.test(x) || cls_b_[static_cast<std::size_t>(x)] != cls_a_[static_cast<std::size_t>(u)])
        continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        int w = order_[d];
        ok = a_.adjacent(u, w) == b_.adjacent(x, map_[static_cast<std::size_t>(w)]);
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(u)] = x;
      used_.set(x);
      if (descend(depth + 1)) return true;
      used_.reset(x);
      map_[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  std::vector<int> cls_a_, cls_b_, order_, map_;
  VertexSet used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
  return IsoSearch(g1, g2).run();
}

bool is_isomorphic(const Graph& g1, const Graph& g2) { return find_isomorphism(g1, g2).has_value(); }

bool is_self_complementary(const Graph& g) {
  int n = g.order();
  if ((n * (n - 1)) % 4 != 0 || g.edge_count() * 4 != n * (n - 1)) return false;
  return is_isomorphic(g, complement(g));
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace {

// Graph invariant used to bucket candidates before the isomorphism test.
std::vector<int> bucket_key(const Graph& g) {
  auto inv = vertex_invariants(g);
  // Add per-vertex triangle counts to the invariant.
  for (int v = 0; v < g.order(); ++v) {
    int tri = 0;
    for (int w : g.neighbours(v)) tri += (g.neighbours(v) & g.neighbours(w)).count();
    inv[static_cast<std::size_t>(v)].insert(inv[static_cast<std::size_t>(v)].begin(), tri / 2);
  }
  std::sort(inv.begin(), inv.end());
  std::vector<int> key{g.order(), g.edge_count()};
  for (const auto& k : inv) {
    key.push_back(-1);
    key.insert(key.end(), k.begin(), k.end());
  }
  return key;
}

class IsoClassSet {
public:
  bool insert(const Graph& g) {
    auto& bucket = buckets_[bucket_key(g)];
    for (const auto& h : bucket)
      if (is_isomorphic(g, h)) return false;
    bucket.push_back(g);
    reps_.push_back(g);
    return true;
  }
  const std::vector<Graph>& reps() const { return reps_; }

private:
  std::map<std::vector<int>, std::vector<Graph>> buckets_;
  std::vector<Graph> reps_;
};

constexpr int kMaxEnumeration = 8;

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > kMaxEnumeration)
    throw InvalidArgument("graph enumeration supports 0 <= n <= " + std::to_string(kMaxEnumeration));
  static std::mutex mu;
  static std::vector<std::vector<Graph>> levels{{Graph(0)}};
  std::lock_guard lock(mu);
  while (static_cast<int>(levels.size()) <= n) {
    int m = static_cast<int>(levels.size()) - 1;
    IsoClassSet next;
    for (const auto& g : levels.back()) {
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        GraphBuilder b(g);
        int v = b.add_vertex();
        for (int u = 0; u < m; ++u)
          if ((mask >> u) & 1u) b.add_edge(u, v);
        next.insert(b.build());
      }
    }
    levels.push_back(next.reps());
  }
  return levels[static_cast<std::size_t>(n)];
}

std::vector<Graph> enumerate_self_complementary(int n) {
  if (n < 0 || n > kMaxEnumeration)
    throw InvalidArgument("self-complementary enumeration supports 0 <= n <= " +
                          std::to_string(kMaxEnumeration));
  if ((n * (n - 1)) % 4 != 0) return {};
  if (n == kMaxEnumeration) {
    std::vector<Graph> out;
    for (const auto& g : enumerate_graphs(n))
      if (is_self_complementary(g)) out.push_back(g);
    return out;
  }

  int slots = n * (n - 1) / 2;
  int edges = slots / 2;
  std::vector<Edge> slot_edge;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slot_edge.emplace_back(i, j);

  IsoClassSet found;
  std::uint64_t limit = std::uint64_t{1} << slots;
  std::uint64_t mask = (std::uint64_t{1} << edges) - 1;
  std::vector<int> deg(static_cast<std::size_t>(n)), codeg(static_cast<std::size_t>(n));
  while (mask < limit) {
    std::fill(deg.begin(), deg.end(), 0);
    for (int s = 0; s < slots; ++s)
      if ((mask >> s) & 1u) {
        ++deg[static_cast<std::size_t>(slot_edge[static_cast<std::size_t>(s)].first)];
        ++deg[static_cast<std::size_t>(slot_edge[static_cast<std::size_t>(s)].second)];
      }
    for (int v = 0; v < n; ++v)
      codeg[static_cast<std::size_t>(v)] = n - 1 - deg[static_cast<std::size_t>(v)];
    std::sort(deg.begin(), deg.end());
    std::sort(codeg.begin(), codeg.end());
    if (deg == codeg) {
      GraphBuilder b(n);
      for (int s = 0; s < slots; ++s)
        if ((mask >> s) & 1u)
          b.add_edge(slot_edge[static_cast<std::size_t>(s)].first,
                     slot_edge[static_cast<std::size_t>(s)].second);
      Graph g = b.build();
      if (is_isomorphic(g, complement(g))) found.insert(g);
    }
    if (mask == 0) break;
    // Next mask with the same popcount.
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return found.reps();
}

// ---------------------------------------------------------------------------

std::optional<std::array<int, 5>> find_induced_c5(const Graph& g) {
  static const Graph c5 = cycle_graph(5);
  auto e = find_induced(g, c5);
  if (!e) return std::nullopt;
  return std::array<int, 5>{(*e)[0], (*e)[1], (*e)[2], (*e)[3], (*e)[4]};
}

namespace {

// Extends induced paths starting at their smallest vertex; a new vertex may
// touch the path only at its current end, or at both ends to close a cycle.
class OddHoleSearch {
public:
  explicit OddHoleSearch(const Graph& g) : g_(g), on_path_(g.order()) {}

  std::optional<std::vector<int>> run() {
    for (int s = 0; s < g_.order(); ++s) {
      path_ = {s};
      on_path_ = VertexSet(g_.order());
      on_path_.set(s);
      if (extend()) return path_;
    }
    return std::nullopt;
  }

private:
  bool extend() {
    int s = path_.front();
    int last = path_.back();
    // Path vertices other than s and last must not see the next vertex.
    VertexSet interior = on_path_;
    interior.reset(s);
    interior.reset(last);
    for (int w : g_.neighbours(last)) {
      if (w <= s || on_path_.test(w) || g_.neighbours(w).intersects(interior)) continue;
      if (path_.size() >= 2 && g_.adjacent(w, s)) {
        std::size_t len = path_.size() + 1;
        if (len >= 5 && len % 2 == 1) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      path_.push_back(w);
      on_path_.set(w);
      if (extend()) return true;
      on_path_.reset(w);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> path_;
  VertexSet on_path_;
};

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g) { return OddHoleSearch(g).run(); }

bool is_perfect_small(const Graph& g) {
  return !find_odd_hole(g).has_value() && !find_odd_hole(complement(g)).has_value();
}

}  // namespace cofree
