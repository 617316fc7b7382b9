#include "cofree/structure.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace cofree {

// ---------------------------------------------------------------------------
// Decomposition

namespace {

// MCS-M on g[piece]. Returns madj(x) for every x, the later-numbered
// neighbours of x in the minimal triangulation, and the elimination order.
std::pair<std::vector<VertexSet>, std::vector<int>> mcs_m(const Graph& g, const VertexSet& piece) {
  int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> madj(static_cast<std::size_t>(n), VertexSet(n));
  std::vector<int> picked;
  VertexSet unnumbered = piece;
  while (unnumbered.any()) {
    int v = -1;
    for (int u : unnumbered)
      if (v < 0 || weight[static_cast<std::size_t>(u)] > weight[static_cast<std::size_t>(v)]) v = u;
    unnumbered.reset(v);
    picked.push_back(v);

    std::set<int> levels;
    for (int u : unnumbered) levels.insert(weight[static_cast<std::size_t>(u)]);
    VertexSet reached(n);
    for (int t : levels) {
      VertexSet allowed(n);
      for (int u : unnumbered)
        if (weight[static_cast<std::size_t>(u)] < t) allowed.set(u);
      VertexSet seen = g.neighbours(v) & allowed;
      VertexSet frontier = seen;
      VertexSet touch = g.neighbours(v);
      while (frontier.any()) {
        VertexSet next(n);
        for (int x : frontier) {
          touch |= g.neighbours(x);
          next |= g.neighbours(x) & allowed;
        }
        next -= seen;
        seen |= next;
        frontier = next;
      }
      for (int u : unnumbered)
        if (weight[static_cast<std::size_t>(u)] == t && touch.test(u)) reached.set(u);
    }
    for (int u : reached) {
      ++weight[static_cast<std::size_t>(u)];
      madj[static_cast<std::size_t>(u)].set(v);
    }
  }
  std::reverse(picked.begin(), picked.end());  // elimination order: first eliminated first
  return {madj, picked};
}

VertexSet neighbourhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  for (int v : s) out |= g.neighbours(v);
  return out - s;
}

// Children pieces C ∪ N(C) if s is a clique minimal separator of g[piece].
std::optional<std::vector<VertexSet>> split_on(const Graph& g, const VertexSet& piece,
                                               const VertexSet& s) {
  auto comps = components(g, piece - s);
  if (comps.size() < 2) return std::nullopt;
  int full = 0;
  std::vector<VertexSet> pieces;
  for (const auto& c : comps) {
    VertexSet nc = neighbourhood(g, c) & piece;
    if (nc == s) ++full;
    pieces.push_back(c | nc);
  }
  if (full < 2) return std::nullopt;
  return pieces;
}

int decompose_into(const Graph& g, const VertexSet& piece, AtomDecomposition& dec) {
  int id = static_cast<int>(dec.nodes.size());
  dec.nodes.push_back({piece, std::nullopt, {}, -1});

  std::optional<VertexSet> sep;
  std::vector<VertexSet> pieces;
  auto comps = components(g, piece);
  if (comps.size() > 1) {
    sep = VertexSet(g.order());
    pieces = comps;
  } else {
    auto [madj, order] = mcs_m(g, piece);
    for (int x : order) {
      const VertexSet& s = madj[static_cast<std::size_t>(x)];
      if (s.empty() || !is_clique(g, s)) continue;
      if (auto split = split_on(g, piece, s)) {
        sep = s;
        pieces = std::move(*split);
        break;
      }
    }
  }

  if (!sep) {
    dec.nodes[static_cast<std::size_t>(id)].atom = static_cast<int>(dec.atoms.size());
    dec.atoms.push_back(piece);
    return id;
  }
  dec.nodes[static_cast<std::size_t>(id)].separator = sep;
  dec.separators.push_back(*sep);
  for (const auto& p : pieces) {
    int child = decompose_into(g, p, dec);
    dec.nodes[static_cast<std::size_t>(id)].children.push_back(child);
  }
  return id;
}

}  // namespace

AtomDecomposition decompose_atoms(const Graph& g) {
  AtomDecomposition dec;
  decompose_into(g, g.vertices(), dec);
  return dec;
}

bool is_atom_brute(const Graph& g) {
  int n = g.order();
  if (n > 14) throw InvalidArgument("is_atom_brute supports at most 14 vertices");
  bool atom = true;
  VertexSet all = g.vertices();
  // Extends clique `k` by candidates above `from`; checks every clique once.
  std::function<void(VertexSet&, const VertexSet&)> grow = [&](VertexSet& k, const VertexSet& cand) {
    if (!atom) return;
    VertexSet rest = all - k;
    if (rest.any() && components(g, rest).size() > 1) {
      atom = false;
      return;
    }
    for (int v : cand) {
      k.set(v);
      VertexSet next = cand & g.neighbours(v);
      for (int u : cand) {
        if (u > v) break;
        next.reset(u);
      }
      grow(k, next);
      k.reset(v);
      if (!atom) return;
    }
  };
  VertexSet k(n);
  grow(k, all);
  return atom;
}

Colouring merge_atom_colourings(const Graph& g, const AtomDecomposition& dec,
                                const std::vector<Colouring>& per_atom) {
  int n = g.order();
  if (per_atom.size() != dec.atoms.size())
    throw InvalidArgument("merge: expected one colouring per atom");
  if (dec.nodes.empty() || dec.nodes[0].vertices != g.vertices())
    throw InvalidArgument("merge: decomposition root does not span the graph");

  struct Partial {
    std::vector<int> colour;
    int k = 0;
  };
  std::function<Partial(int)> solve = [&](int id) -> Partial {
    const auto& node = dec.nodes[static_cast<std::size_t>(id)];
    Partial out{std::vector<int>(static_cast<std::size_t>(n), -1), 0};
    if (node.atom >= 0) {
      auto verts = node.vertices.to_vector();
      const Colouring& c = per_atom[static_cast<std::size_t>(node.atom)];
      if (c.colour.size() != verts.size() ||
          !is_proper_colouring(induced_subgraph(g, node.vertices), c))
        throw InvalidArgument("merge: atom " + std::to_string(node.atom) +
                              " colouring is not proper");
      for (std::size_t i = 0; i < verts.size(); ++i)
        out.colour[static_cast<std::size_t>(verts[i])] = c.colour[i];
      out.k = c.k;
      return out;
    }
    if (node.children.empty()) throw InvalidArgument("merge: inner node without children");
    VertexSet done(n);
    for (int child : node.children) {
      Partial part = solve(child);
      const VertexSet& cv = dec.nodes[static_cast<std::size_t>(child)].vertices;
      VertexSet overlap = cv & done;
      if (!is_clique(g, overlap)) throw InvalidArgument("merge: pieces overlap outside a clique");
      int k = std::max(out.k, part.k);
      std::vector<int> perm(static_cast<std::size_t>(part.k), -1);
      std::vector<bool> taken(static_cast<std::size_t>(k), false);
      for (int s : overlap) {
        perm[static_cast<std::size_t>(part.colour[static_cast<std::size_t>(s)])] =
            out.colour[static_cast<std::size_t>(s)];
        taken[static_cast<std::size_t>(out.colour[static_cast<std::size_t>(s)])] = true;
      }
      int next = 0;
      for (auto& p : perm) {
        if (p >= 0) continue;
        while (taken[static_cast<std::size_t>(next)]) ++next;
        p = next;
        taken[static_cast<std::size_t>(next)] = true;
      }
      for (int v : cv)
        out.colour[static_cast<std::size_t>(v)] =
            perm[static_cast<std::size_t>(part.colour[static_cast<std::size_t>(v)])];
      out.k = k;
      done |= cv;
    }
    if (done != node.vertices) throw InvalidArgument("merge: children do not cover their parent");
    return out;
  };

  Partial all = solve(0);
  Colouring c{all.colour, all.k};
  if (!is_proper_colouring(g, c)) throw InvalidArgument("merge: merged colouring is not proper");
  return c;
}

// ---------------------------------------------------------------------------
// C5 partition

namespace {

int wrap(int i) { return ((i - 1) % 5 + 5) % 5 + 1; }

}  // namespace

CycleMask cycle_mask(std::initializer_list<int> indices) {
  CycleMask m = 0;
  for (int i : indices) m |= 1u << (wrap(i) - 1);
  return m;
}

std::string mask_name(CycleMask s) {
  std::string out = "V{";
  bool first = true;
  for (int i = 1; i <= 5; ++i) {
    if (!((s >> (i - 1)) & 1u)) continue;
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

VertexSet C5Partition::cycle_set() const {
  VertexSet s(universe);
  for (int v : cycle) s.set(v);
  return s;
}

C5Partition compute_c5_partition(const Graph& g, const std::array<int, 5>& cycle) {
  int n = g.order();
  for (int v : cycle)
    if (v < 0 || v >= n) throw InvalidArgument("c5 partition: cycle vertex out of range");
  for (int i = 0; i < 5; ++i) {
    int a = cycle[static_cast<std::size_t>(i)];
    int b = cycle[static_cast<std::size_t>((i + 1) % 5)];
    int c = cycle[static_cast<std::size_t>((i + 2) % 5)];
    if (a == b || a == c || !g.adjacent(a, b) || g.adjacent(a, c))
      throw InvalidArgument("c5 partition: not an induced C5 in the given order");
  }
  C5Partition p;
  p.cycle = cycle;
  p.universe = n;
  p.sets.fill(VertexSet(n));
  p.class_of.assign(static_cast<std::size_t>(n), kOnCycle);
  VertexSet on = p.cycle_set();
  for (int x = 0; x < n; ++x) {
    if (on.test(x)) continue;
    CycleMask m = 0;
    for (int i = 0; i < 5; ++i)
      if (g.adjacent(x, cycle[static_cast<std::size_t>(i)])) m |= 1u << i;
    p.sets[m].set(x);
    p.class_of[static_cast<std::size_t>(x)] = m;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Claims

namespace {

ClaimVerdict holds(int claim) { return {claim, true, {}, {}}; }

ClaimVerdict fails(int claim, std::string detail, std::vector<int> witness) {
  return {claim, false, std::move(detail), std::move(witness)};
}

std::optional<std::vector<int>> find_edge(const Graph& g, const VertexSet& s) {
  for (int u : s) {
    VertexSet hit = g.neighbours(u) & s;
    int v = hit.next(u + 1);
    if (v != VertexSet::npos) return std::vector<int>{u, v};
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_non_edge(const Graph& g, const VertexSet& s) {
  for (int u : s)
    for (int v : s)
      if (u < v && !g.adjacent(u, v)) return std::vector<int>{u, v};
  return std::nullopt;
}

std::optional<std::vector<int>> find_non_edge_between(const Graph& g, const VertexSet& a,
                                                      const VertexSet& b) {
  for (int x : a)
    for (int y : b)
      if (x != y && !g.adjacent(x, y)) return std::vector<int>{x, y};
  return std::nullopt;
}

std::optional<std::vector<int>> find_edge_between(const Graph& g, const VertexSet& a,
                                                  const VertexSet& b) {
  for (int x : a) {
    VertexSet hit = g.neighbours(x) & b;
    if (hit.any()) return std::vector<int>{x, hit.first()};
  }
  return std::nullopt;
}

// A vertex on one side with two neighbours (or, for co-matchings, two
// non-neighbours) on the other.
std::optional<std::vector<int>> matching_violation(const Graph& g, const VertexSet& a,
                                                   const VertexSet& b, bool co) {
  for (int pass = 0; pass < 2; ++pass) {
    const VertexSet& from = pass == 0 ? a : b;
    const VertexSet& to = pass == 0 ? b : a;
    for (int x : from) {
      VertexSet hit = co ? (to - g.neighbours(x)) : (g.neighbours(x) & to);
      hit.reset(x);
      if (hit.count() >= 2) {
        int y = hit.first();
        return std::vector<int>{x, y, hit.next(y + 1)};
      }
    }
  }
  return std::nullopt;
}

const VertexSet& v_pair(const C5Partition& p, int i) { return p.at({i, i + 2}); }

ClaimVerdict claim_1(const Graph& g, const C5Partition& p) {
  if (auto e = find_edge(g, p.at(0))) return fails(1, "edge inside V{}", *e);
  return holds(1);
}

ClaimVerdict claim_2(const Graph&, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i) {
    for (int j : {i, i + 1}) {
      VertexSet u = p.at({j}) | p.at({i, i + 1});
      if (u.count() > 1)
        return fails(2, mask_name(cycle_mask({j})) + " ∪ " + mask_name(cycle_mask({i, i + 1})) +
                            " has " + std::to_string(u.count()) + " vertices",
                     u.to_vector());
    }
  }
  return holds(2);
}

ClaimVerdict claim_3(const Graph& g, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i)
    if (auto e = find_edge(g, v_pair(p, i)))
      return fails(3, "edge inside " + mask_name(cycle_mask({i, i + 2})), *e);
  return holds(3);
}

ClaimVerdict claim_4(const Graph& g, const C5Partition& p) {
  if (auto e = find_non_edge(g, p.at(31))) return fails(4, "non-edge inside V{1,2,3,4,5}", *e);
  return holds(4);
}

ClaimVerdict claim_5(const Graph&, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i) {
    CycleMask four = cycle_mask({i, i + 1, i + 2, i + 3});
    for (CycleMask three : {cycle_mask({i, i + 1, i + 3}), cycle_mask({i, i + 2, i + 3})}) {
      VertexSet u = p.at(four) | p.at(three);
      if (u.count() > 1)
        return fails(5, mask_name(four) + " ∪ " + mask_name(three) + " has " +
                            std::to_string(u.count()) + " vertices",
                     u.to_vector());
    }
  }
  return holds(5);
}

ClaimVerdict claim_6(const Graph& g, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i) {
    CycleMask m = cycle_mask({i, i + 1, i + 2});
    if (auto e = find_non_edge(g, p.at(m))) return fails(6, "non-edge inside " + mask_name(m), *e);
  }
  return holds(6);
}

ClaimVerdict claim_8(const Graph& g, const C5Partition& p) {
  if (auto e = find_non_edge_between(g, p.at(0), p.at(31)))
    return fails(8, "V{} is not complete to V{1,2,3,4,5}", *e);
  return holds(8);
}

ClaimVerdict claim_9(const Graph&, const C5Partition& p) {
  for (CycleMask s = 0; s < 32; ++s) {
    if (std::popcount(s) != 2 || !p.large(s)) continue;
    for (CycleMask t = 0; t < 32; ++t) {
      if (std::popcount(t) != 3 || !p.large(t)) continue;
      auto w = (p.at(s) | p.at(t)).to_vector();
      return fails(9, mask_name(s) + " and " + mask_name(t) + " are both large", w);
    }
  }
  return holds(9);
}

ClaimVerdict claim_10(const Graph& g, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i)
    if (auto e = find_non_edge_between(g, p.at(31), v_pair(p, i)))
      return fails(10, "V{1,2,3,4,5} is not complete to " + mask_name(cycle_mask({i, i + 2})), *e);
  return holds(10);
}

ClaimVerdict claim_11(const Graph& g, const C5Partition& p) {
  if (auto e = find_non_edge(g, p.at(31))) return fails(11, "V{1,2,3,4,5} is not a clique", *e);
  VertexSet rest = p.cycle_set();
  for (int i = 1; i <= 5; ++i) rest |= v_pair(p, i);
  if (auto e = find_non_edge_between(g, p.at(31), rest))
    return fails(11, "V{1,2,3,4,5} is not complete to the cycle and the V{i,i+2}", *e);
  return holds(11);
}

ClaimVerdict claim_12(const Graph& g, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i)
    if (auto w = matching_violation(g, v_pair(p, i), p.at(0), false))
      return fails(12, "edges between " + mask_name(cycle_mask({i, i + 2})) +
                           " and V{} are not a matching",
                   *w);
  return holds(12);
}

ClaimVerdict claim_13(const Graph& g, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      for (int x : v_pair(p, i))
        for (int y : g.neighbours(x) & p.at(0))
          for (int z : v_pair(p, j) - g.neighbours(y))
            if (!g.adjacent(x, z))
              return fails(13, "x in " + mask_name(cycle_mask({i, i + 2})) + " misses z in " +
                                   mask_name(cycle_mask({j, j + 2})),
                           {x, y, z});
    }
  return holds(13);
}

ClaimVerdict claim_14(const Graph& g, const C5Partition& p) {
  int n = g.order();
  const VertexSet& v0 = p.at(0);
  std::array<VertexSet, 5> vp;
  VertexSet within = v0;
  for (int i = 1; i <= 5; ++i) {
    vp[static_cast<std::size_t>(i - 1)] = VertexSet(n);
    for (int x : v_pair(p, i))
      if (g.neighbours(x).intersects(v0)) vp[static_cast<std::size_t>(i - 1)].set(x);
    within |= vp[static_cast<std::size_t>(i - 1)];
  }
  GraphBuilder b(n);
  for (auto [u, v] : g.edges())
    if (within.test(u) && within.test(v)) b.add_edge(u, v);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int x : vp[static_cast<std::size_t>(i)])
        for (int y : vp[static_cast<std::size_t>(j)]) {
          if (g.adjacent(x, y)) {
            b.remove_edge(x, y);
          } else {
            b.add_edge(x, y);
          }
        }
  Graph h = b.build();
  for (const auto& comp : components(h, within)) {
    if ((comp & v0).count() != 1)
      return fails(14, "component with " + std::to_string((comp & v0).count()) + " vertices of V{}",
                   comp.to_vector());
    for (int i = 0; i < 5; ++i)
      if ((comp & vp[static_cast<std::size_t>(i)]).count() > 1)
        return fails(14, "component with two vertices of " + mask_name(cycle_mask({i + 1, i + 3})) +
                             "'",
                     comp.to_vector());
  }
  return holds(14);
}

ClaimVerdict claim_15(const Graph& g, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i)
    if (auto w = matching_violation(g, v_pair(p, i), v_pair(p, i + 1), true))
      return fails(15, "edges between " + mask_name(cycle_mask({i, i + 2})) + " and " +
                           mask_name(cycle_mask({i + 1, i + 3})) + " are not a co-matching",
                   *w);
  return holds(15);
}

ClaimVerdict claim_16(const Graph& g, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i)
    for (int x : v_pair(p, i))
      for (int y : g.neighbours(x) & v_pair(p, i + 1))
        for (int z : v_pair(p, i + 3))
          if (g.adjacent(z, x) && g.adjacent(z, y))
            return fails(16, mask_name(cycle_mask({i + 3, i})) + " vertex complete to an edge",
                         {x, y, z});
  return holds(16);
}

ClaimVerdict claim_17(const Graph& g, const C5Partition& p) {
  for (int i = 1; i <= 5; ++i) {
    if (!p.large(cycle_mask({i, i + 2}))) continue;
    if (auto e = find_edge_between(g, v_pair(p, i - 1), v_pair(p, i + 1)))
      return fails(17, mask_name(cycle_mask({i, i + 2})) + " is large but " +
                           mask_name(cycle_mask({i - 1, i + 1})) + " meets " +
                           mask_name(cycle_mask({i + 1, i + 3})),
                   *e);
  }
  return holds(17);
}

}  // namespace

ClaimVerdict verify_claim(const Graph& g, const C5Partition& p, int claim) {
  switch (claim) {
    case 1: return claim_1(g, p);
    case 2: return claim_2(g, p);
    case 3: return claim_3(g, p);
    case 4: return claim_4(g, p);
    case 5: return claim_5(g, p);
    case 6: return claim_6(g, p);
    case 8: return claim_8(g, p);
    case 9: return claim_9(g, p);
    case 10: return claim_10(g, p);
    case 11: return claim_11(g, p);
    case 12: return claim_12(g, p);
    case 13: return claim_13(g, p);
    case 14: return claim_14(g, p);
    case 15: return claim_15(g, p);
    case 16: return claim_16(g, p);
    case 17: return claim_17(g, p);
    default:
      throw InvalidArgument("no structural claim " + std::to_string(claim));
  }
}

std::vector<ClaimVerdict> verify_structure_claims(const Graph& g, const C5Partition& p) {
  std::vector<ClaimVerdict> out;
  for (int c : {1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 13, 14, 15, 16, 17}) out.push_back(verify_claim(g, p, c));
  return out;
}

// ---------------------------------------------------------------------------
// Preprocessing

Colouring Preprocessed::extend(const Colouring& c) const {
  if (c.colour.size() != kept.size()) throw InvalidArgument("extend: colouring size mismatch");
  int n = static_cast<int>(kept.size() + log.size());
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < kept.size(); ++i)
    colour[static_cast<std::size_t>(kept[i])] = c.colour[i];
  for (auto it = log.rbegin(); it != log.rend(); ++it)
    colour[static_cast<std::size_t>(it->removed)] = colour[static_cast<std::size_t>(it->source)];
  return {colour, c.k};
}

namespace {

bool is_atom(const Graph& g) {
  if (g.order() <= 14) return is_atom_brute(g);
  return decompose_atoms(g).atoms.size() == 1;
}

}  // namespace

Preprocessed preprocess(const Graph& g, const C5Partition& p) {
  if (!is_atom(g)) throw InvalidArgument("preprocess: input has a clique separator");
  int n = g.order();
  Preprocessed out;
  VertexSet alive = g.vertices();

  for (int x : p.at(0)) {
    VertexSet miss = p.at(31) - g.neighbours(x);
    if (miss.any()) {
      out.log.push_back({ReductionStep::Kind::RemoveI, x, miss.first()});
      out.removed_i.push_back(x);
      alive.reset(x);
    }
  }

  VertexSet on = p.cycle_set();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u : alive) {
      VertexSet nu = g.neighbours(u) & alive;
      for (int v : alive) {
        if (v <= u || g.adjacent(u, v)) continue;
        if (nu != (g.neighbours(v) & alive)) continue;
        int drop = on.test(v) ? u : v;
        int keep = drop == u ? v : u;
        out.log.push_back({ReductionStep::Kind::RemoveTwin, drop, keep});
        alive.reset(drop);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }

  out.kept = alive.to_vector();
  out.reduced = induced_subgraph(g, alive);
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < out.kept.size(); ++i)
    local[static_cast<std::size_t>(out.kept[i])] = static_cast<int>(i);
  std::array<int, 5> cyc{};
  for (int i = 0; i < 5; ++i)
    cyc[static_cast<std::size_t>(i)] = local[static_cast<std::size_t>(p.cycle[static_cast<std::size_t>(i)])];
  out.partition = compute_c5_partition(out.reduced, cyc);
  return out;
}

// ---------------------------------------------------------------------------
// Case selection

CaseSelection select_case(const Graph& g0, const C5Partition& p0) {
  CaseSelection cs;
  Graph g = g0;
  C5Partition p = p0;
  bool large_three = false;
  for (CycleMask t = 0; t < 32; ++t)
    if (std::popcount(t) == 3 && p.large(t)) large_three = true;
  if (large_three) {
    const auto& c = p0.cycle;
    g = complement(g0);
    p = compute_c5_partition(g, {c[0], c[2], c[4], c[1], c[3]});
    cs.complemented = true;
    cs.notes.push_back("large V_T with |T| = 3: complemented, new cycle (v1,v3,v5,v2,v4)");
  }
  cs.cycle = p.cycle;

  bool all_empty = true;
  for (const auto& s : p.sets) all_empty = all_empty && s.empty();
  if (all_empty) cs.notes.push_back("C5 found, all V_S empty");

  VertexSet alive = g.vertices();
  for (CycleMask s = 0; s < 32; ++s) {
    int size = p.at(s).count();
    if (size > 0 && size < 3) {
      cs.small_sets.push_back(mask_name(s));
      alive -= p.at(s);
    }
  }
  for (CycleMask s = 1; s < 31; ++s) {
    bool pair = false;
    for (int i = 1; i <= 5; ++i) pair = pair || s == cycle_mask({i, i + 2});
    if (!pair && (p.at(s) & alive).any()) cs.notes.push_back("unexpected large set " + mask_name(s));
  }
  if ((p.at(31) & alive).any()) {
    cs.notes.push_back("V{1,2,3,4,5} split off by bipartite complementation");
    alive -= p.at(31);
  }
  VertexSet v0 = p.at(0) & alive;
  if (v0.any()) {
    VertexSet primed(g.order());
    for (int i = 1; i <= 5; ++i)
      for (int x : v_pair(p, i) & alive)
        if (g.neighbours(x).intersects(v0)) primed.set(x);
    cs.notes.push_back("V{} and its " + std::to_string(primed.count()) +
                       " neighbours in the V{i,i+2} split off");
    alive -= v0;
    alive -= primed;
  }

  std::array<VertexSet, 5> pairs;
  for (int i = 1; i <= 5; ++i) {
    VertexSet rest = v_pair(p, i) & alive;
    if (rest.any() && rest.count() < 3) {
      cs.small_sets.push_back(mask_name(cycle_mask({i, i + 2})));
      alive -= rest;
      rest = VertexSet(g.order());
    }
    pairs[static_cast<std::size_t>(i - 1)] = rest;
    if (rest.any()) cs.large.push_back(i);
  }
  auto at = [&](int i) -> const VertexSet& { return pairs[static_cast<std::size_t>(wrap(i) - 1)]; };
  auto is_large = [&](int i) { return at(i).any(); };

  std::size_t nl = cs.large.size();
  if (nl == 5) {
    cs.name = "case1";
  } else if (nl <= 2) {
    cs.name = "case3";
  } else {
    for (int a = 1; a <= 5 && !cs.rotation; ++a)
      if (is_large(a) && is_large(a + 1) && is_large(a + 2) && !is_large(a + 4)) {
        cs.name = "case2";
        cs.rotation = a;
      }
    for (int a = 1; a <= 5 && !cs.rotation; ++a)
      if (is_large(a) && is_large(a + 1) && is_large(a + 3) && !is_large(a + 2) && !is_large(a + 4)) {
        cs.rotation = a;
        const VertexSet& v13 = at(a);
        const VertexSet& v24 = at(a + 1);
        const VertexSet& v41 = at(a + 3);
        cs.name = "case4a";
        for (int x : v41) {
          VertexSet ny = g.neighbours(x) & v13;
          VertexSet nz = g.neighbours(x) & v24;
          if (ny.empty() || nz.empty()) continue;
          cs.name = "case4b";
          int y = ny.first();
          int z = nz.first();
          for (int y2 : v13 - VertexSet(g.order(), {y})) {
            VertexSet hit = g.neighbours(y2) & v24;
            hit.reset(z);
            if (hit.empty()) continue;
            std::array<int, 5> c2{x, y, hit.first(), y2, z};
            cs.second_cycle = c2;
            std::vector<int> order(c2.begin(), c2.end());
            cs.second_cycle_induced = is_induced_embedding(g, cycle_graph(5), order);
            break;
          }
          break;
        }
      }
    if (!cs.rotation) cs.name = "unclassified";
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Pipeline

bool StructureReport::all_claims_hold() const {
  for (const auto& a : atoms) {
    for (const auto& c : a.claims)
      if (!c.holds) return false;
    if (a.perfect && !*a.perfect) return false;
    if (a.selection.second_cycle && !a.selection.second_cycle_induced) return false;
  }
  return true;
}

NotInClass::NotInClass(FreenessWitness w)
    : InvalidArgument(std::string("graph contains an induced ") +
                      (w.pattern_index.value_or(0) == 0 ? "P2+P3" : "co-(P2+P3)")),
      witness_(std::move(w)) {}

const std::vector<Graph>& structure_patterns() {
  static const std::vector<Graph> pats = [] {
    Graph p = make_named(path_spec(2) + path_spec(3));
    return std::vector<Graph>{p, complement(p)};
  }();
  return pats;
}

StructuredResult colour_structured(const Graph& g, Budget budget) {
  if (g.order() > 40) throw InvalidArgument("colour_structured supports at most 40 vertices");
  auto w = is_free(g, structure_patterns());
  if (!w.free) throw NotInClass(std::move(w));

  StructuredResult out;
  auto dec = decompose_atoms(g);
  for (const auto& s : dec.separators) out.report.separators.push_back(s.to_vector());

  std::vector<Colouring> per_atom;
  for (const auto& atom : dec.atoms) {
    AtomReport ar;
    ar.vertices = atom.to_vector();
    auto to_g = [&](int v) { return ar.vertices[static_cast<std::size_t>(v)]; };
    Graph sub = induced_subgraph(g, atom);
    Colouring colouring;
    auto c5 = find_induced_c5(sub);
    if (!c5) {
      if (sub.order() <= 14) ar.perfect = is_perfect_small(sub);
      ar.selection.name = "perfect";
      auto chi = chromatic_number(sub, budget);
      if (chi.status == SolveStatus::BudgetExceeded) out.status = SolveStatus::BudgetExceeded;
      colouring = chi.colouring;
      if (ar.perfect && *ar.perfect && chi.status == SolveStatus::Solved &&
          max_clique(sub).omega != chi.chi)
        ar.perfect = false;
    } else {
      auto part = compute_c5_partition(sub, *c5);
      std::array<int, 5> cyc{};
      for (int i = 0; i < 5; ++i) cyc[static_cast<std::size_t>(i)] = to_g((*c5)[static_cast<std::size_t>(i)]);
      ar.cycle = cyc;
      for (CycleMask s = 0; s < 32; ++s)
        if (part.at(s).any()) ar.set_sizes.emplace_back(mask_name(s), part.at(s).count());
      ar.claims = verify_structure_claims(sub, part);

      auto pre = preprocess(sub, part);
      // Claim 8 is the post-state of removing I; check it on the graph after that step.
      VertexSet after_i = sub.vertices();
      for (int x : pre.removed_i) after_i.reset(x);
      {
        auto keep = after_i.to_vector();
        std::vector<int> local(static_cast<std::size_t>(sub.order()), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) local[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        std::array<int, 5> c{};
        for (int i = 0; i < 5; ++i) c[static_cast<std::size_t>(i)] = local[static_cast<std::size_t>((*c5)[static_cast<std::size_t>(i)])];
        Graph gi = induced_subgraph(sub, after_i);
        auto claim8 = verify_claim(gi, compute_c5_partition(gi, c), 8);
        for (int& v : claim8.witness) v = keep[static_cast<std::size_t>(v)];
        auto pos = std::find_if(ar.claims.begin(), ar.claims.end(), [](const ClaimVerdict& v) { return v.claim > 8; });
        ar.claims.insert(pos, claim8);
      }
      for (auto& c : ar.claims)
        for (int& v : c.witness) v = to_g(v);
      for (auto step : pre.log) {
        step.removed = to_g(step.removed);
        step.source = to_g(step.source);
        ar.log.push_back(step);
      }

      ar.selection = select_case(pre.reduced, pre.partition);
      auto red_to_g = [&](int v) { return to_g(pre.kept[static_cast<std::size_t>(v)]); };
      for (int& v : ar.selection.cycle) v = red_to_g(v);
      if (ar.selection.second_cycle)
        for (int& v : *ar.selection.second_cycle) v = red_to_g(v);

      auto chi = chromatic_number(pre.reduced, budget);
      if (chi.status == SolveStatus::BudgetExceeded) out.status = SolveStatus::BudgetExceeded;
      colouring = pre.extend(chi.colouring);
    }
    if (out.status == SolveStatus::BudgetExceeded) {
      out.report.atoms.push_back(std::move(ar));
      return out;
    }
    ar.chi = colouring.k;
    per_atom.push_back(colouring);
    out.report.atoms.push_back(std::move(ar));
  }

  out.colouring = merge_atom_colourings(g, dec, per_atom);
  out.report.chi = out.colouring.k;
  return out;
}

}  // namespace cofree
