#include "mcov/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "mcov/graph6.hpp"

namespace mcov {

namespace {

// Canonical labeling by equitable refinement plus individualization, taking
// the minimum graph6 encoding over the leaves of the search tree. Ordered
// partitions are kept flat: `perm` lists vertices in cell sequence and
// `cell_start[p]` is the first position of the cell containing position p.
struct Partition {
  std::vector<int> perm;
  std::vector<int> pos;         // inverse of perm
  std::vector<int> cell_start;  // per position

  explicit Partition(int n)
      : perm(static_cast<std::size_t>(n)),
        pos(static_cast<std::size_t>(n)),
        cell_start(static_cast<std::size_t>(n), 0) {
    for (int i = 0; i < n; ++i) {
      perm[static_cast<std::size_t>(i)] = i;
      pos[static_cast<std::size_t>(i)] = i;
    }
  }

  int cell_end(int start) const {
    int n = static_cast<int>(perm.size());
    int e = start;
    while (e < n && cell_start[static_cast<std::size_t>(e)] == start) ++e;
    return e;
  }
};

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::uint64_t> adj;
  std::string best;  // graph6 body of the best labeling (header excluded)

  explicit CanonSearch(const Graph& graph)
      : g(graph), n(graph.order()), adj(static_cast<std::size_t>(n)) {
    for (Vertex v = 0; v < n; ++v)
      adj[static_cast<std::size_t>(v)] = g.adjacency_mask(v);
  }

  void refine(Partition& p) const {
    std::vector<int> queue;
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; s = p.cell_end(s)) {
      queue.push_back(s);
      queued[static_cast<std::size_t>(s)] = 1;
    }
    std::vector<int> counts(static_cast<std::size_t>(n));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int s = queue[qi];
      queued[static_cast<std::size_t>(s)] = 0;
      if (p.cell_start[static_cast<std::size_t>(s)] != s) continue;  // stale
      std::uint64_t splitter = 0;
      for (int q = s; q < p.cell_end(s); ++q)
        splitter |= 1ull << p.perm[static_cast<std::size_t>(q)];
      for (int cs = 0; cs < n;) {
        int ce = p.cell_end(cs);
        if (ce - cs > 1) {
          int lo = 64, hi = -1;
          for (int q = cs; q < ce; ++q) {
            int c = std::popcount(
                adj[static_cast<std::size_t>(
                    p.perm[static_cast<std::size_t>(q)])] &
                splitter);
            counts[static_cast<std::size_t>(q)] = c;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo != hi) {
            // Stable bucket the cell by count, ascending.
            std::vector<int> order(
                p.perm.begin() + cs, p.perm.begin() + ce);
            std::vector<int> cnt_of(order.size());
            for (std::size_t i = 0; i < order.size(); ++i)
              cnt_of[i] = counts[static_cast<std::size_t>(cs) + i];
            std::vector<std::size_t> idx(order.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::stable_sort(idx.begin(), idx.end(),
                             [&](std::size_t a, std::size_t b) {
                               return cnt_of[a] < cnt_of[b];
                             });
            int q = cs;
            int fragment_start = cs;
            int prev = cnt_of[idx[0]];
            for (std::size_t i = 0; i < idx.size(); ++i, ++q) {
              if (cnt_of[idx[i]] != prev) {
                fragment_start = q;
                prev = cnt_of[idx[i]];
              }
              p.perm[static_cast<std::size_t>(q)] = order[idx[i]];
              p.pos[static_cast<std::size_t>(order[idx[i]])] = q;
              p.cell_start[static_cast<std::size_t>(q)] = fragment_start;
            }
            for (int f = cs; f < ce; f = p.cell_end(f))
              if (!queued[static_cast<std::size_t>(f)]) {
                queue.push_back(f);
                queued[static_cast<std::size_t>(f)] = 1;
              }
          }
        }
        cs = ce;
      }
    }
  }

  std::string leaf_key(const Partition& p) const {
    std::string out;
    int acc = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
      std::uint64_t col_adj =
          adj[static_cast<std::size_t>(p.perm[static_cast<std::size_t>(col)])];
      for (int row = 0; row < col; ++row) {
        int bit = (col_adj >>
                   p.perm[static_cast<std::size_t>(row)]) & 1ull
                      ? 1
                      : 0;
        acc = acc << 1 | bit;
        if (++filled == 6) {
          out.push_back(static_cast<char>(63 + acc));
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
  }

  // Bits of the encoding fixed by the leading singleton cells. Sound to
  // prune on: cell boundaries never move once all earlier cells are
  // singletons, so every leaf below shares this prefix.
  bool prefix_beats_best(const Partition& p) const {
    if (best.empty()) return true;
    int fixed = 0;
    while (fixed < n && p.cell_end(fixed) == fixed + 1) ++fixed;
    long bits = static_cast<long>(fixed) * (fixed - 1) / 2;
    long full_bytes = bits / 6;
    if (full_bytes == 0) return true;
    std::string partial;
    int acc = 0, filled = 0;
    for (int col = 1; col < fixed && static_cast<long>(partial.size()) < full_bytes;
         ++col) {
      std::uint64_t col_adj =
          adj[static_cast<std::size_t>(p.perm[static_cast<std::size_t>(col)])];
      for (int row = 0; row < col; ++row) {
        acc = acc << 1 |
              (((col_adj >> p.perm[static_cast<std::size_t>(row)]) & 1ull)
                   ? 1
                   : 0);
        if (++filled == 6) {
          partial.push_back(static_cast<char>(63 + acc));
          acc = 0;
          filled = 0;
          if (static_cast<long>(partial.size()) == full_bytes) break;
        }
      }
    }
    return partial <= best.substr(0, partial.size());
  }

  void run(Partition p) {
    refine(p);
    if (!prefix_beats_best(p)) return;
    int target = -1;
    for (int s = 0; s < n; s = p.cell_end(s))
      if (p.cell_end(s) - s > 1) {
        target = s;
        break;
      }
    if (target == -1) {
      std::string key = leaf_key(p);
      if (best.empty() || key < best) best = std::move(key);
      return;
    }
    int end = p.cell_end(target);
    std::vector<int> members(p.perm.begin() + target, p.perm.begin() + end);
    std::sort(members.begin(), members.end());
    for (int v : members) {
      Partition child = p;
      // Move v to the front of its cell and split it off.
      int vp = child.pos[static_cast<std::size_t>(v)];
      int first = child.perm[static_cast<std::size_t>(target)];
      std::swap(child.perm[static_cast<std::size_t>(target)],
                child.perm[static_cast<std::size_t>(vp)]);
      child.pos[static_cast<std::size_t>(v)] = target;
      child.pos[static_cast<std::size_t>(first)] = vp;
      for (int q = target + 1; q < end; ++q)
        child.cell_start[static_cast<std::size_t>(q)] = target + 1;
      run(std::move(child));
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() == 0) return to_graph6(g);
  CanonSearch search(g);
  search.run(Partition(g.order()));
  std::string out;
  out.push_back(static_cast<char>(63 + g.order()));
  out += search.best;
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace mcov
