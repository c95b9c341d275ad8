#ifndef CZCAT_NCPARTITION_HPP_
#define CZCAT_NCPARTITION_HPP_

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace czcat {

/// Partition of {1, ..., n} into disjoint nonempty blocks.  Blocks are kept
/// sorted (elements ascending, blocks by minimum) so partitions compare by
/// value.
struct NCPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  static NCPartition make(int n, std::vector<std::vector<int>> blocks) {
    NCPartition p{n, std::move(blocks)};
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    size_t count = 0;
    for (auto& b : p.blocks) {
      if (b.empty()) throw std::invalid_argument("NCPartition: empty block");
      std::sort(b.begin(), b.end());
      for (int e : b) {
        if (e < 1 || e > n || seen[static_cast<size_t>(e)])
          throw std::invalid_argument("NCPartition: not a partition of [n]");
        seen[static_cast<size_t>(e)] = true;
        ++count;
      }
    }
    if (count != static_cast<size_t>(n))
      throw std::invalid_argument("NCPartition: does not cover [n]");
    std::sort(p.blocks.begin(), p.blocks.end());
    return p;
  }

  static NCPartition finest(int n) {
    std::vector<std::vector<int>> bs;
    for (int i = 1; i <= n; ++i) bs.push_back({i});
    return make(n, std::move(bs));
  }

  static NCPartition full(int n) {
    std::vector<int> b(static_cast<size_t>(n));
    std::iota(b.begin(), b.end(), 1);
    return make(n, {b});
  }

  int block_of(int i) const {
    for (size_t bi = 0; bi < blocks.size(); ++bi)
      if (std::binary_search(blocks[bi].begin(), blocks[bi].end(), i))
        return static_cast<int>(bi);
    throw std::out_of_range("NCPartition::block_of");
  }

  bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

  /// i is a singleton when {i} is a block on its own.
  bool is_singleton(int i) const { return blocks[static_cast<size_t>(block_of(i))].size() == 1; }

  /// i is an adjacency when i and i+1 (cyclically) share a block.
  bool is_adjacency(int i) const { return same_block(i, i % n + 1); }

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
};

/// No i < k < j < l with i, j in one block and k, l in another.  Detected as
/// an A B A B pattern (either role order) in the merged scan of two blocks.
inline bool is_noncrossing(const NCPartition& p) {
  const size_t m = p.blocks.size();
  for (size_t x = 0; x < m; ++x) {
    for (size_t y = x + 1; y < m; ++y) {
      // Walk 1..n recording which of the two blocks each element belongs to;
      // three alternations means a crossing.
      int changes = 0, last = 0;  // 1 = block x, 2 = block y
      for (int e = 1; e <= p.n; ++e) {
        int cur = 0;
        if (std::binary_search(p.blocks[x].begin(), p.blocks[x].end(), e)) cur = 1;
        else if (std::binary_search(p.blocks[y].begin(), p.blocks[y].end(), e)) cur = 2;
        if (cur != 0 && cur != last) {
          ++changes;
          last = cur;
        }
      }
      if (changes >= 4) return false;  // e.g. x y x y
    }
  }
  return true;
}

namespace detail {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

inline NCPartition from_union_find(int n, UnionFind& uf) {
  std::vector<std::vector<int>> groups(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) groups[static_cast<size_t>(uf.find(i))].push_back(i + 1);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return NCPartition::make(n, std::move(blocks));
}
}  // namespace detail

/// Kreweras complement: place a label i' between i and i+1; the complement
/// is the coarsest partition of the primed labels whose union with P stays
/// non-crossing, read back on {1..n} via i' -> i.  Two primed labels i' < j'
/// join exactly when no block of P has elements both inside {i+1..j} and
/// outside it.
inline NCPartition kreweras(const NCPartition& p) {
  detail::UnionFind uf(p.n);
  for (int i = 1; i <= p.n; ++i) {
    for (int j = i + 1; j <= p.n; ++j) {
      bool separated = false;
      for (const auto& b : p.blocks) {
        bool inside = false, outside = false;
        for (int e : b) {
          if (e > i && e <= j) inside = true;
          else outside = true;
        }
        if (inside && outside) { separated = true; break; }
      }
      if (!separated) uf.unite(i - 1, j - 1);
    }
  }
  return detail::from_union_find(p.n, uf);
}

/// Join in the lattice of non-crossing partitions: the plain partition join
/// (transitive closure of overlaps) followed by merging crossing blocks
/// until the result is non-crossing.
inline NCPartition nc_join(const NCPartition& p1, const NCPartition& p2) {
  if (p1.n != p2.n) throw std::invalid_argument("nc_join: mismatched n");
  detail::UnionFind uf(p1.n);
  for (const auto& b : p1.blocks)
    for (size_t i = 1; i < b.size(); ++i) uf.unite(b[0] - 1, b[i] - 1);
  for (const auto& b : p2.blocks)
    for (size_t i = 1; i < b.size(); ++i) uf.unite(b[0] - 1, b[i] - 1);
  NCPartition cur = detail::from_union_find(p1.n, uf);
  for (;;) {
    bool merged = false;
    for (size_t x = 0; x < cur.blocks.size() && !merged; ++x) {
      for (size_t y = x + 1; y < cur.blocks.size() && !merged; ++y) {
        int changes = 0, last = 0;
        for (int e = 1; e <= cur.n; ++e) {
          int c = 0;
          if (std::binary_search(cur.blocks[x].begin(), cur.blocks[x].end(), e)) c = 1;
          else if (std::binary_search(cur.blocks[y].begin(), cur.blocks[y].end(), e)) c = 2;
          if (c != 0 && c != last) { ++changes; last = c; }
        }
        if (changes >= 4) {
          detail::UnionFind uf2(cur.n);
          for (const auto& b : cur.blocks)
            for (size_t i = 1; i < b.size(); ++i) uf2.unite(b[0] - 1, b[i] - 1);
          uf2.unite(cur.blocks[x][0] - 1, cur.blocks[y][0] - 1);
          cur = detail::from_union_find(cur.n, uf2);
          merged = true;
        }
      }
    }
    if (!merged) return cur;
  }
}

/// All partitions of [n] as restricted growth strings; test utility kept in
/// the library because the CLI enumeration commands reuse it.
inline std::vector<NCPartition> all_partitions(int n) {
  std::vector<NCPartition> out;
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  for (;;) {
    int maxv = 0;
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) {
      int v = rgs[static_cast<size_t>(i)];
      if (v >= static_cast<int>(blocks.size())) blocks.emplace_back();
      blocks[static_cast<size_t>(v)].push_back(i + 1);
      maxv = std::max(maxv, v);
    }
    out.push_back(NCPartition::make(n, std::move(blocks)));
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[static_cast<size_t>(j)]);
      if (rgs[static_cast<size_t>(i)] <= cap) { ++rgs[static_cast<size_t>(i)]; break; }
      rgs[static_cast<size_t>(i)] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

inline std::vector<NCPartition> all_noncrossing_partitions(int n) {
  std::vector<NCPartition> out;
  for (auto& p : all_partitions(n))
    if (is_noncrossing(p)) out.push_back(std::move(p));
  return out;
}

}  // namespace czcat

#endif  // CZCAT_NCPARTITION_HPP_
