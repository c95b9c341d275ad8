#ifndef CZCAT_TSTRUCTURE_HPP_
#define CZCAT_TSTRUCTURE_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "czcat/category.hpp"
#include "czcat/cyclic.hpp"
#include "czcat/ncpartition.hpp"

/// Decorated non-crossing partitions and the t-structures they classify:
/// aisle/coaisle interval systems with shifts, equivalence, right
/// non-degeneracy, and largest-aisle extraction.
namespace czcat {

enum class DecKind {
  AtLeft,     // x_i = a_i      (allowed only when i is a singleton)
  AtRight,    // x_i = a_{i+1}  (allowed only when i is an adjacency)
  InSegment,  // x_i a marked point of segment i
};

struct Decoration {
  DecKind kind = DecKind::InSegment;
  long long index = 0;  // used when kind == InSegment
  friend bool operator==(const Decoration&, const Decoration&) = default;
};

/// A non-crossing partition of the accumulation indices together with one
/// decoration point x_i per segment.
struct DecoratedNC {
  NCPartition partition;
  std::vector<Decoration> decoration;  // decoration[i-1] describes index i

  int n() const { return partition.n; }
  const Decoration& dec(int i) const {
    // segments are cyclic, so normalize
    int r = (i - 1) % partition.n;
    if (r < 0) r += partition.n;
    return decoration[static_cast<size_t>(r)];
  }
  friend bool operator==(const DecoratedNC&, const DecoratedNC&) = default;
};

/// The decoration value x_i as a boundary point.
inline BoundaryPoint decoration_point(const Circle& c, const DecoratedNC& t, int i) {
  const Decoration& d = t.dec(i);
  switch (d.kind) {
    case DecKind::AtLeft: return c.acc(i);
    case DecKind::AtRight: return c.acc(i + 1);
    case DecKind::InSegment: return c.marked(i, d.index);
  }
  throw std::logic_error("decoration_point: bad kind");
}

inline bool decoration_valid(const DecoratedNC& t) {
  if (static_cast<int>(t.decoration.size()) != t.n()) return false;
  if (!is_noncrossing(t.partition)) return false;
  for (int i = 1; i <= t.n(); ++i) {
    switch (t.dec(i).kind) {
      case DecKind::AtLeft:
        if (!t.partition.is_singleton(i)) return false;
        break;
      case DecKind::AtRight:
        if (!t.partition.is_adjacency(i)) return false;
        break;
      case DecKind::InSegment:
        break;
    }
  }
  return true;
}

/// Sigma^p of the aisle: per block B of P, intervals (a_i, x_i^(-p)] for
/// i in B.  An AtLeft decoration gives (a_i, a_i] which is empty by the
/// interval convention.
inline IntervalSystem aisle_system(const Circle& c, const DecoratedNC& t, long long p = 0) {
  IntervalSystem sys;
  for (size_t bi = 0; bi < t.partition.blocks.size(); ++bi) {
    IntervalSystem::Block blk{static_cast<int>(bi), {}};
    for (int i : t.partition.blocks[bi]) {
      if (c.n() == 1 && t.dec(i).kind == DecKind::AtRight) {
        // (a_1, a_1] wraps over the whole boundary; split so lo != hi
        blk.intervals.push_back(Interval{c.acc(1), c.marked(1, 0), false, true});
        blk.intervals.push_back(Interval{c.marked(1, 0), c.acc(1), false, true});
        continue;
      }
      blk.intervals.push_back(Interval{c.acc(i), c.iterate(decoration_point(c, t, i), -p),
                                       false, true});
    }
    sys.blocks.push_back(std::move(blk));
  }
  return sys;
}

/// Sigma^p of the coaisle: per block B of the Kreweras complement of P,
/// intervals [x_i^(-p-1), a_{i+1}) for i in B.  AtRight gives the empty
/// interval [a_{i+1}, a_{i+1}); AtLeft gives the full shift-invariant
/// segment [a_i, a_{i+1}).
inline IntervalSystem coaisle_system(const Circle& c, const DecoratedNC& t, long long p = 0) {
  IntervalSystem sys;
  NCPartition kc = kreweras(t.partition);
  for (size_t bi = 0; bi < kc.blocks.size(); ++bi) {
    IntervalSystem::Block blk{static_cast<int>(bi), {}};
    for (int i : kc.blocks[bi]) {
      if (c.n() == 1 && t.dec(i).kind == DecKind::AtLeft) {
        // [a_1, a_1) wraps over the whole boundary; split so lo != hi
        blk.intervals.push_back(Interval{c.acc(1), c.marked(1, 0), true, true});
        blk.intervals.push_back(Interval{c.marked(1, 0), c.acc(1), false, false});
        continue;
      }
      blk.intervals.push_back(Interval{c.iterate(decoration_point(c, t, i), -p - 1),
                                       c.acc(i + 1), true, false});
    }
    sys.blocks.push_back(std::move(blk));
  }
  return sys;
}

inline bool system_member(const Circle& c, const FormalObject& obj, const IntervalSystem& sys) {
  for (const Arc& s : obj.summands) {
    auto [ok, id] = c.system_block_containing(sys, s.a, s.b);
    (void)id;
    if (!ok) return false;
  }
  return true;
}

inline bool system_member(const Circle& c, const Arc& arc, const IntervalSystem& sys) {
  auto [ok, id] = c.system_block_containing(sys, arc.a, arc.b);
  (void)id;
  return ok;
}

inline bool aisle_member(const Circle& c, const FormalObject& obj, const DecoratedNC& t,
                         long long p = 0) {
  return system_member(c, obj, aisle_system(c, t, p));
}

inline bool aisle_member(const Circle& c, const Arc& arc, const DecoratedNC& t,
                         long long p = 0) {
  return system_member(c, arc, aisle_system(c, t, p));
}

inline bool coaisle_member(const Circle& c, const FormalObject& obj, const DecoratedNC& t,
                           long long p = 0) {
  return system_member(c, obj, coaisle_system(c, t, p));
}

inline bool coaisle_member(const Circle& c, const Arc& arc, const DecoratedNC& t,
                           long long p = 0) {
  return system_member(c, arc, coaisle_system(c, t, p));
}

/// Two decorated partitions give the same t-structure iff they share the
/// partition and the set of indices decorated inside their segment.
inline bool tstructs_equivalent(const DecoratedNC& t1, const DecoratedNC& t2) {
  if (!(t1.partition == t2.partition)) return false;
  for (int i = 1; i <= t1.n(); ++i)
    if ((t1.dec(i).kind == DecKind::InSegment) != (t2.dec(i).kind == DecKind::InSegment))
      return false;
  return true;
}

inline bool is_right_nondegenerate(const DecoratedNC& t) {
  for (const Decoration& d : t.decoration)
    if (d.kind == DecKind::AtLeft) return false;
  return true;
}

/// A representative of the largest aisle contained in the coaisle of t.
/// S is the set of AtLeft indices; the new partition groups S along the
/// Kreweras complement of P and isolates everything else, and the new
/// decoration puts x_i at Marked(i, 0) on S and at a_i off S.
inline DecoratedNC largest_aisle_in_coaisle(const DecoratedNC& t) {
  std::set<int> s;
  for (int i = 1; i <= t.n(); ++i)
    if (t.dec(i).kind == DecKind::AtLeft) s.insert(i);
  std::vector<std::vector<int>> blocks;
  for (const auto& b : kreweras(t.partition).blocks) {
    std::vector<int> meet;
    for (int e : b)
      if (s.count(e)) meet.push_back(e);
    if (!meet.empty()) blocks.push_back(std::move(meet));
  }
  for (int i = 1; i <= t.n(); ++i)
    if (!s.count(i)) blocks.push_back({i});
  DecoratedNC out;
  out.partition = NCPartition::make(t.n(), std::move(blocks));
  out.decoration.resize(static_cast<size_t>(t.n()));
  for (int i = 1; i <= t.n(); ++i)
    out.decoration[static_cast<size_t>(i - 1)] =
        s.count(i) ? Decoration{DecKind::InSegment, 0} : Decoration{DecKind::AtLeft, 0};
  return out;
}

/// Membership in Y cap Sigma^r Y-hat, where Y-hat is the coaisle paired
/// with the largest aisle inside Y.
inline bool rndg_reduction_member(const Circle& c, const Arc& arc, const DecoratedNC& t,
                                  long long r) {
  return coaisle_member(c, arc, t, 0) &&
         coaisle_member(c, arc, largest_aisle_in_coaisle(t), r);
}

}  // namespace czcat

#endif  // CZCAT_TSTRUCTURE_HPP_
