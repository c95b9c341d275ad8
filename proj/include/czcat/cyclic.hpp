#ifndef CZCAT_CYCLIC_HPP_
#define CZCAT_CYCLIC_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

/// Exact model of a circle with N accumulation points a_1..a_N and, between
/// a_i and a_{i+1}, a copy of the integers Marked(i, k).  Walking
/// anticlockwise we meet a_1, segment 1, a_2, segment 2, ..., a_N, segment N
/// and then a_1 again.  All values are immutable; all operations are pure.
namespace czcat {

enum class PointKind { Marked, Acc };

/// A point of the closed circle Z-bar: a marked point (segment, index) or an
/// accumulation point Acc(segment) sitting at the start of its segment.
struct BoundaryPoint {
  PointKind kind = PointKind::Acc;
  int segment = 1;          // 1-based, normalized modulo N on construction
  long long index = 0;      // only meaningful for Marked; 0 for Acc

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

/// An anticlockwise interval from lo to hi with open/closed ends.
/// When lo == hi the interval is {lo} if both ends are closed and empty
/// otherwise.
struct Interval {
  BoundaryPoint lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;
};

/// Finite union of intervals grouped into blocks; the computational form of
/// per-block subcategories (aisles, coaisles and their shifts).
struct IntervalSystem {
  struct Block {
    int id = 0;
    std::vector<Interval> intervals;
  };
  std::vector<Block> blocks;
};

/// Ambient circle: fixes N and provides all order/arithmetic operations.
class Circle {
 public:
  explicit Circle(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Circle: need at least one accumulation point");
  }

  int n() const { return n_; }

  int normalize_segment(int s) const {
    int r = (s - 1) % n_;
    if (r < 0) r += n_;
    return r + 1;
  }

  BoundaryPoint marked(int segment, long long index) const {
    return BoundaryPoint{PointKind::Marked, normalize_segment(segment), index};
  }

  BoundaryPoint acc(int segment) const {
    return BoundaryPoint{PointKind::Acc, normalize_segment(segment), 0};
  }

  /// Successor: next point anticlockwise within the marked chain.
  /// Accumulation points are their own successors and predecessors.
  BoundaryPoint succ(const BoundaryPoint& p) const {
    if (p.kind == PointKind::Acc) return p;
    return BoundaryPoint{PointKind::Marked, p.segment, p.index + 1};
  }

  BoundaryPoint pred(const BoundaryPoint& p) const {
    if (p.kind == PointKind::Acc) return p;
    return BoundaryPoint{PointKind::Marked, p.segment, p.index - 1};
  }

  /// n-fold succ (n >= 0) or pred (n < 0).
  BoundaryPoint iterate(const BoundaryPoint& p, long long n) const {
    if (p.kind == PointKind::Acc) return p;
    return BoundaryPoint{PointKind::Marked, p.segment, p.index + n};
  }

  /// Linearization key anchored at Acc(1): compares points by the order in
  /// which they are met walking anticlockwise from a_1.
  std::tuple<int, int, long long> key(const BoundaryPoint& p) const {
    return {p.segment, p.kind == PointKind::Acc ? 0 : 1,
            p.kind == PointKind::Acc ? 0 : p.index};
  }

  bool key_less(const BoundaryPoint& a, const BoundaryPoint& b) const {
    return key(a) < key(b);
  }

  /// True iff the points are pairwise distinct and appear in anticlockwise
  /// cyclic order.  Realized as: exactly one circular descent of the
  /// linearization keys.
  bool cyclically_ordered(const std::vector<BoundaryPoint>& pts) const {
    const size_t m = pts.size();
    if (m < 2) throw std::invalid_argument("cyclically_ordered: need at least two points");
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j)
        if (pts[i] == pts[j]) return false;
    int descents = 0;
    for (size_t i = 0; i < m; ++i) {
      if (key(pts[(i + 1) % m]) < key(pts[i])) ++descents;
    }
    return descents == 1;
  }

  bool in_interval(const BoundaryPoint& p, const Interval& I) const {
    if (I.lo == I.hi) return I.lo_closed && I.hi_closed && p == I.lo;
    if (p == I.lo) return I.lo_closed;
    if (p == I.hi) return I.hi_closed;
    return cyclically_ordered({I.lo, p, I.hi});
  }

  bool in_system_block(const BoundaryPoint& p, const IntervalSystem::Block& b) const {
    for (const Interval& iv : b.intervals)
      if (in_interval(p, iv)) return true;
    return false;
  }

  /// Some block of the system contains both points.  Returns the block id,
  /// or nothing.
  template <typename P0, typename P1>
  std::tuple<bool, int> system_block_containing(const IntervalSystem& sys, const P0& p,
                                                const P1& q) const {
    for (const auto& b : sys.blocks)
      if (in_system_block(p, b) && in_system_block(q, b)) return {true, b.id};
    return {false, -1};
  }

  /// Limit of an endpoint track: a constant track stays at its start, an
  /// advancing track inside segment i converges to a_{i+1}.
  BoundaryPoint limit_of_track(const BoundaryPoint& start, bool advancing) const {
    if (!advancing) return start;
    if (start.kind == PointKind::Acc)
      throw std::invalid_argument("limit_of_track: advancing track must start at a marked point");
    return acc(start.segment + 1);
  }

 private:
  int n_;
};

}  // namespace czcat

#endif  // CZCAT_CYCLIC_HPP_
