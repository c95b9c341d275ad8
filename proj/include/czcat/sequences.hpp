#ifndef CZCAT_SEQUENCES_HPP_
#define CZCAT_SEQUENCES_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "czcat/category.hpp"
#include "czcat/tstructure.hpp"

/// Metrics induced by a t-structure, morphism lengths, and symbolic
/// N-indexed sequences of arcs (threads and their direct sums, fans):
/// entries, step cones, module colimits, Cauchy and compact-support tests.
namespace czcat {

/// Metric from a t-structure: ball(t) = Sigma^{-t} coaisle for the coaisle
/// metric, Sigma^{t} aisle for the aisle metric; ball(0) is everything.
struct MetricSpec {
  enum class Kind { Coaisle, Aisle };
  Kind kind = Kind::Coaisle;
  DecoratedNC t;
};

inline IntervalSystem metric_ball_system(const Circle& c, const MetricSpec& m, long long t) {
  if (t < 0) throw std::invalid_argument("metric_ball_system: t must be >= 0");
  return m.kind == MetricSpec::Kind::Coaisle ? coaisle_system(c, m.t, -t)
                                             : aisle_system(c, m.t, t);
}

inline bool in_metric_ball(const Circle& c, const FormalObject& obj, const MetricSpec& m,
                           long long t) {
  if (t < 0) throw std::invalid_argument("in_metric_ball: t must be >= 0");
  if (t == 0) return true;
  return system_member(c, obj, metric_ball_system(c, m, t));
}

/// Length of a morphism: inf { 1/(t+1) : cone(f) in ball(t) }.  The search
/// is bounded by t_max; when the cone is still inside ball(t_max) the true
/// length is only known to be <= 1/(t_max+2) and resolved is false.
struct LengthResult {
  Rational value;
  bool resolved = true;
};

inline LengthResult morphism_length(const Circle& c, const CanonicalMorphism& f,
                                    const MetricSpec& m, long long t_max) {
  FormalObject cf = cone(c, f);
  if (cf.is_zero()) return {Rational(0), true};
  long long best = 0;  // ball(0) always contains the cone
  for (long long t = 1; t <= t_max; ++t) {
    if (!in_metric_ball(c, cf, m, t)) break;
    best = t;
  }
  if (best == t_max) return {Rational(1, t_max + 2), false};
  return {Rational(1, best + 1), true};
}

/// One endpoint of a symbolic sequence: stays at start or advances one step
/// per index.
struct EndpointTrack {
  BoundaryPoint start;
  bool advancing = false;

  BoundaryPoint at(const Circle& c, long long n) const {
    return advancing ? c.iterate(start, n) : start;
  }
  BoundaryPoint limit(const Circle& c) const { return c.limit_of_track(start, advancing); }
};

/// An N-indexed sequence of (possibly degenerate) arcs whose endpoints move
/// along two tracks, with canonical morphisms as step maps.
struct ThreadSequence {
  EndpointTrack track0, track1;
  long long offset = 1;  // first index
};

inline std::optional<Arc> thread_entry(const Circle& c, const ThreadSequence& s, long long n) {
  if (n < s.offset) throw std::invalid_argument("thread_entry: index before offset");
  return make_arc(c, s.track0.at(c, n), s.track1.at(c, n));
}

/// Cone of the composite step map entry(m) -> entry(m'):
/// {pred(track0(m)), track0(m')} + {pred(track1(m)), track1(m')} with
/// degenerate summands dropped.
inline FormalObject thread_cone(const Circle& c, const ThreadSequence& s, long long m,
                                long long m2) {
  if (!(s.offset <= m && m < m2)) throw std::invalid_argument("thread_cone: need offset <= m < m'");
  FormalObject out;
  if (auto a = make_arc(c, c.pred(s.track0.at(c, m)), s.track0.at(c, m2)))
    out.summands.push_back(*a);
  if (auto a = make_arc(c, c.pred(s.track1.at(c, m)), s.track1.at(c, m2)))
    out.summands.push_back(*a);
  out.normalize(c);
  return out;
}

/// Module colimit of a thread: the arc of Z-bar spanned by the two track
/// limits, or zero when both tracks run into the same accumulation point.
inline std::optional<Arc> mocolim_thread(const Circle& c, const ThreadSequence& s) {
  BoundaryPoint l0 = s.track0.limit(c), l1 = s.track1.limit(c);
  return make_arc(c, l0, l1);
}

inline bool is_null_thread(const Circle& c, const ThreadSequence& s) {
  return !mocolim_thread(c, s).has_value();
}

/// Direct sum of threads.
struct FanSequence {
  std::vector<ThreadSequence> threads;
};

inline FanSequence component(const FanSequence& f, const std::vector<int>& selector) {
  FanSequence out;
  for (int i : selector) out.threads.push_back(f.threads.at(static_cast<size_t>(i)));
  return out;
}

/// Reindexed view of a thread along a strictly increasing index sequence.
/// Module colimits are invariant under subsequencing.
struct SubsequencedThread {
  ThreadSequence base;
  std::vector<long long> indices;

  std::optional<Arc> entry(const Circle& c, size_t k) const {
    return thread_entry(c, base, indices.at(k));
  }
  FormalObject cone(const Circle& c, size_t k, size_t k2) const {
    return thread_cone(c, base, indices.at(k), indices.at(k2));
  }
  std::optional<Arc> mocolim(const Circle& c) const { return mocolim_thread(c, base); }
};

inline SubsequencedThread subsequence(const ThreadSequence& s,
                                      std::vector<long long> indices) {
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < s.offset || (i > 0 && indices[i] <= indices[i - 1]))
      throw std::invalid_argument("subsequence: indices must be strictly increasing from offset");
  }
  return SubsequencedThread{s, std::move(indices)};
}

/// Closed-form Cauchy test for the coaisle metric of t: every advancing
/// track endpoint with limit in (a_i, a_{i+1}] needs x_i != a_{i+1}, i.e.
/// the decoration of its segment must not sit AtRight.
inline bool is_cauchy_fan(const Circle& c, const FanSequence& f, const DecoratedNC& t) {
  (void)c;
  for (const ThreadSequence& s : f.threads) {
    for (const EndpointTrack* tr : {&s.track0, &s.track1}) {
      if (!tr->advancing) continue;
      if (tr->start.kind != PointKind::Marked)
        throw std::invalid_argument("is_cauchy_fan: advancing track must start at a marked point");
      if (t.dec(tr->start.segment).kind == DecKind::AtRight) return false;
    }
  }
  return true;
}

namespace detail {
/// Segment index k with p in [a_k, a_{k+1}).
inline int left_segment_of(const BoundaryPoint& p) {
  return p.segment;  // Marked(i, .) lies in (a_i, a_{i+1}); Acc(i) is a_i itself
}
}  // namespace detail

/// Closed-form compact-support test for the coaisle metric of t: each thread
/// with nonzero module colimit {f, f'}, f in [a_k, a_{k+1}) and
/// f' in [a_l, a_{l+1}), needs k and l in one block of P and neither
/// decoration AtLeft.  Threads with zero colimit are vacuously supported.
inline bool is_compactly_supported_fan(const Circle& c, const FanSequence& f,
                                       const DecoratedNC& t) {
  for (const ThreadSequence& s : f.threads) {
    auto colim = mocolim_thread(c, s);
    if (!colim) continue;
    int k = detail::left_segment_of(colim->a);
    int l = detail::left_segment_of(colim->b);
    if (!t.partition.same_block(k, l)) return false;
    if (t.dec(k).kind == DecKind::AtLeft || t.dec(l).kind == DecKind::AtLeft) return false;
  }
  return true;
}

/// dim of the module Hom from an arc A into the colimit of a thread with
/// colimit arc F = {f, f'}: 1 iff labels exist with f in [a, pred(a')) and
/// f' in [a', pred(a)), pred fixing Acc points.  This is the colimit of
/// Hom(A, F_n) and needs no membership hypothesis on F.
inline int hom_into_colimit_dim(const Circle& c, const Arc& a, const Arc& f) {
  for (const auto& [a0, a1] : {std::pair(a.a, a.b), std::pair(a.b, a.a)}) {
    Interval i0{a0, c.pred(a1), true, false};
    Interval i1{a1, c.pred(a0), true, false};
    if ((c.in_interval(f.a, i0) && c.in_interval(f.b, i1)) ||
        (c.in_interval(f.b, i0) && c.in_interval(f.a, i1)))
      return 1;
  }
  return 0;
}

}  // namespace czcat

#endif  // CZCAT_SEQUENCES_HPP_
