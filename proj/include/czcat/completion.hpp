#ifndef CZCAT_COMPLETION_HPP_
#define CZCAT_COMPLETION_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "czcat/sequences.hpp"
#include "czcat/tstructure.hpp"

/// The completed category for the coaisle metric of a decorated partition,
/// realized as arcs over the closure Z-bar with per-block supports, plus the
/// aisle-metric completion.
namespace czcat {

/// Membership of a point in the completed support Z-bar_B of block B:
/// marked points of segment i for i in B unless x_i = a_i; the accumulation
/// point a_i for i in B unless a_i is a decoration value (x_i = a_i or
/// x_{i-1} = a_i).
inline bool zbar_contains(const DecoratedNC& t, const std::vector<int>& block,
                          const BoundaryPoint& p) {
  bool in_block = false;
  for (int e : block)
    if (e == p.segment) { in_block = true; break; }
  if (!in_block) return false;
  if (t.dec(p.segment).kind == DecKind::AtLeft) return false;
  if (p.kind == PointKind::Acc && t.dec(p.segment - 1).kind == DecKind::AtRight) return false;
  return true;
}

/// The unique block of P whose completed support contains both endpoints,
/// or nothing.  The block index refers to t.partition.blocks.
inline std::optional<int> completion_member(const Circle& c, const Arc& f,
                                            const DecoratedNC& t) {
  (void)c;
  for (size_t bi = 0; bi < t.partition.blocks.size(); ++bi) {
    const auto& b = t.partition.blocks[bi];
    if (zbar_contains(t, b, f.a) && zbar_contains(t, b, f.b))
      return static_cast<int>(bi);
  }
  return std::nullopt;
}

/// Completed Hom dimension: 1 iff labels exist with g in [f, pred(f')) and
/// g' in [f', pred(f)), pred fixing Acc points.  Same inequality rule as
/// Hom into a module colimit.
inline int hom_completed_dim(const Circle& c, const Arc& f, const Arc& g) {
  return hom_into_colimit_dim(c, f, g);
}

namespace detail {
/// Enabling labelings of a completed morphism F -> G: pairs of labelings
/// satisfying the interval conditions.
struct CompletedLabeling {
  BoundaryPoint f, f2, g, g2;
};

inline std::vector<CompletedLabeling> completed_labelings(const Circle& c, const Arc& fa,
                                                          const Arc& ga) {
  std::vector<CompletedLabeling> out;
  for (const auto& [f, f2] : {std::pair(fa.a, fa.b), std::pair(fa.b, fa.a)}) {
    Interval i0{f, c.pred(f2), true, false};
    Interval i1{f2, c.pred(f), true, false};
    for (const auto& [g, g2] : {std::pair(ga.a, ga.b), std::pair(ga.b, ga.a)}) {
      if (c.in_interval(g, i0) && c.in_interval(g2, i1))
        out.push_back(CompletedLabeling{f, f2, g, g2});
    }
  }
  return out;
}

/// f <= g <= h read anticlockwise: g in the closed interval [f, h].
inline bool chain_between(const Circle& c, const BoundaryPoint& f, const BoundaryPoint& g,
                          const BoundaryPoint& h) {
  return c.in_interval(g, Interval{f, h, true, true});
}
}  // namespace detail

/// Is the composite of the canonical completed maps F -> G -> H nonzero?
/// True iff compatible enabling labelings exist with the chains
/// f <= g <= h < pred(f') and f' <= g' <= h' < pred(f): the middle term must
/// interpolate and the outer labeling must itself be enabling.
inline bool compose_completed_nonzero(const Circle& c, const Arc& f, const Arc& g,
                                      const Arc& h) {
  if (hom_completed_dim(c, f, g) != 1 || hom_completed_dim(c, g, h) != 1)
    throw std::invalid_argument("compose_completed_nonzero: one of the maps is zero");
  for (const auto& fg : detail::completed_labelings(c, f, g)) {
    for (const auto& gh : detail::completed_labelings(c, g, h)) {
      if (!(gh.f == fg.g && gh.f2 == fg.g2)) continue;  // same labeling of G
      if (detail::chain_between(c, fg.f, fg.g, gh.g) &&
          detail::chain_between(c, fg.f2, fg.g2, gh.g2) &&
          c.in_interval(gh.g, Interval{fg.f, c.pred(fg.f2), true, false}) &&
          c.in_interval(gh.g2, Interval{fg.f2, c.pred(fg.f), true, false}))
        return true;
    }
  }
  return false;
}

/// Suspension acts by predecessor on both endpoints, fixing Acc points;
/// this is the same map as on plain arcs.
inline Arc suspend_completed(const Circle& c, const Arc& f) { return suspend(c, f); }

/// Cone of the nonzero completed map F -> G: {pred(f), g} + {pred(f'), g'}
/// with degenerate summands zeroed; symmetric in the choice of enabling
/// labeling.
inline FormalObject cone_completed(const Circle& c, const Arc& f, const Arc& g) {
  auto labelings = detail::completed_labelings(c, f, g);
  if (labelings.empty())
    throw std::invalid_argument("cone_completed: Hom(F,G) = 0");
  const auto& l = labelings.front();
  FormalObject out;
  if (auto s = make_arc(c, c.pred(l.f), l.g)) out.summands.push_back(*s);
  if (auto s = make_arc(c, c.pred(l.f2), l.g2)) out.summands.push_back(*s);
  out.normalize(c);
  return out;
}

/// Realize an arc of Z-bar as the module colimit of a fan: marked endpoints
/// become constant tracks, an endpoint a_k becomes a track advancing through
/// segment k-1 from Marked(k-1, 0).
inline FanSequence realize_as_fan(const Circle& c, const Arc& f) {
  auto track = [&](const BoundaryPoint& e) {
    if (e.kind == PointKind::Marked) return EndpointTrack{e, false};
    return EndpointTrack{c.marked(e.segment - 1, 0), true};
  };
  return FanSequence{{ThreadSequence{track(f.a), track(f.b), 1}}};
}

/// Closed-form membership in the aisle-metric completion, the additive hull
/// of all shifts of the coaisle: some Kreweras block must contain both
/// endpoints among its open segments whose decoration is not AtRight.
inline bool aisle_completion_member(const Circle& c, const Arc& x, const DecoratedNC& t) {
  NCPartition kc = kreweras(t.partition);
  for (const auto& b : kc.blocks) {
    auto covered = [&](const BoundaryPoint& p) {
      if (p.kind != PointKind::Marked) return false;
      for (int i : b)
        if (i == p.segment && t.dec(i).kind != DecKind::AtRight) return true;
      return false;
    };
    if (covered(x.a) && covered(x.b)) return true;
  }
  return false;
}

/// Search variant used to cross-validate the closed form: membership in
/// Sigma^p of the coaisle for some |p| <= p_bound.
inline bool aisle_completion_member_search(const Circle& c, const Arc& x, const DecoratedNC& t,
                                           long long p_bound) {
  for (long long p = -p_bound; p <= p_bound; ++p)
    if (coaisle_member(c, x, t, p)) return true;
  return false;
}

}  // namespace czcat

#endif  // CZCAT_COMPLETION_HPP_
