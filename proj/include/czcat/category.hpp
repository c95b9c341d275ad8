#ifndef CZCAT_CATEGORY_HPP_
#define CZCAT_CATEGORY_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "czcat/cyclic.hpp"
#include "czcat/rational.hpp"

/// Arcs as indecomposable objects, Hom dimensions, canonical morphisms and
/// their cones, suspension, Ext^1, convex hulls and supports.
namespace czcat {

/// Unordered pair of boundary points with neither endpoint equal or adjacent
/// to the other.  Endpoints are stored in linearization order so arcs compare
/// by value.  Arcs with marked endpoints are the indecomposables of the
/// discrete category; arcs with Acc endpoints live in the completion.
struct Arc {
  BoundaryPoint a, b;
  friend bool operator==(const Arc&, const Arc&) = default;
};

inline bool is_arc(const Circle& c, const BoundaryPoint& p, const BoundaryPoint& q) {
  return q != c.pred(p) && q != p && q != c.succ(p);
}

/// Degenerate pairs normalize to nothing (the zero object).
inline std::optional<Arc> make_arc(const Circle& c, const BoundaryPoint& p,
                                   const BoundaryPoint& q) {
  if (!is_arc(c, p, q)) return std::nullopt;
  if (c.key_less(p, q)) return Arc{p, q};
  return Arc{q, p};
}

/// Finite direct sum of arcs; the empty sum is the zero object.
struct FormalObject {
  std::vector<Arc> summands;

  void normalize(const Circle& c) {
    std::sort(summands.begin(), summands.end(), [&](const Arc& x, const Arc& y) {
      return std::tuple(c.key(x.a), c.key(x.b)) < std::tuple(c.key(y.a), c.key(y.b));
    });
  }
  bool is_zero() const { return summands.empty(); }
  friend bool operator==(const FormalObject&, const FormalObject&) = default;
};

inline bool crosses(const Circle& c, const Arc& x, const Arc& y) {
  return c.cyclically_ordered({x.a, y.a, x.b, y.b}) ||
         c.cyclically_ordered({x.a, y.b, x.b, y.a});
}

inline Arc suspend(const Circle& c, const Arc& x, long long n = 1) {
  auto r = make_arc(c, c.iterate(x.a, -n), c.iterate(x.b, -n));
  if (!r) throw std::logic_error("suspend: arc became degenerate");  // cannot happen
  return *r;
}

inline FormalObject suspend(const Circle& c, const FormalObject& obj, long long n = 1) {
  FormalObject out;
  for (const Arc& s : obj.summands) out.summands.push_back(suspend(c, s, n));
  out.normalize(c);
  return out;
}

/// dim Hom(X, Y) for arcs with marked endpoints: 1 iff Sigma X crosses Y.
inline int hom_dim(const Circle& c, const Arc& x, const Arc& y) {
  return crosses(c, suspend(c, x), y) ? 1 : 0;
}

inline int ext1_dim(const Circle& c, const Arc& x, const Arc& y) {
  return crosses(c, x, y) ? 1 : 0;
}

/// The labeling (x0, x1, y0, y1) with pred(x0) < y0 < pred(x1) < y1
/// anticlockwise, which enables the canonical morphism X -> Y.  Canonical
/// choice: x0 is the smaller endpoint of X in the Acc(1)-anchored
/// linearization.  Returns nothing when hom_dim(X, Y) = 0.
struct EnabledOrdering {
  BoundaryPoint x0, x1, y0, y1;
};

inline std::optional<EnabledOrdering> enabled_ordering(const Circle& c, const Arc& x,
                                                       const Arc& y) {
  const BoundaryPoint x0 = x.a, x1 = x.b;  // arcs store endpoints key-sorted
  for (const auto& [y0, y1] : {std::pair(y.a, y.b), std::pair(y.b, y.a)}) {
    if (c.cyclically_ordered({c.pred(x0), y0, c.pred(x1), y1}))
      return EnabledOrdering{x0, x1, y0, y1};
    // Same condition rooted at the other endpoint of X; rotate the labels
    // back so x0 stays the smaller endpoint.
    if (c.cyclically_ordered({c.pred(x1), y0, c.pred(x0), y1}))
      return EnabledOrdering{x0, x1, y1, y0};
  }
  return std::nullopt;
}

/// Does the canonical morphism X -> Y factor through S?  True iff, in the
/// enabled labeling, s0 lies in [x0, y0] and s1 in [x1, y1].
inline bool factors_through(const Circle& c, const Arc& x, const Arc& y, const Arc& s) {
  auto o = enabled_ordering(c, x, y);
  if (!o) return false;
  Interval i0{o->x0, o->y0, true, true}, i1{o->x1, o->y1, true, true};
  return (c.in_interval(s.a, i0) && c.in_interval(s.b, i1)) ||
         (c.in_interval(s.b, i0) && c.in_interval(s.a, i1));
}

/// A scalar multiple of the canonical morphism source -> target.
struct CanonicalMorphism {
  Arc source, target;
  Rational scalar;
};

inline CanonicalMorphism canonical_morphism(const Circle& c, const Arc& x, const Arc& y,
                                            Rational scalar = Rational(1)) {
  if (!scalar.is_zero() && hom_dim(c, x, y) != 1)
    throw std::invalid_argument("canonical_morphism: Hom(X,Y) = 0, only the zero morphism exists");
  return CanonicalMorphism{x, y, scalar};
}

inline CanonicalMorphism compose(const Circle& c, const CanonicalMorphism& f,
                                 const CanonicalMorphism& g) {
  if (!(f.target == g.source))
    throw std::invalid_argument("compose: middle objects do not match");
  if (f.scalar.is_zero() || g.scalar.is_zero())
    return CanonicalMorphism{f.source, g.target, Rational(0)};
  if (hom_dim(c, f.source, g.target) == 1 &&
      factors_through(c, f.source, g.target, f.target))
    return CanonicalMorphism{f.source, g.target, f.scalar * g.scalar};
  return CanonicalMorphism{f.source, g.target, Rational(0)};
}

/// Cone of a nonzero canonical morphism: {pred(x0), y0} + {pred(x1), y1},
/// degenerate summands dropped.
inline FormalObject cone_of_canonical(const Circle& c, const CanonicalMorphism& f) {
  if (f.scalar.is_zero())
    throw std::invalid_argument("cone_of_canonical: zero morphism (use cone_of_zero)");
  auto o = enabled_ordering(c, f.source, f.target);
  if (!o) throw std::logic_error("cone_of_canonical: morphism not enabled");
  FormalObject out;
  if (auto s = make_arc(c, c.pred(o->x0), o->y0)) out.summands.push_back(*s);
  if (auto s = make_arc(c, c.pred(o->x1), o->y1)) out.summands.push_back(*s);
  out.normalize(c);
  return out;
}

/// Cone of the zero morphism X -> Y is the split one, Y + Sigma X.
inline FormalObject cone_of_zero(const Circle& c, const Arc& x, const Arc& y) {
  FormalObject out;
  out.summands.push_back(y);
  out.summands.push_back(suspend(c, x));
  out.normalize(c);
  return out;
}

inline FormalObject cone(const Circle& c, const CanonicalMorphism& f) {
  return f.scalar.is_zero() ? cone_of_zero(c, f.source, f.target)
                            : cone_of_canonical(c, f);
}

inline std::vector<BoundaryPoint> support(const Circle& c, const FormalObject& obj) {
  std::vector<BoundaryPoint> pts;
  for (const Arc& s : obj.summands) {
    pts.push_back(s.a);
    pts.push_back(s.b);
  }
  std::sort(pts.begin(), pts.end(),
            [&](const BoundaryPoint& p, const BoundaryPoint& q) { return c.key_less(p, q); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Convex-hull membership: both endpoints lie in the point set S.
template <typename PointPred>
bool cx_member(const Arc& arc, PointPred&& in_s) {
  return in_s(arc.a) && in_s(arc.b);
}

}  // namespace czcat

#endif  // CZCAT_CATEGORY_HPP_
