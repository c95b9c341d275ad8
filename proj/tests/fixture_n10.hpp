#ifndef CZCAT_TESTS_FIXTURE_N10_HPP_
#define CZCAT_TESTS_FIXTURE_N10_HPP_

// Golden fixture on the circle with N = 10 accumulation points: a decorated
// non-crossing partition, its right non-degenerate variant, four fan
// sequences with known Cauchy/support classifications, a null sequence, and
// three completed arcs with known Hom relations.

#include "czcat/completion.hpp"
#include "czcat/sequences.hpp"
#include "czcat/tstructure.hpp"

namespace fixture {

using namespace czcat;

inline const Circle& circle10() {
  static Circle c(10);
  return c;
}

// P = {{1},{2,3,9},{4},{5,6},{7},{8},{10}}
inline NCPartition partition10() {
  return NCPartition::make(10, {{1}, {2, 3, 9}, {4}, {5, 6}, {7}, {8}, {10}});
}

// expected Kreweras complement {{1,9,10},{2},{3,4,6,7,8},{5}}
inline NCPartition kreweras10() {
  return NCPartition::make(10, {{1, 9, 10}, {2}, {3, 4, 6, 7, 8}, {5}});
}

// decoration x = (x1, a3, x3, a4, a6, x6, a7, a8, x9, a10) with the free
// x_i placed at index 0 of their segments
inline DecoratedNC tstruct10() {
  DecoratedNC t;
  t.partition = partition10();
  t.decoration = {
      {DecKind::InSegment, 0},  // 1
      {DecKind::AtRight, 0},    // 2: x2 = a3
      {DecKind::InSegment, 0},  // 3
      {DecKind::AtLeft, 0},     // 4: x4 = a4
      {DecKind::AtRight, 0},    // 5: x5 = a6
      {DecKind::InSegment, 0},  // 6
      {DecKind::AtLeft, 0},     // 7
      {DecKind::AtLeft, 0},     // 8
      {DecKind::InSegment, 0},  // 9
      {DecKind::AtLeft, 0},     // 10
  };
  return t;
}

// same partition, AtLeft decorations moved into their segments: the induced
// right non-degenerate variant
inline DecoratedNC tstruct10_rndg() {
  DecoratedNC t = tstruct10();
  for (auto& d : t.decoration)
    if (d.kind == DecKind::AtLeft) d = {DecKind::InSegment, 0};
  return t;
}

inline ThreadSequence thread(EndpointTrack a, EndpointTrack b) {
  return ThreadSequence{a, b, 1};
}

// F1: both tracks advancing, through segments 1 and 8; colimit {a2, a9}
inline FanSequence fan1() {
  const Circle& c = circle10();
  return FanSequence{{thread({c.marked(1, 0), true}, {c.marked(8, 0), true})}};
}

// F2: constant at z2 = Marked(4,1), advancing through segment 2;
// colimit {z2, a3}
inline FanSequence fan2() {
  const Circle& c = circle10();
  return FanSequence{{thread({c.marked(4, 1), false}, {c.marked(2, 0), true})}};
}

// F3: constant at z3 = Marked(5,0), advancing through segment 5;
// colimit {z3, a6}
inline FanSequence fan3() {
  const Circle& c = circle10();
  return FanSequence{{thread({c.marked(5, 0), false}, {c.marked(5, 2), true})}};
}

// F4: constant arc {z4, z4'} = {Marked(4,0), Marked(4,3)}
inline FanSequence fan4() {
  const Circle& c = circle10();
  return FanSequence{{thread({c.marked(4, 0), false}, {c.marked(4, 3), false})}};
}

// E: both tracks advancing into the same accumulation point a2; null
inline ThreadSequence seqE() {
  const Circle& c = circle10();
  return thread({c.marked(1, 0), true}, {c.marked(1, 5), true});
}

// completed arcs with known Hom relations (block {2,3,9})
inline Arc arcZ() {
  const Circle& c = circle10();
  return *make_arc(c, c.marked(2, 0), c.marked(9, 0));
}
inline Arc arcV() {
  const Circle& c = circle10();
  return *make_arc(c, c.acc(2), c.marked(2, 2));
}
inline Arc arcW() {
  const Circle& c = circle10();
  return *make_arc(c, c.acc(2), c.acc(9));
}

// arc {z2^(-2), z4^(2)} = {Marked(4,-1), Marked(4,2)}: lies in every shift
// of the coaisle and crosses the colimit of F4
inline Arc witness_arc() {
  const Circle& c = circle10();
  return *make_arc(c, c.marked(4, -1), c.marked(4, 2));
}

}  // namespace fixture

#endif  // CZCAT_TESTS_FIXTURE_N10_HPP_
