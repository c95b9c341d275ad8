#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "czcat/cyclic.hpp"

using namespace czcat;

TEST_CASE("succ/pred/iterate on marked and accumulation points") {
  Circle c(3);
  CHECK(c.succ(c.marked(1, 0)) == c.marked(1, 1));
  CHECK(c.pred(c.marked(1, 1)) == c.marked(1, 0));
  CHECK(c.succ(c.acc(2)) == c.acc(2));
  CHECK(c.pred(c.acc(1)) == c.acc(1));
  CHECK(c.iterate(c.marked(2, -3), 5) == c.marked(2, 2));
  CHECK(c.iterate(c.marked(3, 0), 2) == c.marked(3, 2));
  CHECK(c.iterate(c.acc(1), -7) == c.acc(1));

  // group action and inverse laws
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    BoundaryPoint p = c.marked(static_cast<int>(rng() % 3) + 1,
                               static_cast<long long>(rng() % 21) - 10);
    long long a = static_cast<long long>(rng() % 11) - 5;
    long long b = static_cast<long long>(rng() % 11) - 5;
    CHECK(c.iterate(c.iterate(p, a), b) == c.iterate(p, a + b));
    CHECK(c.pred(c.succ(p)) == p);
    CHECK(c.succ(c.pred(p)) == p);
  }
}

TEST_CASE("segment normalization is cyclic") {
  Circle c(4);
  CHECK(c.marked(5, 3) == c.marked(1, 3));
  CHECK(c.acc(0) == c.acc(4));
  CHECK(c.acc(-3) == c.acc(1));
}

TEST_CASE("cyclic order basics") {
  Circle c(2);
  CHECK(c.cyclically_ordered({c.acc(1), c.marked(1, 0), c.acc(2)}));
  CHECK_FALSE(c.cyclically_ordered({c.marked(1, 0), c.marked(1, 0)}));
  // wraps past the anchor Acc(1)
  CHECK(c.cyclically_ordered({c.marked(1, 5), c.marked(2, 0), c.marked(1, -3)}));
  // rotation invariance of the same list
  CHECK(c.cyclically_ordered({c.marked(2, 0), c.marked(1, -3), c.marked(1, 5)}));
  CHECK(c.cyclically_ordered({c.marked(1, -3), c.marked(1, 5), c.marked(2, 0)}));
}

TEST_CASE("exactly one orientation holds for distinct triples") {
  Circle c(3);
  std::mt19937 rng(11);
  auto rnd_point = [&]() -> BoundaryPoint {
    if (rng() % 5 == 0) return c.acc(static_cast<int>(rng() % 3) + 1);
    return c.marked(static_cast<int>(rng() % 3) + 1, static_cast<long long>(rng() % 13) - 6);
  };
  int checked = 0;
  while (checked < 300) {
    BoundaryPoint p = rnd_point(), q = rnd_point(), r = rnd_point();
    if (p == q || q == r || p == r) continue;
    ++checked;
    CHECK(c.cyclically_ordered({p, q, r}) != c.cyclically_ordered({p, r, q}));
  }
}

TEST_CASE("interval membership") {
  Circle c(2);
  BoundaryPoint a = c.marked(1, 0), b = c.marked(1, 5);
  CHECK(c.in_interval(a, Interval{a, b, true, false}));
  CHECK_FALSE(c.in_interval(a, Interval{a, b, false, false}));
  // (a, a) open is empty, [a, a] is {a}
  CHECK_FALSE(c.in_interval(a, Interval{a, a, false, false}));
  CHECK_FALSE(c.in_interval(b, Interval{a, a, false, true}));
  CHECK(c.in_interval(a, Interval{a, a, true, true}));
  CHECK_FALSE(c.in_interval(b, Interval{a, a, true, true}));
  // segment containment
  CHECK(c.in_interval(c.marked(1, 3), Interval{c.acc(1), c.acc(2), false, false}));
  CHECK_FALSE(c.in_interval(c.marked(2, 3), Interval{c.acc(1), c.acc(2), false, false}));
  // characterization of the closed interval
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    BoundaryPoint lo = c.marked(static_cast<int>(rng() % 2) + 1, static_cast<long long>(rng() % 9) - 4);
    BoundaryPoint hi = c.marked(static_cast<int>(rng() % 2) + 1, static_cast<long long>(rng() % 9) - 4);
    BoundaryPoint p = c.marked(static_cast<int>(rng() % 2) + 1, static_cast<long long>(rng() % 9) - 4);
    if (lo == hi) continue;
    bool expect = p == lo || p == hi || c.cyclically_ordered({lo, p, hi});
    CHECK(c.in_interval(p, Interval{lo, hi, true, true}) == expect);
  }
}

TEST_CASE("track limits") {
  Circle c(10);
  CHECK(c.limit_of_track(c.marked(1, 0), true) == c.acc(2));
  CHECK(c.limit_of_track(c.marked(4, 7), false) == c.marked(4, 7));
  CHECK(c.limit_of_track(c.marked(10, 3), true) == c.acc(1));  // wraps
  CHECK_THROWS_AS(c.limit_of_track(c.acc(1), true), std::invalid_argument);

  // the limit q is the unique Acc point with iterate(p, n) in (p, q) for all n
  BoundaryPoint p = c.marked(3, -2);
  BoundaryPoint q = c.limit_of_track(p, true);
  for (long long n = 1; n <= 40; ++n)
    CHECK(c.in_interval(c.iterate(p, n), Interval{p, q, false, false}));
  // ... and q is the nearest such Acc point: any other Acc point that also
  // contains every iterate lies beyond q
  for (int j = 1; j <= 10; ++j) {
    if (c.acc(j) == q) continue;
    bool all_inside = true;
    for (long long n = 1; n <= 40 && all_inside; ++n)
      all_inside = c.in_interval(c.iterate(p, n), Interval{p, c.acc(j), false, false});
    if (all_inside) CHECK(c.in_interval(q, Interval{p, c.acc(j), false, true}));
  }
}

TEST_CASE("N = 1 degenerate circle works") {
  Circle c(1);
  CHECK(c.succ(c.acc(1)) == c.acc(1));
  CHECK(c.limit_of_track(c.marked(1, 9), true) == c.acc(1));
  CHECK(c.cyclically_ordered({c.acc(1), c.marked(1, -5), c.marked(1, 5)}));
}
