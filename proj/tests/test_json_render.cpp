#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "czcat/json_io.hpp"
#include "czcat/render.hpp"
#include "czcat/scene_io.hpp"
#include "fixture_n10.hpp"

using namespace czcat;

TEST_CASE("JSON round trips") {
  const Circle& c = fixture::circle10();

  // boundary points
  for (const BoundaryPoint& p : {c.marked(3, -7), c.marked(10, 0), c.acc(1), c.acc(10)})
    CHECK(point_from_json(c, to_json(p)) == p);

  // arcs and objects
  Arc a = *make_arc(c, c.acc(2), c.marked(5, 12));
  CHECK(arc_from_json(c, to_json(a)) == a);
  FormalObject obj;
  obj.summands = {a, fixture::arcZ()};
  obj.normalize(c);
  CHECK(object_from_json(c, to_json(obj)) == obj);

  // morphisms keep their scalar
  Arc x = *make_arc(c, c.marked(1, 0), c.marked(1, 3));
  Arc y = *make_arc(c, c.marked(1, 1), c.marked(1, 4));
  CanonicalMorphism f = canonical_morphism(c, x, y, Rational(3, 7));
  CanonicalMorphism f2 = morphism_from_json(c, to_json(f));
  CHECK(f2.source == f.source);
  CHECK(f2.target == f.target);
  CHECK(f2.scalar == f.scalar);

  // partitions and decorated partitions
  NCPartition p = fixture::partition10();
  CHECK(partition_from_json(to_json(p)) == p);
  DecoratedNC t = fixture::tstruct10();
  DecoratedNC t2 = decorated_from_json(c, to_json(c, t));
  CHECK(t2.partition == t.partition);
  for (int i = 1; i <= 10; ++i) {
    CHECK(t2.dec(i).kind == t.dec(i).kind);
    if (t.dec(i).kind == DecKind::InSegment) CHECK(t2.dec(i).index == t.dec(i).index);
  }

  // interval systems
  IntervalSystem sys = aisle_system(c, t, 0);
  IntervalSystem sys2 = system_from_json(c, to_json(sys));
  REQUIRE(sys2.blocks.size() == sys.blocks.size());
  for (size_t i = 0; i < sys.blocks.size(); ++i) {
    CHECK(sys2.blocks[i].id == sys.blocks[i].id);
    REQUIRE(sys2.blocks[i].intervals.size() == sys.blocks[i].intervals.size());
    for (size_t k = 0; k < sys.blocks[i].intervals.size(); ++k) {
      CHECK(sys2.blocks[i].intervals[k].lo == sys.blocks[i].intervals[k].lo);
      CHECK(sys2.blocks[i].intervals[k].hi == sys.blocks[i].intervals[k].hi);
      CHECK(sys2.blocks[i].intervals[k].lo_closed == sys.blocks[i].intervals[k].lo_closed);
      CHECK(sys2.blocks[i].intervals[k].hi_closed == sys.blocks[i].intervals[k].hi_closed);
    }
  }

  // metrics, tracks, threads, fans
  MetricSpec m{MetricSpec::Kind::Aisle, t};
  MetricSpec m2 = metric_from_json(c, to_json(c, m));
  CHECK(m2.kind == m.kind);
  CHECK(tstructs_equivalent(m2.t, m.t));
  FanSequence fan = fixture::fan2();
  FanSequence fan2 = fan_from_json(c, to_json(fan));
  REQUIRE(fan2.threads.size() == 1);
  CHECK(fan2.threads[0].track0.start == fan.threads[0].track0.start);
  CHECK(fan2.threads[0].track0.advancing == fan.threads[0].track0.advancing);
  CHECK(fan2.threads[0].track1.advancing == fan.threads[0].track1.advancing);
  CHECK(fan2.threads[0].offset == fan.threads[0].offset);
}

TEST_CASE("JSON validation errors") {
  const Circle& c = fixture::circle10();
  CHECK_THROWS_AS(point_from_json(c, json{{"kind", "mid"}, {"segment", 1}}),
                  std::invalid_argument);
  // degenerate arc
  json bad_arc{{"a", to_json(c.marked(1, 0))}, {"b", to_json(c.marked(1, 1))}};
  CHECK_THROWS_AS(arc_from_json(c, bad_arc), std::invalid_argument);
  // decoration point in the wrong segment
  json t = to_json(c, fixture::tstruct10());
  t["decoration"][0] = json{{"kind", "point"}, {"point", to_json(c.marked(2, 0))}};
  CHECK_THROWS_AS(decorated_from_json(c, t), std::invalid_argument);
  // thread offset below 1
  json th = to_json(fixture::seqE());
  th["offset"] = 0;
  CHECK_THROWS_AS(thread_from_json(c, th), std::invalid_argument);
}

TEST_CASE("rendering is deterministic and structurally sane") {
  Scene scene;
  scene.n = 10;
  scene.window = 8;
  scene.layers.push_back(SceneLayer{"#36c", RegionLayer{aisle_system(
      fixture::circle10(), fixture::tstruct10(), 0)}});
  scene.layers.push_back(
      SceneLayer{"#c00", ArcLayer{{fixture::arcZ(), fixture::witness_arc()}}});
  scene.layers.push_back(SceneLayer{"#080", FanLayer{fixture::fan1().threads[0], 6}});
  scene.layers.push_back(SceneLayer{"", AccMarkLayer{{{3, false}, {4, false}}}});

  std::string svg1 = render_svg(scene);
  std::string svg2 = render_svg(scene);
  CHECK(svg1 == svg2);
  CHECK(svg1.rfind("<svg", 0) == 0);
  CHECK(svg1.find("</svg>") != std::string::npos);
  CHECK(svg1.find("stroke-dasharray") != std::string::npos);  // fan colimit
  CHECK(svg1.find("fill-opacity") != std::string::npos);      // shaded region
  CHECK(svg1.find("fill=\"white\"") != std::string::npos);    // hollow acc mark
  CHECK(svg1.find("nan") == std::string::npos);
  CHECK(svg1.find("-0.0000") == std::string::npos);
}

TEST_CASE("empty scene renders the bare circle") {
  Scene scene;
  scene.n = 3;
  std::string svg = render_svg(scene);
  // circle outline, 3 accumulation dots, (2*8+1)*3 marked dots
  size_t dots = 0;
  for (size_t pos = 0; (pos = svg.find("<circle", pos)) != std::string::npos; ++pos) ++dots;
  CHECK(dots == 1 + 3 + 51);
  CHECK(svg.find("<line") == std::string::npos);
  CHECK(svg.find("<path") == std::string::npos);
}

TEST_CASE("render validation") {
  Scene bad;
  bad.n = 0;
  CHECK_THROWS_AS(render_svg(bad), std::invalid_argument);
  Scene bad2;
  bad2.n = 2;
  bad2.window = 1;
  CHECK_THROWS_AS(render_svg(bad2), std::invalid_argument);
}

TEST_CASE("scene JSON") {
  json j{{"n", 10},
         {"window", 8},
         {"layers",
          json::array(
              {json{{"kind", "arcs"},
                    {"style", "#c00"},
                    {"arcs", json::array({to_json(fixture::arcZ())})}},
               json{{"kind", "fan"},
                    {"style", "#080"},
                    {"thread", to_json(fixture::fan1().threads[0])},
                    {"count", 6}},
               json{{"kind", "accmarks"},
                    {"marks", json::array({json{{"segment", 3}, {"filled", false}}})}}})}};
  Scene scene = scene_from_json(j);
  CHECK(scene.n == 10);
  REQUIRE(scene.layers.size() == 3);
  CHECK(std::holds_alternative<ArcLayer>(scene.layers[0].payload));
  CHECK(std::holds_alternative<FanLayer>(scene.layers[1].payload));
  CHECK(std::holds_alternative<AccMarkLayer>(scene.layers[2].payload));
  // unknown layer kind is rejected
  json badj = j;
  badj["layers"][0]["kind"] = "squiggle";
  CHECK_THROWS_AS(scene_from_json(badj), std::invalid_argument);
  // rendering a parsed scene is stable
  CHECK(render_svg(scene) == render_svg(scene_from_json(j)));
}
