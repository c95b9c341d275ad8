#ifndef CZCAT_JSON_IO_HPP_
#define CZCAT_JSON_IO_HPP_

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "czcat/completion.hpp"
#include "czcat/sequences.hpp"

/// JSON encodings of the domain values.  Segments are 1-based throughout.
namespace czcat {

using json = nlohmann::json;

inline json to_json(const BoundaryPoint& p) {
  if (p.kind == PointKind::Acc) return json{{"kind", "acc"}, {"segment", p.segment}};
  return json{{"kind", "marked"}, {"segment", p.segment}, {"index", p.index}};
}

inline BoundaryPoint point_from_json(const Circle& c, const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  int segment = j.at("segment").get<int>();
  if (kind == "acc") return c.acc(segment);
  if (kind == "marked") return c.marked(segment, j.at("index").get<long long>());
  throw std::invalid_argument("point: kind must be \"marked\" or \"acc\"");
}

inline json to_json(const Arc& a) {
  return json{{"a", to_json(a.a)}, {"b", to_json(a.b)}};
}

inline Arc arc_from_json(const Circle& c, const json& j) {
  auto a = make_arc(c, point_from_json(c, j.at("a")), point_from_json(c, j.at("b")));
  if (!a) throw std::invalid_argument("arc: degenerate endpoint pair");
  return *a;
}

inline json to_json(const FormalObject& o) {
  json arr = json::array();
  for (const Arc& s : o.summands) arr.push_back(to_json(s));
  return json{{"summands", arr}};
}

inline FormalObject object_from_json(const Circle& c, const json& j) {
  FormalObject o;
  for (const json& s : j.at("summands")) o.summands.push_back(arc_from_json(c, s));
  o.normalize(c);
  return o;
}

inline json to_json(const CanonicalMorphism& f) {
  return json{{"src", to_json(f.source)}, {"tgt", to_json(f.target)}, {"scalar", f.scalar.str()}};
}

inline CanonicalMorphism morphism_from_json(const Circle& c, const json& j) {
  Arc src = arc_from_json(c, j.at("src")), tgt = arc_from_json(c, j.at("tgt"));
  Rational scalar = Rational::parse(j.at("scalar").get<std::string>());
  return canonical_morphism(c, src, tgt, scalar);
}

inline json to_json(const Interval& iv) {
  return json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)},
              {"lo_closed", iv.lo_closed}, {"hi_closed", iv.hi_closed}};
}

inline Interval interval_from_json(const Circle& c, const json& j) {
  return Interval{point_from_json(c, j.at("lo")), point_from_json(c, j.at("hi")),
                  j.at("lo_closed").get<bool>(), j.at("hi_closed").get<bool>()};
}

inline json to_json(const IntervalSystem& sys) {
  json blocks = json::array();
  for (const auto& b : sys.blocks) {
    json ivs = json::array();
    for (const Interval& iv : b.intervals) ivs.push_back(to_json(iv));
    blocks.push_back(json{{"id", b.id}, {"intervals", ivs}});
  }
  return json{{"blocks", blocks}};
}

inline IntervalSystem system_from_json(const Circle& c, const json& j) {
  IntervalSystem sys;
  for (const json& b : j.at("blocks")) {
    IntervalSystem::Block blk{b.at("id").get<int>(), {}};
    for (const json& iv : b.at("intervals")) blk.intervals.push_back(interval_from_json(c, iv));
    sys.blocks.push_back(std::move(blk));
  }
  return sys;
}

inline json to_json(const NCPartition& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(b);
  return json{{"n", p.n}, {"blocks", blocks}};
}

inline NCPartition partition_from_json(const json& j) {
  std::vector<std::vector<int>> blocks;
  for (const json& b : j.at("blocks")) blocks.push_back(b.get<std::vector<int>>());
  return NCPartition::make(j.at("n").get<int>(), std::move(blocks));
}

inline json to_json(const Circle& c, const DecoratedNC& t) {
  json dec = json::array();
  for (int i = 1; i <= t.n(); ++i) {
    switch (t.dec(i).kind) {
      case DecKind::AtLeft: dec.push_back(json{{"kind", "left"}}); break;
      case DecKind::AtRight: dec.push_back(json{{"kind", "right"}}); break;
      case DecKind::InSegment:
        dec.push_back(json{{"kind", "point"}, {"point", to_json(c.marked(i, t.dec(i).index))}});
        break;
    }
  }
  return json{{"partition", to_json(t.partition)}, {"decoration", dec}};
}

inline DecoratedNC decorated_from_json(const Circle& c, const json& j) {
  DecoratedNC t;
  t.partition = partition_from_json(j.at("partition"));
  const json& dec = j.at("decoration");
  if (static_cast<int>(dec.size()) != t.n())
    throw std::invalid_argument("decoration: need one entry per index");
  for (int i = 1; i <= t.n(); ++i) {
    const json& d = dec[static_cast<size_t>(i - 1)];
    std::string kind = d.at("kind").get<std::string>();
    if (kind == "left") {
      t.decoration.push_back({DecKind::AtLeft, 0});
    } else if (kind == "right") {
      t.decoration.push_back({DecKind::AtRight, 0});
    } else if (kind == "point") {
      BoundaryPoint p = point_from_json(c, d.at("point"));
      if (p.kind != PointKind::Marked || p.segment != i)
        throw std::invalid_argument("decoration: point entry must be a marked point of its segment");
      t.decoration.push_back({DecKind::InSegment, p.index});
    } else {
      throw std::invalid_argument("decoration: kind must be left, right or point");
    }
  }
  return t;
}

inline json to_json(const Circle& c, const MetricSpec& m) {
  return json{{"kind", m.kind == MetricSpec::Kind::Coaisle ? "coaisle" : "aisle"},
              {"tstruct", to_json(c, m.t)}};
}

inline MetricSpec metric_from_json(const Circle& c, const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind != "coaisle" && kind != "aisle")
    throw std::invalid_argument("metric: kind must be coaisle or aisle");
  return MetricSpec{kind == "coaisle" ? MetricSpec::Kind::Coaisle : MetricSpec::Kind::Aisle,
                    decorated_from_json(c, j.at("tstruct"))};
}

inline json to_json(const EndpointTrack& tr) {
  return json{{"start", to_json(tr.start)}, {"mode", tr.advancing ? "adv" : "const"}};
}

inline EndpointTrack track_from_json(const Circle& c, const json& j) {
  std::string mode = j.at("mode").get<std::string>();
  if (mode != "adv" && mode != "const")
    throw std::invalid_argument("track: mode must be \"adv\" or \"const\"");
  return EndpointTrack{point_from_json(c, j.at("start")), mode == "adv"};
}

inline json to_json(const ThreadSequence& s) {
  return json{{"t0", to_json(s.track0)}, {"t1", to_json(s.track1)}, {"offset", s.offset}};
}

inline ThreadSequence thread_from_json(const Circle& c, const json& j) {
  ThreadSequence s{track_from_json(c, j.at("t0")), track_from_json(c, j.at("t1")),
                   j.value("offset", 1LL)};
  if (s.offset < 1) throw std::invalid_argument("thread: offset must be >= 1");
  return s;
}

inline json to_json(const FanSequence& f) {
  json arr = json::array();
  for (const ThreadSequence& s : f.threads) arr.push_back(to_json(s));
  return json{{"threads", arr}};
}

inline FanSequence fan_from_json(const Circle& c, const json& j) {
  FanSequence f;
  for (const json& s : j.at("threads")) f.threads.push_back(thread_from_json(c, s));
  return f;
}

}  // namespace czcat

#endif  // CZCAT_JSON_IO_HPP_
