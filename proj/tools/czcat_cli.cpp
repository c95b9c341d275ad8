// Command-line surface: reads a JSON request from --in (or stdin), writes
// JSON (or SVG for `render`) to --out (or stdout).
// Exit codes: 0 success, 1 domain/input error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "czcat/json_io.hpp"
#include "czcat/scene_io.hpp"

using czcat::json;

namespace {

struct Io {
  std::string in_path, out_path;
  int n = 0;
  int window = 8;
  long long tmax = 5;

  json read() const {
    std::string text;
    if (in_path.empty()) {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(in_path);
      if (!f) throw std::invalid_argument("cannot open input file: " + in_path);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    return json::parse(text);
  }

  void write(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
      f << text;
    }
  }

  void write(const json& j) const { write(j.dump(2) + "\n"); }

  czcat::Circle circle() const {
    if (n < 1) throw std::invalid_argument("--n is required (and must be >= 1) for this command");
    return czcat::Circle(n);
  }

  // For t-structure carrying requests the ambient n can come from the payload.
  czcat::Circle circle_for(const json& j, const char* tstruct_key) const {
    if (n >= 1) return czcat::Circle(n);
    return czcat::Circle(j.at(tstruct_key).at("partition").at("n").get<int>());
  }
};

void add_io_flags(CLI::App* cmd, Io& io) {
  cmd->add_option("--in", io.in_path, "input JSON file (default: stdin)");
  cmd->add_option("--out", io.out_path, "output file (default: stdout)");
  cmd->add_option("--n", io.n, "number of accumulation points");
  cmd->add_option("--window", io.window, "index window for enumeration/rendering");
  cmd->add_option("--tmax", io.tmax, "search bound for metric quantities");
}

czcat::MetricSpec metric_of(const czcat::Circle& c, const json& j) {
  return czcat::metric_from_json(c, j.at("metric"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in discrete arc categories: Hom spaces, cones, "
               "t-structures from decorated non-crossing partitions, metric "
               "completions, and SVG diagrams"};
  app.require_subcommand(1);
  Io io;

  int chosen = 0;  // 0 none; set by callbacks below
  auto pick = [&chosen](int v) { return [&chosen, v]() { chosen = v; }; };

  // Leaf subcommands just mark which action runs; all work happens after
  // parsing so JSON errors map to exit 1 rather than a parse failure.
  CLI::App* hom = app.add_subcommand("hom", "dim Hom(X, Y) for arcs");
  CLI::App* compose = app.add_subcommand("compose", "compose canonical morphisms");
  CLI::App* cone = app.add_subcommand("cone", "cone of a canonical morphism");
  CLI::App* suspend = app.add_subcommand("suspend", "suspension of an arc");
  CLI::App* tstruct = app.add_subcommand("tstruct", "decorated non-crossing partitions");
  CLI::App* ts_check = tstruct->add_subcommand("check", "validate a decorated partition");
  CLI::App* ts_krew = tstruct->add_subcommand("kreweras", "Kreweras complement");
  CLI::App* ts_member = tstruct->add_subcommand("member", "aisle/coaisle membership");
  CLI::App* ts_largest = tstruct->add_subcommand("largest-aisle", "largest aisle in the coaisle");
  CLI::App* ts_equiv = tstruct->add_subcommand("equiv", "t-structure equivalence");
  CLI::App* metric = app.add_subcommand("metric", "metrics from t-structures");
  CLI::App* m_length = metric->add_subcommand("length", "morphism length");
  CLI::App* m_ball = metric->add_subcommand("ball", "metric ball membership");
  CLI::App* fan = app.add_subcommand("fan", "thread and fan sequences");
  CLI::App* f_cauchy = fan->add_subcommand("cauchy", "Cauchy test (coaisle metric)");
  CLI::App* f_support = fan->add_subcommand("support", "compact support test");
  CLI::App* f_colimit = fan->add_subcommand("colimit", "module colimits of threads");
  CLI::App* f_cone = fan->add_subcommand("cone", "cone of a composite step map");
  CLI::App* complete = app.add_subcommand("complete", "the completed category");
  CLI::App* c_member = complete->add_subcommand("member", "membership and certifying block");
  CLI::App* c_hom = complete->add_subcommand("hom", "completed Hom dimension");
  CLI::App* c_compose = complete->add_subcommand("compose", "is a completed composite nonzero");
  CLI::App* c_cone = complete->add_subcommand("cone", "cone of a completed map");
  CLI::App* c_fan = complete->add_subcommand("fan", "realize a completed arc as a fan");
  CLI::App* render = app.add_subcommand("render", "SVG disc diagram of a scene");

  CLI::App* leaves[] = {hom, compose, cone, suspend, ts_check, ts_krew, ts_member,
                        ts_largest, ts_equiv, m_length, m_ball, f_cauchy, f_support,
                        f_colimit, f_cone, c_member, c_hom, c_compose, c_cone, c_fan,
                        render};
  int id = 1;
  for (CLI::App* leaf : leaves) {
    add_io_flags(leaf, io);
    leaf->callback(pick(id++));
  }
  tstruct->require_subcommand(1);
  metric->require_subcommand(1);
  fan->require_subcommand(1);
  complete->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const json req = io.read();
    using namespace czcat;
    switch (chosen) {
      case 1: {  // hom
        Circle c = io.circle();
        io.write(json{{"dim", hom_dim(c, arc_from_json(c, req.at("x")),
                                      arc_from_json(c, req.at("y")))}});
        break;
      }
      case 2: {  // compose
        Circle c = io.circle();
        CanonicalMorphism f = morphism_from_json(c, req.at("f"));
        CanonicalMorphism g = morphism_from_json(c, req.at("g"));
        io.write(to_json(czcat::compose(c, f, g)));
        break;
      }
      case 3: {  // cone
        Circle c = io.circle();
        io.write(to_json(czcat::cone(c, morphism_from_json(c, req.at("f")))));
        break;
      }
      case 4: {  // suspend
        Circle c = io.circle();
        long long steps = req.value("steps", 1LL);
        io.write(to_json(czcat::suspend(c, arc_from_json(c, req.at("x")), steps)));
        break;
      }
      case 5: {  // tstruct check
        Circle c = io.circle_for(req, "tstruct");
        DecoratedNC t = decorated_from_json(c, req.at("tstruct"));
        io.write(json{{"valid", decoration_valid(t)},
                      {"noncrossing", is_noncrossing(t.partition)},
                      {"right_nondegenerate", is_right_nondegenerate(t)}});
        break;
      }
      case 6: {  // tstruct kreweras
        io.write(to_json(kreweras(partition_from_json(req.at("partition")))));
        break;
      }
      case 7: {  // tstruct member
        Circle c = io.circle_for(req, "tstruct");
        DecoratedNC t = decorated_from_json(c, req.at("tstruct"));
        FormalObject obj = object_from_json(c, req.at("object"));
        std::string side = req.value("side", "aisle");
        long long p = req.value("shift", 0LL);
        bool member;
        if (side == "aisle") member = aisle_member(c, obj, t, p);
        else if (side == "coaisle") member = coaisle_member(c, obj, t, p);
        else throw std::invalid_argument("side must be \"aisle\" or \"coaisle\"");
        io.write(json{{"member", member}});
        break;
      }
      case 8: {  // tstruct largest-aisle
        Circle c = io.circle_for(req, "tstruct");
        DecoratedNC t = decorated_from_json(c, req.at("tstruct"));
        io.write(to_json(c, largest_aisle_in_coaisle(t)));
        break;
      }
      case 9: {  // tstruct equiv
        Circle c = io.circle_for(req, "t1");
        io.write(json{{"equivalent", tstructs_equivalent(decorated_from_json(c, req.at("t1")),
                                                         decorated_from_json(c, req.at("t2")))}});
        break;
      }
      case 10: {  // metric length
        Circle c = io.circle_for(req.at("metric"), "tstruct");
        MetricSpec m = metric_of(c, req);
        CanonicalMorphism f = morphism_from_json(c, req.at("f"));
        LengthResult r = morphism_length(c, f, m, io.tmax);
        io.write(json{{"length", r.value.str()}, {"resolved", r.resolved}});
        break;
      }
      case 11: {  // metric ball
        Circle c = io.circle_for(req.at("metric"), "tstruct");
        MetricSpec m = metric_of(c, req);
        FormalObject obj = object_from_json(c, req.at("object"));
        io.write(json{{"member", in_metric_ball(c, obj, m, req.at("t").get<long long>())}});
        break;
      }
      case 12: {  // fan cauchy
        Circle c = io.circle_for(req, "tstruct");
        io.write(json{{"cauchy", is_cauchy_fan(c, fan_from_json(c, req.at("fan")),
                                               decorated_from_json(c, req.at("tstruct")))}});
        break;
      }
      case 13: {  // fan support
        Circle c = io.circle_for(req, "tstruct");
        io.write(json{{"supported",
                       is_compactly_supported_fan(c, fan_from_json(c, req.at("fan")),
                                                  decorated_from_json(c, req.at("tstruct")))}});
        break;
      }
      case 14: {  // fan colimit
        Circle c = io.circle();
        FanSequence f = fan_from_json(c, req.at("fan"));
        json arr = json::array();
        for (const ThreadSequence& s : f.threads) {
          auto colim = mocolim_thread(c, s);
          arr.push_back(colim ? to_json(*colim) : json(nullptr));
        }
        io.write(json{{"colimits", arr}});
        break;
      }
      case 15: {  // fan cone
        Circle c = io.circle();
        ThreadSequence s = thread_from_json(c, req.at("thread"));
        io.write(to_json(thread_cone(c, s, req.at("m").get<long long>(),
                                     req.at("m2").get<long long>())));
        break;
      }
      case 16: {  // complete member
        Circle c = io.circle_for(req, "tstruct");
        DecoratedNC t = decorated_from_json(c, req.at("tstruct"));
        auto block = completion_member(c, arc_from_json(c, req.at("arc")), t);
        io.write(json{{"block", block ? json(t.partition.blocks[static_cast<size_t>(*block)])
                                      : json(nullptr)}});
        break;
      }
      case 17: {  // complete hom
        Circle c = io.circle_for(req, "tstruct");
        DecoratedNC t = decorated_from_json(c, req.at("tstruct"));
        Arc x = arc_from_json(c, req.at("x")), y = arc_from_json(c, req.at("y"));
        if (!completion_member(c, x, t) || !completion_member(c, y, t))
          throw std::invalid_argument("complete hom: both arcs must be members of the completion");
        io.write(json{{"dim", hom_completed_dim(c, x, y)}});
        break;
      }
      case 18: {  // complete compose
        Circle c = io.circle_for(req, "tstruct");
        DecoratedNC t = decorated_from_json(c, req.at("tstruct"));
        Arc x = arc_from_json(c, req.at("x"));
        Arc y = arc_from_json(c, req.at("y"));
        Arc z = arc_from_json(c, req.at("z"));
        if (!completion_member(c, x, t) || !completion_member(c, y, t) ||
            !completion_member(c, z, t))
          throw std::invalid_argument("complete compose: all arcs must be members");
        io.write(json{{"nonzero", compose_completed_nonzero(c, x, y, z)}});
        break;
      }
      case 19: {  // complete cone
        Circle c = io.circle_for(req, "tstruct");
        DecoratedNC t = decorated_from_json(c, req.at("tstruct"));
        Arc x = arc_from_json(c, req.at("x")), y = arc_from_json(c, req.at("y"));
        if (!completion_member(c, x, t) || !completion_member(c, y, t))
          throw std::invalid_argument("complete cone: both arcs must be members");
        io.write(to_json(cone_completed(c, x, y)));
        break;
      }
      case 20: {  // complete fan
        Circle c = io.circle();
        io.write(to_json(realize_as_fan(c, arc_from_json(c, req.at("arc")))));
        break;
      }
      case 21: {  // render
        Scene scene = scene_from_json(req);
        if (io.n >= 1) scene.n = io.n;
        io.write(render_svg(scene));
        break;
      }
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    json err{{"error", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  }
  return 0;
}
