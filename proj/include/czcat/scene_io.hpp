#ifndef CZCAT_SCENE_IO_HPP_
#define CZCAT_SCENE_IO_HPP_

#include "czcat/json_io.hpp"
#include "czcat/render.hpp"

namespace czcat {

/// Scene JSON:
/// {"n":N, "window":W, "layers":[
///   {"kind":"arcs",    "style":"#c00", "arcs":[Arc,...]},
///   {"kind":"region",  "style":"#36c", "system":IntervalSystem},
///   {"kind":"fan",     "style":"#080", "thread":Thread, "count":5},
///   {"kind":"accmarks","marks":[{"segment":i,"filled":bool},...]}]}
inline Scene scene_from_json(const json& j) {
  Scene scene;
  scene.n = j.at("n").get<int>();
  scene.window = j.value("window", 8);
  Circle c(scene.n);
  for (const json& l : j.value("layers", json::array())) {
    SceneLayer layer;
    layer.style = l.value("style", "black");
    std::string kind = l.at("kind").get<std::string>();
    if (kind == "arcs") {
      ArcLayer al;
      for (const json& a : l.at("arcs")) al.arcs.push_back(arc_from_json(c, a));
      layer.payload = std::move(al);
    } else if (kind == "region") {
      layer.payload = RegionLayer{system_from_json(c, l.at("system"))};
    } else if (kind == "fan") {
      layer.payload = FanLayer{thread_from_json(c, l.at("thread")), l.value("count", 5)};
    } else if (kind == "accmarks") {
      AccMarkLayer ml;
      for (const json& m : l.at("marks"))
        ml.marks.push_back(AccMark{m.at("segment").get<int>(), m.at("filled").get<bool>()});
      layer.payload = std::move(ml);
    } else {
      throw std::invalid_argument("scene layer: unknown kind \"" + kind + "\"");
    }
    scene.layers.push_back(std::move(layer));
  }
  return scene;
}

}  // namespace czcat

#endif  // CZCAT_SCENE_IO_HPP_
