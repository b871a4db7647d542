#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polypart/incidence.hpp"
#include "polypart/spantree.hpp"

namespace polypart {

// On-disk instance: points plus optional lines and curves.
struct Instance {
  int dim = 2;
  std::vector<Point> points;
  LineSet lines;
  CurveSet curves;
  bool has_curves = false;
};

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);

std::string tree_to_json(const GeoTree& tree);
GeoTree tree_from_json(const std::string& text);

GeoTree load_tree(const std::string& path);
void save_tree(const std::string& path, const GeoTree& tree);

std::string crossing_report_to_json(const CrossingReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Static figure: points as circles, edges as segments, optional witness
// line clipped to the bounding box. 2-d only; higher dimensions project to
// the first two coordinates.
std::string render_svg(const std::vector<Point>& points,
                       const std::vector<std::pair<int, int>>& edges,
                       const std::optional<Hyperplane>& witness);

}  // namespace polypart
