#include "polypart/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace polypart {

using json = nlohmann::ordered_json;

namespace {

json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

json point_to_json(const Point& p) {
  // [num_1, den_1, num_2, den_2, ...]; falls back to strings when a
  // component does not fit a 64-bit integer.
  json arr = json::array();
  for (const auto& c : p) {
    Integer num(c.get_num()), den(c.get_den());
    if (num.fits_slong_p() && den.fits_slong_p()) {
      arr.push_back(num.get_si());
      arr.push_back(den.get_si());
    } else {
      arr.push_back(num.get_str());
      arr.push_back(den.get_str());
    }
  }
  return arr;
}

Point point_from_json(const json& arr) {
  if (!arr.is_array() || arr.size() % 2 != 0)
    throw std::invalid_argument("bad point entry");
  Point p;
  for (size_t i = 0; i < arr.size(); i += 2) {
    Integer num, den;
    if (arr[i].is_number_integer())
      num = static_cast<long>(arr[i].get<long>());
    else
      num.set_str(arr[i].get<std::string>(), 10);
    if (arr[i + 1].is_number_integer())
      den = static_cast<long>(arr[i + 1].get<long>());
    else
      den.set_str(arr[i + 1].get<std::string>(), 10);
    Rational q(num, den);
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json j;
  j["dim"] = inst.dim;
  j["points"] = json::array();
  for (const auto& p : inst.points) j["points"].push_back(point_to_json(p));
  if (!inst.lines.lines.empty()) {
    j["lines"] = json::array();
    for (const auto& line : inst.lines.lines)
      j["lines"].push_back({rational_to_json(line.a), rational_to_json(line.b),
                            rational_to_json(line.c)});
  }
  if (inst.has_curves) {
    j["curve_family"] = {{"k", inst.curves.determining_points},
                         {"C", inst.curves.max_through},
                         {"b", inst.curves.degree_bound}};
    j["curves"] = json::array();
    for (const auto& c : inst.curves.curves) j["curves"].push_back(c.to_text());
  }
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  json j = json::parse(text);
  Instance inst;
  inst.dim = j.value("dim", 2);
  for (const auto& p : j.at("points"))
    inst.points.push_back(point_from_json(p));
  if (j.contains("lines")) {
    for (const auto& l : j["lines"])
      inst.lines.add(Line(rational_from_json(l[0]), rational_from_json(l[1]),
                          rational_from_json(l[2])));
  }
  if (j.contains("curves")) {
    inst.has_curves = true;
    if (j.contains("curve_family")) {
      inst.curves.determining_points = j["curve_family"].value("k", 3);
      inst.curves.max_through = j["curve_family"].value("C", 1);
      inst.curves.degree_bound = j["curve_family"].value("b", 2);
    }
    for (const auto& c : j["curves"])
      inst.curves.add(MultiPoly::from_text(c.get<std::string>(), inst.dim));
  }
  return inst;
}

std::string tree_to_json(const GeoTree& tree) {
  json j;
  j["points"] = json::array();
  for (const auto& p : tree.points) j["points"].push_back(point_to_json(p));
  j["edges"] = json::array();
  for (const auto& [u, v] : tree.edges) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

GeoTree tree_from_json(const std::string& text) {
  json j = json::parse(text);
  GeoTree t;
  for (const auto& p : j.at("points")) t.points.push_back(point_from_json(p));
  for (const auto& e : j.at("edges"))
    t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  return t;
}

std::string crossing_report_to_json(const CrossingReport& rep) {
  json j;
  j["max_crossings"] = rep.max_crossings;
  j["mode"] = rep.mode == CrossingMode::exact ? "exact" : "sampled";
  j["lower_bound_only"] = rep.lower_bound_only;
  j["candidates_examined"] = rep.candidates_examined;
  json w = json::array();
  for (const auto& c : rep.witness.normal) w.push_back(rational_to_json(c));
  j["witness_normal"] = w;
  j["witness_offset"] = rational_to_json(rep.witness.offset);
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  return instance_from_json(read_file(path));
}

GeoTree load_tree(const std::string& path) {
  return tree_from_json(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string render_svg(const std::vector<Point>& points,
                       const std::vector<std::pair<int, int>>& edges,
                       const std::optional<Hyperplane>& witness) {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  bool first = true;
  for (const auto& p : points) {
    double x = p[0].get_d(), y = p[1].get_d();
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  double w = std::max(max_x - min_x, 1e-9), h = std::max(max_y - min_y, 1e-9);
  double pad = 0.05 * std::max(w, h);
  min_x -= pad;
  min_y -= pad;
  w += 2 * pad;
  h += 2 * pad;
  const double size = 640.0;
  double scale = size / std::max(w, h);
  auto sx = [&](double x) { return (x - min_x) * scale; };
  auto sy = [&](double y) { return size - (y - min_y) * scale; };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
     << "\" height=\"" << size << "\">\n";
  for (const auto& [u, v] : edges)
    os << "  <line x1=\"" << sx(points[u][0].get_d()) << "\" y1=\""
       << sy(points[u][1].get_d()) << "\" x2=\"" << sx(points[v][0].get_d())
       << "\" y2=\"" << sy(points[v][1].get_d())
       << "\" stroke=\"#336699\" stroke-width=\"1\"/>\n";
  if (witness && witness->normal.size() >= 2) {
    // Clip a*x + b*y + offset = 0 against the view box.
    double a = witness->normal[0].get_d(), b = witness->normal[1].get_d();
    double c = witness->offset.get_d();
    std::vector<std::pair<double, double>> hits;
    double x0 = min_x, x1 = min_x + w, y0 = min_y, y1 = min_y + h;
    if (b != 0) {
      for (double x : {x0, x1}) {
        double y = (-c - a * x) / b;
        if (y >= y0 && y <= y1) hits.emplace_back(x, y);
      }
    }
    if (a != 0) {
      for (double y : {y0, y1}) {
        double x = (-c - b * y) / a;
        if (x >= x0 && x <= x1) hits.emplace_back(x, y);
      }
    }
    if (hits.size() >= 2)
      os << "  <line x1=\"" << sx(hits[0].first) << "\" y1=\""
         << sy(hits[0].second) << "\" x2=\"" << sx(hits[1].first)
         << "\" y2=\"" << sy(hits[1].second)
         << "\" stroke=\"#cc3333\" stroke-width=\"1.5\" "
            "stroke-dasharray=\"6,3\"/>\n";
  }
  for (const auto& p : points)
    os << "  <circle cx=\"" << sx(p[0].get_d()) << "\" cy=\""
       << sy(p[1].get_d()) << "\" r=\"2.5\" fill=\"#222222\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace polypart
