#include <doctest.h>

#include <algorithm>
#include <map>

#include "polypart/generators.hpp"
#include "polypart/rng.hpp"
#include "polypart/spantree.hpp"

using namespace polypart;

namespace {

GeoTree path_on(std::vector<Point> pts) {
  GeoTree t;
  t.points = std::move(pts);
  for (int i = 1; i < static_cast<int>(t.points.size()); ++i)
    t.edges.emplace_back(i - 1, i);
  return t;
}

// Crossing count of one explicit hyperplane, written independently of the
// enumeration machinery.
long crossings_of(const GeoTree& t, const Hyperplane& h) {
  long c = 0;
  for (const auto& [u, v] : t.edges) {
    int su = sign_of(h.value_at(t.points[u]));
    int sv = sign_of(h.value_at(t.points[v]));
    if (su * sv < 0) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("spanning tree predicate") {
  GeoTree path = path_on({{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(2), rat(0)}});
  CHECK(path.is_spanning_tree());

  GeoTree cyc = path;
  cyc.edges.emplace_back(2, 0);
  CHECK(!cyc.is_spanning_tree());

  GeoTree forest = path;
  forest.points.push_back({rat(9), rat(9)});
  CHECK(!forest.is_spanning_tree());
}

TEST_CASE("crossing number of stated small trees") {
  // both edges lie on the x axis, so any witness line crosses at most one
  GeoTree path = path_on({{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(2), rat(0)}});
  auto rep = crossing_number(path, CrossingMode::exact);
  CHECK(rep.max_crossings == 1);
  CHECK(crossings_of(path, rep.witness) == rep.max_crossings);
  for (const auto& p : path.points) CHECK(rep.witness.value_at(p) != 0);

  GeoTree square = path_on({{rat(0), rat(0)},
                            {rat(1), rat(0)},
                            {rat(1), rat(1)},
                            {rat(0), rat(1)}});
  CHECK(crossing_number(square, CrossingMode::exact).max_crossings == 2);

  GeoTree edge = path_on({{rat(0), rat(0)}, {rat(1), rat(1)}});
  CHECK(crossing_number(edge, CrossingMode::exact).max_crossings == 1);
}

TEST_CASE("sampled mode is a flagged lower bound") {
  SplitRng rng(5);
  GeoTree t;
  t.points = random_points(24, 2, 17);
  TreeBuildOptions opts;
  opts.seed = 17;
  t = build_low_crossing_tree(t.points, opts).tree;

  auto exact = crossing_number(t, CrossingMode::exact);
  auto sampled = crossing_number(t, CrossingMode::sampled, 4000, 9);
  CHECK(sampled.lower_bound_only);
  CHECK(!exact.lower_bound_only);
  CHECK(sampled.max_crossings <= exact.max_crossings);
  CHECK(crossings_of(t, sampled.witness) == sampled.max_crossings);

  CHECK_THROWS_AS(crossing_number(t, CrossingMode::sampled, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("exceptional tuple determinants") {
  // collinear triple, D=1
  std::vector<Point> coll = {{rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(2)}};
  CHECK(exceptional_tuple_det(coll, 1) == Rational(0));

  std::vector<Point> tri = {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}};
  Rational d = exceptional_tuple_det(tri, 1);
  CHECK(rat_abs(d) == Rational(1));

  // six points on the unit circle, D=2
  std::vector<Point> circle = {{rat(1), rat(0)},    {rat(-1), rat(0)},
                               {rat(0), rat(1)},    {rat(0), rat(-1)},
                               {rat(3, 5), rat(4, 5)}, {rat(-3, 5), rat(4, 5)}};
  CHECK(exceptional_tuple_det(circle, 2) == Rational(0));

  CHECK_THROWS_AS(exceptional_tuple_det(tri, 2), std::invalid_argument);

  // antisymmetry under a row swap
  std::vector<Point> sw = tri;
  std::swap(sw[0], sw[1]);
  CHECK(exceptional_tuple_det(sw, 1) == -d);
}

TEST_CASE("perturbation keeps order and determinism") {
  std::vector<Point> pts = {{rat(0), rat(0)}, {rat(10), rat(0)}, {rat(20), rat(5)}};
  Rational delta(1, 64);
  auto a = perturb_points(pts, delta, 99);
  auto b = perturb_points(pts, delta, 99);
  CHECK(a == b);
  CHECK(a[0][0] < a[1][0]);
  CHECK(a[1][0] < a[2][0]);
  for (size_t i = 0; i < pts.size(); ++i)
    for (int k = 0; k < 2; ++k) CHECK(rat_abs(a[i][k] - pts[i][k]) < delta);

  std::vector<Point> dup = {{rat(1), rat(1)}, {rat(1), rat(1)}};
  auto d2 = perturb_points(dup, rat(1, 16), 4);
  CHECK(d2[0] != d2[1]);
}

TEST_CASE("segment_crosses_zero examples") {
  MultiPoly circ(2);
  circ.set_coeff({2, 0}, 1);
  circ.set_coeff({0, 2}, 1);
  circ.set_coeff({0, 0}, -1);
  CHECK(segment_crosses_zero({circ}, {rat(0), rat(0)}, {rat(2), rat(0)}));
  CHECK(!segment_crosses_zero({circ}, {rat(0), rat(0)}, {rat(1, 2), rat(0)}));

  MultiPoly x = MultiPoly::monomial(2, {1, 0}, 1);
  MultiPoly y = MultiPoly::monomial(2, {0, 1}, 1);
  CHECK(!segment_crosses_zero({x, y}, {rat(1), rat(1)}, {rat(2), rat(3)}));
  // endpoint on the zero set counts
  CHECK(segment_crosses_zero({x, y}, {rat(0), rat(1)}, {rat(2), rat(3)}));
}

TEST_CASE("tree construction on base cases") {
  std::vector<Point> coll = {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(2), rat(0)}};
  TreeBuildOptions opts;
  opts.c = 8;
  auto res = build_low_crossing_tree(coll, opts);
  CHECK(res.tree.is_spanning_tree());
  auto rep = crossing_number(res.tree, CrossingMode::exact);
  CHECK(rep.max_crossings == 2);  // star from the lowest index point

  auto single = build_low_crossing_tree({{rat(3), rat(4)}});
  CHECK(single.tree.is_spanning_tree());
  CHECK(single.tree.edges.empty());
}

TEST_CASE("tree construction on random and grid sets") {
  SplitRng root(66);
  for (int trial = 0; trial < 4; ++trial) {
    auto pts = random_points(60, 2, 1000 + trial);
    TreeBuildOptions opts;
    opts.seed = trial;
    opts.keep_level_detail = true;
    auto res = build_low_crossing_tree(pts, opts);
    REQUIRE(res.tree.is_spanning_tree());

    // every non-fallback level edge is sign-constant against its factors
    for (const auto& lvl : res.levels) {
      if (lvl.base_case) continue;
      std::map<int, int> local;
      for (size_t i = 0; i < lvl.indices.size(); ++i)
        local[lvl.indices[i]] = static_cast<int>(i);
      for (const auto& [u, v] : lvl.level_edges) {
        REQUIRE(!segment_crosses_zero(lvl.factors, lvl.perturbed[local.at(u)],
                                      lvl.perturbed[local.at(v)]));
      }
    }
    // representative count shrinks per level
    for (size_t i = 1; i < res.levels.size(); ++i)
      if (!res.levels[i - 1].fallback && !res.levels[i - 1].base_case)
        REQUIRE(res.levels[i].n * 2 <= res.levels[i - 1].n);
  }

  Instance grid = grid_instance(8);
  TreeBuildOptions gopts;
  gopts.seed = 2;
  auto gres = build_low_crossing_tree(grid.points, gopts);
  CHECK(gres.tree.is_spanning_tree());
}

TEST_CASE("3d tree construction") {
  auto pts = random_points(40, 3, 77);
  TreeBuildOptions opts;
  opts.seed = 7;
  auto res = build_low_crossing_tree(pts, opts);
  CHECK(res.tree.is_spanning_tree());
  auto rep = crossing_number(res.tree, CrossingMode::exact);
  CHECK(rep.max_crossings >= 1);
  for (const auto& p : res.tree.points) CHECK(rep.witness.value_at(p) != 0);
}

TEST_CASE("bound constants") {
  auto c24 = bound_constants(2, 4);
  CHECK(c24.warren == 384);
  auto c23 = bound_constants(2, 3);
  REQUIRE(c23.harnack.has_value());
  CHECK(*c23.harnack == 2);
  auto c32 = bound_constants(3, 2);
  CHECK(c32.warren == 384);
  CHECK(!c32.harnack.has_value());
}

TEST_CASE("build log text shape") {
  auto pts = random_points(30, 2, 5);
  TreeBuildOptions opts;
  opts.seed = 1;
  auto res = build_low_crossing_tree(pts, opts);
  std::string log = res.log_text();
  CHECK(log.find("level,n,") == 0);
  CHECK(std::count(log.begin(), log.end(), '\n') >=
        static_cast<long>(res.levels.size()));
}
