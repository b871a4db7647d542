#include "polypart/spantree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polypart/hamsandwich.hpp"
#include "polypart/linalg.hpp"
#include "polypart/rng.hpp"
#include "polypart/unipoly.hpp"

namespace polypart {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // lowest index wins as root
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
    return true;
  }
};

long count_crossings(const std::vector<int>& signs,
                     const std::vector<std::pair<int, int>>& edges) {
  long c = 0;
  for (const auto& [u, v] : edges)
    if (signs[u] * signs[v] < 0) ++c;
  return c;
}

}  // namespace

bool GeoTree::is_spanning_tree() const {
  long n = static_cast<long>(points.size());
  if (n == 0) return false;
  if (static_cast<long>(edges.size()) != n - 1) return false;
  UnionFind uf(static_cast<int>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    if (!uf.unite(u, v)) return false;  // cycle
  }
  return true;  // n-1 acyclic edges on n vertices => connected
}

Rational exceptional_tuple_det(const std::vector<Point>& tuple,
                               int max_degree) {
  if (tuple.empty()) throw std::invalid_argument("empty tuple");
  int d = static_cast<int>(tuple[0].size());
  long k = monomial_count(d, max_degree);
  if (static_cast<long>(tuple.size()) != k + 1)
    throw std::invalid_argument("exceptional_tuple_det: need k+1 points");
  Matrix m;
  for (const auto& p : tuple) {
    std::vector<Rational> row;
    row.push_back(Rational(1));
    for (const auto& q : veronese_lift(p, max_degree)) row.push_back(q);
    m.push_back(std::move(row));
  }
  return determinant(std::move(m));
}

Rational default_perturbation(const std::vector<Point>& points) {
  Rational cap = rat(1, 1024);
  if (points.empty()) return cap;
  size_t d = points[0].size();
  Rational best = 0;
  bool found = false;
  for (size_t axis = 0; axis < d; ++axis) {
    std::vector<Rational> vals;
    vals.reserve(points.size());
    for (const auto& p : points) vals.push_back(p[axis]);
    std::sort(vals.begin(), vals.end());
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
      Rational gap = vals[i + 1] - vals[i];
      if (gap > 0 && (!found || gap < best)) {
        best = gap;
        found = true;
      }
    }
  }
  if (!found) return cap;
  Rational half = best / 2;
  return half < cap ? half : cap;
}

std::vector<Point> perturb_points(const std::vector<Point>& points,
                                  const Rational& delta, std::uint64_t seed) {
  if (!(delta > 0)) throw std::invalid_argument("perturb_points: delta > 0");
  SplitRng root(seed);
  const long grid = 1 << 16;
  for (int attempt = 0;; ++attempt) {
    SplitRng rng = root.split(attempt);
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& p : points) {
      Point q;
      q.reserve(p.size());
      for (const auto& x : p) {
        long j = rng.next_signed(grid - 1);
        q.push_back(x + Rational(j) * delta / grid);
      }
      out.push_back(std::move(q));
    }
    std::vector<Point> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
      return out;
  }
}

bool segment_crosses_zero(const std::vector<MultiPoly>& factors,
                          const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("segment_crosses_zero: p == q");
  for (const auto& f : factors) {
    UniPoly g = restrict_to_segment(f, p, q);
    if (g.is_zero()) return true;
    if (g.eval(Rational(0)) == 0 || g.eval(Rational(1)) == 0) return true;
    if (g.degree() >= 1 &&
        count_roots_in_interval(g, Rational(0), Rational(1), true) > 0)
      return true;
  }
  return false;
}

BoundConstants bound_constants(int dim, int max_degree) {
  if (dim < 1 || max_degree < 1)
    throw std::invalid_argument("bound_constants: d >= 1, D >= 1");
  BoundConstants bc{6, std::nullopt};
  Integer twod = 2 * Integer(max_degree);
  for (int i = 0; i < dim; ++i) bc.warren *= twod;
  if (dim == 2) bc.harnack = 1 + binomial(max_degree - 1, 2);
  return bc;
}

// ---------------------------------------------------------------------------
// Tree construction
// ---------------------------------------------------------------------------

namespace {

struct TreeBuilder {
  const std::vector<Point>& pts;
  const TreeBuildOptions& opts;
  TreeBuildResult& result;
  SplitRng root;
  int dim;
  int level_seq = 0;

  TreeBuilder(const std::vector<Point>& p, const TreeBuildOptions& o,
              TreeBuildResult& res)
      : pts(p), opts(o), result(res), root(o.seed),
        dim(static_cast<int>(p[0].size())) {}

  void star(const std::vector<int>& idx, TreeLevelLog log) {
    log.base_case = true;
    log.groups = 1;
    for (size_t i = 1; i < idx.size(); ++i)
      result.tree.edges.emplace_back(idx[0], idx[i]);
    result.levels.push_back(std::move(log));
  }

  void build(const std::vector<int>& idx) {
    long n = static_cast<long>(idx.size());
    int my_level = level_seq++;
    TreeLevelLog log;
    log.n = n;
    if (opts.keep_level_detail) log.indices = idx;
    if (n <= opts.c || n <= 2) {
      star(idx, std::move(log));
      return;
    }
    std::vector<Point> local;
    local.reserve(n);
    for (int i : idx) local.push_back(pts[i]);

    long c_eff = opts.c;
    int doublings = 0;
    PartitionResult pr;
    std::vector<Point> pert;
    std::vector<std::pair<int, int>> level_edges;  // local index pairs
    UnionFind uf(static_cast<int>(n));
    long groups = n;
    int perturb_retries = 0;
    bool fallback = false;

    while (true) {
      if (n <= c_eff) {
        star(idx, std::move(log));
        return;
      }
      Rational r = Rational(n) / Rational(c_eff);
      SplitRng lev = root.split(my_level).split(doublings);

      // Perturb so that |P' on Z| stays below the monomial count; re-perturb
      // with a fresh seed when the check fails, then accept and log.
      for (int pretry = 0;; ++pretry) {
        Rational delta = default_perturbation(local);
        pert = perturb_points(local, delta, lev.split(pretry).next());
        PartitionOptions popts;
        popts.eps = opts.eps;
        popts.seed = lev.split(100 + pretry).next();
        pr = build_partition(pert, r, popts);
        long bound = monomial_count(dim, std::max(pr.total_degree, 1));
        if (static_cast<long>(pr.boundary_points.size()) <= bound) break;
        ++perturb_retries;
        if (pretry >= 3) break;  // accept; boundary points stay singletons
      }

      // Visibility groups: within each sign class, greedily connect pairs
      // whose straight segment stays sign-constant.
      uf = UnionFind(static_cast<int>(n));
      level_edges.clear();
      for (const auto& [sv, members] : pr.cells) {
        for (size_t a = 0; a < members.size(); ++a)
          for (size_t b = a + 1; b < members.size(); ++b) {
            int x = members[a], y = members[b];
            if (uf.find(x) == uf.find(y)) continue;
            if (!segment_crosses_zero(pr.factors, pert[x], pert[y])) {
              uf.unite(x, y);
              level_edges.emplace_back(std::min(x, y), std::max(x, y));
            }
          }
      }
      groups = 0;
      for (int i = 0; i < n; ++i)
        if (uf.find(i) == i) ++groups;

      if (groups <= n / 2) break;
      if (doublings < 3) {
        ++doublings;
        c_eff *= 2;
        continue;
      }
      fallback = true;
      break;
    }

    log.r = Rational(n) / Rational(c_eff);
    log.rounds = pr.rounds;
    log.total_degree = pr.total_degree;
    log.cells = static_cast<long>(pr.cells.size());
    log.boundary = static_cast<long>(pr.boundary_points.size());
    log.groups = groups;
    log.perturb_retries = perturb_retries;
    log.c_doublings = doublings;
    log.fallback = fallback;
    if (opts.keep_level_detail) {
      log.factors = pr.factors;
      log.perturbed = pert;
      for (const auto& [a, b] : level_edges)
        log.level_edges.emplace_back(idx[a], idx[b]);
    }
    for (const auto& [a, b] : level_edges)
      result.tree.edges.emplace_back(idx[a], idx[b]);

    // Representatives: lowest local index per group.
    std::vector<int> reps;
    for (int i = 0; i < n; ++i)
      if (uf.find(i) == i) reps.push_back(i);
    result.levels.push_back(std::move(log));

    if (fallback) {
      // Nearest-representative edges (original coordinates), deterministic.
      for (size_t i = 1; i < reps.size(); ++i) {
        size_t best = 0;
        Rational best_d2;
        bool have = false;
        for (size_t j = 0; j < i; ++j) {
          Rational d2 = 0;
          for (int q = 0; q < dim; ++q) {
            Rational diff = pts[idx[reps[i]]][q] - pts[idx[reps[j]]][q];
            d2 += diff * diff;
          }
          if (!have || d2 < best_d2) {
            have = true;
            best_d2 = d2;
            best = j;
          }
        }
        result.tree.edges.emplace_back(idx[reps[best]], idx[reps[i]]);
        ++result.fallback_edges;
      }
      return;
    }

    std::vector<int> rep_global;
    rep_global.reserve(reps.size());
    for (int rloc : reps) rep_global.push_back(idx[rloc]);
    build(rep_global);
  }
};

}  // namespace

std::string TreeBuildResult::log_text() const {
  std::ostringstream os;
  os << "level,n,r,rounds,total_degree,cells,boundary,groups,"
        "perturb_retries,c_doublings,fallback,base_case\n";
  for (size_t i = 0; i < levels.size(); ++i) {
    const auto& l = levels[i];
    os << i << ',' << l.n << ',' << l.r.get_str() << ',' << l.rounds << ','
       << l.total_degree << ',' << l.cells << ',' << l.boundary << ','
       << l.groups << ',' << l.perturb_retries << ',' << l.c_doublings << ','
       << (l.fallback ? 1 : 0) << ',' << (l.base_case ? 1 : 0) << '\n';
  }
  return os.str();
}

TreeBuildResult build_low_crossing_tree(const std::vector<Point>& points,
                                        const TreeBuildOptions& opts) {
  if (points.empty())
    throw std::invalid_argument("build_low_crossing_tree: empty point set");
  if (opts.c < 2)
    throw std::invalid_argument("build_low_crossing_tree: c >= 2");
  TreeBuildResult result;
  result.tree.points = points;
  TreeBuilder builder(points, opts, result);
  std::vector<int> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  builder.build(all);
  return result;
}

// ---------------------------------------------------------------------------
// Crossing number
// ---------------------------------------------------------------------------

namespace {

struct BestCandidate {
  long count = -1;
  Hyperplane witness;
};

void consider(BestCandidate& best, long count, const Hyperplane& h) {
  if (count > best.count) {
    best.count = count;
    best.witness = h;
  }
}

// Explicit candidate: compute exact signs, reject if any point lies on it.
bool evaluate_candidate(const Hyperplane& h, const std::vector<Point>& pts,
                        const std::vector<std::pair<int, int>>& edges,
                        long& count_out) {
  std::vector<int> signs(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    int s = sign_of(h.value_at(pts[i]));
    if (s == 0) return false;
    signs[i] = s;
  }
  count_out = count_crossings(signs, edges);
  return true;
}

void axis_gap_candidates(const std::vector<Point>& pts,
                         const std::vector<std::pair<int, int>>& edges,
                         BestCandidate& best, long& candidates) {
  int d = static_cast<int>(pts[0].size());
  for (int axis = 0; axis < d; ++axis) {
    std::vector<Rational> vals;
    for (const auto& p : pts) vals.push_back(p[axis]);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
      Hyperplane h;
      h.normal.assign(d, Rational(0));
      h.normal[axis] = 1;
      h.offset = -(vals[i] + vals[i + 1]) / 2;
      long c;
      if (evaluate_candidate(h, pts, edges, c)) {
        ++candidates;
        consider(best, c, h);
      }
    }
  }
}

Rational perturb_step(const std::vector<Rational>& base_vals,
                      const std::vector<Rational>& dir_vals) {
  // Largest step that cannot flip any nonzero base value: half of
  // min |v| / (|M| + 1) over points with v != 0.
  Rational t0 = 1;
  bool any = false;
  for (size_t i = 0; i < base_vals.size(); ++i) {
    if (base_vals[i] == 0) continue;
    Rational cand = rat_abs(base_vals[i]) / (2 * (rat_abs(dir_vals[i]) + 1));
    if (!any || cand < t0) t0 = cand;
    any = true;
  }
  return t0;
}

CrossingReport exact_2d(const GeoTree& tree) {
  const auto& pts = tree.points;
  const auto& edges = tree.edges;
  long n = static_cast<long>(pts.size());
  BestCandidate best;
  long candidates = 0;
  axis_gap_candidates(pts, edges, best, candidates);

  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      const Point &p = pts[i], &q = pts[j];
      if (p == q) continue;
      Rational dirx = q[0] - p[0], diry = q[1] - p[1];
      Rational a = p[1] - q[1], b = q[0] - p[0];
      Rational c = -(a * p[0] + b * p[1]);
      std::vector<Rational> v(n);
      std::vector<int> base_sign(n);
      std::vector<long> online;
      for (long r = 0; r < n; ++r) {
        v[r] = a * pts[r][0] + b * pts[r][1] + c;
        base_sign[r] = sign_of(v[r]);
        if (base_sign[r] == 0) online.push_back(r);
      }
      // Offset to each side.
      std::vector<int> signs = base_sign;
      for (int s : {1, -1}) {
        for (long r : online) signs[r] = s;
        Rational eps = 1;
        bool have_off = false;
        for (long r = 0; r < n; ++r)
          if (base_sign[r] != 0) {
            Rational half = rat_abs(v[r]) / 2;
            if (!have_off || half < eps) eps = half;
            have_off = true;
          }
        Hyperplane h{{a, b}, c + Rational(s) * eps};
        ++candidates;
        consider(best, count_crossings(signs, edges), h);
      }
      // Rotations about each gap between consecutive on-line points.
      std::vector<Rational> ts;
      std::vector<Rational> t_all(n);
      for (long r = 0; r < n; ++r)
        t_all[r] = dirx * (pts[r][0] - p[0]) + diry * (pts[r][1] - p[1]);
      for (long r : online) ts.push_back(t_all[r]);
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      std::vector<Rational> pivots;
      pivots.push_back(ts.front() - 1);
      for (size_t g = 0; g + 1 < ts.size(); ++g)
        pivots.push_back((ts[g] + ts[g + 1]) / 2);
      pivots.push_back(ts.back() + 1);
      for (const auto& pivot : pivots) {
        // M(x) = dir.(x - p) - pivot
        std::vector<Rational> mvals(n);
        for (long r = 0; r < n; ++r) mvals[r] = t_all[r] - pivot;
        Rational t0 = perturb_step(v, mvals);
        for (int s : {1, -1}) {
          signs = base_sign;
          for (long r : online) signs[r] = s * sign_of(t_all[r] - pivot);
          Rational t = Rational(s) * t0;
          Hyperplane h{{a + t * dirx, b + t * diry},
                       c - t * (dirx * p[0] + diry * p[1] + pivot)};
          ++candidates;
          consider(best, count_crossings(signs, edges), h);
        }
      }
    }
  }
  CrossingReport rep;
  rep.mode = CrossingMode::exact;
  rep.candidates_examined = candidates;
  rep.max_crossings = std::max(best.count, 0L);
  rep.witness = best.witness;
  if (best.count < 0) {
    // No candidate at all (single point): any hyperplane off the point.
    rep.witness = Hyperplane{{Rational(1), Rational(0)}, -(pts[0][0] + 1)};
    rep.max_crossings = 0;
  }
  long verify = 0;
  if (!evaluate_candidate(rep.witness, pts, edges, verify) ||
      verify != rep.max_crossings)
    throw std::logic_error("crossing_number: witness verification failed");
  return rep;
}

Rational dot3(const Point& x, const std::vector<Rational>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

std::vector<Rational> cross3(const std::vector<Rational>& u,
                             const std::vector<Rational>& w) {
  return {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
          u[0] * w[1] - u[1] * w[0]};
}

CrossingReport exact_3d(const GeoTree& tree) {
  const auto& pts = tree.points;
  const auto& edges = tree.edges;
  long n = static_cast<long>(pts.size());
  BestCandidate best;
  long candidates = 0;
  axis_gap_candidates(pts, edges, best, candidates);

  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      for (long k = j + 1; k < n; ++k) {
        std::vector<Rational> u = {pts[j][0] - pts[i][0],
                                   pts[j][1] - pts[i][1],
                                   pts[j][2] - pts[i][2]};
        std::vector<Rational> w = {pts[k][0] - pts[i][0],
                                   pts[k][1] - pts[i][1],
                                   pts[k][2] - pts[i][2]};
        std::vector<Rational> normal = cross3(u, w);
        if (normal[0] == 0 && normal[1] == 0 && normal[2] == 0) continue;
        Rational c = -dot3(pts[i], normal);
        std::vector<Rational> v(n);
        std::vector<int> base_sign(n);
        std::vector<long> online;
        for (long r = 0; r < n; ++r) {
          v[r] = dot3(pts[r], normal) + c;
          base_sign[r] = sign_of(v[r]);
          if (base_sign[r] == 0) online.push_back(r);
        }
        // Offsets.
        std::vector<int> signs = base_sign;
        Rational eps = 1;
        bool have_off = false;
        for (long r = 0; r < n; ++r)
          if (base_sign[r] != 0) {
            Rational half = rat_abs(v[r]) / 2;
            if (!have_off || half < eps) eps = half;
            have_off = true;
          }
        for (int s : {1, -1}) {
          for (long r : online) signs[r] = s;
          Hyperplane h{normal, c + Rational(s) * eps};
          ++candidates;
          consider(best, count_crossings(signs, edges), h);
        }
        // Tilts about lines through pairs of coplanar points.
        for (size_t xi = 0; xi < online.size(); ++xi) {
          for (size_t yi = xi + 1; yi < online.size(); ++yi) {
            long x = online[xi], y = online[yi];
            std::vector<Rational> axis = {pts[y][0] - pts[x][0],
                                          pts[y][1] - pts[x][1],
                                          pts[y][2] - pts[x][2]};
            std::vector<Rational> m = cross3(axis, normal);
            if (m[0] == 0 && m[1] == 0 && m[2] == 0) continue;
            Rational mc = -dot3(pts[x], m);
            std::vector<Rational> mvals(n);
            for (long r = 0; r < n; ++r) mvals[r] = dot3(pts[r], m) + mc;
            Rational t0 = perturb_step(v, mvals);
            for (int s1 : {1, -1}) {
              Rational t = Rational(s1) * t0;
              // Values after the tilt; points on line(x,y) stay at zero.
              Rational eps2 = 1;
              bool any2 = false;
              for (long r = 0; r < n; ++r) {
                Rational lv = v[r] + t * mvals[r];
                if (lv == 0) continue;
                Rational half = rat_abs(lv) / 2;
                if (!any2 || half < eps2) eps2 = half;
                any2 = true;
              }
              for (int s2 : {1, -1}) {
                signs = base_sign;
                for (long r : online) {
                  int ms = sign_of(mvals[r]);
                  signs[r] = ms != 0 ? s1 * ms : s2;
                }
                Hyperplane h{{normal[0] + t * m[0], normal[1] + t * m[1],
                              normal[2] + t * m[2]},
                             c + t * mc + Rational(s2) * eps2};
                ++candidates;
                consider(best, count_crossings(signs, edges), h);
              }
            }
          }
        }
      }
    }
  }
  CrossingReport rep;
  rep.mode = CrossingMode::exact;
  rep.candidates_examined = candidates;
  rep.max_crossings = std::max(best.count, 0L);
  rep.witness = best.witness;
  if (best.count < 0) {
    rep.witness = Hyperplane{{Rational(1), Rational(0), Rational(0)},
                             -(pts[0][0] + 1)};
    rep.max_crossings = 0;
  }
  long verify = 0;
  if (!evaluate_candidate(rep.witness, pts, edges, verify) ||
      verify != rep.max_crossings)
    throw std::logic_error("crossing_number: witness verification failed");
  return rep;
}

CrossingReport sampled_mode(const GeoTree& tree, long sample_count,
                            std::uint64_t seed) {
  if (sample_count <= 0)
    throw std::invalid_argument("crossing_number: sample count must be > 0");
  const auto& pts = tree.points;
  int d = static_cast<int>(pts[0].size());
  long n = static_cast<long>(pts.size());
  SplitRng rng(seed);
  BestCandidate best;
  long done = 0;
  for (long it = 0; it < sample_count; ++it) {
    std::vector<Rational> normal(d);
    bool nonzero = false;
    for (int q = 0; q < d; ++q) {
      normal[q] = Rational(rng.next_signed(1 << 16));
      nonzero = nonzero || normal[q] != 0;
    }
    if (!nonzero) continue;
    std::vector<Rational> vals(n);
    for (long r = 0; r < n; ++r) {
      vals[r] = 0;
      for (int q = 0; q < d; ++q) vals[r] += normal[q] * pts[r][q];
    }
    std::vector<Rational> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() < 2) continue;
    size_t gap = rng.below(sorted.size() - 1);
    Rational offset = -(sorted[gap] + sorted[gap + 1]) / 2;
    std::vector<int> signs(n);
    for (long r = 0; r < n; ++r) signs[r] = sign_of(vals[r] + offset);
    ++done;
    consider(best, count_crossings(signs, tree.edges),
             Hyperplane{normal, offset});
  }
  CrossingReport rep;
  rep.mode = CrossingMode::sampled;
  rep.lower_bound_only = true;
  rep.candidates_examined = done;
  rep.max_crossings = std::max(best.count, 0L);
  if (best.count >= 0) rep.witness = best.witness;
  return rep;
}

}  // namespace

CrossingReport crossing_number(const GeoTree& tree, CrossingMode mode,
                               long sample_count, std::uint64_t seed) {
  if (tree.points.empty())
    throw std::invalid_argument("crossing_number: empty tree");
  int d = static_cast<int>(tree.points[0].size());
  if (mode == CrossingMode::sampled)
    return sampled_mode(tree, sample_count, seed);
  if (d == 2) return exact_2d(tree);
  if (d == 3) return exact_3d(tree);
  throw std::invalid_argument("crossing_number: exact mode supports d=2,3");
}

}  // namespace polypart
