#include "polypart/partition.hpp"

#include <algorithm>
#include <sstream>

#include "polypart/rng.hpp"

namespace polypart {

namespace {

std::string sign_string(const std::vector<int>& signs) {
  std::string s;
  for (int v : signs) s += v < 0 ? '-' : (v > 0 ? '+' : '0');
  return s;
}

}  // namespace

std::string PartitionResult::serialize() const {
  std::ostringstream os;
  os << "factors " << factors.size() << "\n";
  for (size_t i = 0; i < factors.size(); ++i) {
    os << "factor " << i << " degree " << factors[i].degree() << "\n";
    os << factors[i].to_text();
  }
  os << "signs " << point_signs.size() << "\n";
  for (const auto& s : point_signs) os << sign_string(s) << "\n";
  return os.str();
}

std::vector<int> sign_vector(const Point& p,
                             const std::vector<MultiPoly>& factors) {
  std::vector<int> s;
  s.reserve(factors.size());
  for (const auto& f : factors) s.push_back(f.sign_at(p));
  return s;
}

PartitionResult build_partition(const std::vector<Point>& points,
                                const Rational& r,
                                const PartitionOptions& opts) {
  long n = static_cast<long>(points.size());
  if (n == 0) throw std::invalid_argument("build_partition: empty point set");
  if (!(r > 1) || r > Rational(n))
    throw std::invalid_argument("build_partition: need 1 < r <= |P|");
  size_t dim = points[0].size();
  for (const auto& p : points)
    if (p.size() != dim)
      throw std::invalid_argument("build_partition: mixed dimensions");
  int d = static_cast<int>(dim);

  // Round budget: t with (1/2+eps)^t <= 1/r; with eps=0 this is ceil(log2 r).
  Rational shrink = rat(1, 2) + opts.eps;
  if (!(shrink < 1))
    throw std::invalid_argument("build_partition: eps too large");
  int t_max = 0;
  Rational pow = 1;
  while (pow * r > 1) {
    pow *= shrink;
    ++t_max;
  }

  PartitionResult pr;
  SplitRng root(opts.seed);
  std::vector<std::vector<int>> sets;  // index sets
  {
    std::vector<int> all(n);
    for (long i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    sets.push_back(std::move(all));
  }

  auto max_set_size = [&]() {
    size_t m = 0;
    for (const auto& s : sets) m = std::max(m, s.size());
    return static_cast<long>(m);
  };

  int round = 0;
  // Stop as soon as every set is small enough; this can finish below the
  // formula budget (exact sign splits halve faster than the eps-padded rate)
  // and keeps the total degree down.
  while (Rational(max_set_size()) * r > Rational(n) && round < t_max) {
    ++round;
    std::vector<PointSet> round_sets;
    for (const auto& s : sets) {
      PointSet ps;
      for (int i : s) ps.push_back(points[i]);
      round_sets.push_back(std::move(ps));
    }
    long s_count = static_cast<long>(round_sets.size());
    int degree = 1;
    while (monomial_count(d, degree) < s_count) ++degree;

    BisectionResult br{MultiPoly::zero(d), {}, 0};
    bool found = false;
    for (int esc = 0; esc <= opts.max_degree_escalations; ++esc) {
      BisectionOptions bo;
      bo.eps = opts.eps;
      bo.seed = root.split(round).split(esc).next();
      // Fail fast at the minimal degree: one degree of slack usually makes
      // the search easy, so spend most restarts on the escalated attempts.
      bo.restarts =
          esc == opts.max_degree_escalations ? 48 : 10 + 6 * esc;
      try {
        br = find_bisecting_polynomial(round_sets, degree, bo);
        found = true;
        break;
      } catch (const BisectionNotFound&) {
        std::ostringstream msg;
        msg << "round " << round << ": degree escalated " << degree << " -> "
            << degree + 1;
        pr.log.push_back(msg.str());
        ++degree;
      }
    }
    if (!found) {
      std::ostringstream msg;
      msg << "bisection-not-found at round " << round << " (degree " << degree
          << ", " << s_count << " sets)";
      throw std::runtime_error(msg.str());
    }
    pr.factors.push_back(br.f);
    pr.round_certs.push_back(br.cert);

    std::vector<std::vector<int>> next;
    for (const auto& s : sets) {
      std::vector<int> pos, neg;
      for (int i : s) {
        int sg = br.f.sign_at(points[i]);
        if (sg > 0)
          pos.push_back(i);
        else if (sg < 0)
          neg.push_back(i);
        // Points on Z(f_j) leave the halving process; they end up on Z.
      }
      if (!pos.empty()) next.push_back(std::move(pos));
      if (!neg.empty()) next.push_back(std::move(neg));
    }
    sets = std::move(next);
    if (sets.empty()) break;
  }

  pr.rounds = static_cast<int>(pr.factors.size());
  pr.total_degree = 0;
  for (const auto& f : pr.factors) pr.total_degree += f.degree();
  for (long i = 0; i < n; ++i) {
    auto sv = sign_vector(points[i], pr.factors);
    bool boundary = std::find(sv.begin(), sv.end(), 0) != sv.end();
    pr.point_signs.push_back(sv);
    if (boundary)
      pr.boundary_points.push_back(static_cast<int>(i));
    else
      pr.cells[sv].push_back(static_cast<int>(i));
  }
  pr.max_cell_size = 0;
  for (const auto& [sv, idx] : pr.cells)
    pr.max_cell_size = std::max(pr.max_cell_size, static_cast<long>(idx.size()));
  return pr;
}

namespace {

struct RootInterval {
  Rational lo, hi;  // degenerate (lo == hi) for exact rational roots
  int factor = 0;
  bool degenerate() const { return lo == hi; }
};

// Keep the half of (lo,hi) that still contains the factor's root.
void refine(RootInterval& iv, const UniPoly& g, const SturmChain& chain) {
  if (iv.degenerate()) return;
  Rational mid = (iv.lo + iv.hi) / 2;
  if (g.eval(mid) == 0) {
    iv.lo = iv.hi = mid;
    return;
  }
  if (chain.count_half_open(iv.lo, mid) >= 1)
    iv.hi = mid;
  else
    iv.lo = mid;
}

}  // namespace

LineSignClasses sign_classes_along_line(const std::vector<MultiPoly>& factors,
                                        const Line& line) {
  LineSignClasses out;
  auto [p0, p1] = line.span();
  std::vector<UniPoly> gs;
  for (const auto& f : factors) {
    UniPoly g = restrict_to_segment(f, p0, p1);
    if (g.is_zero()) {
      out.contained = true;
      return out;
    }
    gs.push_back(std::move(g));
  }

  std::vector<RootInterval> ivs;
  std::vector<SturmChain> chains;
  chains.reserve(gs.size());
  for (size_t j = 0; j < gs.size(); ++j) {
    chains.emplace_back(gs[j]);
    for (auto& [lo, hi] : isolate_roots(gs[j]))
      ivs.push_back({lo, hi, static_cast<int>(j)});
  }

  // Refine intervals of different factors until pairwise disjoint; shared
  // rational roots collapse to identical degenerate intervals.
  for (int pass = 0; pass < 256; ++pass) {
    std::sort(ivs.begin(), ivs.end(), [](const RootInterval& a,
                                         const RootInterval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.hi < b.hi;
    });
    bool overlap = false;
    for (size_t i = 0; i + 1 < ivs.size(); ++i) {
      auto& a = ivs[i];
      auto& b = ivs[i + 1];
      if (a.factor == b.factor) continue;
      bool touches = a.degenerate() && b.degenerate() ? a.lo == b.lo
                                                      : !(a.hi < b.lo);
      if (a.degenerate() && b.degenerate()) continue;  // equal == shared root
      if (!touches) continue;
      // A degenerate interval can pin the other factor's root exactly.
      if (a.degenerate()) {
        if (gs[b.factor].eval(a.lo) == 0) {
          b.lo = b.hi = a.lo;
          continue;
        }
      } else if (b.degenerate()) {
        if (gs[a.factor].eval(b.lo) == 0) {
          a.lo = a.hi = b.lo;
          continue;
        }
      }
      overlap = true;
      refine(a, gs[a.factor], chains[a.factor]);
      refine(b, gs[b.factor], chains[b.factor]);
    }
    if (!overlap) break;
  }

  // Cluster remaining overlaps (identical rational roots, or the rare
  // unseparated pair) into single breakpoints.
  std::sort(ivs.begin(), ivs.end(),
            [](const RootInterval& a, const RootInterval& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return a.hi < b.hi;
            });
  std::vector<std::pair<Rational, Rational>> clusters;
  for (const auto& iv : ivs) {
    if (!clusters.empty() && !(clusters.back().second < iv.lo)) {
      if (clusters.back().second < iv.hi) clusters.back().second = iv.hi;
      continue;
    }
    clusters.emplace_back(iv.lo, iv.hi);
  }
  out.root_count = static_cast<int>(clusters.size());

  std::vector<Rational> samples;
  if (clusters.empty()) {
    samples.push_back(Rational(0));
  } else {
    samples.push_back(clusters.front().first - 1);
    for (size_t i = 0; i + 1 < clusters.size(); ++i)
      samples.push_back((clusters[i].second + clusters[i + 1].first) / 2);
    samples.push_back(clusters.back().second + 1);
  }
  for (const auto& t : samples) {
    std::vector<int> sv;
    sv.reserve(gs.size());
    bool nonzero = true;
    for (const auto& g : gs) {
      int s = g.sign_at(t);
      if (s == 0) nonzero = false;
      sv.push_back(s);
    }
    if (nonzero) out.classes.insert(std::move(sv));
  }
  return out;
}

AuditReport audit_partition(const PartitionResult& pr,
                            const std::vector<Point>& points, const Rational& r,
                            const std::vector<Line>& lines) {
  AuditReport report;
  long n = static_cast<long>(points.size());
  int d = points.empty() ? 2 : static_cast<int>(points[0].size());

  report.add("max_cell_size", Rational(pr.max_cell_size),
             Rational(rational_ceil(Rational(n) / r)));
  if (d == 2) {
    Integer budget = Integer(49);
    budget <<= pr.rounds;  // 49 * 2^t, compared against degree^2
    report.add("planar_degree_budget_sq",
               Rational(Integer(pr.total_degree) * Integer(pr.total_degree)),
               Rational(budget));
  }
  if (!lines.empty()) {
    long worst = 0;
    for (const auto& line : lines) {
      auto sc = sign_classes_along_line(pr.factors, line);
      worst = std::max(worst, static_cast<long>(sc.classes.size()));
    }
    report.add("line_sign_classes", Rational(worst),
               Rational(pr.total_degree + 1));
  }
  Integer warren = 6;
  Integer twod = 2 * Integer(pr.total_degree);
  for (int i = 0; i < d; ++i) warren *= twod;
  report.add("warren_cell_count", Rational(static_cast<long>(pr.cells.size())),
             Rational(warren));
  return report;
}

}  // namespace polypart
