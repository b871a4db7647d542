#include "polypart/hamsandwich.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "polypart/linalg.hpp"
#include "polypart/rng.hpp"

namespace polypart {

std::vector<Rational> veronese_lift(const Point& p, int max_degree) {
  if (max_degree < 1)
    throw std::invalid_argument("veronese_lift: max_degree >= 1");
  int d = static_cast<int>(p.size());
  auto exps = nonconstant_monomials(d, max_degree);
  std::vector<int> maxe(d, 0);
  for (const auto& e : exps)
    for (int i = 0; i < d; ++i) maxe[i] = std::max(maxe[i], e[i]);
  std::vector<std::vector<Rational>> pow(d);
  for (int i = 0; i < d; ++i) {
    pow[i].resize(maxe[i] + 1);
    pow[i][0] = 1;
    for (int k = 1; k <= maxe[i]; ++k) pow[i][k] = pow[i][k - 1] * p[i];
  }
  std::vector<Rational> out;
  out.reserve(exps.size());
  for (const auto& e : exps) {
    Rational v = 1;
    for (int i = 0; i < d; ++i)
      if (e[i] > 0) v *= pow[i][e[i]];
    out.push_back(v);
  }
  return out;
}

long bisection_cap(long set_size, const Rational& eps) {
  Integer slack = rational_ceil(eps * Rational(set_size));
  return set_size / 2 + slack.get_si();
}

BisectionCertificate verify_bisection(const MultiPoly& f,
                                      const std::vector<PointSet>& sets,
                                      const Rational& eps) {
  if (f.is_zero())
    throw std::invalid_argument("verify_bisection: zero polynomial");
  BisectionCertificate cert;
  cert.slack = eps;
  cert.all_pass = true;
  for (const auto& set : sets) {
    SetCounts c;
    for (const auto& p : set) {
      int s = f.sign_at(p);
      if (s > 0)
        ++c.pos;
      else if (s < 0)
        ++c.neg;
      else
        ++c.zero;
    }
    long cap = bisection_cap(static_cast<long>(set.size()), eps);
    c.pass = c.pos <= cap && c.neg <= cap;
    cert.all_pass = cert.all_pass && c.pass;
    cert.sets.push_back(c);
  }
  return cert;
}

namespace {

struct LiftedData {
  int dim = 0;           // ambient dimension d
  long k = 0;            // number of nonconstant monomials
  std::vector<Exponents> exps;
  std::vector<std::vector<double>> feat;  // standardized, last column == 1
  std::vector<double> mu, sd;             // per lifted coordinate
  std::vector<std::vector<Rational>> exact_lift;  // kept only for snapping
  std::vector<int> set_of;                // point -> set index
  std::vector<std::vector<long>> members;  // set -> point indices
  std::vector<std::vector<double>> rmat;   // R of the feature QR
  std::vector<bool> dead;                  // linearly dependent columns
  std::vector<long> caps;                 // per set
  std::vector<long> sizes;                // per set
};

// Exact candidate reconstruction: w holds rational coefficients over the
// standardized feature basis (k monomial features plus the constant column);
// the (x^e - mu)/sd transform is undone with exact rationals so the sign
// pattern of the optimizer solution survives.
MultiPoly poly_from_solution(const std::vector<Exponents>& exps, int dim,
                             const std::vector<Rational>& w,
                             const std::vector<double>& mu,
                             const std::vector<double>& sd) {
  MultiPoly f(dim);
  Rational constant = w[exps.size()];
  for (size_t j = 0; j < exps.size(); ++j) {
    if (w[j] == 0) continue;
    Rational coeff = w[j] / Rational(sd[j]);
    f.set_coeff(exps[j], coeff);
    constant -= coeff * Rational(mu[j]);
  }
  if (constant != 0) f.set_coeff(Exponents(dim, 0), constant);
  return f;
}

MultiPoly poly_from_kernel(const std::vector<Exponents>& exps, int dim,
                           const std::vector<Rational>& w) {
  // w = (constant, coeff_1, ..., coeff_k)
  MultiPoly f(dim);
  if (w[0] != 0) f.set_coeff(Exponents(dim, 0), w[0]);
  for (size_t j = 0; j < exps.size(); ++j)
    if (w[j + 1] != 0) f.set_coeff(exps[j], w[j + 1]);
  return f;
}

}  // namespace

BisectionResult find_bisecting_polynomial(const std::vector<PointSet>& sets,
                                          int max_degree,
                                          const BisectionOptions& opts) {
  if (sets.empty()) throw std::invalid_argument("no sets");
  for (const auto& s : sets)
    if (s.empty()) throw std::invalid_argument("empty set");
  int dim = static_cast<int>(sets[0][0].size());
  long k = monomial_count(dim, max_degree);
  if (k < static_cast<long>(sets.size()))
    throw std::invalid_argument(
        "find_bisecting_polynomial: monomial_count(d,D) < number of sets");

  LiftedData L;
  L.dim = dim;
  L.k = k;
  L.exps = nonconstant_monomials(dim, max_degree);
  bool snap_enabled = k <= 32;
  long n_total = 0;
  for (const auto& s : sets) n_total += static_cast<long>(s.size());

  std::vector<std::vector<double>> raw_lift;  // double lifts, pre-standardize
  for (size_t s = 0; s < sets.size(); ++s) {
    L.sizes.push_back(static_cast<long>(sets[s].size()));
    L.caps.push_back(bisection_cap(L.sizes.back(), opts.eps));
    for (const auto& p : sets[s]) {
      auto lift = veronese_lift(p, max_degree);
      if (snap_enabled) L.exact_lift.push_back(lift);
      std::vector<double> dl(k);
      for (long j = 0; j < k; ++j) dl[j] = lift[j].get_d();
      raw_lift.push_back(std::move(dl));
      L.set_of.push_back(static_cast<int>(s));
    }
  }
  L.members.resize(sets.size());
  for (long i = 0; i < n_total; ++i) L.members[L.set_of[i]].push_back(i);
  // Standardize lifted coordinates so the optimizer sees O(1) values.
  L.mu.assign(k, 0.0);
  L.sd.assign(k, 0.0);
  for (long j = 0; j < k; ++j) {
    double m = 0;
    for (const auto& row : raw_lift) m += row[j];
    m /= n_total;
    double v = 0;
    for (const auto& row : raw_lift) v += (row[j] - m) * (row[j] - m);
    L.mu[j] = m;
    L.sd[j] = std::max(std::sqrt(v / n_total), 1e-12);
  }
  L.feat.resize(n_total);
  for (long i = 0; i < n_total; ++i) {
    L.feat[i].resize(k + 1);
    for (long j = 0; j < k; ++j)
      L.feat[i][j] = (raw_lift[i][j] - L.mu[j]) / L.sd[j];
    L.feat[i][k] = 1.0;
  }
  // Orthonormalize the feature columns (modified Gram-Schmidt, two passes)
  // so the optimizer works in a well-conditioned basis. High-degree Veronese
  // columns are nearly collinear; without this the search stalls far from
  // feasibility. Candidates map back through an exact triangular solve.
  const long cols = k + 1;
  L.rmat.assign(cols, std::vector<double>(cols, 0.0));
  L.dead.assign(cols, false);
  for (long j = 0; j < cols; ++j) {
    double norm0 = 0;
    for (long i = 0; i < n_total; ++i) norm0 += L.feat[i][j] * L.feat[i][j];
    norm0 = std::sqrt(norm0);
    for (int pass = 0; pass < 2; ++pass)
      for (long q = 0; q < j; ++q) {
        if (L.dead[q]) continue;
        double dot = 0;
        for (long i = 0; i < n_total; ++i) dot += L.feat[i][q] * L.feat[i][j];
        L.rmat[q][j] += dot;
        for (long i = 0; i < n_total; ++i) L.feat[i][j] -= dot * L.feat[i][q];
      }
    double nrm = 0;
    for (long i = 0; i < n_total; ++i) nrm += L.feat[i][j] * L.feat[i][j];
    nrm = std::sqrt(nrm);
    if (nrm <= 1e-10 * std::max(1.0, norm0)) {
      L.dead[j] = true;
      for (long i = 0; i < n_total; ++i) L.feat[i][j] = 0.0;
    } else {
      L.rmat[j][j] = nrm;
      for (long i = 0; i < n_total; ++i) L.feat[i][j] /= nrm;
    }
  }

  std::ofstream trace;
  if (!opts.trace_csv.empty()) {
    trace.open(opts.trace_csv);
    trace << "restart,iteration,loss,sigma\n";
  }

  SplitRng root(opts.seed);
  BisectionCertificate best_cert;
  long best_pass_count = -1;

  auto consider = [&](const MultiPoly& f) -> std::optional<BisectionCertificate> {
    if (f.is_zero()) return std::nullopt;
    BisectionCertificate cert = verify_bisection(f, sets, opts.eps);
    long passed = 0;
    for (const auto& c : cert.sets) passed += c.pass ? 1 : 0;
    if (passed > best_pass_count) {
      best_pass_count = passed;
      best_cert = cert;
    }
    if (cert.all_pass) return cert;
    return std::nullopt;
  };

  // Back-substitution through R in doubles, then rounding of the resulting
  // standardized coefficients. Rounding after the solve matters: grid noise
  // in the orthonormal basis is amplified by the condition number of R, while
  // noise in w shifts each point value by at most the grid times the feature
  // magnitude.
  auto solve_back = [&](const std::vector<double>& a_vec) {
    std::vector<double> wd(cols, 0.0);
    for (long j = cols - 1; j >= 0; --j) {
      if (L.dead[j]) continue;
      double acc = a_vec[j];
      for (long q = j + 1; q < cols; ++q) acc -= L.rmat[j][q] * wd[q];
      wd[j] = acc / L.rmat[j][j];
    }
    std::vector<Rational> w(cols);
    for (long j = 0; j < cols; ++j)
      if (wd[j] != 0.0) w[j] = round_to_grid(wd[j]);
    return w;
  };

  const long dims = k + 1;
  std::vector<double> a(dims), m1(dims), m2(dims), grad(dims), vals(n_total);
  std::vector<long> scratch;

  for (int restart = 0; restart < opts.restarts; ++restart) {
    SplitRng rng = root.split(static_cast<std::uint64_t>(restart));
    // Gaussian init on the unit sphere.
    double norm2 = 0;
    for (long j = 0; j < dims; ++j) {
      double u1 = std::max(rng.next_double(), 1e-12);
      double u2 = rng.next_double();
      a[j] = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
      norm2 += a[j] * a[j];
    }
    for (long j = 0; j < dims; ++j) a[j] /= std::sqrt(norm2);
    std::fill(m1.begin(), m1.end(), 0.0);
    std::fill(m2.begin(), m2.end(), 0.0);

    const double sigma0 = 1.0, sigma1 = 0.005;
    int attempts = 0, snaps = 0;
    double best_loss = 1e300;
    int best_loss_it = 0;
    int last_attempt_it = -1000;

    for (int it = 1; it <= opts.max_iters; ++it) {
      double sigma =
          sigma0 * std::pow(sigma1 / sigma0,
                            static_cast<double>(it) / opts.max_iters);
      for (long i = 0; i < n_total; ++i) {
        double v = 0;
        for (long j = 0; j < dims; ++j) v += a[j] * L.feat[i][j];
        vals[i] = v;
      }
      // Hinge on every point beyond the cap: sort each set by value and
      // penalize all ranks past cap on each side that sit on the wrong side
      // of the margin.
      // Annealed margin: wide early so the gradient orders whole sets, then
      // held at a small floor for a polish phase where near-feasible iterates
      // get nudged onto the right side.
      const double phase =
          std::min(1.0, static_cast<double>(it) / (0.4 * opts.max_iters));
      const double margin = 0.05 * std::pow(0.01, phase);
      double loss = 0;
      std::vector<std::pair<long, double>> contrib;  // point -> dLoss/dval
      for (size_t s = 0; s < sets.size(); ++s) {
        const auto& mem = L.members[s];
        long cap = L.caps[s];
        long sz = static_cast<long>(mem.size());
        if (cap >= sz) continue;
        scratch.assign(mem.begin(), mem.end());
        std::sort(scratch.begin(), scratch.end(),
                  [&](long x, long y) { return vals[x] > vals[y]; });
        for (long t = cap; t < sz; ++t) {
          double e = vals[scratch[t]] + margin;
          if (e > 0) {
            loss += e * e;
            contrib.emplace_back(scratch[t], 2.0 * e);
          }
        }
        for (long t = 0; t < sz - cap; ++t) {
          double e = margin - vals[scratch[t]];
          if (e > 0) {
            loss += e * e;
            contrib.emplace_back(scratch[t], -2.0 * e);
          }
        }
      }
      if (trace.is_open())
        trace << restart << ',' << it << ',' << loss << ',' << sigma << '\n';

      // Hard sign counts are the real gate: at large sigma the soft loss
      // passes trivially, so it cannot decide when to attempt candidates.
      std::vector<long> hard_pos(sets.size(), 0), hard_neg(sets.size(), 0);
      for (long i = 0; i < n_total; ++i) {
        if (vals[i] > 0)
          ++hard_pos[L.set_of[i]];
        else if (vals[i] < 0)
          ++hard_neg[L.set_of[i]];
      }
      long viol = 0;
      for (size_t s = 0; s < sets.size(); ++s)
        viol += std::max(0L, hard_pos[s] - L.caps[s]) +
                std::max(0L, hard_neg[s] - L.caps[s]);
      bool hard_ok = viol == 0;
      // Rounding to the rational grid perturbs near-zero values, so a barely
      // infeasible iterate is still worth an exact check late in the run.
      bool near_ok = phase >= 1.0 && viol <= 2;

      bool plateaued = false;
      if (loss < best_loss * (1.0 - 1e-4)) {
        best_loss = loss;
        best_loss_it = it;
      } else if (it - best_loss_it > 3000) {
        plateaued = true;
      }
      bool last_chance = plateaued || it == opts.max_iters;
      bool try_candidates =
          ((hard_ok || near_ok) && attempts < 40 &&
           it - last_attempt_it >= 250) ||
          (last_chance && attempts == 0);
      if (try_candidates) {
        ++attempts;
        last_attempt_it = it;
        MultiPoly fs = poly_from_solution(L.exps, dim, solve_back(a), L.mu, L.sd);
        if (auto cert = consider(fs))
          return BisectionResult{fs, *cert, restart};
        if (snap_enabled && (hard_ok || near_ok || last_chance) && snaps < 30) {
          ++snaps;
          // Exact hyperplane through the k lifted points nearest the
          // current boundary.
          std::vector<long> order(n_total);
          std::iota(order.begin(), order.end(), 0L);
          std::sort(order.begin(), order.end(), [&](long x, long y) {
            double ax = std::fabs(vals[x]), ay = std::fabs(vals[y]);
            if (ax != ay) return ax < ay;
            return x < y;
          });
          long rows = std::min<long>(k, n_total);
          Matrix m;
          for (long t = 0; t < rows; ++t) {
            std::vector<Rational> row;
            row.push_back(Rational(1));
            for (const auto& q : L.exact_lift[order[t]]) row.push_back(q);
            m.push_back(std::move(row));
          }
          if (auto w = kernel_vector(std::move(m), static_cast<int>(k) + 1)) {
            MultiPoly g = poly_from_kernel(L.exps, dim, *w);
            if (auto cert = consider(g))
              return BisectionResult{g, *cert, restart};
          }
        }
      }

      if (plateaued) break;  // next restart

      // Zero surrogate loss freezes the gradient; kick the iterate so the
      // restart keeps exploring nearby directions.
      if (loss == 0.0) {
        double kick2 = 0;
        for (long j = 0; j < dims; ++j) {
          double u1 = std::max(rng.next_double(), 1e-12);
          double u2 = rng.next_double();
          a[j] += margin * std::sqrt(-2.0 * std::log(u1)) *
                  std::cos(6.283185307179586 * u2);
          kick2 += a[j] * a[j];
        }
        for (long j = 0; j < dims; ++j) a[j] /= std::sqrt(kick2);
        continue;
      }

      // Adam step on the sphere.
      std::fill(grad.begin(), grad.end(), 0.0);
      for (const auto& [i, c] : contrib)
        for (long j = 0; j < dims; ++j) grad[j] += c * L.feat[i][j];
      double b1t = 1.0 - std::pow(0.9, it), b2t = 1.0 - std::pow(0.999, it);
      norm2 = 0;
      for (long j = 0; j < dims; ++j) {
        m1[j] = 0.9 * m1[j] + 0.1 * grad[j];
        m2[j] = 0.999 * m2[j] + 0.001 * grad[j] * grad[j];
        double lr = 0.05 * std::pow(0.1, phase);
        a[j] -= lr * (m1[j] / b1t) / (std::sqrt(m2[j] / b2t) + 1e-12);
        norm2 += a[j] * a[j];
      }
      double norm = std::sqrt(norm2);
      if (norm < 1e-12) break;
      for (long j = 0; j < dims; ++j) a[j] /= norm;
    }
  }
  throw BisectionNotFound(best_cert);
}

std::optional<MultiPoly> exact_bisector_oracle(
    const std::vector<PointSet>& sets, int max_degree) {
  if (sets.empty()) throw std::invalid_argument("no sets");
  int dim = static_cast<int>(sets[0][0].size());
  long k = monomial_count(dim, max_degree);
  long n_total = 0;
  for (const auto& s : sets) n_total += static_cast<long>(s.size());
  if (n_total > 14 || k > 4)
    throw std::invalid_argument("exact_bisector_oracle: size limits exceeded");

  auto exps = nonconstant_monomials(dim, max_degree);
  std::vector<std::vector<Rational>> rows;  // (1, lift)
  std::vector<const Point*> pts;
  for (const auto& s : sets)
    for (const auto& p : s) {
      std::vector<Rational> row;
      row.push_back(Rational(1));
      for (const auto& q : veronese_lift(p, max_degree)) row.push_back(q);
      rows.push_back(std::move(row));
      pts.push_back(&p);
    }

  long n = static_cast<long>(rows.size());
  // Subsets of each size from min(k, n) down to 1; the hyperplane through a
  // subset leaves those points uncounted on either side, which is the most
  // favorable placement of the decision boundary.
  for (long size = std::min<long>(k, n); size >= 1; --size) {
    std::vector<long> idx(size);
    std::iota(idx.begin(), idx.end(), 0L);
    while (true) {
      Matrix m;
      for (long i : idx) m.push_back(rows[i]);
      if (auto w = kernel_vector(std::move(m), static_cast<int>(k) + 1)) {
        MultiPoly f(dim);
        if ((*w)[0] != 0) f.set_coeff(Exponents(dim, 0), (*w)[0]);
        for (size_t j = 0; j < exps.size(); ++j)
          if ((*w)[j + 1] != 0) f.set_coeff(exps[j], (*w)[j + 1]);
        if (!f.is_zero()) {
          auto cert = verify_bisection(f, sets, Rational(0));
          if (cert.all_pass) return f;
        }
      }
      // next combination
      long i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (long j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace polypart
