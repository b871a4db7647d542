// polypart: polynomial partitioning workbench.
//
// Subcommands: gen, partition, incidences, tree, crossings, audit,
// experiment. Exit codes: 0 success, 1 usage, 2 computation failure.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polypart/generators.hpp"
#include "polypart/io.hpp"
#include "polypart/partition.hpp"
#include "polypart/rng.hpp"

using namespace polypart;

namespace {

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-")
    std::cout << content;
  else
    write_file(out, content);
}

// Fixed-precision approximate cell; the ~ prefix marks non-exact values.
std::string approx(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  os << '~' << v;
  return os.str();
}

int report_exit(const AuditReport& report, const std::string& out) {
  emit(out, report.to_csv());
  if (!report.all_pass()) {
    for (const auto& e : report.entries)
      if (!e.pass) std::cerr << "audit failed: " << e.name << "\n";
    return 2;
  }
  return 0;
}

struct ExperimentRow {
  std::string suite, instance;
  long n = 0, m = 0;
  std::uint64_t seed = 0;
  std::string incidences = "";    // exact or empty
  std::string ratio = "";         // approximate
  std::string max_crossing = "";  // exact or empty
  std::string crossing_norm = "";
  std::string degree = "", cells = "";
  std::string pass = "";
  long runtime_ms = 0;
  std::string error;
};

constexpr const char* kSchema = "polypart-experiment-v1";

std::string rows_to_csv(const std::vector<ExperimentRow>& rows,
                        bool timings) {
  std::ostringstream os;
  os << "schema,suite,instance,n,m,seed,incidences,ratio,max_crossing,"
        "crossing_norm,degree,cells,pass";
  if (timings) os << ",runtime_ms";
  os << ",error\n";
  for (const auto& r : rows) {
    os << kSchema << ',' << r.suite << ',' << r.instance << ',' << r.n << ','
       << r.m << ',' << r.seed << ',' << r.incidences << ',' << r.ratio << ','
       << r.max_crossing << ',' << r.crossing_norm << ',' << r.degree << ','
       << r.cells << ',' << r.pass;
    if (timings) os << ',' << r.runtime_ms;
    os << ',' << r.error << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial partitioning workbench"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_kind, gen_out;
  long gen_n = 64, gen_lines = -1;
  int gen_g = 4, gen_k = 2, gen_dim = 2;
  std::uint64_t gen_seed = 0;
  gen->add_option("kind", gen_kind, "grid|random|circle|extremal-grid")
      ->required();
  gen->add_option("--n", gen_n, "point count (random)");
  gen->add_option("--lines", gen_lines, "line count (random; default n)");
  gen->add_option("--g", gen_g, "grid side (grid, circle)");
  gen->add_option("--k", gen_k, "parameter k (extremal-grid)");
  gen->add_option("--dim", gen_dim, "dimension (random)");
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // ---- partition ----
  auto* part = app.add_subcommand("partition", "build a partitioning polynomial");
  std::string part_in, part_out, part_r = "8", part_eps = "1/20";
  std::uint64_t part_seed = 0;
  part->add_option("--in", part_in)->required();
  part->add_option("--r", part_r, "partition parameter r (rational)");
  part->add_option("--eps", part_eps, "bisection slack (rational)");
  part->add_option("--seed", part_seed);
  part->add_option("--out", part_out);

  // ---- incidences ----
  auto* inc = app.add_subcommand("incidences", "count incidences exactly");
  std::string inc_in, inc_out;
  inc->add_option("--in", inc_in)->required();
  inc->add_option("--out", inc_out);

  // ---- tree ----
  auto* treecmd = app.add_subcommand("tree", "build a low-crossing spanning tree");
  std::string tree_in, tree_out, tree_log, tree_svg, tree_eps = "1/20";
  long tree_c = 8;
  std::uint64_t tree_seed = 0;
  treecmd->add_option("--in", tree_in)->required();
  treecmd->add_option("--c", tree_c, "cell capacity constant");
  treecmd->add_option("--eps", tree_eps);
  treecmd->add_option("--seed", tree_seed);
  treecmd->add_option("--out", tree_out);
  treecmd->add_option("--log", tree_log, "per-level build log path");
  treecmd->add_option("--svg", tree_svg, "figure path");

  // ---- crossings ----
  auto* cross = app.add_subcommand("crossings", "crossing number of a tree file");
  std::string cross_in, cross_out, cross_mode = "exact", cross_svg;
  long cross_samples = 20000;
  std::uint64_t cross_seed = 0;
  cross->add_option("--in", cross_in)->required();
  cross->add_option("--mode", cross_mode, "exact|sampled");
  cross->add_option("--samples", cross_samples);
  cross->add_option("--seed", cross_seed);
  cross->add_option("--out", cross_out);
  cross->add_option("--svg", cross_svg);

  // ---- audit ----
  auto* audit = app.add_subcommand("audit", "run proof-inequality audits");
  std::string audit_kind, audit_in, audit_out, audit_r, audit_eps = "1/20";
  long audit_nlines = 0;
  std::uint64_t audit_seed = 0;
  audit->add_option("kind", audit_kind, "st|partition|curves")->required();
  audit->add_option("--in", audit_in)->required();
  audit->add_option("--r", audit_r, "override the partition parameter");
  audit->add_option("--eps", audit_eps);
  audit->add_option("--seed", audit_seed);
  audit->add_option("--lines", audit_nlines,
                    "random audit lines (partition kind)");
  audit->add_option("--out", audit_out);

  // ---- experiment ----
  auto* exp = app.add_subcommand("experiment", "run a measurement suite");
  std::string exp_suite, exp_out, exp_sizes = "64,256";
  long exp_seeds = 1;
  std::uint64_t exp_seed = 0;
  bool exp_svg = false, exp_timings = false;
  exp->add_option("suite", exp_suite, "st|curves|tree2d|tree3d")->required();
  exp->add_option("--sizes", exp_sizes, "comma-separated size ladder");
  exp->add_option("--seeds", exp_seeds, "seeds per size");
  exp->add_option("--seed", exp_seed, "base seed");
  exp->add_flag("--svg", exp_svg, "emit a figure per tree row");
  exp->add_flag("--timings", exp_timings,
                "add runtime_ms (breaks byte determinism)");
  exp->add_option("--out", exp_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      Instance inst;
      if (gen_kind == "grid") {
        inst = grid_instance(gen_g);
      } else if (gen_kind == "random") {
        inst = random_instance(gen_n, gen_lines < 0 ? gen_n : gen_lines,
                               gen_dim, gen_seed);
      } else if (gen_kind == "circle") {
        inst = circle_instance(gen_g);
      } else if (gen_kind == "extremal-grid") {
        inst = extremal_grid_instance(gen_k);
      } else {
        std::cerr << "unknown kind: " << gen_kind << "\n";
        return 1;
      }
      emit(gen_out, instance_to_json(inst));
      return 0;
    }

    if (*part) {
      Instance inst = load_instance(part_in);
      PartitionOptions opts;
      opts.eps = parse_rational(part_eps);
      opts.seed = part_seed;
      PartitionResult pr =
          build_partition(inst.points, parse_rational(part_r), opts);
      emit(part_out, pr.serialize());
      return 0;
    }

    if (*inc) {
      Instance inst = load_instance(inc_in);
      std::ostringstream os;
      os << "quantity,value\n";
      os << "m," << inst.points.size() << "\n";
      if (!inst.lines.lines.empty() || !inst.has_curves)
        os << "n," << inst.lines.size() << "\n";
      if (!inst.lines.lines.empty() && !inst.points.empty()) {
        long i = count_incidences_lines(inst.points, inst.lines);
        os << "incidences_lines," << i << "\n";
        os << "st_ratio,"
           << approx(rational_to_double(st_bound_ratio(inst.points, inst.lines)))
           << "\n";
      }
      if (inst.has_curves) {
        os << "curves," << inst.curves.size() << "\n";
        os << "incidences_curves,"
           << count_incidences_curves(inst.points, inst.curves) << "\n";
      }
      emit(inc_out, os.str());
      return 0;
    }

    if (*treecmd) {
      Instance inst = load_instance(tree_in);
      TreeBuildOptions opts;
      opts.c = tree_c;
      opts.eps = parse_rational(tree_eps);
      opts.seed = tree_seed;
      TreeBuildResult res = build_low_crossing_tree(inst.points, opts);
      emit(tree_out, tree_to_json(res.tree));
      if (!tree_log.empty()) write_file(tree_log, res.log_text());
      if (!tree_svg.empty())
        write_file(tree_svg,
                   render_svg(res.tree.points, res.tree.edges, std::nullopt));
      if (!res.tree.is_spanning_tree()) {
        std::cerr << "tree construction failed: not a spanning tree\n";
        return 2;
      }
      return 0;
    }

    if (*cross) {
      GeoTree tree = load_tree(cross_in);
      CrossingMode mode;
      if (cross_mode == "exact")
        mode = CrossingMode::exact;
      else if (cross_mode == "sampled")
        mode = CrossingMode::sampled;
      else {
        std::cerr << "unknown mode: " << cross_mode << "\n";
        return 1;
      }
      CrossingReport rep =
          crossing_number(tree, mode, cross_samples, cross_seed);
      emit(cross_out, crossing_report_to_json(rep));
      if (!cross_svg.empty())
        write_file(cross_svg,
                   render_svg(tree.points, tree.edges, rep.witness));
      return 0;
    }

    if (*audit) {
      Instance inst = load_instance(audit_in);
      if (audit_kind == "st") {
        if (inst.lines.lines.empty() || inst.points.empty()) {
          std::cerr << "instance needs points and lines\n";
          return 1;
        }
        StAuditOptions opts;
        if (!audit_r.empty()) opts.r = parse_rational(audit_r);
        opts.eps = parse_rational(audit_eps);
        opts.seed = audit_seed;
        return report_exit(audit_szemeredi_trotter(inst.points, inst.lines, opts),
                           audit_out);
      }
      if (audit_kind == "partition") {
        Rational r = audit_r.empty() ? Rational(8) : parse_rational(audit_r);
        PartitionOptions popts;
        popts.eps = parse_rational(audit_eps);
        popts.seed = audit_seed;
        PartitionResult pr = build_partition(inst.points, r, popts);
        std::vector<Line> lines;
        SplitRng rng(SplitRng(audit_seed).split(7).next());
        while (static_cast<long>(lines.size()) < audit_nlines) {
          long a = rng.next_signed(1 << 12), b = rng.next_signed(1 << 12);
          long c = rng.next_signed(1 << 12);
          if (a == 0 && b == 0) continue;
          lines.push_back(Line(rat(a), rat(b), rat(c)));
        }
        return report_exit(audit_partition(pr, inst.points, r, lines),
                           audit_out);
      }
      if (audit_kind == "curves") {
        if (!inst.has_curves) {
          std::cerr << "instance has no curves\n";
          return 1;
        }
        return report_exit(audit_curve_bounds(inst.points, inst.curves),
                           audit_out);
      }
      std::cerr << "unknown audit kind: " << audit_kind << "\n";
      return 1;
    }

    if (*exp) {
      std::vector<long> sizes;
      {
        std::istringstream ss(exp_sizes);
        std::string tok;
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stol(tok));
      }
      if (exp_suite != "st" && exp_suite != "curves" && exp_suite != "tree2d" &&
          exp_suite != "tree3d") {
        std::cerr << "unknown suite: " << exp_suite << "\n";
        return 1;
      }
      std::vector<ExperimentRow> rows;
      SplitRng base(exp_seed);
      for (long size : sizes) {
        for (long s = 0; s < exp_seeds; ++s) {
          ExperimentRow row;
          row.suite = exp_suite;
          row.n = size;
          row.seed = base.split(size).split(s).next();
          auto t0 = std::chrono::steady_clock::now();
          try {
            if (exp_suite == "st") {
              Instance inst = random_st_instance(size, size, row.seed);
              row.instance = "random-st";
              row.m = static_cast<long>(inst.points.size());
              long i = count_incidences_lines(inst.points, inst.lines);
              row.incidences = std::to_string(i);
              row.ratio = approx(
                  rational_to_double(st_bound_ratio(inst.points, inst.lines)));
              StAuditOptions opts;
              opts.seed = row.seed;
              AuditReport rep =
                  audit_szemeredi_trotter(inst.points, inst.lines, opts);
              row.pass = rep.all_pass() ? "true" : "false";
            } else if (exp_suite == "curves") {
              Instance inst = circle_instance(static_cast<int>(size));
              row.instance = "circle-grid";
              row.m = static_cast<long>(inst.points.size());
              long i = count_incidences_curves(inst.points, inst.curves);
              row.incidences = std::to_string(i);
              AuditReport rep = audit_curve_bounds(inst.points, inst.curves);
              row.pass = rep.all_pass() ? "true" : "false";
            } else {
              int dim = exp_suite == "tree2d" ? 2 : 3;
              std::vector<Point> pts = random_points(size, dim, row.seed);
              row.instance = dim == 2 ? "random-2d" : "random-3d";
              row.m = size;
              TreeBuildOptions topts;
              topts.seed = row.seed;
              TreeBuildResult res = build_low_crossing_tree(pts, topts);
              long exact_cap = dim == 2 ? 512 : 128;
              CrossingReport rep = crossing_number(
                  res.tree,
                  size <= exact_cap ? CrossingMode::exact
                                    : CrossingMode::sampled,
                  20000, row.seed);
              row.max_crossing = std::to_string(rep.max_crossings);
              double norm = dim == 2 ? std::sqrt(static_cast<double>(size))
                                     : std::pow(static_cast<double>(size),
                                                2.0 / 3.0);
              row.crossing_norm = approx(rep.max_crossings / norm);
              row.pass = res.tree.is_spanning_tree() &&
                                 res.fallback_edges == 0
                             ? "true"
                             : "false";
              if (exp_svg && dim == 2) {
                std::ostringstream name;
                name << (exp_out.empty() ? std::string("experiment")
                                         : exp_out)
                     << ".n" << size << ".s" << s << ".svg";
                write_file(name.str(), render_svg(res.tree.points,
                                                  res.tree.edges,
                                                  rep.witness));
              }
            }
          } catch (const std::exception& e) {
            row.error = e.what();
            row.pass = "false";
          }
          auto t1 = std::chrono::steady_clock::now();
          row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               t1 - t0)
                               .count();
          rows.push_back(std::move(row));
        }
      }
      emit(exp_out, rows_to_csv(rows, exp_timings));
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
