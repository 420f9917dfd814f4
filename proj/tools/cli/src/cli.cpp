#include "opaque_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "opaque/barrier.hpp"
#include "opaque/barrier_io.hpp"
#include "opaque/bounds.hpp"
#include "opaque/certificate.hpp"
#include "opaque/error.hpp"
#include "opaque/final_bound.hpp"
#include "opaque/lp.hpp"
#include "opaque/overlap.hpp"
#include "parse.hpp"
#include "svg.hpp"

namespace opaque::cli {

namespace {

enum class Format { json, csv };

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Flat key/value output; values are kept both as JSON text and CSV text.
class Record {
 public:
  Record& add(const std::string& key, double v) { return put(key, format_real(v), format_real(v)); }
  Record& add(const std::string& key, int v) { return put(key, std::to_string(v), std::to_string(v)); }
  Record& add(const std::string& key, std::size_t v) { return put(key, std::to_string(v), std::to_string(v)); }
  Record& add(const std::string& key, bool v) { return put(key, v ? "true" : "false", v ? "true" : "false"); }
  Record& add(const std::string& key, const std::string& v) { return put(key, quote(v), v); }
  Record& add(const std::string& key, const char* v) { return add(key, std::string(v)); }

  void emit(Format f, std::ostream& out) const {
    if (f == Format::csv) {
      out << "key,value\n";
      for (const auto& [k, j, c] : fields_) out << k << "," << c << "\n";
      return;
    }
    out << "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out << (i ? ",\n " : "") << quote(std::get<0>(fields_[i])) << ": " << std::get<1>(fields_[i]);
    }
    out << "}\n";
  }

 private:
  Record& put(const std::string& key, std::string json, std::string csv) {
    fields_.emplace_back(key, std::move(json), std::move(csv));
    return *this;
  }
  std::vector<std::tuple<std::string, std::string, std::string>> fields_;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_real(row[i]);
      out += "\n";
    }
    return out;
  }

  std::string json() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out += r ? ",\n {" : "\n {";
      for (std::size_t i = 0; i < columns.size(); ++i) {
        out += (i ? ", " : "") + quote(columns[i]) + ": " + format_real(rows[r][i]);
      }
      out += "}";
    }
    return out + (rows.empty() ? "]\n" : "\n]\n");
  }
};

void emit_certificate(const BoundCertificate& c, Format f, std::ostream& out) {
  if (f == Format::json) {
    out << certificate_to_json(c) << "\n";
    return;
  }
  Record r;
  r.add("name", c.name).add("value", c.value).add("tolerance", c.tolerance);
  for (const auto& [k, v] : c.parameters) r.add("parameters." + k, v);
  std::string deps;
  for (std::size_t i = 0; i < c.depends_on.size(); ++i) deps += (i ? " " : "") + c.depends_on[i];
  r.add("depends_on", deps);
  r.emit(f, out);
}

// ---------------------------------------------------------------------------

struct Options {
  std::string barrier;
  int resolution = 720;
  std::string polygon = "triangle";
  std::string c;
  std::string sweep_c;
  std::string beta;
  std::string epsilon;
  std::string l3;
  std::string grid = "0";
  std::string angles = "pi/6,pi/2,5pi/6";
  std::string pitch = "1/6";
  int lines_k = 36;
  std::string lines_h = "1/30";
  int levels = 3;
  int gap_k = 12;
  std::string gap_h = "0.1";
  std::string family = "grid";
  std::string out;
  std::uint64_t seed = 1;
  std::string format;
  std::string path;
  // overlap
  std::string lambda, kappa, l, D, delta;
  int n = 1;
  int samples = 0;
};

Format format_of(const Options& o, Format fallback) {
  if (o.format.empty()) return fallback;
  return o.format == "csv" ? Format::csv : Format::json;
}

double real_or(const std::string& text, const std::string& flag, double fallback) {
  return text.empty() ? fallback : parse_real(text, flag);
}

// "p/q" or a real.
double fraction_or_real(const std::string& text, const std::string& flag) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_real(text, flag);
  const double den = parse_real(text.substr(slash + 1), flag);
  if (den == 0.0) throw ParseError(flag, "zero denominator");
  return parse_real(text.substr(0, slash), flag) / den;
}

ConvexPolygon polygon_named(const std::string& name) {
  if (name == "triangle") return ConvexPolygon::unit_triangle();
  if (name == "square") return ConvexPolygon::unit_square();
  if (name == "hexagon") return ConvexPolygon::regular_hexagon(1.0);
  throw ParseError("--polygon", "unknown polygon '" + name + "'");
}

std::string certificate_name(const std::string& polygon) {
  if (polygon == "triangle") return "jones.unit_triangle";
  if (polygon == "square") return "jones.unit_square";
  return "jones.regular_hexagon";
}

Barrier load_barrier(const std::string& spec) {
  if (spec == "builtin:boundary") return make_boundary_barrier(ConvexPolygon::unit_triangle());
  if (spec == "builtin:two-sides") return make_two_sides_barrier();
  if (spec == "builtin:steiner") return make_steiner_barrier();
  return read_barrier_file(spec);
}

GridOffset grid_named(const std::string& g) {
  if (g == "0") return GridOffset::zero;
  if (g == "pi6") return GridOffset::pi6;
  throw ParseError("--grid", "expected 0 or pi6");
}

int pitch_to_m(const std::string& pitch) {
  const double p = fraction_or_real(pitch, "--pitch");
  if (!(p > 0.0 && p <= 1.0)) throw ParseError("--pitch", "pitch must lie in (0, 1]");
  const long m = std::lround(1.0 / p);
  if (std::abs(1.0 / p - static_cast<double>(m)) > 1e-6) {
    throw ParseError("--pitch", "pitch must be 1/m for an integer m");
  }
  return static_cast<int>(m);
}

LpInstance instance_from(const Options& o) {
  SegmentFamily family;
  if (o.family == "boundary") {
    family = build_segment_family(FamilyMode::boundary_edges);
  } else if (o.family == "steiner") {
    family = build_segment_family(FamilyMode::steiner_spokes);
  } else {
    family = build_segment_family(FamilyMode::grid, {pitch_to_m(o.pitch), parse_angles(o.angles), 1.0});
  }
  return build_instance(
      build_line_family(ConvexPolygon::unit_triangle(), o.lines_k, fraction_or_real(o.lines_h, "--lines-h")),
      std::move(family));
}

// ---------------------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out) {
  const Barrier b = load_barrier(o.barrier);
  const CoverageReport rep = is_barrier(b, polygon_named(o.polygon), o.resolution);
  Record r;
  r.add("status", to_string(rep.status));
  r.add("method", rep.method == CertificationMethod::connectivity ? "connectivity"
                  : rep.method == CertificationMethod::sampling   ? "sampling"
                                                                  : "none");
  r.add("length", b.total_length()).add("segments", b.size()).add("resolution", o.resolution);
  r.add("samples", rep.samples).add("max_spacing", rep.max_spacing).add("radius", rep.radius);
  r.add("min_slack", rep.min_slack);
  if (rep.witness_angle) {
    r.add("witness_angle", rep.witness_angle->radians());
    r.add("witness_gap_lo", rep.witness_gap->lo).add("witness_gap_hi", rep.witness_gap->hi);
  }
  r.emit(format_of(o, Format::json), out);
  return rep.status == CoverageStatus::refuted ? kExitRefuted : kExitOk;
}

int cmd_jones(const Options& o, std::ostream& out) {
  emit_certificate(jones_bound(polygon_named(o.polygon), certificate_name(o.polygon)),
                   format_of(o, Format::json), out);
  return kExitOk;
}

void plot_ratio_curve(const Table& t, const std::string& path) {
  double lo = 1.5, hi = kSqrt3;
  for (const auto& row : t.rows) {
    lo = std::min(lo, row[2]);
    hi = std::max(hi, row[2]);
  }
  const double x0 = t.rows.front()[0];
  const double x1 = t.rows.size() > 1 ? t.rows.back()[0] : x0 + 1.0;
  SvgPlot plot(x0, x1, lo - 0.02, hi + 0.02);
  plot.title("weighted ratio for z'(u) = exp(-c u)");
  plot.axes("log10 c", "ratio");
  plot.hline(kSqrt3, "#c33", "sqrt 3");
  plot.hline(1.5, "#888", "3/2");
  std::vector<Point> pts;
  for (const auto& row : t.rows) pts.push_back({row[0], row[2]});
  plot.polyline(pts, "#1f5fbf", 2.0);
  write_text_file(path, plot.str());
}

int cmd_weighted(const Options& o, std::ostream& out) {
  if (!o.sweep_c.empty()) {
    Table t{{"log10_c", "c", "closed_form", "quadrature", "difference"}, {}};
    for (double e : parse_sweep(o.sweep_c, "--sweep-c")) {
      const double c = std::pow(10.0, e);
      const double closed = weighted_ratio_closed_form(c);
      const double quad = weighted_ratio(WeightFunction::exponential(c), RatioMethod::quadrature);
      t.rows.push_back({e, c, closed, quad, std::abs(closed - quad)});
    }
    const Format f = format_of(o, Format::csv);
    out << (f == Format::csv ? t.csv() : t.json());
    plot_ratio_curve(t, o.out.empty() ? "weighted-bound.svg" : o.out);
    return kExitOk;
  }
  const double c = real_or(o.c, "--c", 1e4);
  const double closed = weighted_ratio_closed_form(c);
  const double quad = weighted_ratio(WeightFunction::exponential(c), RatioMethod::quadrature);
  BoundCertificate cert;
  cert.name = "weighted_ratio";
  cert.value = closed;
  cert.parameters = {{"c", c}, {"quadrature", quad}, {"difference", std::abs(closed - quad)},
                     {"sqrt3_gap", kSqrt3 - closed}};
  cert.depends_on = {"jones.unit_triangle"};
  cert.tolerance = 1e-9;
  emit_certificate(cert, format_of(o, Format::json), out);
  return kExitOk;
}

int cmd_overlap(const Options& o, std::ostream& out) {
  const Format f = format_of(o, Format::json);
  if (o.samples > 0) {
    std::mt19937_64 rng(o.seed);
    Table t{{"sample", "n", "l", "lambda", "kappa", "D", "integral", "bound", "margin"}, {}};
    bool violated = false;
    for (int i = 0; i < o.samples; ++i) {
      const BandSample s = random_band_sample(rng);
      const Barrier both = s.minus.concat(s.plus);
      const double integral = projection_integral(both);
      const double bound = overlap_deficit(s.config, both.total_length());
      violated = violated || integral > bound + 1e-6 || !satisfies_band_hypotheses(s);
      t.rows.push_back({double(i), double(s.config.n), s.config.l, s.config.lambda, s.config.kappa,
                        s.config.D, integral, bound, bound - integral});
    }
    out << (format_of(o, Format::csv) == Format::csv ? t.csv() : t.json());
    return violated ? kExitRefuted : kExitOk;
  }
  const double delta = real_or(o.delta, "--delta", 0.0);
  BandConfig cfg = corner_band_config(delta);
  cfg.lambda = real_or(o.lambda, "--lambda", cfg.lambda);
  cfg.kappa = real_or(o.kappa, "--kappa", cfg.kappa);
  cfg.l = real_or(o.l, "--l", cfg.l);
  cfg.n = o.n;
  cfg.D = real_or(o.D, "--D", cfg.D);
  const double total = 2.0 * cfg.n * cfg.l;
  Record r;
  r.add("lambda", cfg.lambda).add("kappa", cfg.kappa).add("l", cfg.l).add("n", cfg.n).add("D", cfg.D);
  r.add("W", cfg.band_width()).add("deficit", deficit_term(cfg)).add("total_length", total);
  r.add("bound", overlap_deficit(cfg, total));
  r.emit(f, out);
  return kExitOk;
}

int cmd_restricted3(const Options& o, std::ostream& out) {
  const double delta = restricted3_delta();
  BoundCertificate cert;
  cert.name = "restricted3";
  cert.value = 1.5 + delta;
  cert.parameters = {{"delta", delta},
                     {"residual", restricted3_residual(delta)},
                     {"rhs_at_zero", restricted3_rhs(0.0)},
                     {"D", corner_disk_diameter()}};
  cert.depends_on = {"jones.unit_triangle"};
  cert.tolerance = 1e-12;
  emit_certificate(cert, format_of(o, Format::json), out);
  return kExitOk;
}

void plot_reduction(const Barrier& in, const Barrier& reduced, const std::string& path) {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = kSqrt3 / 2.0;
  for (const Barrier* b : {&in, &reduced}) {
    for (const Segment& s : b->segments()) {
      for (Point p : {s.a(), s.b()}) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
      }
    }
  }
  const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  SvgPlot plot(x0 - pad, x1 + pad, y0 - pad, y1 + pad, true);
  plot.title("reduction onto a pi/3 grid");
  plot.polyline({points::p1, points::p2, points::p3, points::p1}, "#bbb", 1.0);
  for (const Segment& s : in.segments()) plot.polyline({s.a(), s.b()}, "#c33", 1.5, true);
  for (const Segment& s : reduced.segments()) plot.polyline({s.a(), s.b()}, "#1f5fbf", 2.0);
  write_text_file(path, plot.str());
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Barrier b = load_barrier(o.barrier);
  const GridOffset grid = grid_named(o.grid);
  const Barrier reduced = reduce_barrier(b, grid);
  double predicted = 0.0;
  for (const Segment& s : b.segments()) predicted += w_factor(fold_angle(s.angle(), grid)) * s.length();
  Record r;
  r.add("grid", o.grid).add("input_segments", b.size()).add("input_length", b.total_length());
  r.add("output_segments", reduced.size()).add("output_length", reduced.total_length());
  r.add("predicted_length", predicted);
  if (!o.out.empty()) {
    if (o.out.ends_with(".svg")) {
      plot_reduction(b, reduced, o.out);
    } else {
      write_barrier_file(o.out, reduced);
    }
    r.add("written", o.out);
  }
  r.emit(format_of(o, Format::json), out);
  return kExitOk;
}

int cmd_final_bound(const Options& o, std::ostream& out) {
  const double beta = real_or(o.beta, "--beta", std::pow(10.0, kReferenceLog10Beta));
  const double eps = real_or(o.epsilon, "--epsilon", std::pow(10.0, kReferenceLog10Epsilon));
  const double l3 = real_or(o.l3, "--L3", default_l3());
  const FinalBoundTerms t = final_bound_terms(beta, eps, l3);
  Record r;
  r.add("beta", beta).add("epsilon", eps).add("L3", l3).add("L6", kSqrt3);
  r.add("value", t.value()).add("excess", t.excess());
  r.add("case1", t.case1).add("case1_excess", t.case1_excess);
  r.add("case2", t.case2).add("case2_excess", t.case2_excess);
  r.add("dominant", t.case1_excess < t.case2_excess ? "case1" : "case2");
  r.add("literal_split_value", final_bound_literal_split(beta, eps, l3));
  r.emit(format_of(o, Format::json), out);
  return kExitOk;
}

int cmd_optimize(const Options& o, std::ostream& out) {
  const double l3 = real_or(o.l3, "--L3", default_l3());
  const std::vector<BoundCertificate> chain = final_theorem_certificates(l3);
  if (format_of(o, Format::json) == Format::json) {
    out << certificates_to_json(chain);
  } else {
    for (const BoundCertificate& c : chain) emit_certificate(c, Format::csv, out);
  }
  return kExitOk;
}

int cmd_lp_build(const Options& o, std::ostream& out) {
  const LpInstance inst = instance_from(o);
  if (!o.out.empty()) write_text_file(o.out, instance_csv(inst));
  Record r;
  r.add("rows", inst.rows()).add("cols", inst.cols()).add("nonzeros", inst.nonzeros());
  r.add("lines_k", inst.lines.k).add("lines_h", inst.lines.h);
  double cost = 0.0;
  for (double c : inst.family.costs) cost += c;
  r.add("total_cost", cost);
  if (!o.out.empty()) r.add("written", o.out);
  r.emit(format_of(o, Format::json), out);
  return kExitOk;
}

int cmd_lp_solve(const Options& o, std::ostream& out) {
  const LpInstance inst = instance_from(o);
  const LpSolution sol = solve_lp(inst);
  const std::vector<double> raw = uniform_jones_dual(inst.lines);
  const std::vector<double> scaled = scaled_uniform_dual(inst);
  double scaled_objective = 0.0;
  for (double v : scaled) scaled_objective += v;
  std::size_t support = 0;
  for (double x : sol.x) support += x > 1e-9;

  Record r;
  r.add("rows", inst.rows()).add("cols", inst.cols()).add("lp_value", sol.value);
  r.add("dual_value", sol.dual_value).add("iterations", sol.iterations).add("support", support);
  r.add("primal_violation", primal_violation(inst, sol.x));
  r.add("dual_feasible", check_dual_feasible(inst, sol.y));
  r.add("jones_dual_worst_load", worst_dual_load(inst, raw));
  r.add("jones_dual_feasible", check_dual_feasible(inst, raw));
  r.add("scaled_jones_objective", scaled_objective);
  if (!o.out.empty()) {
    std::string csv = "segment,ax,ay,bx,by,cost,x\n";
    for (std::size_t i = 0; i < inst.cols(); ++i) {
      const Segment& s = inst.family.segments[i];
      csv += std::to_string(i) + "," + format_real(s.a().x) + "," + format_real(s.a().y) + "," +
             format_real(s.b().x) + "," + format_real(s.b().y) + "," + format_real(inst.family.costs[i]) +
             "," + format_real(sol.x[i]) + "\n";
    }
    write_text_file(o.out, csv);
    r.add("written", o.out);
  }
  r.emit(format_of(o, Format::json), out);
  return kExitOk;
}

int cmd_gap_report(const Options& o, std::ostream& out) {
  if (o.levels < 1 || o.levels > 6) throw ParseError("--levels", "expected 1..6");
  std::vector<Resolution> res;
  double h = fraction_or_real(o.gap_h, "--lines-h");
  int k = o.gap_k;
  for (int i = 0; i < o.levels; ++i) {
    res.push_back({k, h, pitch_to_m(o.pitch)});
    k *= 3;
    h /= 3.0;
  }
  const std::vector<GapRow> rows = integrality_gap_report(parse_angles(o.angles), res);
  const std::string csv = gap_report_csv(rows);
  if (!o.out.empty()) write_text_file(o.out, csv);
  if (format_of(o, Format::csv) == Format::csv) {
    out << csv;
  } else {
    Table t{{"k", "h", "m", "rows", "cols", "lp_value", "reference", "gap_ratio"}, {}};
    for (const GapRow& g : rows) {
      t.rows.push_back({double(g.resolution.k), g.resolution.h, double(g.resolution.m), double(g.rows),
                        double(g.cols), g.lp_value, g.reference, g.gap_ratio});
    }
    out << t.json();
  }
  return kExitOk;
}

int cmd_check_certificate(const Options& o, std::ostream& out) {
  std::ifstream in(o.path);
  if (!in) throw ParseError(o.path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::vector<BoundCertificate> certs = certificates_from_json(ss.str());
  check_acyclic(certs);
  bool all = true;
  out << "name,value,recomputed,tolerance,result\n";
  for (const BoundCertificate& c : certs) {
    const CertificateCheck chk = recheck_certificate(c);
    const char* result = !chk.known ? "UNKNOWN" : chk.passed ? "PASS" : "FAIL";
    all = all && chk.passed;
    out << c.name << "," << format_real(c.value) << ","
        << (chk.known ? format_real(chk.recomputed) : std::string("nan")) << "," << format_real(c.tolerance)
        << "," << result << "\n";
  }
  return all ? kExitOk : kExitRefuted;
}

int cmd_plot_width(const Options& o, std::ostream& out) {
  const ConvexPolygon poly = polygon_named(o.polygon);
  const std::string path = o.out.empty() ? "width.svg" : o.out;
  std::vector<Point> pts;
  double hi = 0.0;
  constexpr int n = 720;
  for (int i = 0; i <= n; ++i) {
    const double a = kPi * i / n;
    const double w = polygon_width(poly, Angle(a));
    pts.push_back({a, w});
    hi = std::max(hi, w);
  }
  SvgPlot plot(0.0, kPi, 0.0, hi * 1.1);
  plot.title("width |U(alpha)| of the " + o.polygon);
  plot.axes("alpha (rad)", "width");
  if (o.polygon == "triangle") {
    for (int k = 1; k < 3; ++k) plot.vline(k * kPi / 3.0, "#888", k == 1 ? "pi/3" : "2pi/3");
  } else {
    for (double k : width_kinks(poly)) plot.vline(k, "#888");
  }
  plot.polyline(pts, "#1f5fbf", 2.0);
  write_text_file(path, plot.str());
  Record r;
  r.add("polygon", o.polygon).add("samples", n + 1).add("max_width", hi);
  r.add("cauchy_integral", cauchy_integral(poly)).add("perimeter", poly.perimeter()).add("written", path);
  r.emit(format_of(o, Format::json), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds on opaque sets for the unit equilateral triangle", "opaque"};
  app.require_subcommand(1);
  Options o;

  const auto formats = CLI::IsMember({"json", "csv"});
  const auto polygons = CLI::IsMember({"triangle", "square", "hexagon"});
  auto fmt = [&](CLI::App* c) { c->add_option("--format", o.format, "json or csv")->check(formats); };
  auto lp_flags = [&](CLI::App* c) {
    c->add_option("--family", o.family, "grid, boundary or steiner")
        ->check(CLI::IsMember({"grid", "boundary", "steiner"}));
    c->add_option("--angles", o.angles, "grid directions, e.g. pi/6,pi/2,5pi/6, or all");
    c->add_option("--pitch", o.pitch, "lattice pitch 1/m");
    c->add_option("--lines-k", o.lines_k, "number of line angles");
    c->add_option("--lines-h", o.lines_h, "line offset pitch");
    c->add_option("--out", o.out, "output file");
    fmt(c);
  };

  auto* verify = app.add_subcommand("verify", "check the projection-cover condition of a barrier");
  verify->add_option("--barrier", o.barrier, "barrier file, or builtin:{boundary,two-sides,steiner}")->required();
  verify->add_option("--resolution", o.resolution, "uniform angle samples");
  verify->add_option("--polygon", o.polygon)->check(polygons);
  fmt(verify);

  auto* jones = app.add_subcommand("jones", "half-perimeter bound with its Cauchy cross-check");
  jones->add_option("--polygon", o.polygon)->check(polygons);
  fmt(jones);

  auto* weighted = app.add_subcommand("weighted-bound", "weighted ratio for restricted barriers");
  weighted->add_option("--c", o.c, "weight exponent");
  weighted->add_option("--sweep-c", o.sweep_c, "log10 grid a:b:step");
  weighted->add_option("--out", o.out, "plot file for --sweep-c");
  fmt(weighted);

  auto* overlap = app.add_subcommand("overlap", "overlap deficit bound");
  overlap->add_option("--lambda", o.lambda);
  overlap->add_option("--kappa", o.kappa);
  overlap->add_option("--l", o.l);
  overlap->add_option("--n", o.n);
  overlap->add_option("--D", o.D);
  overlap->add_option("--delta", o.delta, "corner configuration at this delta");
  overlap->add_option("--samples", o.samples, "random configurations to check");
  overlap->add_option("--seed", o.seed);
  fmt(overlap);

  auto* r3 = app.add_subcommand("restricted3", "root of the corner-cluster relation");
  fmt(r3);

  auto* reduce = app.add_subcommand("reduce", "replace segments by paths on a pi/3 grid");
  reduce->add_option("--barrier", o.barrier)->required();
  reduce->add_option("--grid", o.grid, "0 or pi6")->check(CLI::IsMember({"0", "pi6"}));
  reduce->add_option("--out", o.out, "barrier file, or .svg diagram");
  fmt(reduce);

  auto* fb = app.add_subcommand("final-bound", "evaluate the final min at (beta, epsilon)");
  fb->add_option("--beta", o.beta);
  fb->add_option("--epsilon", o.epsilon);
  fb->add_option("--L3", o.l3);
  fmt(fb);

  auto* opt = app.add_subcommand("optimize", "optimise (beta, epsilon) and emit the certificate chain");
  opt->add_option("--L3", o.l3);
  fmt(opt);

  auto* lp_build = app.add_subcommand("lp-build", "build a covering LP instance");
  lp_flags(lp_build);
  auto* lp_solve = app.add_subcommand("lp-solve", "solve a covering LP instance");
  lp_flags(lp_solve);

  auto* gap = app.add_subcommand("gap-report", "LP values across nested line refinements");
  gap->add_option("--angles", o.angles);
  gap->add_option("--pitch", o.pitch);
  gap->add_option("--lines-k", o.gap_k, "coarsest number of line angles");
  gap->add_option("--lines-h", o.gap_h, "coarsest line offset pitch");
  gap->add_option("--levels", o.levels, "number of (3k, h/3) refinements");
  gap->add_option("--out", o.out);
  fmt(gap);

  auto* check = app.add_subcommand("check-certificate", "recompute certificates from a file");
  check->add_option("path", o.path)->required();

  auto* plot = app.add_subcommand("plot-width", "plot the width function");
  plot->add_option("--polygon", o.polygon)->check(polygons);
  plot->add_option("--out", o.out);
  fmt(plot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitDomain;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (jones->parsed()) return cmd_jones(o, out);
    if (weighted->parsed()) return cmd_weighted(o, out);
    if (overlap->parsed()) return cmd_overlap(o, out);
    if (r3->parsed()) return cmd_restricted3(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (fb->parsed()) return cmd_final_bound(o, out);
    if (opt->parsed()) return cmd_optimize(o, out);
    if (lp_build->parsed()) return cmd_lp_build(o, out);
    if (lp_solve->parsed()) return cmd_lp_solve(o, out);
    if (gap->parsed()) return cmd_gap_report(o, out);
    if (check->parsed()) return cmd_check_certificate(o, out);
    if (plot->parsed()) return cmd_plot_width(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}

}  // namespace opaque::cli
