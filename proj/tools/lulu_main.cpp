// lulu: command-line front end for the LULU smoothers.
//
// Exit codes: 0 success, 1 law violation, 2 usage error, 3 I/O or parse error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lulu/envelope.hpp"
#include "lulu/io.hpp"
#include "lulu/laws.hpp"
#include "lulu/plot.hpp"
#include "lulu/semigroup.hpp"
#include "lulu/variation.hpp"

namespace {

using namespace lulu;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  std::string format;
  std::string expr = "LU";
  double delta = 1.0;
  int discrete_n = 0;
  double eps = 1e-9;
  std::uint64_t seed = 0;
};

struct Input {
  Format format;
  std::variant<PiecewiseLinear, DiscreteSignal> data;
};

Format resolve_format(const std::string& flag, const std::string& path) {
  if (!flag.empty()) {
    if (auto f = parse_format(flag)) return *f;
    throw UsageError("--format must be csv or json");
  }
  if (auto f = infer_format(path)) return *f;
  throw UsageError("cannot infer format of " + path + "; pass --format");
}

Input load(const Common& c) {
  const Format fmt = resolve_format(c.format, c.input);
  const std::string text = read_file(c.input);
  if (fmt == Format::Json) return {fmt, parse_function_json(text)};
  return {fmt, parse_signal_csv(text)};
}

// Continuous view of a sample sequence; untagged rows sit at 0, 1, 2, ...
PiecewiseLinear as_function(const DiscreteSignal& s) {
  if (s.size() < 2) throw ParseError("need at least 2 samples for a function");
  return from_samples(DiscreteSignal(
      std::vector<double>(s.values().begin(), s.values().end()),
      s.spacing().value_or(1.0), s.origin().value_or(0.0)));
}

PiecewiseLinear as_function(const Input& in) {
  if (const auto* f = std::get_if<PiecewiseLinear>(&in.data)) return *f;
  return as_function(std::get<DiscreteSignal>(in.data));
}

// Back onto the input grid after a continuous pass over a CSV signal.
DiscreteSignal resample_like(const PiecewiseLinear& f, const DiscreteSignal& s) {
  std::vector<double> v(s.size());
  const double h = s.spacing().value_or(1.0);
  const double x0 = s.origin().value_or(0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    v[i] = f(std::min(x0 + static_cast<double>(i) * h, f.domain().hi()));
  }
  return s.with_values(std::move(v));
}

double max_abs_diff(const DiscreteSignal& a, const DiscreteSignal& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

std::string serialize(const std::variant<PiecewiseLinear, DiscreteSignal>& v) {
  if (const auto* f = std::get_if<PiecewiseLinear>(&v)) {
    return function_to_json(*f);
  }
  return signal_to_csv(std::get<DiscreteSignal>(v));
}

Smoothers smoothers() {
  Smoothers ops;
#ifdef LULU_INJECT_FAULT
  // Negative control: L without its dilation step.
  ops.L = [](const PiecewiseLinear& f, double delta) {
    return lower_envelope(f, delta / 2);
  };
#endif
  return ops;
}

PiecewiseLinear run(const OperatorExpr& e, const PiecewiseLinear& f) {
  const Smoothers ops = smoothers();
  PiecewiseLinear g = f;
  const auto& word = e.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    g = *it == Letter::L ? ops.L(g, e.delta()) : ops.U(g, e.delta());
  }
  return g;
}

OperatorExpr parse_expr(const Common& c) {
  try {
    return OperatorExpr::parse(c.expr, c.delta);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_discrete(const Common& c) {
  if (c.discrete_n < 0) throw UsageError("--discrete-n must be positive");
}

// The result in the input's own representation, plus the continuous view.
struct Smoothed {
  std::variant<PiecewiseLinear, DiscreteSignal> result;
  double distance = 0.0;
};

Smoothed smooth(const Common& c, const Input& in, const OperatorExpr& e) {
  if (const auto* f = std::get_if<PiecewiseLinear>(&in.data)) {
    if (c.discrete_n > 0) {
      throw UsageError("--discrete-n applies to CSV sequences only");
    }
    PiecewiseLinear g = run(e, *f);
    const double d = sup_distance(*f, g);
    return {std::move(g), d};
  }
  const auto& s = std::get<DiscreteSignal>(in.data);
  DiscreteSignal out =
      c.discrete_n > 0
          ? apply_pipeline_discrete(e.word(), s, c.discrete_n)
          : resample_like(run(e, as_function(s)), s);
  const double d = max_abs_diff(s, out);
  return {std::move(out), d};
}

int cmd_smooth(const Common& c, const std::string& output) {
  check_discrete(c);
  const OperatorExpr e = parse_expr(c);
  const Input in = load(c);
  const Smoothed s = smooth(c, in, e);
  write_file(output, serialize(s.result));
  std::cout.precision(17);
  std::cout << "sup_distance " << s.distance << "\n";
  return kOk;
}

int cmd_decompose(const Common& c, const std::string& report_path,
                  const std::string& smooth_path,
                  const std::string& residual_path) {
  check_discrete(c);
  const OperatorExpr e = parse_expr(c);
  const Input in = load(c);
  TVDecompositionReport report;
  std::variant<PiecewiseLinear, DiscreteSignal> smooth_part = DiscreteSignal({0});
  std::variant<PiecewiseLinear, DiscreteSignal> residual = DiscreteSignal({0});
  if (const auto* s = std::get_if<DiscreteSignal>(&in.data);
      s && c.discrete_n > 0) {
    auto d = decompose_discrete(*s, e.word(), c.discrete_n);
    report = d.report;
    smooth_part = std::move(d.smooth);
    residual = std::move(d.residual);
  } else {
    if (c.discrete_n > 0) {
      throw UsageError("--discrete-n applies to CSV sequences only");
    }
    auto d = decompose(as_function(in),
                       [&e](const PiecewiseLinear& f) { return run(e, f); });
    report = d.report;
    if (const auto* s = std::get_if<DiscreteSignal>(&in.data)) {
      smooth_part = resample_like(d.smooth, *s);
      residual = resample_like(d.residual, *s);
    } else {
      smooth_part = std::move(d.smooth);
      residual = std::move(d.residual);
    }
  }
  const std::string json = report_to_json(report);
  if (report_path.empty() || report_path == "-") {
    std::cout << json;
  } else {
    write_file(report_path, json);
  }
  if (!smooth_path.empty()) write_file(smooth_path, serialize(smooth_part));
  if (!residual_path.empty()) write_file(residual_path, serialize(residual));
  return kOk;
}

int cmd_verify(const Common& c, const std::vector<std::string>& law_names,
               const std::string& verdict_path) {
  if (!(c.delta > 0.0) || !std::isfinite(c.delta)) {
    throw UsageError("--delta must be positive");
  }
  if (!(c.eps >= 0.0)) throw UsageError("--eps must be nonnegative");
  std::vector<Law> laws;
  for (const auto& n : law_names) {
    const auto law = parse_law(n);
    if (!law) throw UsageError("unknown law: " + n);
    laws.push_back(*law);
  }
  if (laws.empty()) laws = all_laws();
  const PiecewiseLinear f = as_function(load(c));

  LawOptions opts;
  opts.tol = Tolerance(c.eps);
  opts.seed = c.seed;
  opts.ops = smoothers();
  const auto results = check_laws(f, c.delta, laws, opts);

  bool all = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    arr.push_back({{"law", law_name(r.law)},
                   {"passed", r.passed},
                   {"worst", r.worst},
                   {"checks", r.checks},
                   {"detail", r.detail}});
  }
  const nlohmann::ordered_json verdict = {{"delta", c.delta}, {"eps", c.eps},
                                  {"seed", c.seed},   {"passed", all},
                                  {"laws", arr}};
  const std::string text = verdict.dump(2) + "\n";
  if (verdict_path.empty() || verdict_path == "-") {
    std::cout << text;
  } else {
    write_file(verdict_path, text);
  }
  return all ? kOk : kViolation;
}

int cmd_plot(const Common& c, const std::string& svg_path,
             const std::string& csv_path) {
  check_discrete(c);
  const OperatorExpr e = parse_expr(c);
  const Input in = load(c);
  const PiecewiseLinear f = as_function(in);
  PiecewiseLinear g = f;
  if (c.discrete_n > 0) {
    const auto* s = std::get_if<DiscreteSignal>(&in.data);
    if (!s) throw UsageError("--discrete-n applies to CSV sequences only");
    g = as_function(apply_pipeline_discrete(e.word(), *s, c.discrete_n));
  } else {
    g = run(e, f);
  }
  write_file(svg_path, render_svg(f, g, e.to_string()));
  const std::string csv =
      csv_path.empty()
          ? std::filesystem::path(svg_path).replace_extension(".csv").string()
          : csv_path;
  write_file(csv, sample_curves_csv(f, g));
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool with_expr) {
  sub->add_option("input", c.input, "Input file (.json function or .csv signal)")
      ->required();
  sub->add_option("--format", c.format, "csv or json (default: from extension)");
  sub->add_option("--delta", c.delta, "Smoothing parameter delta > 0");
  sub->add_option("--eps", c.eps, "Comparison tolerance");
  sub->add_option("--seed", c.seed, "Seed for randomized sub-cases");
  if (with_expr) {
    sub->add_option("--expr", c.expr, "Word over {L, U}, outermost first");
    sub->add_option("--discrete-n", c.discrete_n,
                    "Use the sequence operators with window n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LULU smoothers for piecewise-linear functions and sequences"};
  app.require_subcommand(1);

  Common c;
  std::string output, report, smooth_out, residual_out, verdict, svg, csv;
  std::vector<std::string> laws;

  auto* smooth = app.add_subcommand("smooth", "Apply an operator expression");
  add_common(smooth, c, true);
  smooth->add_option("-o,--output", output, "Output path")->required();

  auto* dec = app.add_subcommand("decompose", "Split into smooth and residual");
  add_common(dec, c, true);
  dec->add_option("--report", report, "Report JSON path (default stdout)");
  dec->add_option("--smooth-out", smooth_out, "Smooth component path");
  dec->add_option("--residual-out", residual_out, "Residual component path");

  auto* ver = app.add_subcommand("verify", "Check the operator laws on the input");
  add_common(ver, c, false);
  ver->add_option("--laws", laws, "Subset of laws to check")->delimiter(',');
  ver->add_option("-o,--output", verdict, "Verdict JSON path (default stdout)");

  auto* plot = app.add_subcommand("plot", "Overlay input and output as SVG");
  add_common(plot, c, true);
  plot->add_option("--svg", svg, "SVG output path")->required();
  plot->add_option("--csv", csv, "Sampled curves CSV (default: next to SVG)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*smooth) return cmd_smooth(c, output);
    if (*dec) return cmd_decompose(c, report, smooth_out, residual_out);
    if (*ver) return cmd_verify(c, laws, verdict);
    return cmd_plot(c, svg, csv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
}
