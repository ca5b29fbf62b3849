// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bargmann/direct.hpp"
#include "bargmann/error.hpp"
#include "bargmann/gabor.hpp"
#include "bargmann/harness.hpp"
#include "bargmann/io.hpp"

namespace bargmann::cli {

namespace {

struct GenOptions {
  std::size_t n = 0;
  double dt = 0.0;
  std::string kind;
  std::string output;
};

struct TransformOptions {
  std::string method;
  std::string input;
  std::string output;
  std::optional<double> dx;
  std::optional<double> dy;
  bool unnormalized = false;
};

struct InverseOptions {
  std::string method;
  std::string input;
  std::string output;
  std::string variant = "2d";
  std::optional<std::size_t> n;
  std::optional<double> dt;
};

struct BenchOptions {
  std::size_t n = 0;
  double delta = 0.0;
  std::string orders = "0:120";
  std::string methods = "direct,gabor,hg,gyrator,nslct";
  std::string method;
  std::string variant = "2d";
  std::string signal;
  std::string output;
};

const std::vector<std::string> kMethodNames = {"direct", "gabor", "hg", "gyrator", "nslct"};

// Exact relative comparison used for flags that must match a fixed grid.
bool same_spacing(double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); }

std::string spacing_text(double v) { return format_double(v); }

void require_spacing(std::string_view method, const char* flag, double given, double required) {
  if (!same_spacing(given, required)) {
    throw GridConstraintError(std::string(method) + " fixes " + flag + "; got " +
                              spacing_text(given) + ", required " + spacing_text(required));
  }
}

GaborInverse parse_variant(const std::string& v) {
  return v == "1d" ? GaborInverse::single_sum : GaborInverse::double_sum;
}

// Writes CSV rows either to `path` or to `out` when the path is empty.
class CsvSink {
 public:
  CsvSink(const std::string& path, std::ostream& out) {
    if (path.empty()) {
      os_ = &out;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
      os_ = &file_;
    }
  }
  void row(const std::vector<std::string>& cells) { write_csv_row(*os_, cells); }
  void close() {
    os_->flush();
    if (!*os_) throw IoError("failed writing CSV output");
  }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

std::string metric_text(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("nan");
}

void cmd_gen(const GenOptions& o) {
  const SampleGrid grid(o.n, o.dt);
  Signal s(grid);
  if (o.kind == "demo") {
    s = make_test_signal(grid);
  } else if (o.kind.rfind("hg:", 0) == 0) {
    int order = -1;
    const std::string digits = o.kind.substr(3);
    try {
      std::size_t used = 0;
      order = std::stoi(digits, &used);
      if (used != digits.size()) order = -1;
    } catch (const std::exception&) {
      order = -1;
    }
    if (order < 0) throw ArgumentError("bad --kind '" + o.kind + "' (expected demo or hg:<order>)");
    s = sample_hg(order, grid);
  } else {
    throw ArgumentError("bad --kind '" + o.kind + "' (expected demo or hg:<order>)");
  }
  save_signal(o.output, s);
}

void cmd_transform(const TransformOptions& o, std::ostream& err) {
  const Method method = parse_method(o.method);
  const Signal s = load_signal(o.input);
  Field field(FieldGrid{s.grid, s.grid}, FieldKind::normalized);
  if (method == Method::direct) {
    FieldGrid grid = direct_default_grid(s.grid);
    if (o.dx) grid.x = SampleGrid(grid.x.count(), *o.dx);
    if (o.dy) grid.y = SampleGrid(grid.y.count(), *o.dy);
    field = forward_direct(s, grid);
  } else {
    const FieldGrid grid = default_output_grid(method, s.grid);
    if (o.dx) require_spacing(o.method, "--dx", *o.dx, grid.x.spacing());
    if (o.dy) require_spacing(o.method, "--dy", *o.dy, grid.y.spacing());
    field = forward_transform(method, s);
  }
  if (o.unnormalized) {
    std::vector<Cell> saturated;
    field = to_unnormalized(field, &saturated);
    if (!saturated.empty()) {
      err << "warning: " << saturated.size() << " cells saturated at DBL_MAX:";
      const std::size_t shown = std::min<std::size_t>(saturated.size(), 10);
      for (std::size_t i = 0; i < shown; ++i) {
        err << " (" << saturated[i].p << "," << saturated[i].q << ")";
      }
      if (shown < saturated.size()) err << " ...";
      err << '\n';
    }
  }
  save_field(o.output, field);
}

void cmd_inverse(const InverseOptions& o) {
  const Method method = parse_method(o.method);
  const Field field = load_field(o.input);
  const GaborInverse variant = parse_variant(o.variant);
  std::optional<SampleGrid> out;
  if (method == Method::direct) {
    SampleGrid g = direct_default_signal_grid(field.grid);
    out = SampleGrid(o.n.value_or(g.count()), o.dt.value_or(g.spacing()));
  } else {
    SampleGrid natural = field.grid.x;
    if (method == Method::gabor) {
      natural = variant == GaborInverse::single_sum ? SampleGrid(field.grid.x.count(),
                                                                 std::sqrt(2.0) * field.grid.x.spacing())
                                                    : gabor_2d_signal_grid(field.grid);
    }
    if (o.n && *o.n != natural.count()) {
      throw GridConstraintError(o.method + " fixes --n; got " + std::to_string(*o.n) +
                                ", required " + std::to_string(natural.count()));
    }
    if (o.dt) require_spacing(o.method, "--dt", *o.dt, natural.spacing());
    if (method == Method::gabor && variant == GaborInverse::double_sum) out = natural;
  }
  save_signal(o.output, inverse_transform(method, field, variant, out));
}

std::pair<int, int> parse_orders(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ArgumentError("bad --orders '" + text + "' (expected first:last)");
  }
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> methods;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) methods.push_back(parse_method(item));
  if (methods.empty()) throw ArgumentError("--methods is empty");
  return methods;
}

void bench_accuracy(const BenchOptions& o, std::ostream& out) {
  const auto [first, last] = parse_orders(o.orders);
  const auto rows = accuracy_sweep(parse_methods(o.methods), first, last, o.n, o.delta);
  CsvSink sink(o.output, out);
  sink.row({"method", "order", "nmse"});
  for (const SweepRow& r : rows) {
    sink.row({std::string(to_string(r.method)), std::to_string(r.order), metric_text(r.nmse)});
  }
  sink.close();
}

Signal bench_signal(const BenchOptions& o) {
  if (!o.signal.empty()) return load_signal(o.signal);
  return make_test_signal(SampleGrid(o.n, o.delta));
}

void bench_roundtrip(const BenchOptions& o, std::ostream& out) {
  const Signal s = bench_signal(o);
  std::vector<Method> methods =
      o.method.empty() ? std::vector<Method>(std::begin(kAllMethods), std::end(kAllMethods))
                       : std::vector<Method>{parse_method(o.method)};
  CsvSink sink(o.output, out);
  sink.row({"method", "variant", "nmse", "mse"});
  for (Method m : methods) {
    std::vector<std::string> variants{"-"};
    if (m == Method::gabor) variants = o.method.empty() ? std::vector<std::string>{"2d", "1d"}
                                                        : std::vector<std::string>{o.variant};
    for (const std::string& v : variants) {
      const Metric r = roundtrip_nmse(m, s, parse_variant(v));
      sink.row({std::string(to_string(m)), v, metric_text(r.nmse), format_double(r.mse)});
    }
  }
  sink.close();
}

void bench_complexity(const BenchOptions& o, std::ostream& out) {
  CsvSink sink(o.output, out);
  sink.row({"method", "n", "real_mults"});
  for (Method m : kAllMethods) {
    sink.row({std::string(to_string(m)), std::to_string(o.n),
              std::to_string(predicted_real_mults(m, o.n))});
  }
  sink.close();
}

void bench_compare(const BenchOptions& o, std::ostream& out) {
  const MethodComparison c = compare_methods(bench_signal(o));
  CsvSink sink(o.output, out);
  sink.row({"reference", "test", "nmse"});
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    for (std::size_t j = i + 1; j < c.labels.size(); ++j) {
      const double v = c.nmse(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (std::isnan(v)) continue;
      sink.row({c.labels[i], c.labels[j], format_double(v)});
    }
  }
  sink.close();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalized Bargmann transform by direct, Gabor, Hermite-Gaussian, gyrator "
               "and NsLCT methods"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a test signal or a sampled HG function");
  gen_cmd->add_option("--n", gen.n, "Number of samples (odd)")->required();
  gen_cmd->add_option("--dt", gen.dt, "Sample spacing")->required();
  gen_cmd->add_option("--kind", gen.kind, "demo or hg:<order>")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Output .sig file")->required();

  TransformOptions tr;
  auto* tr_cmd = app.add_subcommand("transform", "Forward transform of a .sig file");
  tr_cmd->add_option("--method", tr.method, "Method")
      ->required()
      ->check(CLI::IsMember(kMethodNames));
  tr_cmd->add_option("-i,--input", tr.input, "Input .sig file")->required();
  tr_cmd->add_option("-o,--output", tr.output, "Output .grid file")->required();
  tr_cmd->add_option("--dx", tr.dx, "Output x spacing (free only for direct)");
  tr_cmd->add_option("--dy", tr.dy, "Output y spacing (free only for direct)");
  tr_cmd->add_flag("--unnormalized", tr.unnormalized, "Convert to the unnormalized transform");

  InverseOptions inv;
  auto* inv_cmd = app.add_subcommand("inverse", "Inverse transform of a .grid file");
  inv_cmd->add_option("--method", inv.method, "Method")
      ->required()
      ->check(CLI::IsMember(kMethodNames));
  inv_cmd->add_option("-i,--input", inv.input, "Input .grid file")->required();
  inv_cmd->add_option("-o,--output", inv.output, "Output .sig file")->required();
  inv_cmd->add_option("--variant", inv.variant, "Gabor inverse: 2d or 1d")
      ->check(CLI::IsMember({"2d", "1d"}));
  inv_cmd->add_option("--n", inv.n, "Output sample count (free only for direct)");
  inv_cmd->add_option("--dt", inv.dt, "Output spacing (free only for direct)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark tables as CSV");
  bench_cmd->require_subcommand(1);
  auto* acc = bench_cmd->add_subcommand("accuracy", "HG -> LG accuracy sweep");
  acc->add_option("--n", bench.n, "Grid length")->default_val(127);
  acc->add_option("--delta", bench.delta, "Grid spacing")->default_val(0.2224);
  acc->add_option("--orders", bench.orders, "Order range first:last")->default_val("0:120");
  acc->add_option("--methods", bench.methods, "Comma-separated methods")
      ->default_val("direct,gabor,hg,gyrator,nslct");
  acc->add_option("-o,--output", bench.output, "CSV file (default stdout)");

  auto* rt = bench_cmd->add_subcommand("roundtrip", "inverse(forward(s)) error");
  rt->add_option("--method", bench.method, "Single method (default all)")
      ->check(CLI::IsMember(kMethodNames));
  rt->add_option("--variant", bench.variant, "Gabor inverse: 2d or 1d")
      ->check(CLI::IsMember({"2d", "1d"}));
  rt->add_option("--n", bench.n, "Test signal length")->default_val(255);
  rt->add_option("--dt", bench.delta, "Test signal spacing")->default_val(0.157);
  rt->add_option("-i,--input", bench.signal, "Use this .sig file instead of the test signal");
  rt->add_option("-o,--output", bench.output, "CSV file (default stdout)");

  auto* cx = bench_cmd->add_subcommand("complexity", "Predicted real multiplications");
  cx->add_option("--n", bench.n, "Signal length")->required()->check(CLI::Range(2, 1 << 20));
  cx->add_option("-o,--output", bench.output, "CSV file (default stdout)");

  auto* cmp = bench_cmd->add_subcommand("compare", "Pairwise interior NMSE between methods");
  cmp->add_option("--n", bench.n, "Test signal length")->default_val(255);
  cmp->add_option("--dt", bench.delta, "Test signal spacing")->default_val(0.157);
  cmp->add_option("-i,--input", bench.signal, "Use this .sig file instead of the test signal");
  cmp->add_option("-o,--output", bench.output, "CSV file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*gen_cmd) cmd_gen(gen);
    if (*tr_cmd) cmd_transform(tr, err);
    if (*inv_cmd) cmd_inverse(inv);
    if (*acc) bench_accuracy(bench, out);
    if (*rt) bench_roundtrip(bench, out);
    if (*cx) bench_complexity(bench, out);
    if (*cmp) bench_compare(bench, out);
  } catch (const GridConstraintError& e) {
    err << "error: " << e.what() << '\n';
    return kGridConstraint;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kSuccess;
}

}  // namespace bargmann::cli
