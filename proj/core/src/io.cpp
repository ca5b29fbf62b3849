// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "bargmann/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bargmann/error.hpp"

namespace bargmann {

namespace {

using Index = Eigen::Index;

// Reads whitespace-separated tokens and tracks the line for error messages.
class Reader {
 public:
  explicit Reader(std::istream& is) : is_(is) {}

  std::string token(const char* what) {
    std::string t;
    if (!(is_ >> t)) fail(std::string("unexpected end of input reading ") + what);
    return t;
  }

  double real(const char* what) {
    const std::string t = token(what);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      fail(std::string("malformed ") + what + " '" + t + "'");
    }
    return v;
  }

  std::size_t count(const char* what) {
    const std::string t = token(what);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      fail(std::string("malformed ") + what + " '" + t + "'");
    }
    return v;
  }

  void expect(const std::string& word) {
    const std::string t = token(word.c_str());
    if (t != word) fail("expected '" + word + "', got '" + t + "'");
  }

  void finish() {
    std::string extra;
    if (is_ >> extra) fail("trailing data '" + extra + "'");
  }

  [[noreturn]] void fail(const std::string& msg) { throw IoError(msg); }

 private:
  std::istream& is_;
};

void write_complex(std::ostream& os, Complex v) {
  os << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
}

template <typename Make>
auto wrap_grid_errors(Make make) {
  try {
    return make();
  } catch (const ArgumentError& e) {
    throw IoError(std::string("invalid header: ") + e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc()) throw IoError("failed to format number");
  return std::string(buf, ptr);
}

void write_signal(std::ostream& os, const Signal& signal) {
  os << "NBSIG 1 " << signal.grid.count() << ' ' << format_double(signal.grid.spacing())
     << '\n';
  for (Index i = 0; i < signal.samples.size(); ++i) write_complex(os, signal.samples(i));
}

void write_field(std::ostream& os, const Field& field) {
  const FieldGrid& g = field.grid;
  os << "NBGRID 1 " << g.x.count() << ' ' << g.y.count() << ' '
     << format_double(g.x.spacing()) << ' ' << format_double(g.y.spacing()) << ' '
     << to_string(field.kind) << '\n';
  for (Index p = 0; p < field.values.rows(); ++p) {
    for (Index q = 0; q < field.values.cols(); ++q) write_complex(os, field.values(p, q));
  }
}

Signal read_signal(std::istream& is) {
  Reader r(is);
  r.expect("NBSIG");
  r.expect("1");
  const std::size_t n = r.count("sample count");
  const double dt = r.real("spacing");
  const SampleGrid grid = wrap_grid_errors([&] { return SampleGrid(n, dt); });
  Signal s(grid);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = r.real("real part");
    const double im = r.real("imaginary part");
    s.samples(static_cast<Index>(i)) = Complex(re, im);
  }
  r.finish();
  return s;
}

Field read_field(std::istream& is) {
  Reader r(is);
  r.expect("NBGRID");
  r.expect("1");
  const std::size_t nx = r.count("x count");
  const std::size_t ny = r.count("y count");
  const double dx = r.real("x spacing");
  const double dy = r.real("y spacing");
  const std::string kind_name = r.token("kind");
  const FieldGrid grid =
      wrap_grid_errors([&] { return FieldGrid{SampleGrid(nx, dx), SampleGrid(ny, dy)}; });
  const FieldKind kind = wrap_grid_errors([&] { return parse_field_kind(kind_name); });
  Field f(grid, kind);
  for (std::size_t p = 0; p < nx; ++p) {
    for (std::size_t q = 0; q < ny; ++q) {
      const double re = r.real("real part");
      const double im = r.real("imaginary part");
      f.values(static_cast<Index>(p), static_cast<Index>(q)) = Complex(re, im);
    }
  }
  r.finish();
  return f;
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

template <typename Write>
void save(const std::string& path, Write write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace

void save_signal(const std::string& path, const Signal& signal) {
  save(path, [&](std::ostream& os) { write_signal(os, signal); });
}

void save_field(const std::string& path, const Field& field) {
  save(path, [&](std::ostream& os) { write_field(os, field); });
}

Signal load_signal(const std::string& path) {
  std::ifstream in = open_in(path);
  try {
    return read_signal(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

Field load_field(const std::string& path) {
  std::ifstream in = open_in(path);
  try {
    return read_field(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) os << ',';
    os << cells[i];
  }
  os << '\n';
}

}  // namespace bargmann
