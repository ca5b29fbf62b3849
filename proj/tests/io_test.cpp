// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "bargmann/error.hpp"
#include "bargmann/io.hpp"
#include "oracles.hpp"

namespace bargmann {
namespace {

bool bit_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex x = a.data()[i];
    const Complex y = b.data()[i];
    if (std::signbit(x.real()) != std::signbit(y.real()) || x.real() != y.real()) return false;
    if (std::signbit(x.imag()) != std::signbit(y.imag()) || x.imag() != y.imag()) return false;
  }
  return true;
}

TEST(SignalFormat, HeaderAndLineCount) {
  const Signal s = make_test_signal(SampleGrid(255, 0.157));
  std::ostringstream os;
  write_signal(os, s);
  const std::string text = os.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "NBSIG 1 255 0.157");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 256);
}

TEST(SignalFormat, BitLosslessRoundTrip) {
  std::mt19937_64 rng(1);
  Signal s(SampleGrid(9, 0.1), testing::random_complex(9, rng));
  s.samples(0) = Complex(-0.0, DBL_MAX);
  s.samples(1) = Complex(DBL_TRUE_MIN, -DBL_MIN);
  s.samples(2) = Complex(1.0 / 3.0, -2.0 / 7.0);
  std::stringstream ss;
  write_signal(ss, s);
  const Signal back = read_signal(ss);
  EXPECT_EQ(back.grid, s.grid);
  EXPECT_TRUE(bit_equal(back.samples, s.samples));
}

TEST(FieldFormat, BitLosslessRoundTripAndLayout) {
  std::mt19937_64 rng(2);
  const FieldGrid g{SampleGrid(3, 0.25), SampleGrid(5, 1.0 / 3.0)};
  Field f(g, FieldKind::unnormalized);
  for (Eigen::Index p = 0; p < 3; ++p) f.values.row(p) = testing::random_complex(5, rng).transpose();
  std::stringstream ss;
  write_field(ss, f);
  const std::string text = ss.str();
  std::istringstream lines(text);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "NBGRID 1 3 5 0.25 0.33333333333333331 unnormalized");
  std::string second;
  std::getline(lines, second);
  // x index is the outer loop: line 2 of the body is (p=0, q=1).
  std::getline(lines, second);
  std::istringstream cells(second);
  double re = 0.0;
  double im = 0.0;
  cells >> re >> im;
  EXPECT_EQ(Complex(re, im), f.values(0, 1));

  const Field back = read_field(ss);
  EXPECT_EQ(back.grid, g);
  EXPECT_EQ(back.kind, FieldKind::unnormalized);
  EXPECT_TRUE(bit_equal(back.values, f.values));
}

TEST(SignalFormat, MalformedInputs) {
  for (const char* text : {"", "NBSIG 2 3 0.1\n0 0\n0 0\n0 0\n", "NBSIG 1 3 0.1\n0 0\n0 0\n",
                           "NBSIG 1 3 0.1\n0 0\n0 x\n0 0\n", "NBSIG 1 4 0.1\n0 0\n0 0\n0 0\n0 0\n",
                           "NBSIG 1 1 0.1\n0 0\n1 1\n", "NBGRID 1 1 1 1 1 normalized\n0 0\n"}) {
    std::istringstream is(text);
    EXPECT_THROW(read_signal(is), IoError) << text;
  }
}

TEST(FieldFormat, MalformedInputs) {
  for (const char* text : {"NBGRID 1 1 1 1 1 weird\n0 0\n", "NBGRID 1 1 1 -1 1 normalized\n0 0\n",
                           "NBGRID 1 1 3 1 1 gabor\n0 0\n0 0\n"}) {
    std::istringstream is(text);
    EXPECT_THROW(read_field(is), IoError) << text;
  }
}

TEST(Files, MissingFileIsIoError) {
  EXPECT_THROW(load_signal("/nonexistent/dir/s.sig"), IoError);
  EXPECT_THROW(save_field("/nonexistent/dir/f.grid", Field(FieldGrid{SampleGrid(1, 1.0), SampleGrid(1, 1.0)},
                                                             FieldKind::normalized)),
               IoError);
}

TEST(Csv, CommaSeparatedWithLf) {
  std::ostringstream os;
  write_csv_row(os, {"method", "order", "nmse"});
  write_csv_row(os, {"hg", "3", format_double(1e-30)});
  EXPECT_EQ(os.str(), "method,order,nmse\nhg,3,1.0000000000000001e-30\n");
}

}  // namespace
}  // namespace bargmann
