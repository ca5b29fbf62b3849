// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "fft.hpp"

#include <fftw3.h>

#include <complex>
#include <memory>
#include <mutex>

namespace bargmann::detail {

namespace {

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

class Plan {
 public:
  // `howmany` transforms of length n, element stride 1, distance n.
  Plan(int n, int howmany, FftSign sign, fftw_complex* buf) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_many_dft(1, &n, howmany, buf, nullptr, 1, n, buf,
                               nullptr, 1, n, static_cast<int>(sign),
                               FFTW_ESTIMATE);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_ = nullptr;
};

// Runs `howmany` length-n transforms. `load(k, i)` returns element i of
// vector k; `store(k, i, v)` writes it back. Rotation maps centered index
// i - h to FFT slot (i - h) mod n.
template <typename Load, typename Store>
void run(int n, int howmany, FftSign sign, Load load, Store store) {
  const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(howmany);
  Buffer buf(fftw_alloc_complex(total));
  Plan plan(n, howmany, sign, buf.get());
  const int h = n / 2;
  auto* data = reinterpret_cast<std::complex<double>*>(buf.get());
  for (int k = 0; k < howmany; ++k) {
    std::complex<double>* row = data + static_cast<std::ptrdiff_t>(k) * n;
    for (int i = 0; i < n; ++i) row[(i - h + n) % n] = load(k, i);
  }
  plan.execute();
  for (int k = 0; k < howmany; ++k) {
    const std::complex<double>* row = data + static_cast<std::ptrdiff_t>(k) * n;
    for (int i = 0; i < n; ++i) store(k, i, row[(i - h + n) % n]);
  }
}

}  // namespace

void centered_fft_columns(Eigen::MatrixXcd& m, FftSign sign) {
  if (m.size() == 0) return;
  run(static_cast<int>(m.rows()), static_cast<int>(m.cols()), sign,
      [&](int k, int i) { return m(i, k); },
      [&](int k, int i, std::complex<double> v) { m(i, k) = v; });
}

void centered_fft_rows(Eigen::MatrixXcd& m, FftSign sign) {
  if (m.size() == 0) return;
  run(static_cast<int>(m.cols()), static_cast<int>(m.rows()), sign,
      [&](int k, int i) { return m(k, i); },
      [&](int k, int i, std::complex<double> v) { m(k, i) = v; });
}

void centered_fft(Eigen::VectorXcd& v, FftSign sign) {
  if (v.size() == 0) return;
  run(static_cast<int>(v.size()), 1, sign, [&](int, int i) { return v(i); },
      [&](int, int i, std::complex<double> x) { v(i) = x; });
}

}  // namespace bargmann::detail
