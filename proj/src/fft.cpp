#include "qsq/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace qsq::fft {
namespace {

// The FFTW planner is not reentrant; execution of a finished plan is.
std::mutex planner_mutex;

void transform(std::span<std::complex<double>> data, int sign) {
  if (data.size() < 2) return;
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buffer, buffer, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex);
  fftw_destroy_plan(plan);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

void forward(std::span<std::complex<double>> data) { transform(data, FFTW_FORWARD); }

void inverse(std::span<std::complex<double>> data) { transform(data, FFTW_BACKWARD); }

std::vector<std::complex<double>> convolve(std::span<const std::complex<double>> a,
                                           std::span<const std::complex<double>> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out = a.size() + b.size() - 1;
  if (a.size() * b.size() <= 4096) {
    std::vector<std::complex<double>> r(out);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  }
  const std::size_t n = next_pow2(out);
  std::vector<std::complex<double>> fa(n), fb(n);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  forward(fa);
  forward(fb);
  for (std::size_t k = 0; k < n; ++k) fa[k] *= fb[k] / static_cast<double>(n);
  inverse(fa);
  fa.resize(out);
  return fa;
}

}  // namespace qsq::fft
