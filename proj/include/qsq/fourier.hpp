#pragma once

// Fourier analysis on the unit circle T with normalized Lebesgue measure m.
//
// Three representations are used throughout the library:
//   TrigCoeffs       two-sided coefficient band c_{-M..M}
//   AnalyticPoly     Taylor coefficients a_0..a_d (an element of P_d)
//   BoundarySamples  values at the N-th roots of unity, each carrying weight 1/N

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace qsq {

using cplx = std::complex<double>;

/// Anything holomorphic on a neighbourhood of the closed disk, given pointwise.
using HolomorphicFn = std::function<cplx(cplx)>;

inline constexpr double infinity = std::numeric_limits<double>::infinity();

class CircleGrid {
 public:
  /// N must be a power of two and at least 4.
  explicit CircleGrid(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  double weight() const noexcept { return 1.0 / static_cast<double>(size_); }
  cplx node(std::size_t k) const;
  std::vector<cplx> nodes() const;
  CircleGrid refined() const { return CircleGrid(2 * size_); }

  /// Smallest admissible grid holding at least `min_size` nodes.
  static CircleGrid at_least(std::size_t min_size);

  friend bool operator==(const CircleGrid&, const CircleGrid&) = default;

 private:
  std::size_t size_;
};

class AnalyticPoly {
 public:
  AnalyticPoly() = default;
  /// Trailing zero coefficients are dropped so the leading one is nonzero.
  explicit AnalyticPoly(std::vector<cplx> coeffs);
  AnalyticPoly(std::initializer_list<cplx> coeffs) : AnalyticPoly(std::vector<cplx>(coeffs)) {}

  static AnalyticPoly monomial(std::size_t n, cplx c = 1.0);

  bool is_null() const noexcept { return coeffs_.empty(); }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }

  cplx operator()(cplx z) const;
  AnalyticPoly derivative() const;
  double l2_norm() const;

  friend AnalyticPoly operator+(const AnalyticPoly& a, const AnalyticPoly& b);
  friend AnalyticPoly operator-(const AnalyticPoly& a, const AnalyticPoly& b);
  friend AnalyticPoly operator*(const AnalyticPoly& a, const AnalyticPoly& b);
  friend AnalyticPoly operator*(cplx s, const AnalyticPoly& a);

 private:
  std::vector<cplx> coeffs_;
};

class TrigCoeffs {
 public:
  TrigCoeffs() : TrigCoeffs(0) {}
  explicit TrigCoeffs(std::size_t band);
  /// `coeffs` is ordered k = -M..M and must have odd length 2M+1.
  explicit TrigCoeffs(std::vector<cplx> coeffs);

  static TrigCoeffs from_analytic(const AnalyticPoly& f);

  std::size_t band() const noexcept { return band_; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of zeta^k; zero outside the band.
  cplx operator[](long k) const noexcept;
  cplx& at(long k);

  /// Value at a point of the circle.
  cplx operator()(cplx zeta) const;

  /// c_{-k} == conj(c_k) for every k, up to `tol` relative to the largest coefficient.
  bool is_real(double tol = 1e-12) const;
  double l2_norm() const;
  TrigCoeffs conj() const;

  friend TrigCoeffs operator+(const TrigCoeffs& a, const TrigCoeffs& b);
  friend TrigCoeffs operator-(const TrigCoeffs& a, const TrigCoeffs& b);
  friend TrigCoeffs operator*(cplx s, const TrigCoeffs& a);
  /// Product with exact band growth M1 + M2.
  friend TrigCoeffs operator*(const TrigCoeffs& a, const TrigCoeffs& b);

 private:
  std::size_t band_;
  std::vector<cplx> coeffs_;
};

struct BoundarySamples {
  BoundarySamples(CircleGrid grid, std::vector<cplx> values);

  CircleGrid grid;
  std::vector<cplx> values;
};

/// Evaluates a trigonometric polynomial at every grid node. Any band is
/// accepted; indices are folded modulo N, which is exact at the nodes.
BoundarySamples sample(const TrigCoeffs& c, const CircleGrid& grid);

template <class F>
BoundarySamples sample(const F& f, const CircleGrid& grid) {
  std::vector<cplx> v(grid.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(grid.node(k));
  return BoundarySamples(grid, std::move(v));
}

/// Discrete Fourier coefficients for |k| <= band. Exact when the sampled
/// function is band-limited to `band`; aliased otherwise. Requires N > 2*band.
TrigCoeffs to_coeffs(const BoundarySamples& samples, std::size_t band);

/// Taylor coefficients 0..count-1 of the analytic part of the samples.
std::vector<cplx> analytic_coeffs(const BoundarySamples& samples, std::size_t count);

/// The harmonic conjugate: Fourier multiplier -i sgn(k).
TrigCoeffs conjugate_function(const TrigCoeffs& u);

/// Keeps k >= 0.
AnalyticPoly riesz_projection(const TrigCoeffs& h);

/// (mean |f|^p)^{1/p} against m; p = infinity gives the max.
double lp_norm(const BoundarySamples& f, double p);

/// mean f conj(g)
cplx inner_product(const BoundarySamples& f, const BoundarySamples& g);

struct RefinedNorm {
  double value;
  std::size_t grid_size;
};

/// L^p norm of a function on T, doubling the grid until two successive
/// estimates agree to `tol` relative.
RefinedNorm lp_norm_refined(const HolomorphicFn& f, double p, std::size_t initial_grid = 4096,
                            double tol = 1e-6, std::size_t max_grid = std::size_t{1} << 22);

/// sup over lambda > 0 of lambda * m(|g| > lambda) for the empirical
/// distribution of the samples (the sup is approached from below each
/// sample magnitude).
double weak_l1_quasinorm(const BoundarySamples& g);

/// Norm of the conjugation operator on real L^p, 1 < p < infinity:
/// tan(pi/2p) for p <= 2, cot(pi/2p) for p > 2.
double conjugation_constant(double p);

/// B_p = 1 + A_{p/2}, 2 < p < infinity.
double b_constant(double p);

/// u(0) + 2 sum_{k>=1} u_k z^k for a real band u and |z| < 1.
cplx herglotz_extend(const TrigCoeffs& u, cplx z);
double poisson_extend(const TrigCoeffs& u, cplx z);

}  // namespace qsq
