#include "qsq/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsq/error.hpp"
#include "qsq/fft.hpp"

namespace qsq {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

// ---------------------------------------------------------------- CircleGrid

CircleGrid::CircleGrid(std::size_t size) : size_(size) {
  if (size < 4 || !is_pow2(size)) {
    std::ostringstream os;
    os << "circle grid size must be a power of two >= 4, got " << size;
    throw Error(ErrorCode::invalid_argument, os.str());
  }
}

cplx CircleGrid::node(std::size_t k) const {
  // Reduce to the first octant so that nodes like i, -1, -i come out exact.
  const std::size_t n = size_;
  k %= n;
  const std::size_t quarter = n / 4;
  const std::size_t q = k / quarter;
  const std::size_t r = k % quarter;
  const double t = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  cplx base = r == 0 ? cplx{1.0, 0.0} : cplx{std::cos(t), std::sin(t)};
  switch (q) {
    case 0: return base;
    case 1: return {-base.imag(), base.real()};
    case 2: return -base;
    default: return {base.imag(), -base.real()};
  }
}

std::vector<cplx> CircleGrid::nodes() const {
  std::vector<cplx> v(size_);
  for (std::size_t k = 0; k < size_; ++k) v[k] = node(k);
  return v;
}

CircleGrid CircleGrid::at_least(std::size_t min_size) {
  std::size_t n = 4;
  while (n < min_size) n <<= 1;
  return CircleGrid(n);
}

// -------------------------------------------------------------- AnalyticPoly

AnalyticPoly::AnalyticPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
}

AnalyticPoly AnalyticPoly::monomial(std::size_t n, cplx c) {
  std::vector<cplx> v(n + 1);
  v[n] = c;
  return AnalyticPoly(std::move(v));
}

cplx AnalyticPoly::operator()(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

AnalyticPoly AnalyticPoly::derivative() const {
  if (coeffs_.size() < 2) return {};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return AnalyticPoly(std::move(d));
}

double AnalyticPoly::l2_norm() const {
  double s = 0;
  for (auto c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

AnalyticPoly operator+(const AnalyticPoly& a, const AnalyticPoly& b) {
  std::vector<cplx> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
  return AnalyticPoly(std::move(r));
}

AnalyticPoly operator-(const AnalyticPoly& a, const AnalyticPoly& b) {
  return a + cplx{-1.0} * b;
}

AnalyticPoly operator*(const AnalyticPoly& a, const AnalyticPoly& b) {
  if (a.is_null() || b.is_null()) return {};
  return AnalyticPoly(fft::convolve(a.coeffs_, b.coeffs_));
}

AnalyticPoly operator*(cplx s, const AnalyticPoly& a) {
  std::vector<cplx> r(a.coeffs_);
  for (auto& c : r) c *= s;
  return AnalyticPoly(std::move(r));
}

// ---------------------------------------------------------------- TrigCoeffs

TrigCoeffs::TrigCoeffs(std::size_t band) : band_(band), coeffs_(2 * band + 1) {}

TrigCoeffs::TrigCoeffs(std::vector<cplx> coeffs) : band_(0), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() % 2 == 0)
    throw Error(ErrorCode::invalid_argument, "TrigCoeffs needs 2M+1 coefficients");
  band_ = coeffs_.size() / 2;
}

TrigCoeffs TrigCoeffs::from_analytic(const AnalyticPoly& f) {
  TrigCoeffs t(f.degree());
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) t.at(static_cast<long>(k)) = f[k];
  return t;
}

cplx TrigCoeffs::operator[](long k) const noexcept {
  const long m = static_cast<long>(band_);
  if (k < -m || k > m) return {};
  return coeffs_[static_cast<std::size_t>(k + m)];
}

cplx& TrigCoeffs::at(long k) {
  const long m = static_cast<long>(band_);
  if (k < -m || k > m) throw Error(ErrorCode::invalid_argument, "coefficient index outside band");
  return coeffs_[static_cast<std::size_t>(k + m)];
}

cplx TrigCoeffs::operator()(cplx zeta) const {
  const long m = static_cast<long>(band_);
  cplx acc = (*this)[0];
  cplx pos = 1.0, neg = 1.0;
  const cplx inv = 1.0 / zeta;
  for (long k = 1; k <= m; ++k) {
    pos *= zeta;
    neg *= inv;
    acc += (*this)[k] * pos + (*this)[-k] * neg;
  }
  return acc;
}

bool TrigCoeffs::is_real(double tol) const {
  double scale = 0;
  for (auto c : coeffs_) scale = std::max(scale, std::abs(c));
  const double bound = tol * std::max(scale, 1.0);
  for (long k = 0; k <= static_cast<long>(band_); ++k)
    if (std::abs((*this)[-k] - std::conj((*this)[k])) > bound) return false;
  return true;
}

double TrigCoeffs::l2_norm() const {
  double s = 0;
  for (auto c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

TrigCoeffs TrigCoeffs::conj() const {
  TrigCoeffs r(band_);
  const long m = static_cast<long>(band_);
  for (long k = -m; k <= m; ++k) r.at(k) = std::conj((*this)[-k]);
  return r;
}

TrigCoeffs operator+(const TrigCoeffs& a, const TrigCoeffs& b) {
  TrigCoeffs r(std::max(a.band_, b.band_));
  const long m = static_cast<long>(r.band_);
  for (long k = -m; k <= m; ++k) r.at(k) = a[k] + b[k];
  return r;
}

TrigCoeffs operator-(const TrigCoeffs& a, const TrigCoeffs& b) { return a + cplx{-1.0} * b; }

TrigCoeffs operator*(cplx s, const TrigCoeffs& a) {
  TrigCoeffs r(a);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

TrigCoeffs operator*(const TrigCoeffs& a, const TrigCoeffs& b) {
  // Storage is offset by the band, so the linear convolution lands at offset M1+M2.
  TrigCoeffs r(a.band_ + b.band_);
  r.coeffs_ = fft::convolve(a.coeffs_, b.coeffs_);
  return r;
}

// ------------------------------------------------------------ BoundarySamples

BoundarySamples::BoundarySamples(CircleGrid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size())
    throw Error(ErrorCode::invalid_argument, "sample count does not match grid size");
}

BoundarySamples sample(const TrigCoeffs& c, const CircleGrid& grid) {
  const std::size_t n = grid.size();
  std::vector<cplx> buf(n);
  const long m = static_cast<long>(c.band());
  const long nl = static_cast<long>(n);
  for (long k = -m; k <= m; ++k) buf[static_cast<std::size_t>(((k % nl) + nl) % nl)] += c[k];
  fft::inverse(buf);
  return BoundarySamples(grid, std::move(buf));
}

TrigCoeffs to_coeffs(const BoundarySamples& samples, std::size_t band) {
  const std::size_t n = samples.grid.size();
  if (n <= 2 * band) {
    std::ostringstream os;
    os << "grid of " << n << " nodes cannot resolve band " << band << " (need N > 2M)";
    throw Error(ErrorCode::grid_too_small, os.str());
  }
  std::vector<cplx> buf(samples.values);
  fft::forward(buf);
  TrigCoeffs c(band);
  const double w = samples.grid.weight();
  const long m = static_cast<long>(band);
  const long nl = static_cast<long>(n);
  for (long k = -m; k <= m; ++k) c.at(k) = buf[static_cast<std::size_t>((k + nl) % nl)] * w;
  return c;
}

std::vector<cplx> analytic_coeffs(const BoundarySamples& samples, std::size_t count) {
  if (count == 0) return {};
  auto c = to_coeffs(samples, count - 1);
  std::vector<cplx> r(count);
  for (std::size_t k = 0; k < count; ++k) r[k] = c[static_cast<long>(k)];
  return r;
}

TrigCoeffs conjugate_function(const TrigCoeffs& u) {
  TrigCoeffs v(u.band());
  const long m = static_cast<long>(u.band());
  const cplx minus_i{0.0, -1.0};
  for (long k = 1; k <= m; ++k) {
    v.at(k) = minus_i * u[k];
    v.at(-k) = -minus_i * u[-k];
  }
  return v;
}

AnalyticPoly riesz_projection(const TrigCoeffs& h) {
  std::vector<cplx> a(h.band() + 1);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = h[static_cast<long>(k)];
  return AnalyticPoly(std::move(a));
}

double lp_norm(const BoundarySamples& f, double p) {
  if (!(p > 0)) throw Error(ErrorCode::invalid_argument, "L^p exponent must be positive");
  for (auto v : f.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::invalid_argument, "non-finite sample in L^p norm");
  if (std::isinf(p)) {
    double m = 0;
    for (auto v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0;
  if (p == 2.0) {
    for (auto v : f.values) s += std::norm(v);
    return std::sqrt(s * f.grid.weight());
  }
  for (auto v : f.values) s += std::pow(std::abs(v), p);
  return std::pow(s * f.grid.weight(), 1.0 / p);
}

cplx inner_product(const BoundarySamples& f, const BoundarySamples& g) {
  if (!(f.grid == g.grid)) throw Error(ErrorCode::invalid_argument, "inner product across grids");
  cplx s{};
  for (std::size_t k = 0; k < f.values.size(); ++k) s += f.values[k] * std::conj(g.values[k]);
  return s * f.grid.weight();
}

RefinedNorm lp_norm_refined(const HolomorphicFn& f, double p, std::size_t initial_grid, double tol,
                            std::size_t max_grid) {
  CircleGrid grid = CircleGrid::at_least(initial_grid);
  double prev = lp_norm(sample(f, grid), p);
  while (grid.size() < max_grid) {
    grid = grid.refined();
    const double next = lp_norm(sample(f, grid), p);
    const double change = std::abs(next - prev);
    if (change <= tol * std::abs(next) || (next == 0 && change <= 1e-12)) return {next, grid.size()};
    prev = next;
  }
  std::ostringstream os;
  os << "L^" << p << " norm did not stabilise below grid size " << max_grid;
  throw Error(ErrorCode::no_convergence, os.str());
}

double weak_l1_quasinorm(const BoundarySamples& g) {
  std::vector<double> mags(g.values.size());
  std::transform(g.values.begin(), g.values.end(), mags.begin(), [](cplx v) { return std::abs(v); });
  std::sort(mags.begin(), mags.end(), std::greater<>());
  // For lambda just below mags[i], every sample with magnitude >= mags[i] lies above.
  double best = 0;
  const double w = g.grid.weight();
  std::size_t i = 0;
  while (i < mags.size()) {
    std::size_t j = i;
    while (j + 1 < mags.size() && mags[j + 1] == mags[i]) ++j;
    best = std::max(best, mags[i] * static_cast<double>(j + 1) * w);
    i = j + 1;
  }
  return best;
}

double conjugation_constant(double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw Error(ErrorCode::out_of_domain, "conjugation constant needs 1 < p < infinity");
  if (p == 2.0) return 1.0;
  const double t = std::numbers::pi / (2.0 * p);
  return p <= 2.0 ? std::tan(t) : 1.0 / std::tan(t);
}

double b_constant(double p) {
  if (!(p > 2.0) || !std::isfinite(p))
    throw Error(ErrorCode::out_of_domain, "B_p needs 2 < p < infinity");
  return 1.0 + conjugation_constant(p / 2.0);
}

cplx herglotz_extend(const TrigCoeffs& u, cplx z) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::out_of_domain, "Herglotz extension needs |z| < 1");
  if (!u.is_real(1e-10)) throw Error(ErrorCode::invalid_argument, "Herglotz extension needs real data");
  cplx acc{};
  for (long k = static_cast<long>(u.band()); k >= 1; --k) acc = (acc + 2.0 * u[k]) * z;
  return acc + u[0];
}

double poisson_extend(const TrigCoeffs& u, cplx z) { return herglotz_extend(u, z).real(); }

}  // namespace qsq
