#include "qsq/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsq/error.hpp"
#include "qsq/polynomial.hpp"

namespace qsq {
namespace {

AnalyticPoly linear(cplx c0, cplx c1) { return AnalyticPoly(std::vector<cplx>{c0, c1}); }

bool same_poly(const AnalyticPoly& a, const AnalyticPoly& b) {
  if (a.coeffs().size() != b.coeffs().size()) return false;
  return std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin());
}

}  // namespace

// ----------------------------------------------------------- BlaschkeProduct

BlaschkeProduct::BlaschkeProduct(cplx constant, std::vector<cplx> zeros)
    : constant_(constant), zeros_(std::move(zeros)) {
  if (std::abs(std::abs(constant_) - 1.0) > 1e-10)
    throw Error(ErrorCode::invalid_argument, "Blaschke constant must be unimodular");
  constant_ /= std::abs(constant_);
  for (auto a : zeros_)
    if (!(std::abs(a) < 1.0)) {
      std::ostringstream os;
      os << "Blaschke zero " << a << " is not inside the unit disk";
      throw Error(ErrorCode::out_of_domain, os.str());
    }
}

BlaschkeProduct BlaschkeProduct::monomial(std::size_t n) {
  return BlaschkeProduct(1.0, std::vector<cplx>(n, cplx{}));
}

BlaschkeProduct BlaschkeProduct::single_factor(cplx a) { return BlaschkeProduct(1.0, {a}); }

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx v = constant_;
  for (auto a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

cplx BlaschkeProduct::at_zero() const {
  cplx v = constant_;
  for (auto a : zeros_) v *= -a;
  return v;
}

bool BlaschkeProduct::vanishes_at_origin() const {
  return std::any_of(zeros_.begin(), zeros_.end(), [](cplx a) { return a == cplx{}; });
}

AnalyticPoly BlaschkeProduct::numerator() const {
  AnalyticPoly p{constant_};
  for (auto a : zeros_) p = p * linear(-a, 1.0);
  return p;
}

AnalyticPoly BlaschkeProduct::denominator() const {
  AnalyticPoly p{1.0};
  for (auto a : zeros_) p = p * linear(1.0, -std::conj(a));
  return p;
}

BlaschkeProduct BlaschkeProduct::squared() const {
  std::vector<cplx> z(zeros_);
  z.insert(z.end(), zeros_.begin(), zeros_.end());
  return BlaschkeProduct(constant_ * constant_, std::move(z));
}

std::vector<cplx> BlaschkeProduct::taylor(std::size_t count) const {
  const auto n = numerator();
  const auto d = denominator();
  return series_divide(n.coeffs(), d.coeffs(), count);
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(AnalyticPoly numerator, AnalyticPoly denominator, Unchecked)
    : num_(std::move(numerator)), den_(std::move(denominator)) {}

RationalFn::RationalFn(AnalyticPoly numerator, AnalyticPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_null()) throw Error(ErrorCode::invalid_argument, "rational function with null denominator");
  if (den_.degree() > 0) {
    for (auto r : polynomial_roots(den_))
      if (std::abs(r) <= 1.0 + 1e-12) {
        std::ostringstream os;
        os << "denominator vanishes at " << r << " in the closed disk";
        throw Error(ErrorCode::out_of_domain, os.str());
      }
  }
}

RationalFn::RationalFn(AnalyticPoly poly) : num_(std::move(poly)), den_{1.0} {}

cplx RationalFn::operator()(cplx z) const { return num_(z) / den_(z); }

RationalFn RationalFn::derivative() const {
  return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_, Unchecked{});
}

std::vector<cplx> RationalFn::taylor(std::size_t count) const {
  return series_divide(num_.coeffs(), den_.coeffs(), count);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (same_poly(a.den_, b.den_)) return RationalFn(a.num_ + b.num_, a.den_, RationalFn::Unchecked{});
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RationalFn::Unchecked{});
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_, RationalFn::Unchecked{});
}

RationalFn operator*(cplx s, const RationalFn& a) { return RationalFn(s * a.num_, a.den_, RationalFn::Unchecked{}); }

// --------------------------------------------------------------- constructions

BlaschkeProduct frostman_shift(const BlaschkeProduct& theta, cplx w) {
  if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::out_of_domain, "Frostman shift needs |w| < 1");
  if (w == cplx{}) return theta;

  const AnalyticPoly num = theta.numerator() - w * theta.denominator();
  std::vector<cplx> c(num.coeffs().begin(), num.coeffs().end());
  double scale = 0;
  for (auto v : c) scale = std::max(scale, std::abs(v));
  // w == theta(0) makes the constant term vanish in exact arithmetic.
  if (!c.empty() && std::abs(c[0]) <= 1e-15 * scale) c[0] = 0;

  auto zeros = polynomial_roots(AnalyticPoly(c));
  for (auto& b : zeros) {
    if (std::abs(b) >= 1.0 - 1e-8) {
      std::ostringstream os;
      os << "degenerate Frostman shift: zero " << b << " is within 1e-8 of the circle";
      throw Error(ErrorCode::out_of_domain, os.str());
    }
  }
  // Fix the unimodular constant by matching at z = 1.
  const cplx t1 = theta(1.0);
  const cplx target = (t1 - w) / (1.0 - std::conj(w) * t1);
  cplx partial = 1.0;
  for (auto b : zeros) partial *= (1.0 - b) / (1.0 - std::conj(b));
  cplx constant = target / partial;
  constant /= std::abs(constant);
  return BlaschkeProduct(constant, std::move(zeros));
}

RationalFn g_theta(const BlaschkeProduct& theta) {
  const cplx wbar = std::conj(theta.at_zero());
  const AnalyticPoly den = theta.denominator();
  return RationalFn(den - wbar * theta.numerator(), den);
}

std::vector<RationalFn> mt_basis(const BlaschkeProduct& theta) {
  std::vector<RationalFn> basis;
  basis.reserve(theta.degree());
  AnalyticPoly num{1.0}, den{1.0};
  for (auto a : theta.zeros()) {
    const AnalyticPoly den_k = den * linear(1.0, -std::conj(a));
    basis.emplace_back(std::sqrt(1.0 - std::norm(a)) * num, den_k);
    num = num * linear(-a, 1.0);
    den = den_k;
  }
  return basis;
}

}  // namespace qsq
