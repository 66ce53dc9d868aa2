#include "gevlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gevlab {

Spectrum::Spectrum(SpectrumKind kind, std::vector<double> lambdas)
    : kind_(kind), lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw DomainError("Spectrum: empty eigenvalue list");
  double prev = 0.0;
  for (double l : lambdas_) {
    if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("Spectrum: eigenvalues must be positive finite");
    if (l < prev) throw DomainError("Spectrum: eigenvalues must be nondecreasing");
    prev = l;
  }
  double ratio = 1.0;
  for (std::size_t i = 0; i + 1 < lambdas_.size(); ++i)
    ratio = std::max(ratio, lambdas_[i + 1] / lambdas_[i]);
  ratio_bound_ = ratio;
}

std::shared_ptr<const Spectrum> Spectrum::powerLaw(double delta, double eps, std::size_t count) {
  if (!(delta > 0.0) || !(eps > 0.0)) throw DomainError("Spectrum::powerLaw: delta, eps must be positive");
  if (count == 0) throw DomainError("Spectrum::powerLaw: count must be positive");
  std::vector<double> l(count);
  for (std::size_t n = 1; n <= count; ++n) l[n - 1] = delta * std::pow(static_cast<double>(n), eps);
  auto s = std::shared_ptr<Spectrum>(new Spectrum(SpectrumKind::PowerLaw, std::move(l)));
  s->delta_ = delta;
  s->eps_ = eps;
  return s;
}

std::shared_ptr<const Spectrum> Spectrum::dirichlet1d(double length, std::size_t count) {
  if (!(length > 0.0)) throw DomainError("Spectrum::dirichlet1d: length must be positive");
  if (count == 0) throw DomainError("Spectrum::dirichlet1d: count must be positive");
  const double base = std::numbers::pi / length;
  std::vector<double> l(count);
  for (std::size_t n = 1; n <= count; ++n) {
    const double f = base * static_cast<double>(n);
    l[n - 1] = f * f;
  }
  auto s = std::shared_ptr<Spectrum>(new Spectrum(SpectrumKind::Dirichlet1D, std::move(l)));
  s->delta_ = base * base;
  s->eps_ = 2.0;
  s->length_ = length;
  return s;
}

std::shared_ptr<const Spectrum> Spectrum::fromValues(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::shared_ptr<Spectrum>(new Spectrum(SpectrumKind::Explicit, std::move(values)));
}

std::size_t Spectrum::firstIndexAtLeast(double threshold) const {
  auto it = std::lower_bound(lambdas_.begin(), lambdas_.end(), threshold);
  if (it == lambdas_.end()) return 0;
  return static_cast<std::size_t>(it - lambdas_.begin()) + 1;
}

DampingConfig::DampingConfig(double alpha, double c) : alpha_(alpha), c_(c) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) throw DomainError("DampingConfig: alpha must be in (0,1)");
  if (!(c > 0.0)) throw DomainError("DampingConfig: c must be positive");
}

DampingConfig::DampingConfig(std::vector<DampingTerm> terms)
    : alpha_(0.0), c_(0.0), terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("DampingConfig: generalized symbol needs at least one term");
  for (const auto& t : terms_) {
    if (!(t.alpha > 0.0) || !(t.alpha < 1.0)) throw DomainError("DampingConfig: term alpha must be in (0,1)");
    if (!(t.c > 0.0)) throw DomainError("DampingConfig: term c must be positive");
  }
  alpha_ = maxAlpha();
  c_ = terms_.front().c;
}

double DampingConfig::symbol(double lambda) const {
  if (terms_.empty()) return c_ * std::pow(lambda, alpha_);
  double b = 0.0;
  for (const auto& t : terms_) b += t.c * std::pow(lambda, t.alpha);
  return b;
}

double DampingConfig::maxAlpha() const {
  if (terms_.empty()) return alpha_;
  double a = 0.0;
  for (const auto& t : terms_) a = std::max(a, t.alpha);
  return a;
}

TimeRescaling rescaleTime(const DampingConfig& damping, double k) {
  if (!(k > 0.0)) throw DomainError("rescaleTime: k must be positive");
  const double scale = 1.0 / (k * k);
  if (damping.isSinglePower()) {
    const double cNew = damping.c() * std::pow(k, 2.0 * damping.alpha() - 1.0);
    return TimeRescaling{DampingConfig(damping.alpha(), cNew), scale};
  }
  std::vector<DampingTerm> terms = damping.terms();
  for (auto& t : terms) t.c *= std::pow(k, 2.0 * t.alpha - 1.0);
  return TimeRescaling{DampingConfig(std::move(terms)), scale};
}

double normalizingScale(const DampingConfig& damping) {
  if (!damping.isSinglePower())
    throw NormalizationError("normalizingScale: generalized symbols cannot be normalized to c = 1");
  const double a = damping.alpha();
  const double c = damping.c();
  if (a == 0.5) {
    if (c == 1.0) return 1.0;
    throw NormalizationError("normalizingScale: alpha = 1/2 leaves c invariant under time scaling");
  }
  return std::pow(c, 1.0 / (1.0 - 2.0 * a));
}

DiagonalVector::DiagonalVector(SpectrumPtr spectrum)
    : spectrum_(std::move(spectrum)), coeffs_(spectrum_ ? spectrum_->count() : 0) {
  if (!spectrum_) throw DomainError("DiagonalVector: null spectrum");
}

DiagonalVector::DiagonalVector(SpectrumPtr spectrum, std::vector<LogReal> coeffs)
    : spectrum_(std::move(spectrum)), coeffs_(std::move(coeffs)) {
  if (!spectrum_) throw DomainError("DiagonalVector: null spectrum");
  if (coeffs_.size() != spectrum_->count())
    throw DomainError("DiagonalVector: coefficient count must match spectrum");
}

DiagonalVector DiagonalVector::fromReals(SpectrumPtr spectrum, std::span<const double> values) {
  DiagonalVector v(std::move(spectrum));
  if (values.size() != v.size()) throw DomainError("DiagonalVector::fromReals: size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = LogReal::fromReal(values[i]);
  return v;
}

DiagonalVector DiagonalVector::basisVector(SpectrumPtr spectrum, std::size_t n) {
  DiagonalVector v(std::move(spectrum));
  if (n == 0 || n > v.size()) throw DomainError("DiagonalVector::basisVector: index out of range");
  v[n - 1] = LogReal::one();
  return v;
}

DiagonalVector DiagonalVector::applyPower(double power) const {
  DiagonalVector out(spectrum_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].isZero()) continue;
    out[i] = LogReal(coeffs_[i].sign, coeffs_[i].logmag + power * std::log(spectrum_->lambda(i + 1)));
  }
  return out;
}

}  // namespace gevlab
