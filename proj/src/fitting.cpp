#include "gevlab/fitting.hpp"

#include <array>
#include <cmath>

#include "gevlab/errors.hpp"

namespace gevlab {

LinearFit linearFit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("linearFit: need >= 2 samples");
  const double n = static_cast<double>(x.size());
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  if (sxx == 0.0) throw DomainError("linearFit: degenerate abscissae");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = ym - f.slope * xm;
  return f;
}

double growthExponentFit(std::span<const double> k, std::span<const double> y) {
  if (k.size() != y.size() || k.size() < 5) throw DomainError("growthExponentFit: need >= 5 samples");
  constexpr int P = 4;
  std::array<std::array<double, P>, P> ata{};
  std::array<double, P> atb{};
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double lk = std::log(k[i]);
    const std::array<double, P> row{k[i] * lk, k[i], lk, 1.0};
    for (int a = 0; a < P; ++a) {
      atb[a] += row[a] * y[i];
      for (int b = 0; b < P; ++b) ata[a][b] += row[a] * row[b];
    }
  }
  // Gaussian elimination with partial pivoting on the 4x4 normal equations.
  for (int col = 0; col < P; ++col) {
    int piv = col;
    for (int r = col + 1; r < P; ++r)
      if (std::abs(ata[r][col]) > std::abs(ata[piv][col])) piv = r;
    std::swap(ata[col], ata[piv]);
    std::swap(atb[col], atb[piv]);
    if (ata[col][col] == 0.0) throw DomainError("growthExponentFit: singular design matrix");
    for (int r = 0; r < P; ++r) {
      if (r == col) continue;
      const double f = ata[r][col] / ata[col][col];
      for (int c2 = col; c2 < P; ++c2) ata[r][c2] -= f * ata[col][c2];
      atb[r] -= f * atb[col];
    }
  }
  return atb[0] / ata[0][0];
}

}  // namespace gevlab
