#include "g52/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace g52::kernels {

double phi1_series(double t) {
  // sum_{k>=0} t^k / (k+1)!, truncated at degree 12
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 12; ++k) {
    term *= t / (k + 1);
    sum += term;
  }
  return sum;
}

double phi1_direct(double t) { return std::expm1(t) / t; }

double phi1(double t) { return std::abs(t) < kSeriesSwitch ? phi1_series(t) : phi1_direct(t); }

double exp_dd2(double a, double b) {
  const double t = a - b;
  if (std::abs(t) < kSeriesSwitch) return std::exp(b) * phi1_series(t);
  return (std::exp(a) - std::exp(b)) / t;
}

double exp_dd3_series(double a, double b, double c) {
  // exp[a,b,c] = e^m sum_{k>=0} h_k(a-m, b-m, c-m) / (k+2)! with m the mean;
  // h_k is the complete homogeneous symmetric polynomial.
  const double m = (a + b + c) / 3.0;
  const double u = a - m, v = b - m, w = c - m;
  double fact = 2.0;  // (k+2)! running value
  double sum = 0.0;
  for (int k = 0; k <= 10; ++k) {
    if (k > 0) fact *= (k + 2);
    double h = 0.0;
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j + i <= k; ++j)
        h += std::pow(u, i) * std::pow(v, j) * std::pow(w, k - i - j);
    sum += h / fact;
  }
  return std::exp(m) * sum;
}

double exp_dd3_direct(double a, double b, double c) {
  double lo = a, mid = b, hi = c;
  if (lo > mid) std::swap(lo, mid);
  if (mid > hi) std::swap(mid, hi);
  if (lo > mid) std::swap(lo, mid);
  return (exp_dd2(hi, mid) - exp_dd2(mid, lo)) / (hi - lo);
}

double exp_dd3(double a, double b, double c) {
  const double span = std::max({a, b, c}) - std::min({a, b, c});
  if (span < kSeriesSwitch) return exp_dd3_series(a, b, c);
  return exp_dd3_direct(a, b, c);
}

}  // namespace g52::kernels
