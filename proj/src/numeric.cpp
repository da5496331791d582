#include "abvortex/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "abvortex/error.hpp"

namespace abvortex::numeric {

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 RootOptions opts) {
  if (!(lo < hi)) std::swap(lo, hi);
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) ||
      std::isnan(f_hi))
    throw Error(ErrorKind::NoRoot, "function does not change sign over bracket");

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= opts.abs_tol * std::max(1.0, std::abs(mid))) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  // Secant through the bracket ends; it always lands inside the bracket.
  const double x = lo - f_lo * (hi - lo) / (f_hi - f_lo);
  if (x >= lo && x <= hi) return x;
  return 0.5 * (lo + hi);
}

double simpson(const std::function<double(double)>& f, double a, double b,
               std::size_t steps) {
  if (steps == 0 || steps % 2 != 0)
    throw Error(ErrorKind::InvalidInput, "Simpson needs an even, positive step count");
  const double h = (b - a) / static_cast<double>(steps);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < steps; ++i) {
    const double x = a + h * static_cast<double>(i);
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f(x);
  }
  return sum * h / 3.0;
}

}  // namespace abvortex::numeric
