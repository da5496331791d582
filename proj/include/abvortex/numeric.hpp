#pragma once

#include <cstddef>
#include <functional>

namespace abvortex::numeric {

struct RootOptions {
  double abs_tol = 1e-12;  // on the abscissa, scaled by max(1, |x|)
  int max_iter = 400;
};

/// Bracketing bisection on [lo, hi] followed by one secant step inside the
/// final bracket. Throws Error(NoRoot) if f(lo) and f(hi) share a sign.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 RootOptions opts = {});

/// Composite Simpson rule on a uniform grid of `steps` intervals (`steps` must
/// be even and positive).
double simpson(const std::function<double(double)>& f, double a, double b,
               std::size_t steps);

}  // namespace abvortex::numeric
