#pragma once

#include <cmath>
#include <concepts>
#include <utility>

#include "hexbubble/error.hpp"

namespace hexbubble::numeric {

/// Bisection for a sign change of `f` on [lo, hi]. Stops once the bracket is
/// narrower than `tol` and returns its midpoint.
template <std::floating_point T, typename F>
T bisect_root(F&& f, T lo, T hi, T tol, int max_iter = 200) {
  T f_lo = f(lo);
  const T f_hi = f(hi);
  if (f_lo == T(0)) return lo;
  if (f_hi == T(0)) return hi;
  if ((f_lo < T(0)) == (f_hi < T(0))) {
    throw DomainError("bisect_root: no sign change on bracket");
  }
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    const T mid = lo + (hi - lo) / 2;
    const T f_mid = f(mid);
    if (f_mid == T(0)) return mid;
    if ((f_mid < T(0)) == (f_lo < T(0))) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

template <std::floating_point T>
struct ScalarMinimum {
  T x;
  T value;
};

/// Golden-section search for a minimum of a unimodal `f` on [a, b].
/// Endpoints are compared at the end so a boundary minimum is returned exactly.
template <std::floating_point T, typename F>
ScalarMinimum<T> golden_section_min(F&& f, T a, T b, T tol, int max_iter = 400) {
  const T inv_phi = (std::sqrt(T(5)) - T(1)) / T(2);
  T c = b - inv_phi * (b - a);
  T d = a + inv_phi * (b - a);
  T fc = f(c);
  T fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  ScalarMinimum<T> best{c, fc};
  if (fd < best.value) best = {d, fd};
  const T fa = f(a);
  const T fb = f(b);
  if (fa < best.value) best = {a, fa};
  if (fb < best.value) best = {b, fb};
  return best;
}

}  // namespace hexbubble::numeric
