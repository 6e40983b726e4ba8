#pragma once

// Gauss-Legendre rules and the panel integrators built on them.

#include <Eigen/Core>

#include <cmath>
#include <type_traits>
#include <utility>

#include "morsesusy/errors.hpp"
#include "morsesusy/specfun.hpp"

namespace morsesusy {

struct GaussLegendreRule {
  Eigen::VectorXd nodes;    // on [-1, 1]
  Eigen::VectorXd weights;
};

/// n-point rule by Newton iteration on P_n. The 64-point rule is built once and cached.
const GaussLegendreRule& gauss_legendre64();
GaussLegendreRule gauss_legendre(int n);

namespace detail {

template <typename R>
double max_abs(const R& value) {
  if constexpr (std::is_arithmetic_v<R>) {
    return std::abs(value);
  } else {
    return value.cwiseAbs().maxCoeff();
  }
}

}  // namespace detail

/// Integral of f over [a, b] with one application of `rule`.
/// f may return a double or any fixed-shape Eigen expression.
template <typename F>
auto integrate_panel(F&& f, double a, double b, const GaussLegendreRule& rule = gauss_legendre64()) {
  using R = std::decay_t<decltype(f(a))>;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  R acc = rule.weights(0) * f(mid + half * rule.nodes(0));
  for (Index i = 1; i < rule.nodes.size(); ++i) {
    acc += rule.weights(i) * f(mid + half * rule.nodes(i));
  }
  return R(half * acc);
}

/// Composite rule over [a, b] split into `panels` equal pieces.
template <typename F>
auto integrate_composite(F&& f, double a, double b, Index panels) {
  const double w = (b - a) / static_cast<double>(panels);
  auto acc = integrate_panel(f, a, a + w);
  for (Index p = 1; p < panels; ++p) {
    acc += integrate_panel(f, a + static_cast<double>(p) * w, a + static_cast<double>(p + 1) * w);
  }
  return acc;
}

struct SemiInfiniteOptions {
  double panel_width = 1.0;
  /// Distance of the nearest complex singularity from the origin, if below 1/2.
  /// Panels are graded geometrically from 0 towards it.
  double singular_distance = 1.0;
  /// Stop once a panel contributes less than this fraction of the largest panel, twice in a row.
  double tail_ratio = std::exp(-40.0);
  double max_extent = 2000.0;
};

/// Integral of f over [0, inf) by unit-width Gauss-Legendre panels with a tail cut.
/// Throws QuadratureError if the tail criterion is not met before `max_extent`.
template <typename F>
auto integrate_semi_infinite(F&& f, const SemiInfiniteOptions& opt = {}) {
  double left = 0.0;
  double first = opt.panel_width;
  if (opt.singular_distance < 0.5 * opt.panel_width) {
    first = std::max(opt.singular_distance, 1e-8);
  }
  auto acc = integrate_panel(f, 0.0, first);
  double peak = detail::max_abs(acc);
  left = first;
  // geometric grading up to one panel width
  while (left < opt.panel_width) {
    const double right = std::min(2.0 * left, opt.panel_width);
    const auto piece = integrate_panel(f, left, right);
    peak = std::max(peak, detail::max_abs(piece));
    acc += piece;
    left = right;
  }
  int quiet = 0;
  while (quiet < 2) {
    if (left > opt.max_extent) {
      throw QuadratureError("integrate_semi_infinite: tail did not decay before the cut-off");
    }
    const auto piece = integrate_panel(f, left, left + opt.panel_width);
    const double size = detail::max_abs(piece);
    peak = std::max(peak, size);
    acc += piece;
    left += opt.panel_width;
    quiet = (size <= opt.tail_ratio * peak) ? quiet + 1 : 0;
  }
  return acc;
}

}  // namespace morsesusy
