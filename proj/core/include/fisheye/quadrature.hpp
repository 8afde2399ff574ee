#pragma once

// Deterministic adaptive Gauss-Kronrod (G7,K15) quadrature. The semi-infinite
// integrals over the imaginary wavenumber are truncated at
// kappa_max = truncation_constant / decay_rate, where the caller supplies the
// analytic exponential decay rate of its integrand; the panel list is refined
// largest-error-first and accumulated left-to-right so results are bit-stable
// across runs.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fisheye {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_subdivisions = 2000;
  double truncation_constant = 42.0;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double best, double achieved)
      : std::runtime_error(msg), best_estimate(best), achieved_error(achieved) {}
  double best_estimate;
  double achieved_error;
};

namespace detail {

// QUADPACK dqk15 nodes and weights; odd-index nodes plus the midpoint form
// the embedded 7-point Gauss rule.
inline constexpr double kXgk15[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk15[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg7[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
};

template <class F>
Panel gk15_panel(F& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double resk = kWgk15[7] * fc;
  double resg = kWg7[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk15[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk15[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg7[(j - 1) / 2] * (f1 + f2);
  }
  return {lo, hi, resk * h, std::abs((resk - resg) * h)};
}

}  // namespace detail

template <class F>
QuadResult integrate_adaptive(F&& f, double lo, double hi, const QuadratureConfig& cfg = {}) {
  if (!(cfg.rel_tol > 0.0)) throw std::invalid_argument("quadrature: rel_tol must be > 0");
  if (cfg.max_subdivisions < 1)
    throw std::invalid_argument("quadrature: max_subdivisions must be >= 1");
  if (!(hi > lo)) throw std::invalid_argument("quadrature: empty interval");

  std::vector<detail::Panel> panels;
  panels.reserve(64);
  panels.push_back(detail::gk15_panel(f, lo, hi));

  int splits = 0;
  for (;;) {
    double total = 0.0, toterr = 0.0;
    for (const auto& p : panels) {
      total += p.value;
      toterr += p.error;
    }
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (toterr <= target) return {total, toterr, splits};
    if (splits >= cfg.max_subdivisions)
      throw QuadratureError("quadrature: subdivision limit reached before convergence",
                            total, toterr);

    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;

    const detail::Panel p = panels[worst];
    const double mid = 0.5 * (p.lo + p.hi);
    panels[worst] = detail::gk15_panel(f, p.lo, mid);
    panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                  detail::gk15_panel(f, mid, p.hi));
    ++splits;
  }
}

// integral over [0, inf) of a function decaying like exp(-decay_rate * x)
template <class F>
QuadResult integrate_semi_infinite(F&& f, double decay_rate, const QuadratureConfig& cfg = {}) {
  if (!(decay_rate > 0.0))
    throw std::domain_error("integrate_semi_infinite: decay_rate must be > 0");
  const double x_max = cfg.truncation_constant / decay_rate;
  return integrate_adaptive(f, 0.0, x_max, cfg);
}

}  // namespace fisheye
