// quadrature.hpp — adaptive Gauss-Kronrod, Filon-type oscillatory panels,
// algebraic tail integrals and principal-value helpers

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace openbath::quad {

// ---------------------------------------------------------------- adaptive GK

struct GKOptions {
    double rel_tol{1e-10};
    double abs_tol{0.0};
    int max_intervals{4000};
};

// Adaptive Gauss(7)/Kronrod(15) on [a,b]. Throws NonConvergent if the
// interval budget is exhausted before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const GKOptions& opt = {});

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const GKOptions& opt = {});

// Same, with interior split points (resonance peaks, kernel edges).
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> splits, const GKOptions& opt = {});

// ∫_a^∞ f dx with the tail mapped through x = a + u/(1-u); f must decay
// at least like x^-2 for the mapped integrand to stay bounded.
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const GKOptions& opt = {});

// ------------------------------------------------------------- Filon panels

// Exact integrals of a piecewise-linear interpolant against sin(xt)/cos(xt).
// Panel moments are evaluated with series fallbacks near zero phase, so the
// rule stays stable for arbitrarily small t.
//
// sine_transform_tabulated:  ∫ y(x) sin(x t) dx over the sample grid
// cosine_transform_tabulated: same against cos(x t)
// abs_scale: on return, Σ_panels |contribution| (noise floor estimate).
double sine_transform_tabulated(std::span<const double> x, std::span<const double> y,
                                double t, double* abs_scale = nullptr);
double cosine_transform_tabulated(std::span<const double> x, std::span<const double> y,
                                  double t, double* abs_scale = nullptr);

// --------------------------------------------------------- algebraic tails

// sin_tail(r, x) = ∫_x^∞ u^{-r} sin(u) du, Abel-regularized for r <= 1.
// Valid for r >= 0 and x > 0.
double sin_tail(double r, double x);

// sin_full(r) = ∫_0^∞ u^{-r} sin(u) du = Γ(1-r) cos(πr/2), valid for r in (-1, 2).
double sin_full(double r);

// sin_head(r, x) = ∫_0^x u^{-r} sin(u) du for r < 2.
double sin_head(double r, double x);

// Least-squares power-law fit y ≈ A x^{-p} over the trailing `fraction`
// decade(s) of the samples (log-log). Only samples with y > 0 participate;
// returns {A = 0, p = 0} if fewer than two usable points exist.
struct PowerLawFit {
    double amplitude{0.0};
    double power{0.0};
    int points_used{0};
};
PowerLawFit fit_power_law_tail(std::span<const double> x, std::span<const double> y,
                               double decades = 1.0);
PowerLawFit fit_power_law_head(std::span<const double> x, std::span<const double> y,
                               double decades = 1.0);

// --------------------------------------------------------- principal value

// PV ∫_a^b f(x)/(x0 - x) dx with x0 in (a,b), by symmetric excision ±eps and
// one Richardson step in eps (2 I(eps/2) - I(eps)).
struct PVResult {
    double value{0.0};
    double epsilon{0.0};   // finest excision half-width used
    double refinement{0.0};// |change| in the last Richardson refinement
};
PVResult pv_integrate(const std::function<double(double)>& numerator, double a, double b,
                      double x0, double eps0 = 0.0, const GKOptions& opt = {});

// ---------------------------------------------------------------- summation

// Fixed-order pairwise (cascade) sum; deterministic and accurate for long series.
double pairwise_sum(std::span<const double> v);

} // namespace openbath::quad
