#include "openbath/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>

#include "openbath/errors.hpp"

namespace openbath::quad {

namespace {

// Gauss(7)/Kronrod(15) nodes and weights on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class T>
struct PanelResult {
    T kronrod;
    double err;
};

template <class T, class F>
PanelResult<T> gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T resg = kWg[3] * fc;
    T resk = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        T f1 = f(c - dx);
        T f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    resk *= h;
    resg *= h;
    resabs *= std::abs(h);
    double err = std::abs(resk - resg);
    // QUADPACK-style error sharpening
    if (resabs > 0.0 && err > 0.0) {
        const double scale = std::pow(200.0 * err / resabs, 1.5);
        err = resabs * std::min(1.0, scale);
    }
    return {resk, err};
}

template <class T, class F>
T adaptive(const F& f, double a, double b, const GKOptions& opt) {
    struct Interval {
        double a, b, err;
        T val;
        bool operator<(const Interval& o) const { return err < o.err; }
    };
    auto first = gk15<T>(f, a, b);
    std::priority_queue<Interval> heap;
    heap.push({a, b, first.err, first.kronrod});
    T total = first.kronrod;
    double total_err = first.err;
    int used = 1;
    while (true) {
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (total_err <= tol) break;
        if (used >= opt.max_intervals)
            throw NonConvergent("adaptive quadrature: interval budget exhausted");
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = gk15<T>(f, worst.a, mid);
        auto right = gk15<T>(f, mid, worst.b);
        total += left.kronrod + right.kronrod - worst.val;
        total_err += left.err + right.err - worst.err;
        heap.push({worst.a, mid, left.err, left.kronrod});
        heap.push({mid, worst.b, right.err, right.kronrod});
        ++used;
    }
    return total;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const GKOptions& opt) {
    if (a == b) return 0.0;
    return adaptive<double>(f, a, b, opt);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, const GKOptions& opt) {
    if (a == b) return {0.0, 0.0};
    return adaptive<std::complex<double>>(f, a, b, opt);
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> splits, const GKOptions& opt) {
    std::vector<double> pts{a};
    for (double s : splits)
        if (s > a && s < b) pts.push_back(s);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        sum += integrate(f, pts[i], pts[i + 1], opt);
    return sum;
}

double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const GKOptions& opt) {
    // x = a + u/(1-u), dx = du/(1-u)^2, u in [0,1)
    auto mapped = [&](double u) {
        const double om = 1.0 - u;
        const double x = a + u / om;
        return f(x) / (om * om);
    };
    return integrate(mapped, 0.0, 1.0, opt);
}

// ------------------------------------------------------------- Filon panels

namespace {

// phi(theta) = (sin th - th cos th)/th^2, stable near 0.
double phi_fn(double th) {
    if (std::abs(th) < 0.1) {
        const double t2 = th * th;
        return th * (1.0 / 3.0 + t2 * (-1.0 / 30.0 + t2 * (1.0 / 840.0 - t2 / 45360.0)));
    }
    return (std::sin(th) - th * std::cos(th)) / (th * th);
}

double sinc_fn(double th) {
    if (std::abs(th) < 1e-4) {
        const double t2 = th * th;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(th) / th;
}

// Panel moments over [a,b] for weight sin(xt) / cos(xt):
//   I0s = ∫ sin(xt) dx          I0c = ∫ cos(xt) dx
//   I1s = ∫ (x-m) sin(xt) dx    I1c = ∫ (x-m) cos(xt) dx
struct PanelMoments {
    double i0s, i0c, i1s, i1c;
};

PanelMoments panel_moments(double a, double b, double t) {
    const double m = 0.5 * (a + b);
    const double hd = 0.5 * (b - a);
    const double th = t * hd;
    const double sm = std::sin(t * m);
    const double cm = std::cos(t * m);
    const double snc = sinc_fn(th);
    const double ph = phi_fn(th);
    PanelMoments mom;
    mom.i0s = 2.0 * hd * sm * snc;
    mom.i0c = 2.0 * hd * cm * snc;
    mom.i1s = 2.0 * hd * hd * cm * ph;
    mom.i1c = -2.0 * hd * hd * sm * ph;
    return mom;
}

template <bool Sine>
double filon_transform(std::span<const double> x, std::span<const double> y, double t,
                       double* abs_scale) {
    if (x.size() != y.size()) throw InvalidArgument("tabulated transform: size mismatch");
    if (x.size() < 2) throw InvalidArgument("tabulated transform: need at least 2 samples");
    double sum = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i], b = x[i + 1];
        if (!(b > a)) throw InvalidArgument("tabulated transform: grid must be strictly increasing");
        const double gm = 0.5 * (y[i] + y[i + 1]);
        const double slope = (y[i + 1] - y[i]) / (b - a);
        const auto mom = panel_moments(a, b, t);
        double contrib;
        if constexpr (Sine)
            contrib = gm * mom.i0s + slope * mom.i1s;
        else
            contrib = gm * mom.i0c + slope * mom.i1c;
        sum += contrib;
        scale += std::abs(gm) * std::abs(Sine ? mom.i0s : mom.i0c) + std::abs(contrib);
    }
    if (abs_scale) *abs_scale = scale;
    return sum;
}

} // namespace

double sine_transform_tabulated(std::span<const double> x, std::span<const double> y,
                                double t, double* abs_scale) {
    return filon_transform<true>(x, y, t, abs_scale);
}

double cosine_transform_tabulated(std::span<const double> x, std::span<const double> y,
                                  double t, double* abs_scale) {
    return filon_transform<false>(x, y, t, abs_scale);
}

// --------------------------------------------------------- algebraic tails

namespace {

// Asymptotic ∫_X^∞ u^{-r} sin u du by repeated integration by parts, X >= ~20.
double sin_tail_asymptotic(double r, double x) {
    // S_k and C_k recursion: S(r) = x^{-r} cos x - r C(r+1); C(q) = -x^{-q} sin x + q S(q+1)
    const double sx = std::sin(x), cx = std::cos(x);
    double coef = 1.0;
    double power = r;
    double xp = std::pow(x, -r);
    double sum = 0.0;
    for (int k = 0; k < 40; ++k) {
        // term for sin-integral level: coef * x^{-power} * cos x (k even) etc.
        double term;
        if (k % 4 == 0) term = coef * xp * cx;
        else if (k % 4 == 1) term = coef * xp * sx;
        else if (k % 4 == 2) term = -coef * xp * cx;
        else term = -coef * xp * sx;
        sum += term;
        coef *= power;
        power += 1.0;
        xp /= x;
        if (coef * xp < 1e-17 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

} // namespace

double sin_tail(double r, double x) {
    if (!(x > 0.0)) throw InvalidArgument("sin_tail requires x > 0");
    if (r < 0.0) throw InvalidArgument("sin_tail requires r >= 0");
    const double x_asym = std::max(25.0, 3.0 * r);
    if (x >= x_asym) return sin_tail_asymptotic(r, x);
    auto f = [r](double u) { return std::pow(u, -r) * std::sin(u); };
    const double bridge = integrate(f, x, x_asym, {1e-13, 1e-300, 2000});
    return bridge + sin_tail_asymptotic(r, x_asym);
}

double sin_full(double r) {
    if (!(r > -1.0 && r < 2.0)) throw InvalidArgument("sin_full requires r in (-1, 2)");
    constexpr double egamma = 0.5772156649015328606;
    const double pi = std::numbers::pi;
    if (std::abs(r - 1.0) < 1e-3) {
        // Γ(1-r)cos(πr/2) has a removable 0·∞ at r=1; expand around it.
        return 0.5 * pi * (1.0 + egamma * (r - 1.0));
    }
    return std::tgamma(1.0 - r) * std::cos(0.5 * pi * r);
}

double sin_head(double r, double x) {
    if (!(r < 2.0)) throw InvalidArgument("sin_head requires r < 2");
    if (!(x > 0.0)) return 0.0;
    if (r <= -0.5) {
        auto f = [r](double u) { return std::pow(u, -r) * std::sin(u); };
        return integrate(f, 0.0, x, {1e-13, 1e-300, 2000});
    }
    return sin_full(r) - sin_tail(std::max(r, 0.0), x);
}

namespace {

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y,
                          double decades, bool head) {
    if (x.size() != y.size() || x.empty()) return {};
    const double edge = head ? x.front() : x.back();
    const double lo = head ? edge : edge / std::pow(10.0, decades);
    const double hi = head ? edge * std::pow(10.0, decades) : edge;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lo || x[i] > hi || !(y[i] > 0.0) || !(x[i] > 0.0)) continue;
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++n;
    }
    if (n < 2) return {};
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return {};
    const double slope = (n * sxy - sx * sy) / denom;
    const double inter = (sy - slope * sx) / n;
    PowerLawFit fit;
    fit.power = -slope;
    fit.amplitude = std::exp(inter);
    fit.points_used = n;
    return fit;
}

} // namespace

PowerLawFit fit_power_law_tail(std::span<const double> x, std::span<const double> y,
                               double decades) {
    return fit_power_law(x, y, decades, false);
}

PowerLawFit fit_power_law_head(std::span<const double> x, std::span<const double> y,
                               double decades) {
    return fit_power_law(x, y, decades, true);
}

// --------------------------------------------------------- principal value

PVResult pv_integrate(const std::function<double(double)>& numerator, double a, double b,
                      double x0, double eps0, const GKOptions& opt) {
    if (!(a < x0 && x0 < b))
        throw InvalidArgument("pv_integrate requires x0 strictly inside (a, b)");
    const double room = std::min(x0 - a, b - x0);
    double eps = (eps0 > 0.0) ? eps0 : 0.125 * room;
    if (eps >= room) eps = 0.5 * room;
    auto integrand = [&](double x) { return numerator(x) / (x0 - x); };
    auto excised = [&](double e) {
        return integrate(integrand, a, x0 - e, opt) + integrate(integrand, x0 + e, b, opt);
    };
    double i1 = excised(eps);
    double i2 = excised(0.5 * eps);
    double r_prev = 2.0 * i2 - i1;
    double r_curr = r_prev;
    double eps_curr = 0.5 * eps;
    for (int k = 0; k < 20; ++k) {
        i1 = i2;
        eps_curr *= 0.5;
        i2 = excised(eps_curr);
        r_curr = 2.0 * i2 - i1;
        const double change = std::abs(r_curr - r_prev);
        if (change <= std::max(opt.abs_tol, opt.rel_tol * std::abs(r_curr)) + 1e-14 * std::abs(r_curr))
            return {r_curr, eps_curr, change};
        r_prev = r_curr;
    }
    return {r_curr, eps_curr, std::abs(r_curr - r_prev)};
}

double pairwise_sum(std::span<const double> v) {
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

} // namespace openbath::quad
