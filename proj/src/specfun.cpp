#include "rfso/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rfso/quadrature.hpp"

namespace rfso::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 500;

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(name) + " must be finite");
    }
}

// Series for P(s,x), valid/efficient for x < s+1.
double lower_reg_series(double s, double x) {
    double ap = s;
    double term = 1.0 / s;
    double sum = term;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
        }
    }
    throw numerical_error("incomplete gamma series did not converge");
}

// Lentz continued fraction for Q(s,x), valid/efficient for x >= s+1.
double upper_reg_cf(double s, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= kEps) {
            return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
        }
    }
    throw numerical_error("incomplete gamma continued fraction did not converge");
}

} // namespace

double lower_reg(double s, double x) {
    require_finite(s, "s");
    require_finite(x, "x");
    if (s <= 0.0) throw std::domain_error("incomplete gamma requires s > 0");
    if (x < 0.0) throw std::domain_error("incomplete gamma requires x >= 0");
    if (x == 0.0) return 0.0;
    return x < s + 1.0 ? lower_reg_series(s, x) : 1.0 - upper_reg_cf(s, x);
}

double upper_reg(double s, double x) {
    require_finite(s, "s");
    require_finite(x, "x");
    if (s <= 0.0) throw std::domain_error("incomplete gamma requires s > 0");
    if (x < 0.0) throw std::domain_error("incomplete gamma requires x >= 0");
    if (x == 0.0) return 1.0;
    return x < s + 1.0 ? 1.0 - lower_reg_series(s, x) : upper_reg_cf(s, x);
}

double lower_inc_gamma(double s, double x) {
    const double g = std::tgamma(s);
    if (!std::isfinite(g)) throw std::range_error("Gamma(s) overflows");
    return lower_reg(s, x) * g;
}

double upper_inc_gamma(double s, double x) {
    const double g = std::tgamma(s);
    if (!std::isfinite(g)) throw std::range_error("Gamma(s) overflows");
    return upper_reg(s, x) * g;
}

double log_gamma_ratio(double s, int l) {
    return std::lgamma(s + l) - std::lgamma(s) - std::lgamma(l + 1.0);
}

double erf(double x) {
    if (std::isnan(x)) throw std::domain_error("erf argument must not be NaN");
    return std::erf(x);
}

double bessel_k(double v, double x) {
    require_finite(v, "order");
    require_finite(x, "argument");
    if (x <= 0.0) throw std::domain_error("bessel_k requires x > 0");
    const double r = std::cyl_bessel_k(std::abs(v), x);  // K_v = K_{-v}
    if (!std::isfinite(r)) {
        throw std::range_error("bessel_k overflows for this (order, argument)");
    }
    return r;
}

// ---- complex log-gamma -------------------------------------------------------

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log(sin(pi z)) up to an integer multiple of 2*pi*i, stable for large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z) {
    const std::complex<double> i(0.0, 1.0);
    const double pi = std::numbers::pi;
    const std::complex<double> log_2i = std::log(std::complex<double>(0.0, 2.0));
    if (z.imag() > 0.0) {
        // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i)
        return -i * pi * z + std::log(1.0 - std::exp(2.0 * i * pi * z)) - log_2i +
               std::complex<double>(0.0, pi);
    }
    // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2i)
    return i * pi * z + std::log(1.0 - std::exp(-2.0 * i * pi * z)) - log_2i;
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    const double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(pi) - log_sin_pi(z) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int k = 1; k < 9; ++k) x += kLanczos[k] / (z + static_cast<double>(k));
    const std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// ---- Meijer G ----------------------------------------------------------------

namespace {

struct MbContour {
    const MeijerGSpec& s;
    double ln_x;

    // log of the Mellin-Barnes integrand at contour point sv (x^sv folded in).
    std::complex<double> log_integrand(std::complex<double> sv) const {
        std::complex<double> L = sv * ln_x;
        for (int j = 0; j < s.m; ++j) L += log_gamma(s.b[j] - sv);
        for (int j = 0; j < s.n; ++j) L += log_gamma(1.0 - s.a[j] + sv);
        for (int j = s.m; j < s.q(); ++j) L -= log_gamma(1.0 - s.b[j] + sv);
        for (int j = s.n; j < s.p(); ++j) L -= log_gamma(s.a[j] - sv);
        return L;
    }
};

void validate_spec(const MeijerGSpec& s) {
    const int p = s.p(), q = s.q();
    if (s.m < 0 || s.m > q || s.n < 0 || s.n > p) {
        throw std::domain_error("meijer_g: need 0 <= m <= q and 0 <= n <= p");
    }
    if (p >= q) {
        throw capability_error("meijer_g: only p < q parameter classes are supported");
    }
    if (s.m == 0) {
        throw capability_error("meijer_g: m >= 1 is required");
    }
    // exponential decay rate of the integrand along the vertical contour
    if (2 * (s.m + s.n) - p - q <= 0) {
        throw capability_error(
            "meijer_g: contour integral does not converge for this (m,n,p,q)");
    }
    for (double v : s.a) {
        if (!std::isfinite(v)) throw std::domain_error("meijer_g: non-finite a parameter");
    }
    for (double v : s.b) {
        if (!std::isfinite(v)) throw std::domain_error("meijer_g: non-finite b parameter");
    }
}

} // namespace

double meijer_g(const MeijerGSpec& spec, double x, double rel_tol) {
    validate_spec(spec);
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("meijer_g requires finite x > 0");
    }

    // Contour strip: right of every pole of Gamma(1 - a_j + s), j <= n, and
    // left of every pole of Gamma(b_j - s), j <= m.
    double hi = std::numeric_limits<double>::infinity();
    for (int j = 0; j < spec.m; ++j) hi = std::min(hi, spec.b[j]);
    double lo = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < spec.n; ++j) lo = std::max(lo, spec.a[j] - 1.0);
    if (!std::isfinite(lo)) lo = hi - 40.0;
    if (hi - lo < 1e-8) {
        throw capability_error("meijer_g: pole families overlap, no straight contour exists");
    }

    const MbContour contour{spec, std::log(x)};

    // Pick the abscissa that minimizes the integrand magnitude at t = 0;
    // this sits near the saddle and keeps cancellation in check for large x.
    const double margin = std::min(0.1 * (hi - lo), 0.05);
    const double s_lo = lo + margin, s_hi = hi - margin;
    double sigma = 0.5 * (s_lo + s_hi);
    double best = std::numeric_limits<double>::infinity();
    constexpr int kCandidates = 33;
    for (int i = 0; i < kCandidates; ++i) {
        const double cand = s_lo + (s_hi - s_lo) * i / (kCandidates - 1);
        const double mag = contour.log_integrand({cand, 0.0}).real();
        if (std::isfinite(mag) && mag < best) {
            best = mag;
            sigma = cand;
        }
    }
    if (!std::isfinite(best)) {
        throw numerical_error("meijer_g: integrand magnitude is not finite on the contour");
    }

    // Normalize by the t = 0 magnitude so exp() never overflows mid-quadrature.
    const double log_scale = best;
    auto g = [&](double t) {
        const std::complex<double> L =
            contour.log_integrand({sigma, t}) - log_scale;
        return std::exp(std::min(L.real(), 700.0)) * std::cos(L.imag());
    };

    // Integrate 2 * Re over t in [0, inf) on geometrically growing segments
    // (conjugate symmetry covers t < 0). Segment length starts at one
    // oscillation period of x^{it}.
    const double seg0 = std::clamp(6.283 / (1.0 + std::abs(contour.ln_x)), 0.125, 1.0);
    double total = 0.0;
    double err_accum = 0.0;
    double t0 = 0.0, seg = seg0;
    const double decay = 0.5 * std::numbers::pi * (2 * (spec.m + spec.n) - spec.p() - spec.q());
    bool converged = false;
    QuadOptions opts{1e-4 * rel_tol, 0.05 * rel_tol, 60};
    for (int k = 0; k < 64; ++k) {
        const double t1 = t0 + seg;
        const QuadResult piece = integrate(g, t0, t1, opts);
        total += piece.value;
        err_accum += piece.error;
        const double mag_end = std::exp(contour.log_integrand({sigma, t1}).real() - log_scale);
        const double tail_bound = 4.0 * mag_end / decay;
        const double floor = std::max(std::abs(total), 1e-6);
        if (tail_bound < 0.02 * rel_tol * floor &&
            std::abs(piece.value) < 0.02 * rel_tol * floor) {
            err_accum += tail_bound;
            converged = true;
            break;
        }
        t0 = t1;
        seg = std::min(2.0 * seg, 16.0);
        opts.abs_tol = std::max(opts.abs_tol, 0.02 * rel_tol * std::abs(total));
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "meijer_g: contour quadrature did not converge (truncation at t=" << t0
            << ", running value " << total << ")";
        throw numerical_error(msg.str());
    }

    // Cancellation floor: peak magnitude is ~1 after normalization, so the
    // absolute accuracy limit is a modest multiple of machine epsilon.
    const double tol_achieved = std::max(err_accum, 64.0 * kEps);
    if (tol_achieved > std::max(rel_tol * std::abs(total), 1e3 * kEps)) {
        std::ostringstream msg;
        msg << "meijer_g: cancellation/quadrature error " << tol_achieved
            << " exceeds tolerance for value " << total;
        throw numerical_error(msg.str());
    }

    const double log_result = log_scale + std::log(std::abs(total) / std::numbers::pi);
    if (log_result < -700.0) return 0.0;
    if (log_result > 700.0) throw std::range_error("meijer_g result overflows");
    return std::copysign(std::exp(log_result), total);
}

} // namespace rfso::specfun
