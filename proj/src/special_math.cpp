#include "tempest/special_math.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tempest::special {

namespace {

constexpr double kTiny = 1e-300;

// Modified Lentz continued-fraction for the upper incomplete gamma.
// Gamma(s,x) = e^{-x} x^s * 1/(x+1-s- 1(1-s)/(x+3-s- 2(2-s)/(x+5-s- ...)))
double upper_gamma_cf(double s, double x) {
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 300; ++i) {
        double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + s * std::log(x)) * h;
}

}  // namespace

double upper_incomplete_gamma(double s, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("upper_incomplete_gamma: x must be > 0");
    if (x >= s + 1.0 || x >= 1.0) return upper_gamma_cf(s, x);
    // Small-x fallback via the lower series; only reachable for x in (0,1).
    // P(s,x) series is valid for s > 0; for s <= 0 use recurrence
    // Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x}) / s to lift s above 0.
    if (s <= 0.0) {
        double sp = s;
        int lifts = 0;
        while (sp <= 0.0) { sp += 1.0; ++lifts; }
        double g = upper_incomplete_gamma(sp, x);
        for (int i = 0; i < lifts; ++i) {
            sp -= 1.0;
            g = (g - std::exp(sp * std::log(x) - x)) / sp;
        }
        return g;
    }
    double sum = 1.0 / s;
    double term = sum;
    for (int n = 1; n <= 500; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
    }
    double lower = sum * std::exp(-x + s * std::log(x));
    return std::tgamma(s) - lower;
}

namespace {

double beta_cf(double a, double b, double x) {
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double normal_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p outside (0,1)");
    // Acklam's rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1.0 - plow;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= phigh) {
        double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // One Halley refinement step.
    double e = normal_cdf(x) - p;
    double u = e / normal_pdf(x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

double student_t_pdf(double x, double nu) {
    double lg = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                0.5 * std::log(nu * M_PI);
    return std::exp(lg - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
}

double student_t_cdf(double x, double nu) {
    double ib = incomplete_beta(0.5 * nu, 0.5, nu / (nu + x * x));
    return x >= 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
}

double student_t_quantile(double p, double nu) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("student_t_quantile: p outside (0,1)");
    double x = normal_quantile(p);
    if (nu > 1e6) return x;
    // Newton on the cdf from the normal start; the cdf is smooth and monotone.
    for (int i = 0; i < 60; ++i) {
        double f = student_t_cdf(x, nu) - p;
        double fp = student_t_pdf(x, nu);
        if (fp <= 0.0) break;
        double step = f / fp;
        x -= step;
        if (std::fabs(step) < 1e-13 * (1.0 + std::fabs(x))) break;
    }
    return x;
}

double std_t_pdf(double x, double nu) {
    double s = std::sqrt(nu / (nu - 2.0));
    return student_t_pdf(x * s, nu) * s;
}

double std_t_quantile(double p, double nu) {
    return student_t_quantile(p, nu) * std::sqrt((nu - 2.0) / nu);
}

double std_t_cvar(double eta, double nu) {
    // -E[T 1{T<=q}] / eta for the nu-df law equals f(q)(nu+q^2)/((nu-1) eta);
    // rescale to unit variance.
    double q = student_t_quantile(eta, nu);
    double tail_mean = student_t_pdf(q, nu) * (nu + q * q) / ((nu - 1.0) * eta);
    return tail_mean * std::sqrt((nu - 2.0) / nu);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
}

}  // namespace

UniformRng::UniformRng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t UniformRng::next_u64() {
    std::uint64_t* s = state_;
    std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
}

double UniformRng::next() {
    // 53-bit mantissa, strictly inside (0,1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double UniformRng::next_normal() {
    return normal_quantile(next());
}

}  // namespace tempest::special
