#include "tempest/cts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tempest/errors.hpp"
#include "tempest/fft.hpp"
#include "tempest/optim.hpp"
#include "tempest/special_math.hpp"

namespace tempest::cts {

namespace {

constexpr double kTaylorWindow = 3e-5;   // |alpha-1| below which the limit form is used
constexpr double kSpectralTolStrict = 3e-6;  // max |phi| at the band edge for emitted grids
constexpr double kSpectralTolTarget = 1.5e-7;
constexpr double kSpectralTolLoose = 1e-3;   // likelihood-evaluation grids
constexpr double kTailMassLimit = 1e-6;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Per-side term of log phi excluding the scale C: for the upside,
//   Gamma(-a) [ (lambda - iu)^a - lambda^a + i u a lambda^{a-1} ],
// written with Gamma(-a) = Gamma(2-a)/(a(a-1)) so nothing blows up away
// from a = 1, and as a two-term Taylor expansion in (a-1) inside the
// removable singularity there. The downside term is the conjugate with its
// own lambda.
std::complex<double> side_term(double alpha, double lambda, double u) {
    const std::complex<double> z(lambda, -u);
    const std::complex<double> iu(0.0, u);
    if (std::fabs(alpha - 1.0) > kTaylorWindow) {
        double fac = std::tgamma(2.0 - alpha) / (alpha * (alpha - 1.0));
        std::complex<double> bracket = std::pow(z, alpha) - std::pow(lambda, alpha) +
                                       iu * alpha * std::pow(lambda, alpha - 1.0);
        return fac * bracket;
    }
    const std::complex<double> lz = std::log(z);
    const double ll = std::log(lambda);
    std::complex<double> b1 = z * lz - lambda * ll + iu + iu * ll;
    std::complex<double> b2 = z * lz * lz - lambda * ll * ll + 2.0 * iu * ll + iu * ll * ll;
    return std::tgamma(2.0 - alpha) / alpha * (b1 + 0.5 * (alpha - 1.0) * b2);
}

// n-th cumulant for n >= 2: Gamma(n-a)(C+ l+^{a-n} + (-1)^n C- l-^{a-n}).
double cumulant(const CtsParams& p, int n) {
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return std::tgamma(n - p.alpha) *
           (p.c_plus * std::pow(p.lambda_plus, p.alpha - n) +
            sign * p.c_minus * std::pow(p.lambda_minus, p.alpha - n));
}

double log_phi_decay(const CtsParams& p, double u) {
    return (p.c_plus * side_term(p.alpha, p.lambda_plus, u) +
            p.c_minus * std::conj(side_term(p.alpha, p.lambda_minus, u)))
        .real();
}

// Mass of the analytic tail beyond distance d from the location, and the
// companion integral of |t|^{ } against it. Both use the Levy-tail
// asymptotic f(x) ~ C e^{-lambda|x|} |x|^{-1-alpha}.
double tail_mass_beyond(double c, double lambda, double alpha, double d) {
    return c * std::pow(lambda, alpha) *
           special::upper_incomplete_gamma(-alpha, lambda * d);
}

double tail_absmoment_beyond(double c, double lambda, double alpha, double d) {
    return c * std::pow(lambda, alpha - 1.0) *
           special::upper_incomplete_gamma(1.0 - alpha, lambda * d);
}

}  // namespace

void CtsParams::validate() const {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("CtsParams: alpha must lie in (0, 2)");
    if (!(c_plus > 0.0 && c_minus > 0.0))
        throw std::invalid_argument("CtsParams: scales must be positive");
    if (!(lambda_plus > 0.0 && lambda_minus > 0.0))
        throw std::invalid_argument("CtsParams: tempering rates must be positive");
    if (!std::isfinite(m)) throw std::invalid_argument("CtsParams: location must be finite");
}

CtsParams StdCtsParams::to_cts() const {
    StdCtsParams checked = *this;
    if (!(checked.alpha > 0.0 && checked.alpha < 2.0 && checked.lambda_plus > 0.0 &&
          checked.lambda_minus > 0.0))
        throw std::invalid_argument("StdCtsParams: invalid shape");
    double c = 1.0 / (std::tgamma(2.0 - alpha) *
                      (std::pow(lambda_plus, alpha - 2.0) +
                       std::pow(lambda_minus, alpha - 2.0)));
    return CtsParams{alpha, c, c, lambda_plus, lambda_minus, 0.0};
}

std::complex<double> log_char_fn(const CtsParams& params, double u) {
    params.validate();
    return std::complex<double>(0.0, u * params.m) +
           params.c_plus * side_term(params.alpha, params.lambda_plus, u) +
           params.c_minus * std::conj(side_term(params.alpha, params.lambda_minus, u));
}

std::complex<double> char_fn(const CtsParams& params, double u) {
    return std::exp(log_char_fn(params, u));
}

Moments moments(const CtsParams& params) {
    params.validate();
    double k2 = cumulant(params, 2);
    double k3 = cumulant(params, 3);
    double k4 = cumulant(params, 4);
    return Moments{params.m, k2, k3 / std::pow(k2, 1.5), k4 / (k2 * k2)};
}

StdCtsParams standardize(double alpha, double lambda_plus, double lambda_minus) {
    StdCtsParams shape{alpha, lambda_plus, lambda_minus};
    shape.to_cts();  // validates
    return shape;
}

CtsParams scale_shift(const CtsParams& params, double s, double t) {
    if (!(s > 0.0)) throw std::invalid_argument("scale_shift: scale must be positive");
    return CtsParams{params.alpha,
                     params.c_plus * std::pow(s, params.alpha),
                     params.c_minus * std::pow(s, params.alpha),
                     params.lambda_plus / s,
                     params.lambda_minus / s,
                     s * params.m + t};
}

CtsParams reflect(const CtsParams& params) {
    return CtsParams{params.alpha,        params.c_minus,      params.c_plus,
                     params.lambda_minus, params.lambda_plus,  -params.m};
}

// ---------------------------------------------------------------------------
// density grid
// ---------------------------------------------------------------------------

namespace {

double default_half_width(const CtsParams& p, double sigma) {
    double lmin = std::min(p.lambda_plus, p.lambda_minus) * sigma;
    return std::max(20.0, 40.0 / lmin);
}

DensityGrid build_grid(const CtsParams& params, std::size_t n, double half_width,
                       double spectral_tol, std::size_t stored_cap) {
    params.validate();
    if (!is_pow2(n) || n < (1u << 10))
        throw std::invalid_argument("density_grid: n_points must be a power of two >= 1024");
    if (!(half_width > 0.0))
        throw std::invalid_argument("density_grid: half_width must be positive");

    const double sigma = std::sqrt(cumulant(params, 2));
    const double half = half_width * sigma;
    const double dx = 2.0 * half / static_cast<double>(n);
    const double du = M_PI / half;

    // outside-grid mass, from the tempered tail asymptotics
    double mass_lo = tail_mass_beyond(params.c_minus, params.lambda_minus, params.alpha, half);
    double mass_hi = tail_mass_beyond(params.c_plus, params.lambda_plus, params.alpha, half);
    if (mass_lo + mass_hi > kTailMassLimit)
        throw GridTooNarrow("density_grid: truncated tail mass " +
                            std::to_string(mass_lo + mass_hi) + " exceeds 1e-6");

    // unresolved spectral mass at the top of the affordable frequency band
    const double u_top = du * static_cast<double>(n / 2 - 1);
    if (std::exp(log_phi_decay(params, u_top)) > spectral_tol)
        throw GridTooNarrow(
            "density_grid: characteristic function undecayed at the band edge; "
            "increase n_points");

    std::vector<std::complex<double>> buf(n, std::complex<double>(0.0, 0.0));
    buf[0] = 1.0;
    for (std::size_t k = 1; k < n / 2; ++k) {
        double u = du * static_cast<double>(k);
        // log phi(u) + i u (half - m): the iu*m of log phi cancels, leaving
        // the tail terms plus the grid phase.
        std::complex<double> e =
            params.c_plus * side_term(params.alpha, params.lambda_plus, u) +
            params.c_minus * std::conj(side_term(params.alpha, params.lambda_minus, u));
        buf[k] = std::exp(e + std::complex<double>(0.0, u * half));
    }
    fft::forward(buf);

    DensityGrid g;
    g.params_ = params;
    const double x0 = params.m - half;
    const double scale = du / (2.0 * M_PI);

    // decimate very large transforms for storage; cumulative sums keep the
    // full-resolution accuracy at the retained nodes
    std::size_t stride = 1;
    while (n / stride > stored_cap) stride *= 2;
    const std::size_t m_stored = n / stride;

    g.x_values.resize(m_stored);
    g.pdf_values.resize(m_stored);
    g.cdf_values.resize(m_stored);
    g.dx_ = dx * static_cast<double>(stride);
    g.tail_mass_lo_ = mass_lo;
    g.tail_mass_hi_ = mass_hi;
    g.tail_xint_lo_ =
        -tail_absmoment_beyond(params.c_minus, params.lambda_minus, params.alpha, half) +
        params.m * mass_lo;

    double cum = mass_lo;
    double prev_pdf = std::max(0.0, scale * (2.0 * buf[0].real() - 1.0));
    std::size_t out = 0;
    for (std::size_t j = 0; j < n; ++j) {
        double pdf = std::max(0.0, scale * (2.0 * buf[j].real() - 1.0));
        if (j > 0) cum += 0.5 * (prev_pdf + pdf) * dx;
        prev_pdf = pdf;
        if (j % stride == 0) {
            g.x_values[out] = x0 + static_cast<double>(j) * dx;
            g.pdf_values[out] = pdf;
            g.cdf_values[out] = std::min(cum, 1.0);
            ++out;
        }
    }
    return g;
}

}  // namespace

DensityGrid density_grid(const CtsParams& params, std::size_t n_points,
                         double half_width) {
    return build_grid(params, n_points, half_width, kSpectralTolStrict, n_points);
}

DensityGrid make_grid(const CtsParams& params, std::size_t min_points,
                      std::size_t max_points) {
    params.validate();
    const double sigma = std::sqrt(cumulant(params, 2));
    const double hw = default_half_width(params, sigma);
    std::size_t n = min_points;
    while (n < max_points) {
        double u_top = M_PI / (hw * sigma) * static_cast<double>(n / 2 - 1);
        if (std::exp(log_phi_decay(params, u_top)) <= kSpectralTolTarget) break;
        n *= 2;
    }
    return build_grid(params, n, hw, kSpectralTolStrict, 1u << 17);
}

// ---------------------------------------------------------------------------
// cdf / quantile / risk measures on a grid
// ---------------------------------------------------------------------------

namespace {

// In-cell model: pdf linear between nodes, rescaled so the cell integral
// matches the stored cdf increment exactly. Shared by cdf_at and quantile so
// the two invert each other.
struct Cell {
    double c0, dc;   // cdf at the left node, increment across the cell
    double a, b;     // raw quadratic coefficients: raw(t) = a t^2 + b t
    double norm;     // dc / raw(1), or 0 for an empty cell

    double cdf(double t) const {
        if (norm == 0.0) return c0 + dc * t;
        return c0 + norm * (a * t * t + b * t);
    }
    double invert(double p) const {
        if (norm == 0.0 || dc <= 0.0) return dc > 0.0 ? (p - c0) / dc : 0.5;
        double q = (p - c0) / norm;
        double disc = b * b + 4.0 * a * q;
        if (disc < 0.0) disc = 0.0;
        double denom = b + std::sqrt(disc);
        double t = std::fabs(denom) > 1e-300 ? 2.0 * q / denom : 0.0;
        return std::clamp(t, 0.0, 1.0);
    }
};

}  // namespace

std::size_t DensityGrid::locate_cell(double p) const {
    auto it = std::upper_bound(cdf_values.begin(), cdf_values.end(), p);
    std::size_t i = static_cast<std::size_t>(it - cdf_values.begin());
    if (i == 0) return 0;
    if (i >= cdf_values.size()) return cdf_values.size() - 2;
    return i - 1;
}

namespace {

Cell make_cell(const DensityGrid& g, std::size_t i) {
    double f0 = g.pdf_values[i], f1 = g.pdf_values[i + 1];
    Cell c;
    c.c0 = g.cdf_values[i];
    c.dc = g.cdf_values[i + 1] - g.cdf_values[i];
    c.a = 0.5 * (f1 - f0) * g.dx();
    c.b = f0 * g.dx();
    double raw1 = c.a + c.b;
    c.norm = raw1 > 1e-300 ? c.dc / raw1 : 0.0;
    return c;
}

}  // namespace

double DensityGrid::cdf_at(double x) const {
    const double lo = x_values.front(), hi = x_values.back();
    if (x <= lo) {
        if (tail_mass_lo_ <= 0.0) return 0.0;
        double raw = tail_mass_beyond(params_.c_minus, params_.lambda_minus,
                                      params_.alpha, params_.m - x);
        // anchored so the analytic branch meets cdf_values.front() exactly
        double anchor = cdf_values.front() / tail_mass_lo_;
        return std::min(raw * anchor, cdf_values.front());
    }
    if (x >= hi) {
        double rem = 1.0 - cdf_values.back();
        if (rem <= 0.0) return 1.0;
        double raw = tail_mass_beyond(params_.c_plus, params_.lambda_plus,
                                      params_.alpha, x - params_.m);
        double edge = tail_mass_beyond(params_.c_plus, params_.lambda_plus,
                                       params_.alpha, hi - params_.m);
        if (edge <= 0.0) return 1.0;
        return 1.0 - rem * std::min(raw / edge, 1.0);
    }
    double pos = (x - lo) / dx_;
    std::size_t i = std::min(static_cast<std::size_t>(pos), x_values.size() - 2);
    return make_cell(*this, i).cdf(pos - static_cast<double>(i));
}

double DensityGrid::pdf_at(double x) const {
    const double lo = x_values.front(), hi = x_values.back();
    if (x < lo || x > hi) {
        double d = std::fabs(x - params_.m);
        double c = x < lo ? params_.c_minus : params_.c_plus;
        double lam = x < lo ? params_.lambda_minus : params_.lambda_plus;
        return c * std::exp(-lam * d) * std::pow(d, -1.0 - params_.alpha);
    }
    double pos = (x - lo) / dx_;
    std::size_t i = std::min(static_cast<std::size_t>(pos), x_values.size() - 2);
    double t = pos - static_cast<double>(i);
    return pdf_values[i] + (pdf_values[i + 1] - pdf_values[i]) * t;
}

namespace {

// Newton solve of  mass_scale * Gamma(-alpha, z) = target  for z, used for
// quantiles that land beyond the grid. g is decreasing in z.
double invert_tail(double c, double lambda, double alpha, double z_start,
                   double target, double anchor_scale) {
    double base = c * std::pow(lambda, alpha) * anchor_scale;
    double z = std::max(z_start, 1e-8);
    for (int it = 0; it < 100; ++it) {
        double f = base * special::upper_incomplete_gamma(-alpha, z) - target;
        double fp = -base * std::pow(z, -alpha - 1.0) * std::exp(-z);
        if (fp == 0.0) break;
        double step = f / fp;
        double zn = z - step;
        if (zn <= 0.0) zn = 0.5 * z;
        if (std::fabs(zn - z) < 1e-12 * std::max(1.0, z)) { z = zn; break; }
        z = zn;
    }
    return z;
}

}  // namespace

double DensityGrid::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw ProbabilityOutOfRange("quantile: p must lie in (0, 1), got " +
                                    std::to_string(p));
    if (p < cdf_values.front()) {
        // analytic left tail, anchored to the stored edge
        double anchor = cdf_values.front() / tail_mass_lo_;
        double z0 = params_.lambda_minus * (params_.m - x_values.front());
        double z = invert_tail(params_.c_minus, params_.lambda_minus, params_.alpha,
                               z0, p, anchor);
        return params_.m - z / params_.lambda_minus;
    }
    double rem = 1.0 - cdf_values.back();
    if (p > cdf_values.back() && rem > 0.0) {
        double edge = tail_mass_beyond(params_.c_plus, params_.lambda_plus,
                                       params_.alpha, x_values.back() - params_.m);
        if (edge > 0.0) {
            double anchor = rem / edge;
            double z0 = params_.lambda_plus * (x_values.back() - params_.m);
            double z = invert_tail(params_.c_plus, params_.lambda_plus, params_.alpha,
                                   z0, 1.0 - p, anchor);
            return params_.m + z / params_.lambda_plus;
        }
        return x_values.back();
    }
    std::size_t i = locate_cell(p);
    Cell cell = make_cell(*this, i);
    double t = cell.invert(p);
    return x_values[i] + t * dx_;
}

double DensityGrid::var(double confidence) const {
    double eta = 1.0 - confidence;
    if (!(eta > 0.0 && eta < 1.0))
        throw ProbabilityOutOfRange("var: confidence must lie in (0, 1)");
    return -quantile(eta);
}

double DensityGrid::cvar(double confidence) const {
    double eta = 1.0 - confidence;
    if (confidence == 0.0) return -params_.m;  // average over all quantiles
    if (!(eta > 0.0 && eta < 1.0))
        throw ProbabilityOutOfRange("cvar: confidence must lie in [0, 1)");
    return -lower_partial_xint(quantile(eta)) / eta;
}

double DensityGrid::cvar_upper(double confidence) const {
    double eta = 1.0 - confidence;
    if (confidence == 0.0) return params_.m;
    if (!(eta > 0.0 && eta < 1.0))
        throw ProbabilityOutOfRange("cvar_upper: confidence must lie in [0, 1)");
    return (params_.m - lower_partial_xint(quantile(confidence))) / eta;
}

double DensityGrid::lower_partial_xint(double q) const {
    // integral of x f(x) from -inf to q, linear-pdf model per cell
    auto cell_xint = [&](std::size_t i, double t) {
        double f0 = pdf_values[i], df = pdf_values[i + 1] - pdf_values[i];
        double xi = x_values[i];
        return dx_ * (xi * f0 * t + 0.5 * (xi * df + dx_ * f0) * t * t +
                      dx_ * df * t * t * t / 3.0);
    };
    double acc = tail_xint_lo_;
    if (q > x_values.front()) {
        double pos = (q - x_values.front()) / dx_;
        std::size_t full = std::min(static_cast<std::size_t>(pos), x_values.size() - 1);
        for (std::size_t i = 0; i < full; ++i) acc += cell_xint(i, 1.0);
        if (full < x_values.size() - 1)
            acc += cell_xint(full, pos - static_cast<double>(full));
    } else {
        // quantile fell in the analytic tail: integrate the asymptotic form
        // between q and the edge and remove it from the tail integral
        double dq = params_.m - q;
        acc = -tail_absmoment_beyond(params_.c_minus, params_.lambda_minus,
                                     params_.alpha, dq) +
              params_.m * tail_mass_beyond(params_.c_minus, params_.lambda_minus,
                                           params_.alpha, dq);
    }
    return acc;
}

double quantile(const CtsParams& params, double p) {
    return make_grid(params).quantile(p);
}

double var(const CtsParams& params, double confidence) {
    return make_grid(params).var(confidence);
}

double cvar(const CtsParams& params, double confidence) {
    if (confidence == 0.0) return -params.m;
    return make_grid(params).cvar(confidence);
}

std::vector<double> sample(const CtsParams& params, std::size_t n, std::uint64_t seed) {
    DensityGrid grid = make_grid(params);
    special::UniformRng rng(seed);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = grid.quantile(rng.next());
    return out;
}

// ---------------------------------------------------------------------------
// maximum likelihood
// ---------------------------------------------------------------------------

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
double logit(double p) { return std::log(p / (1.0 - p)); }

struct ShapeTransform {
    double a_lo, a_hi, l_lo, l_hi;

    StdCtsParams decode(const std::vector<double>& t) const {
        double a = a_lo + (a_hi - a_lo) * sigmoid(t[0]);
        double lp = std::exp(std::log(l_lo) + (std::log(l_hi) - std::log(l_lo)) * sigmoid(t[1]));
        double lm = std::exp(std::log(l_lo) + (std::log(l_hi) - std::log(l_lo)) * sigmoid(t[2]));
        return StdCtsParams{a, lp, lm};
    }
    std::vector<double> encode(const StdCtsParams& p) const {
        auto clip = [](double v) { return std::clamp(v, 1e-4, 1.0 - 1e-4); };
        return {logit(clip((p.alpha - a_lo) / (a_hi - a_lo))),
                logit(clip((std::log(p.lambda_plus) - std::log(l_lo)) /
                           (std::log(l_hi) - std::log(l_lo)))),
                logit(clip((std::log(p.lambda_minus) - std::log(l_lo)) /
                           (std::log(l_hi) - std::log(l_lo))))};
    }
};

double neg_loglik(const StdCtsParams& shape, std::span<const double> samples,
                  std::size_t grid_points) {
    CtsParams p = shape.to_cts();
    double hw = std::max(20.0, 40.0 / std::min(shape.lambda_plus, shape.lambda_minus));
    DensityGrid g;
    try {
        g = build_grid(p, grid_points, hw, kSpectralTolLoose, grid_points);
    } catch (const Error&) {
        return 1e12;
    }
    const double x0 = g.x_values.front(), x1 = g.x_values.back();
    double ll = 0.0;
    for (double s : samples) {
        double f;
        if (s <= x0 || s >= x1) {
            double d = std::fabs(s);
            double c = s < 0 ? p.c_minus : p.c_plus;
            double lam = s < 0 ? p.lambda_minus : p.lambda_plus;
            ll += std::log(c) - (1.0 + p.alpha) * std::log(d) - lam * d;
            continue;
        }
        double pos = (s - x0) / g.dx();
        std::size_t i = std::min(static_cast<std::size_t>(pos), g.x_values.size() - 2);
        double t = pos - static_cast<double>(i);
        f = g.pdf_values[i] + (g.pdf_values[i + 1] - g.pdf_values[i]) * t;
        ll += std::log(std::max(f, 1e-300));
    }
    if (!std::isfinite(ll)) return 1e12;
    return -ll;
}

}  // namespace

FitResult fit_mle(std::span<const double> samples, const FitOptions& options) {
    if (samples.size() < 21)
        throw TooFewSamples("cts::fit_mle: need at least 21 samples, got " +
                            std::to_string(samples.size()));
    double mean = 0.0;
    for (double s : samples) mean += s;
    mean /= static_cast<double>(samples.size());
    double var_acc = 0.0;
    for (double s : samples) var_acc += (s - mean) * (s - mean);
    if (var_acc / static_cast<double>(samples.size()) < 1e-16)
        throw OptimizerDiverged("cts::fit_mle: zero-variance input");

    ShapeTransform tr{options.alpha_min, options.alpha_max, options.lambda_min,
                      options.lambda_max};
    auto objective = [&](const std::vector<double>& t) {
        return neg_loglik(tr.decode(t), samples, options.grid_points);
    };

    optim::NelderMeadOptions nm;
    nm.max_iterations = options.max_iterations;
    nm.restarts = 2;
    nm.initial_step = 0.6;

    bool any_finite = false;
    optim::Result best;
    StdCtsParams best_shape{};
    for (const auto& start : options.starts) {
        optim::Result r = optim::nelder_mead(objective, tr.encode(start), nm);
        if (r.fval >= 1e11) continue;
        StdCtsParams shape = tr.decode(r.x);
        bool better = !any_finite || r.fval < best.fval - 1e-6 ||
                      (std::fabs(r.fval - best.fval) <= 1e-6 && shape.alpha < best_shape.alpha);
        if (better) {
            best = r;
            best_shape = shape;
        }
        any_finite = true;
    }
    if (!any_finite)
        throw OptimizerDiverged("cts::fit_mle: non-finite likelihood at every start");

    FitResult out;
    out.params = best_shape;
    out.log_likelihood = -best.fval;

    // KS against the fitted cdf on a reporting-quality grid
    DensityGrid g = make_grid(best_shape.to_cts(), 1u << 14, 1u << 18);
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    double n = static_cast<double>(sorted.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        double f = g.cdf_at(sorted[i]);
        ks = std::max(ks, std::fabs((static_cast<double>(i) + 1.0) / n - f));
        ks = std::max(ks, std::fabs(static_cast<double>(i) / n - f));
    }
    out.ks = ks;
    return out;
}

}  // namespace tempest::cts
