#include "tempest/arma_garch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tempest/errors.hpp"
#include "tempest/optim.hpp"
#include "tempest/special_math.hpp"

namespace tempest::armagarch {

namespace {

double sample_variance(std::span<const double> xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return acc / static_cast<double>(xs.size());
}

}  // namespace

void ArmaGarchParams::validate() const {
    if (!(std::fabs(a) < 1.0)) throw std::invalid_argument("ArmaGarchParams: |a| must be < 1");
    if (!(omega > 0.0)) throw std::invalid_argument("ArmaGarchParams: omega must be > 0");
    if (!(alpha1 >= 0.0 && beta1 >= 0.0))
        throw std::invalid_argument("ArmaGarchParams: alpha1, beta1 must be >= 0");
    if (!(alpha1 + beta1 < 1.0))
        throw std::invalid_argument("ArmaGarchParams: alpha1 + beta1 must be < 1");
    if (!(nu > 2.0)) throw std::invalid_argument("ArmaGarchParams: nu must be > 2");
}

FilterResult filter(const ArmaGarchParams& p, std::span<const double> returns) {
    const std::size_t n = returns.size();
    if (n == 0) throw TooFewSamples("armagarch::filter: empty series");
    FilterResult out;
    out.residuals.resize(n);
    out.sigmas.resize(n);

    const double s2_init = sample_variance(returns);
    double sig_prev = std::sqrt(s2_init);
    double eps_prev = 0.0;
    double y_prev = returns[0];

    for (std::size_t t = 0; t < n; ++t) {
        double s2 = t == 0 ? s2_init
                           : p.omega + p.alpha1 * (sig_prev * eps_prev) * (sig_prev * eps_prev) +
                                 p.beta1 * sig_prev * sig_prev;
        double sig = std::sqrt(s2);
        double mu = p.c + p.a * y_prev + p.b * sig_prev * eps_prev;
        double eps = (returns[t] - mu) / sig;
        out.residuals[t] = eps;
        out.sigmas[t] = sig;
        y_prev = returns[t];
        eps_prev = eps;
        sig_prev = sig;
    }
    out.state.y_t = y_prev;
    out.state.eps_t = eps_prev;
    out.state.sigma_t = sig_prev;
    out.state.sigma_next =
        std::sqrt(p.omega + p.alpha1 * (sig_prev * eps_prev) * (sig_prev * eps_prev) +
                  p.beta1 * sig_prev * sig_prev);
    return out;
}

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
double logit(double p) { return std::log(p / (1.0 - p)); }

// Unconstrained coordinates for the stage-1 likelihood. The intercept and
// omega are expressed in units of the sample scale so one step size fits
// every series.
struct Stage1Transform {
    double scale;  // sample standard deviation

    ArmaGarchParams decode(const std::vector<double>& t) const {
        ArmaGarchParams p;
        p.c = t[0] * scale;
        p.a = std::tanh(t[1]);
        p.b = std::tanh(t[2]);
        p.omega = std::exp(t[3]) * scale * scale;
        double s = 0.9995 * sigmoid(t[4]);
        double frac = sigmoid(t[5]);
        p.alpha1 = s * frac;
        p.beta1 = s * (1.0 - frac);
        p.nu = 2.1 + 97.9 * sigmoid(t[6]);
        return p;
    }
    std::vector<double> encode(const ArmaGarchParams& p) const {
        auto clip = [](double v) { return std::clamp(v, 1e-6, 1.0 - 1e-6); };
        double s = std::clamp(p.alpha1 + p.beta1, 1e-6, 0.9995 - 1e-6);
        double frac = s > 0.0 ? p.alpha1 / s : 0.5;
        return {p.c / scale,
                std::atanh(std::clamp(p.a, -0.999999, 0.999999)),
                std::atanh(std::clamp(p.b, -0.999999, 0.999999)),
                std::log(p.omega / (scale * scale)),
                logit(clip(s / 0.9995)),
                logit(clip(frac)),
                logit(clip((p.nu - 2.1) / 97.9))};
    }
};

// Negative log likelihood under standardized Student-t innovations.
double stage1_negll(const ArmaGarchParams& p, std::span<const double> y, double s2_init) {
    const double nu = p.nu;
    const double lg = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                      0.5 * std::log((nu - 2.0) * M_PI);
    double sig_prev = std::sqrt(s2_init);
    double eps_prev = 0.0;
    double y_prev = y[0];
    double ll = 0.0;
    for (std::size_t t = 0; t < y.size(); ++t) {
        double s2 = t == 0 ? s2_init
                           : p.omega + p.alpha1 * (sig_prev * eps_prev) * (sig_prev * eps_prev) +
                                 p.beta1 * sig_prev * sig_prev;
        if (!(s2 > 0.0) || !std::isfinite(s2)) return 1e12;
        double sig = std::sqrt(s2);
        double mu = p.c + p.a * y_prev + p.b * sig_prev * eps_prev;
        double eps = (y[t] - mu) / sig;
        ll += lg - 0.5 * (nu + 1.0) * std::log1p(eps * eps / (nu - 2.0)) - std::log(sig);
        y_prev = y[t];
        eps_prev = eps;
        sig_prev = sig;
    }
    if (!std::isfinite(ll)) return 1e12;
    return -ll;
}

}  // namespace

ArmaGarchFit fit(std::span<const double> returns, const FitOptions& options) {
    if (returns.size() < 21)
        throw TooFewSamples("armagarch::fit: need at least 21 observations, got " +
                            std::to_string(returns.size()));
    const double s2 = sample_variance(returns);
    if (!(s2 > 0.0) || s2 < 1e-30)
        throw DegenerateSeries("armagarch::fit: zero-variance series");

    Stage1Transform tr{std::sqrt(s2)};
    auto objective = [&](const std::vector<double>& t) {
        return stage1_negll(tr.decode(t), returns, s2);
    };

    const ArmaGarchParams starts[3] = {
        {0.0, 0.05, -0.02, 0.05 * s2, 0.05, 0.85, 8.0},
        {0.0, 0.0, 0.0, 0.2 * s2, 0.10, 0.60, 5.0},
        {0.0, 0.30, -0.20, 0.02 * s2, 0.03, 0.94, 12.0},
    };

    optim::BfgsOptions bopts;
    bopts.max_iterations = options.max_iterations;
    optim::NelderMeadOptions nmopts;
    nmopts.max_iterations = 4 * options.max_iterations;
    nmopts.initial_step = 0.15;
    nmopts.restarts = 1;

    bool any = false;
    optim::Result best;
    for (const auto& s : starts) {
        optim::Result r = optim::bfgs(objective, tr.encode(s), bopts);
        if (r.fval >= 1e11) continue;
        if (!any || r.fval < best.fval) best = r;
        any = true;
    }
    if (!any)
        throw NonStationaryFit("armagarch::fit: no admissible parameter point found");
    // simplex polish helps along the AR/MA likelihood ridge
    optim::Result polished = optim::nelder_mead(objective, best.x, nmopts);
    if (polished.fval < best.fval) best = polished;

    ArmaGarchFit out;
    out.params = tr.decode(best.x);
    out.loglik = -best.fval;

    FilterResult fr = filter(out.params, returns);
    out.state = fr.state;
    out.residuals = std::move(fr.residuals);

    if (options.fit_innovations) {
        try {
            cts::FitResult cf = cts::fit_mle(out.residuals, options.cts);
            out.innovations = cf.params;
            out.ks = cf.ks;
            out.cts_ok = true;
            out.innovation_grid = std::make_shared<cts::DensityGrid>(
                cts::make_grid(out.innovations.to_cts()));
        } catch (const Error&) {
            out.cts_ok = false;
        }
    }
    if (!out.cts_ok) {
        // Student-t innovation fallback; report its KS instead.
        std::vector<double> sorted = out.residuals;
        std::sort(sorted.begin(), sorted.end());
        double n = static_cast<double>(sorted.size());
        double scale = std::sqrt(out.params.nu / (out.params.nu - 2.0));
        double ks = 0.0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            double f = special::student_t_cdf(sorted[i] * scale, out.params.nu);
            ks = std::max(ks, std::fabs((static_cast<double>(i) + 1.0) / n - f));
            ks = std::max(ks, std::fabs(static_cast<double>(i) / n - f));
        }
        out.ks = ks;
    }
    return out;
}

double forecast_mean(const ArmaGarchFit& fit) {
    const auto& p = fit.params;
    const auto& s = fit.state;
    return p.c + p.a * s.y_t + p.b * s.sigma_t * s.eps_t;
}

double forecast_sigma(const ArmaGarchFit& fit) { return fit.state.sigma_next; }

double innovation_cvar(const ArmaGarchFit& fit, double confidence) {
    if (fit.cts_ok) return fit.innovation_grid->cvar(confidence);
    return special::std_t_cvar(1.0 - confidence, fit.params.nu);
}

double innovation_cvar_upper(const ArmaGarchFit& fit, double confidence) {
    if (fit.cts_ok) return fit.innovation_grid->cvar_upper(confidence);
    // the standardized t law is symmetric
    return special::std_t_cvar(1.0 - confidence, fit.params.nu);
}

double forecast_var(const ArmaGarchFit& fit, double confidence) {
    double q = fit.cts_ok ? -fit.innovation_grid->var(confidence)
                          : special::std_t_quantile(1.0 - confidence, fit.params.nu);
    return -forecast_mean(fit) - forecast_sigma(fit) * q;
}

double forecast_cvar(const ArmaGarchFit& fit, double confidence) {
    return -forecast_mean(fit) + forecast_sigma(fit) * innovation_cvar(fit, confidence);
}

}  // namespace tempest::armagarch
