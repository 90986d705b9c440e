#pragma once

#include <memory>
#include <span>
#include <vector>

#include "tempest/cts.hpp"

// Two-stage estimation of ARMA(1,1)-GARCH(1,1): Student-t maximum
// likelihood for the filter coefficients, then a CTS refit of the
// standardized residuals. One-step forecasts transport the innovation
// risk measures through the conditional mean and volatility:
//   y_t     = c + a y_{t-1} + b sigma_{t-1} eps_{t-1} + sigma_t eps_t
//   sigma_t^2 = omega + alpha1 (sigma_{t-1} eps_{t-1})^2 + beta1 sigma_{t-1}^2

namespace tempest::armagarch {

struct ArmaGarchParams {
    double c = 0.0;       // ARMA intercept
    double a = 0.0;       // AR(1) coefficient
    double b = 0.0;       // MA(1) coefficient
    double omega = 0.0;   // GARCH intercept
    double alpha1 = 0.0;  // ARCH coefficient
    double beta1 = 0.0;   // GARCH coefficient
    double nu = 8.0;      // Student-t degrees of freedom (stage 1)

    void validate() const;
};

struct FilterState {
    double y_t = 0.0;         // last observed return
    double eps_t = 0.0;       // last standardized innovation
    double sigma_t = 0.0;     // last conditional volatility
    double sigma_next = 0.0;  // one-step-ahead volatility
};

struct FilterResult {
    std::vector<double> residuals;  // standardized, one per observation
    std::vector<double> sigmas;
    FilterState state;
};

// Deterministic filter pass. Initialization: sigma_0^2 = sample variance,
// presample innovation 0, presample return = first observation.
FilterResult filter(const ArmaGarchParams& params, std::span<const double> returns);

struct ArmaGarchFit {
    ArmaGarchParams params;
    cts::StdCtsParams innovations{};  // meaningful when cts_ok
    bool cts_ok = false;              // false: Student-t quantile fallback
    FilterState state;
    std::vector<double> residuals;
    double loglik = 0.0;  // stage-1 log likelihood
    double ks = 0.0;      // innovation-fit KS distance

    // Innovation density reused by every risk transport; null on fallback.
    std::shared_ptr<const cts::DensityGrid> innovation_grid;
};

struct FitOptions {
    int max_iterations = 200;
    bool fit_innovations = true;
    cts::FitOptions cts;
};

// Throws TooFewSamples (< 21 observations), DegenerateSeries (zero
// variance), NonStationaryFit (no start yields a finite likelihood).
ArmaGarchFit fit(std::span<const double> returns, const FitOptions& options = {});

// One-step conditional forecasts.
double forecast_mean(const ArmaGarchFit& fit);
double forecast_sigma(const ArmaGarchFit& fit);
// Risk measures of y_{t+1}: affine transport of the innovation law,
//   CVaR(y_{t+1}) = -(c + a y_t + b sigma_t eps_t) + sigma_{t+1} CVaR(eps).
double forecast_var(const ArmaGarchFit& fit, double confidence);
double forecast_cvar(const ArmaGarchFit& fit, double confidence);

// Innovation-law tail measures (fallback-aware): expected loss of the lower
// tail and expected value of the upper tail at the given confidence.
double innovation_cvar(const ArmaGarchFit& fit, double confidence);
double innovation_cvar_upper(const ArmaGarchFit& fit, double confidence);

}  // namespace tempest::armagarch
