#pragma once

#include <array>
#include <span>
#include <string>

#include "tempest/arma_garch.hpp"

// Ranking criteria computed from a fitted ARMA-GARCH-CTS model: Sharpe
// ratio, CVaR levels, STAR-ratios, R-ratios, cumulative return, plus the
// path-level maximum drawdown.

namespace tempest::risk {

enum class Criterion {
    CumulativeReturn,
    Sharpe,
    Cvar99, Cvar95, Cvar90,
    Star99, Star95, Star90,
    RRatio9999, RRatio9595, RRatio9090,
    RRatio5099, RRatio5095, RRatio5090,
};

inline constexpr std::array<Criterion, 14> kAllCriteria = {
    Criterion::CumulativeReturn, Criterion::Sharpe,
    Criterion::Cvar99, Criterion::Cvar95, Criterion::Cvar90,
    Criterion::Star99, Criterion::Star95, Criterion::Star90,
    Criterion::RRatio9999, Criterion::RRatio9595, Criterion::RRatio9090,
    Criterion::RRatio5099, Criterion::RRatio5095, Criterion::RRatio5090,
};

const char* criterion_name(Criterion c);
Criterion criterion_from_name(const std::string& name);  // throws ParseError
// true when larger criterion values mark the winner basket; false for the
// pure-risk CVaR criteria where the safest (smallest) assets win.
bool higher_is_better(Criterion c);

struct RewardRiskSummary {
    std::string asset;
    int window = -1;
    bool valid = false;
    std::string reason;            // failure reason when invalid
    bool used_t_fallback = false;  // innovation CVaRs from the Student-t stage

    double cumulative_return = 0.0;
    double sharpe = 0.0;
    double cvar99 = 0.0, cvar95 = 0.0, cvar90 = 0.0;
    double star99 = 0.0, star95 = 0.0, star90 = 0.0;
    double rr_99_99 = 0.0, rr_95_95 = 0.0, rr_90_90 = 0.0;
    double rr_50_99 = 0.0, rr_50_95 = 0.0, rr_50_90 = 0.0;

    double criterion_value(Criterion c) const;
};

// SR = E(r - rf) / sigma(r - rf). Throws ZeroDeviation.
double sharpe_ratio(double expected_excess, double stdev_excess);

// STAR = E(r - rf) / CVaR. Throws ZeroRisk when the CVaR is zero.
double star_ratio(double expected_excess, double cvar_value);

// R-ratio: model-transported CVaR of (rf - r) at confidence (1-eta) over
// the CVaR of (r - rf) at confidence (1-zeta). eta = zeta = 1 averages the
// whole distribution on both sides.
double r_ratio(const armagarch::ArmaGarchFit& fit, double rf_daily, double eta,
               double zeta);

// Maximum relative peak-to-trough decline of a wealth path. Throws EmptyPath.
double mdd(std::span<const double> path);

// Product of (1 + daily) minus 1.
double cumulative_return(std::span<const double> returns);

// Populate every criterion for one asset window; failures are encoded in
// the summary, never thrown.
RewardRiskSummary summarize(const std::string& asset, int window,
                            std::span<const double> returns, double rf_daily,
                            const armagarch::FitOptions& options = {});

}  // namespace tempest::risk
