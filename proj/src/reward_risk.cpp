#include "tempest/reward_risk.hpp"

#include <algorithm>
#include <cmath>

#include "tempest/errors.hpp"

namespace tempest::risk {

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::CumulativeReturn: return "cumulative_return";
        case Criterion::Sharpe: return "sharpe";
        case Criterion::Cvar99: return "cvar_99";
        case Criterion::Cvar95: return "cvar_95";
        case Criterion::Cvar90: return "cvar_90";
        case Criterion::Star99: return "star_99";
        case Criterion::Star95: return "star_95";
        case Criterion::Star90: return "star_90";
        case Criterion::RRatio9999: return "r_ratio_99_99";
        case Criterion::RRatio9595: return "r_ratio_95_95";
        case Criterion::RRatio9090: return "r_ratio_90_90";
        case Criterion::RRatio5099: return "r_ratio_50_99";
        case Criterion::RRatio5095: return "r_ratio_50_95";
        case Criterion::RRatio5090: return "r_ratio_50_90";
    }
    return "?";
}

Criterion criterion_from_name(const std::string& name) {
    for (Criterion c : kAllCriteria)
        if (name == criterion_name(c)) return c;
    throw ParseError("unknown criterion '" + name + "'");
}

bool higher_is_better(Criterion c) {
    switch (c) {
        case Criterion::Cvar99:
        case Criterion::Cvar95:
        case Criterion::Cvar90:
            return false;  // safest (lowest expected loss) assets win
        default:
            return true;
    }
}

double RewardRiskSummary::criterion_value(Criterion c) const {
    switch (c) {
        case Criterion::CumulativeReturn: return cumulative_return;
        case Criterion::Sharpe: return sharpe;
        case Criterion::Cvar99: return cvar99;
        case Criterion::Cvar95: return cvar95;
        case Criterion::Cvar90: return cvar90;
        case Criterion::Star99: return star99;
        case Criterion::Star95: return star95;
        case Criterion::Star90: return star90;
        case Criterion::RRatio9999: return rr_99_99;
        case Criterion::RRatio9595: return rr_95_95;
        case Criterion::RRatio9090: return rr_90_90;
        case Criterion::RRatio5099: return rr_50_99;
        case Criterion::RRatio5095: return rr_50_95;
        case Criterion::RRatio5090: return rr_50_90;
    }
    return 0.0;
}

double sharpe_ratio(double expected_excess, double stdev_excess) {
    if (stdev_excess == 0.0) throw ZeroDeviation("sharpe_ratio: zero deviation");
    return expected_excess / stdev_excess;
}

double star_ratio(double expected_excess, double cvar_value) {
    if (cvar_value == 0.0) throw ZeroRisk("star_ratio: zero CVaR");
    return expected_excess / cvar_value;
}

double r_ratio(const armagarch::ArmaGarchFit& fit, double rf_daily, double eta,
               double zeta) {
    if (!(eta > 0.0 && eta <= 1.0) || !(zeta > 0.0 && zeta <= 1.0))
        throw ProbabilityOutOfRange("r_ratio: tail levels must lie in (0, 1]");
    double mu_ex = armagarch::forecast_mean(fit) - rf_daily;
    double sig = armagarch::forecast_sigma(fit);
    // rf - r = -(mu - rf) - sigma eps  =>  CVaR = (mu - rf) + sigma CVaR(-eps)
    double upper = mu_ex + sig * armagarch::innovation_cvar_upper(fit, 1.0 - eta);
    double lower = -mu_ex + sig * armagarch::innovation_cvar(fit, 1.0 - zeta);
    if (lower == 0.0) throw ZeroRisk("r_ratio: zero denominator CVaR");
    return upper / lower;
}

double mdd(std::span<const double> path) {
    if (path.empty()) throw EmptyPath("mdd: empty path");
    double peak = path[0];
    double worst = 0.0;
    for (double v : path) {
        peak = std::max(peak, v);
        if (peak > 0.0) worst = std::max(worst, 1.0 - v / peak);
    }
    return worst;
}

double cumulative_return(std::span<const double> returns) {
    double w = 1.0;
    for (double r : returns) w *= 1.0 + r;
    return w - 1.0;
}

RewardRiskSummary summarize(const std::string& asset, int window,
                            std::span<const double> returns, double rf_daily,
                            const armagarch::FitOptions& options) {
    RewardRiskSummary s;
    s.asset = asset;
    s.window = window;
    if (returns.size() < 21) {
        s.reason = "TooFewSamples";
        return s;
    }
    s.cumulative_return = cumulative_return(returns);

    armagarch::ArmaGarchFit fit;
    try {
        fit = armagarch::fit(returns, options);
    } catch (const Error& e) {
        s.reason = e.what();
        return s;
    }
    // sanity band on the standardized residuals
    double rm = 0.0;
    for (double r : fit.residuals) rm += r;
    rm /= static_cast<double>(fit.residuals.size());
    double rv = 0.0;
    for (double r : fit.residuals) rv += (r - rm) * (r - rm);
    rv /= static_cast<double>(fit.residuals.size());
    if (rv < 0.8 || rv > 1.2) {
        s.reason = "residual variance out of band";
        return s;
    }
    s.used_t_fallback = !fit.cts_ok;

    try {
        double mu_ex = armagarch::forecast_mean(fit) - rf_daily;
        s.sharpe = sharpe_ratio(mu_ex, armagarch::forecast_sigma(fit));
        s.cvar99 = armagarch::forecast_cvar(fit, 0.99);
        s.cvar95 = armagarch::forecast_cvar(fit, 0.95);
        s.cvar90 = armagarch::forecast_cvar(fit, 0.90);
        s.star99 = star_ratio(mu_ex, s.cvar99);
        s.star95 = star_ratio(mu_ex, s.cvar95);
        s.star90 = star_ratio(mu_ex, s.cvar90);
        s.rr_99_99 = r_ratio(fit, rf_daily, 0.01, 0.01);
        s.rr_95_95 = r_ratio(fit, rf_daily, 0.05, 0.05);
        s.rr_90_90 = r_ratio(fit, rf_daily, 0.10, 0.10);
        s.rr_50_99 = r_ratio(fit, rf_daily, 0.50, 0.01);
        s.rr_50_95 = r_ratio(fit, rf_daily, 0.50, 0.05);
        s.rr_50_90 = r_ratio(fit, rf_daily, 0.50, 0.10);
    } catch (const Error& e) {
        s.reason = e.what();
        return s;
    }
    for (double v : {s.cumulative_return, s.sharpe, s.cvar99, s.cvar95, s.cvar90,
                     s.star99, s.star95, s.star90, s.rr_99_99, s.rr_95_95,
                     s.rr_90_90, s.rr_50_99, s.rr_50_95, s.rr_50_90}) {
        if (!std::isfinite(v)) {
            s.reason = "non-finite criterion value";
            return s;
        }
    }
    s.valid = true;
    return s;
}

}  // namespace tempest::risk
