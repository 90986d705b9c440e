#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

// Classical tempered stable (CTS) distribution engine: characteristic
// function, FFT-based density/cdf, quantiles, VaR/CVaR, moments,
// standardized construction, MLE and inverse-cdf sampling.

namespace tempest::cts {

struct CtsParams {
    double alpha;         // tail index in (0, 2)
    double c_plus;        // upside scale, > 0
    double c_minus;       // downside scale, > 0
    double lambda_plus;   // upside tempering rate, > 0
    double lambda_minus;  // downside tempering rate, > 0
    double m;             // location; equals the mean

    void validate() const;  // throws std::invalid_argument on a bad field
};

// Shape-only parameterization of the zero-mean unit-variance family
// (common scale C and location are implied by the standardization).
struct StdCtsParams {
    double alpha;
    double lambda_plus;
    double lambda_minus;

    CtsParams to_cts() const;
};

struct Moments {
    double mean;
    double variance;
    double skewness;
    double excess_kurtosis;
};

std::complex<double> char_fn(const CtsParams& params, double u);
// log of the characteristic function; numerically stable across alpha -> 1.
std::complex<double> log_char_fn(const CtsParams& params, double u);

Moments moments(const CtsParams& params);

// Choose C+ = C- = C and m so the law has mean 0 and variance 1.
StdCtsParams standardize(double alpha, double lambda_plus, double lambda_minus);

// Parameters of s*X + t.
CtsParams scale_shift(const CtsParams& params, double s, double t);
// Parameters of -X (swaps the tails).
CtsParams reflect(const CtsParams& params);

class DensityGrid {
public:
    std::vector<double> x_values;    // ascending, equally spaced
    std::vector<double> pdf_values;  // nonnegative
    std::vector<double> cdf_values;  // nondecreasing, in [0, 1]

    const CtsParams& params() const { return params_; }
    double dx() const { return dx_; }
    double left_tail_mass() const { return tail_mass_lo_; }
    double right_tail_mass() const { return tail_mass_hi_; }

    double cdf_at(double x) const;
    double pdf_at(double x) const;
    // Inverse cdf; throws ProbabilityOutOfRange unless p in (0, 1).
    double quantile(double p) const;

    // Positive-loss risk measures at a confidence level (1-eta); the
    // argument is the confidence, e.g. 0.95. cvar accepts confidence 0
    // (eta = 1), where it equals minus the mean.
    double var(double confidence) const;
    double cvar(double confidence) const;
    // CVaR of the reflected variable -X at the same confidence: the expected
    // upper-tail value E[X | X >= quantile(confidence)].
    double cvar_upper(double confidence) const;

private:
    friend DensityGrid density_grid(const CtsParams&, std::size_t, double);
    friend DensityGrid make_grid(const CtsParams&, std::size_t, std::size_t);

    CtsParams params_{};
    double dx_ = 0.0;
    double tail_mass_lo_ = 0.0;   // model mass below x_values.front()
    double tail_mass_hi_ = 0.0;
    // integral of t*f(t) below the left grid edge (analytic tail)
    double tail_xint_lo_ = 0.0;

    std::size_t locate_cell(double p) const;
    double lower_partial_xint(double q) const;
};

// FFT inversion of the characteristic function on a centered grid.
// n_points must be a power of two >= 2^10. half_width is in standard
// deviations. Throws GridTooNarrow when the requested grid cannot hold the
// distribution: either the tail mass outside the grid exceeds 1e-6 or the
// frequency band that n_points affords leaves unresolved spectral mass.
DensityGrid density_grid(const CtsParams& params, std::size_t n_points,
                         double half_width);

// Auto-sized grid: half width from the tempering rates, n escalated until
// the characteristic function has decayed at the band edge (capped).
DensityGrid make_grid(const CtsParams& params, std::size_t min_points = 1u << 14,
                      std::size_t max_points = 1u << 22);

// Convenience single-shot versions; each builds an auto-sized grid.
double quantile(const CtsParams& params, double p);
double var(const CtsParams& params, double confidence);
double cvar(const CtsParams& params, double confidence);

// Deterministic inverse-cdf sampling.
std::vector<double> sample(const CtsParams& params, std::size_t n, std::uint64_t seed);

struct FitOptions {
    double alpha_min = 0.05;
    double alpha_max = 2.0 - 1e-6;
    double lambda_min = 0.25;
    double lambda_max = 8.0;
    std::size_t grid_points = 1u << 13;  // likelihood-evaluation grid
    int max_iterations = 400;
    // Deterministic starting shapes (alpha, lambda+, lambda-).
    std::vector<StdCtsParams> starts = {
        {0.8, 1.2, 1.2}, {1.5, 0.7, 0.7}, {0.4, 2.0, 2.0}};
};

struct FitResult {
    StdCtsParams params;
    double log_likelihood;
    double ks;  // Kolmogorov-Smirnov distance of the fit
};

// Maximum likelihood over (alpha, lambda+, lambda-) with the
// standardization enforced. Requires >= 21 samples (TooFewSamples) with
// nonzero variance (OptimizerDiverged).
FitResult fit_mle(std::span<const double> samples, const FitOptions& options = {});

}  // namespace tempest::cts
