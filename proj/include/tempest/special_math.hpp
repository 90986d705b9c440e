#pragma once

#include <cstdint>

// Scalar special functions used by the distribution and inference code.
// Everything here is deterministic and thread-safe.

namespace tempest::special {

// Upper incomplete gamma Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt.
// Supports negative non-integer s; requires x > 0. Accurate for x >= 1,
// which is the only regime the callers use (tempered tails beyond the grid).
double upper_incomplete_gamma(double s, double x);

// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

// Standard normal pdf / cdf / quantile (Acklam rational approximation
// polished with one Halley step).
double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double p);

// Student-t with nu degrees of freedom (the unscaled textbook law).
double student_t_pdf(double x, double nu);
double student_t_cdf(double x, double nu);
double student_t_quantile(double p, double nu);

// Standardized Student-t: variance 1 for nu > 2.
double std_t_pdf(double x, double nu);
double std_t_quantile(double p, double nu);
// Lower-tail conditional loss -E[T | T <= quantile(eta)] of the standardized law.
double std_t_cvar(double eta, double nu);

// Deterministic uniform stream: xoshiro256++ seeded via SplitMix64, mapped
// to (0,1) doubles with an explicit 53-bit conversion. Identical across
// platforms and toolchains.
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed);
    double next();          // uniform on (0,1)
    double next_normal();   // standard normal via inverse cdf
    std::uint64_t next_u64();

private:
    std::uint64_t state_[4];
};

}  // namespace tempest::special
