#pragma once

#include <functional>
#include <vector>

// Local minimizers for smooth low-dimensional likelihoods. Both operate on
// unconstrained coordinates; callers map box constraints through transforms.

namespace tempest::optim {

using Objective = std::function<double(const std::vector<double>&)>;

struct Result {
    std::vector<double> x;
    double fval = 0.0;
    int evaluations = 0;
    bool converged = false;
};

struct NelderMeadOptions {
    int max_iterations = 600;
    double x_tolerance = 1e-7;
    double f_tolerance = 1e-9;
    double initial_step = 0.25;
    int restarts = 1;  // re-seed the simplex at the incumbent after convergence
};

Result nelder_mead(const Objective& f, std::vector<double> start,
                   const NelderMeadOptions& opts = {});

struct BfgsOptions {
    int max_iterations = 300;
    double grad_tolerance = 1e-7;
    double step_tolerance = 1e-11;
    double fd_step = 1e-6;  // central-difference step for the gradient
};

// Quasi-Newton with a backtracking Armijo line search and finite-difference
// gradients. Falls back gracefully (converged=false) on non-finite regions.
Result bfgs(const Objective& f, std::vector<double> start,
            const BfgsOptions& opts = {});

}  // namespace tempest::optim
