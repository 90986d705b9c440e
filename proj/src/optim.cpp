#include "tempest/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tempest::optim {

namespace {

constexpr double kBig = 1e12;

double safe_eval(const Objective& f, const std::vector<double>& x, int& evals) {
    ++evals;
    double v = f(x);
    if (!std::isfinite(v)) return kBig;
    return v;
}

Result nelder_mead_once(const Objective& f, const std::vector<double>& start,
                        const NelderMeadOptions& opts, int& evals) {
    const std::size_t n = start.size();
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::vector<std::vector<double>> pts(n + 1, start);
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        double step = opts.initial_step * std::max(1.0, std::fabs(start[i]));
        pts[i + 1][i] += step;
    }
    for (std::size_t i = 0; i <= n; ++i) fv[i] = safe_eval(f, pts[i], evals);

    std::vector<std::size_t> order(n + 1);
    Result res;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order[0], worst = order[n], second = order[n - 1];

        double spread_f = std::fabs(fv[worst] - fv[best]);
        double spread_x = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            spread_x = std::max(spread_x, std::fabs(pts[worst][i] - pts[best][i]));
        if (spread_f < opts.f_tolerance && spread_x < opts.x_tolerance) {
            res.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t d = 0; d < n; ++d)
                p[d] = centroid[d] + t * (centroid[d] - pts[worst][d]);
            return p;
        };

        std::vector<double> xr = blend(alpha);
        double fr = safe_eval(f, xr, evals);
        if (fr < fv[best]) {
            std::vector<double> xe = blend(gamma);
            double fe = safe_eval(f, xe, evals);
            if (fe < fr) { pts[worst] = std::move(xe); fv[worst] = fe; }
            else         { pts[worst] = std::move(xr); fv[worst] = fr; }
        } else if (fr < fv[second]) {
            pts[worst] = std::move(xr);
            fv[worst] = fr;
        } else {
            std::vector<double> xc = blend(fr < fv[worst] ? rho : -rho);
            double fc = safe_eval(f, xc, evals);
            if (fc < std::min(fr, fv[worst])) {
                pts[worst] = std::move(xc);
                fv[worst] = fc;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < n; ++d)
                        pts[i][d] = pts[best][d] + sigma * (pts[i][d] - pts[best][d]);
                    fv[i] = safe_eval(f, pts[i], evals);
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = pts[best];
    res.fval = fv[best];
    return res;
}

}  // namespace

Result nelder_mead(const Objective& f, std::vector<double> start,
                   const NelderMeadOptions& opts) {
    int evals = 0;
    Result r = nelder_mead_once(f, start, opts, evals);
    // Restarting from the incumbent with a fresh simplex escapes collapsed
    // simplices on ridge-shaped likelihoods.
    NelderMeadOptions ropts = opts;
    ropts.initial_step = std::max(0.02, opts.initial_step * 0.1);
    for (int k = 0; k < opts.restarts; ++k) {
        Result r2 = nelder_mead_once(f, r.x, ropts, evals);
        if (r2.fval < r.fval) r = r2;
        else break;
    }
    r.evaluations = evals;
    return r;
}

namespace {

std::vector<double> fd_gradient(const Objective& f, const std::vector<double>& x,
                                double h, int& evals) {
    std::vector<double> g(x.size());
    std::vector<double> xp = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double hi = h * std::max(1.0, std::fabs(x[i]));
        xp[i] = x[i] + hi;
        double fp = safe_eval(f, xp, evals);
        xp[i] = x[i] - hi;
        double fm = safe_eval(f, xp, evals);
        xp[i] = x[i];
        g[i] = (fp - fm) / (2.0 * hi);
    }
    return g;
}

}  // namespace

Result bfgs(const Objective& f, std::vector<double> start, const BfgsOptions& opts) {
    const std::size_t n = start.size();
    int evals = 0;
    Result res;
    res.x = start;
    res.fval = safe_eval(f, start, evals);

    // Inverse Hessian approximation, started at identity.
    std::vector<double> H(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) H[i * n + i] = 1.0;

    std::vector<double> g = fd_gradient(f, res.x, opts.fd_step, evals);
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        double gnorm = 0.0;
        for (double v : g) gnorm = std::max(gnorm, std::fabs(v));
        if (gnorm < opts.grad_tolerance) {
            res.converged = true;
            break;
        }

        std::vector<double> dir(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) dir[i] -= H[i * n + j] * g[j];

        double slope = std::inner_product(dir.begin(), dir.end(), g.begin(), 0.0);
        if (!(slope < 0.0)) {
            // reset to steepest descent
            std::fill(H.begin(), H.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) H[i * n + i] = 1.0;
            for (std::size_t i = 0; i < n; ++i) dir[i] = -g[i];
            slope = std::inner_product(dir.begin(), dir.end(), g.begin(), 0.0);
            if (!(slope < 0.0)) break;
        }

        double t = 1.0;
        std::vector<double> xn(n);
        double fn = kBig;
        bool ok = false;
        for (int ls = 0; ls < 40; ++ls) {
            for (std::size_t i = 0; i < n; ++i) xn[i] = res.x[i] + t * dir[i];
            fn = safe_eval(f, xn, evals);
            if (fn <= res.fval + 1e-4 * t * slope) { ok = true; break; }
            t *= 0.5;
        }
        if (!ok) break;

        std::vector<double> gn = fd_gradient(f, xn, opts.fd_step, evals);
        std::vector<double> s(n), yv(n);
        double sy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = xn[i] - res.x[i];
            yv[i] = gn[i] - g[i];
            sy += s[i] * yv[i];
        }
        double step_norm = 0.0;
        for (double v : s) step_norm = std::max(step_norm, std::fabs(v));

        res.x = xn;
        res.fval = fn;
        g = gn;
        if (step_norm < opts.step_tolerance) {
            res.converged = true;
            break;
        }
        if (sy > 1e-12) {
            // BFGS inverse update: H <- (I - r s y')H(I - r y s') + r s s'
            double r = 1.0 / sy;
            std::vector<double> Hy(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) Hy[i] += H[i * n + j] * yv[j];
            double yHy = std::inner_product(yv.begin(), yv.end(), Hy.begin(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    H[i * n + j] += -r * (Hy[i] * s[j] + s[i] * Hy[j]) +
                                    r * (1.0 + r * yHy) * s[i] * s[j];
                }
            }
        }
    }
    res.evaluations = evals;
    return res;
}

}  // namespace tempest::optim
