#include "sslab/params.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace sslab {

double entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("entropy: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -(x * std::log2(x) + (1.0 - x) * std::log2(1.0 - x));
}

double lambda_exponent(double alpha, double beta) {
    if (beta == 0.0) return 0.0;
    double k = 3.0 * beta;
    double a = k / (2.0 * alpha);
    double b = k / (2.0 * (1.0 - alpha));
    if (k > 1.0 || a > 1.0 || b > 1.0)
        throw std::domain_error("lambda_exponent: beta too large for this alpha");
    return entropy(k) - alpha * entropy(a) - (1.0 - alpha) * entropy(b);
}

double gamma_density(double alpha, double beta) {
    double den = 1.0 - 3.0 * beta;
    if (den <= 0.0) throw std::domain_error("gamma_density: beta >= 1/3");
    double g = (alpha - 1.5 * beta) / den;
    if (g < -1e-12 || g > 1.0 + 1e-12)
        throw std::domain_error("gamma_density: density outside [0,1]");
    return std::clamp(g, 0.0, 1.0);
}

double beta_schedule(double alpha) {
    return (alpha >= 0.45 && alpha <= 0.55) ? 0.13 : 0.0;
}

double chi_balance(double mu, double gamma) {
    double hg = entropy(gamma);
    if (hg == 0.0) return 0.0;
    return (entropy(mu) - entropy(0.5 - mu)) / hg;
}

double time_exponent(double alpha, double beta) {
    double hg = entropy(gamma_density(alpha, beta));
    double lam = lambda_exponent(alpha, beta);
    return 0.5 * (hg - 3.0 * beta * hg + 3.0 * beta + 2.0 * lam);
}

double space_exponent(double alpha, double beta) {
    double hg = entropy(gamma_density(alpha, beta));
    double lam = lambda_exponent(alpha, beta);
    return 0.25 * (3.0 * hg - 9.0 * beta * hg + 6.0 * beta * entropy(0.25) + 4.0 * beta - 2.0 +
                   4.0 * lam);
}

ParameterPoint make_point(double alpha, double beta, double mu, double eps) {
    ParameterPoint pt;
    pt.alpha = alpha;
    pt.beta = beta;
    pt.gamma = gamma_density(alpha, beta);
    pt.lambda = lambda_exponent(alpha, beta);
    pt.mu = mu;
    pt.eps = eps;
    pt.chi = chi_balance(mu, pt.gamma);
    return pt;
}

std::vector<uint32_t> apportion(std::vector<double> weights, uint32_t total) {
    size_t k = weights.size();
    std::vector<uint32_t> out(k, 0);
    if (k == 0) {
        if (total != 0) throw std::invalid_argument("apportion: no slots for a positive total");
        return out;
    }
    double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (double w : weights)
        if (w < 0.0) throw std::invalid_argument("apportion: negative weight");
    if (sum <= 0.0) {
        // Nothing to be proportional to: spread evenly.
        for (size_t i = 0; i < k; ++i) out[i] = uint32_t(total / k + (i < total % k ? 1 : 0));
        return out;
    }
    double scale = double(total) / sum;
    std::vector<double> frac(k);
    uint64_t assigned = 0;
    for (size_t i = 0; i < k; ++i) {
        double v = weights[i] * scale;
        double fl = std::floor(v);
        out[i] = uint32_t(fl);
        frac[i] = v - fl;
        assigned += out[i];
    }
    std::vector<size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return frac[a] > frac[b]; });
    size_t cursor = 0;
    while (assigned < total) {
        ++out[order[cursor % k]];
        ++assigned;
        ++cursor;
    }
    while (assigned > total) {  // defensive against fp drift
        size_t idx = order[(cursor + k - 1) % k];
        if (out[idx] > 0) {
            --out[idx];
            --assigned;
        }
        ++cursor;
    }
    return out;
}

PartitionPlan partition_plan(uint32_t n, const ParameterPoint& pt) {
    PartitionPlan plan;
    plan.n = n;
    plan.mixer_size = uint32_t(std::floor(pt.beta * n + 1e-9));
    if (3ull * plan.mixer_size > n)
        throw std::invalid_argument("partition_plan: mixers would exceed the item count");
    uint32_t body = n - 3 * plan.mixer_size;

    double lraw = (1.0 - 3.0 * pt.beta - pt.chi * pt.beta) * n / 2.0;
    double rraw = (1.0 - 3.0 * pt.beta + pt.chi * pt.beta) * n / 2.0;
    if (lraw < -1e-9 || rraw < -1e-9)
        throw std::invalid_argument("partition_plan: negative side size, chi out of range");
    auto sides = apportion({std::max(lraw, 0.0), std::max(rraw, 0.0)}, body);
    plan.left_total = sides[0];
    plan.right_total = sides[1];

    double hg = entropy(pt.gamma);
    auto split_side = [&](bool left) {
        std::vector<double> raw(4);
        if (pt.beta == 0.0 || hg == 0.0) {
            raw = {1.0, 1.0, 1.0, 1.0};
        } else {
            double common = hg - 3.0 * pt.beta * hg;
            double hmu = entropy(pt.mu);
            double hco = entropy(0.5 - pt.mu);
            raw[0] = common - 6.0 * pt.beta + 6.0 * pt.eps * pt.beta + pt.beta * hmu +
                     pt.beta * hco;
            raw[1] = common + 2.0 * pt.beta - 2.0 * pt.eps * pt.beta + pt.beta * hmu +
                     pt.beta * hco;
            raw[2] = raw[1];
            double last = left ? common + 2.0 * pt.beta - 2.0 * pt.eps * pt.beta -
                                     7.0 * pt.beta * hmu + pt.beta * hco
                               : common + 2.0 * pt.beta - 2.0 * pt.eps * pt.beta +
                                     pt.beta * hmu - 7.0 * pt.beta * hco;
            raw[3] = last;
            for (double& v : raw) {
                if (v < 0.0) {
                    v = 0.0;
                    plan.clamped = true;
                }
            }
        }
        return apportion(raw, left ? plan.left_total : plan.right_total);
    };
    auto l = split_side(true);
    auto r = split_side(false);
    std::copy(l.begin(), l.end(), plan.left_parts.begin());
    std::copy(r.begin(), r.end(), plan.right_parts.begin());
    return plan;
}

std::pair<double, double> binom_log_bounds(uint64_t n, uint64_t k) {
    if (k > n) throw std::invalid_argument("binom_log_bounds: k > n");
    if (k == 0 || k == n) return {0.0, 0.0};
    double hn = double(n) * entropy(double(k) / double(n));
    double lower = hn + 0.5 * std::log2(double(n) / (8.0 * double(k) * double(n - k)));
    return {lower, hn};
}

ExponentReport verify_exponent_bounds(double step, double tol, int threads, double beta_boost) {
    if (!(step > 0.0 && step <= 0.5)) throw std::invalid_argument("verify_exponent_bounds: bad step");
    ExponentReport rep;
    rep.step = step;
    rep.tolerance = tol;
    const uint64_t cells = uint64_t(std::llround(1.0 / step));
    rep.grid_points = cells + 1;

    struct Local {
        double max_t = -1e9, arg_t = 0, max_s = -1e9, arg_s = 0;
        std::vector<std::string> violations;
    };
    auto beta_at = [beta_boost](double alpha) {
        double b = beta_schedule(alpha);
        return b > 0.0 ? b + beta_boost : b;
    };
    auto scan = [&](uint64_t from, uint64_t to, Local& loc) {
        for (uint64_t i = from; i < to; ++i) {
            double alpha = double(i) / double(cells);
            double beta = beta_at(alpha);
            double t = time_exponent(alpha, beta);
            double s = space_exponent(alpha, beta);
            if (t > loc.max_t) {
                loc.max_t = t;
                loc.arg_t = alpha;
            }
            if (s > loc.max_s) {
                loc.max_s = s;
                loc.arg_s = alpha;
            }
            if (t > 0.5 + tol)
                loc.violations.push_back("time exponent " + std::to_string(t) + " at alpha " +
                                         std::to_string(alpha));
            if (s > 0.246 + tol)
                loc.violations.push_back("space exponent " + std::to_string(s) + " at alpha " +
                                         std::to_string(alpha));
        }
    };

    int nt = std::max(1, threads);
    std::vector<Local> locals(nt);
    if (nt == 1) {
        scan(0, cells + 1, locals[0]);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (cells + 1 + nt - 1) / nt;
        for (int w = 0; w < nt; ++w) {
            uint64_t from = std::min<uint64_t>(w * chunk, cells + 1);
            uint64_t to = std::min<uint64_t>(from + chunk, cells + 1);
            pool.emplace_back(scan, from, to, std::ref(locals[w]));
        }
        for (auto& th : pool) th.join();
    }
    rep.max_time = -1e9;
    rep.max_space = -1e9;
    for (auto& loc : locals) {
        if (loc.max_t > rep.max_time) {
            rep.max_time = loc.max_t;
            rep.argmax_time = loc.arg_t;
        }
        if (loc.max_s > rep.max_space) {
            rep.max_space = loc.max_s;
            rep.argmax_space = loc.arg_s;
        }
        for (auto& v : loc.violations) rep.violations.push_back(std::move(v));
    }
    return rep;
}

double wov_f1(double mu) {
    double x = 0.5 + std::log2(3.0) * (mu - 0.25);
    return (1.0 - mu) * entropy((x - mu) / (1.0 - mu)) - 0.5 * entropy(2.0 * x - 2.0 * mu);
}

double wov_f2(double mu) {
    double x = 0.5 + std::log2(3.0) * (mu - 0.25);
    return (0.5 + mu) * entropy(2.0 * x / (1.0 + 2.0 * mu)) - 0.5 * entropy(2.0 * x - 2.0 * mu);
}

double wov_bound() { return 1.0 - entropy(0.25); }

WovBoundReport verify_wov_inequality(double step, double tol) {
    if (!(step > 0.0 && step <= 0.25)) throw std::invalid_argument("verify_wov_inequality: bad step");
    WovBoundReport rep;
    rep.step = step;
    rep.tolerance = tol;
    rep.bound = wov_bound();
    const uint64_t cells = uint64_t(std::llround(0.5 / step));
    rep.grid_points = cells + 1;
    rep.max_value = -1e9;
    for (uint64_t i = 0; i <= cells; ++i) {
        double mu = 0.5 * double(i) / double(cells);
        double v = std::max(wov_f1(mu), wov_f2(mu));
        if (v > rep.max_value) {
            rep.max_value = v;
            rep.argmax_mu = mu;
        }
        if (v > rep.bound + tol)
            rep.violations.push_back("wov value " + std::to_string(v) + " at mu " +
                                     std::to_string(mu));
    }
    return rep;
}

}  // namespace sslab
