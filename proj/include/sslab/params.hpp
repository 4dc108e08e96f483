#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sslab {

// Binary entropy in bits. Throws outside [0,1].
double entropy(double x);

// Exponent of the probability that three disjoint random blocks of total
// density 3*beta split a density-alpha solution exactly in half.
double lambda_exponent(double alpha, double beta);

// Solution density inside the non-mixer region.
double gamma_density(double alpha, double beta);

// Mixer density schedule: flat 0.13 on the hard band, 0 elsewhere.
double beta_schedule(double alpha);

// Left/right imbalance that compensates an uneven mixer split.
double chi_balance(double mu, double gamma);

// Running-time and space exponents of the low-space solver, in units of n.
double time_exponent(double alpha, double beta);
double space_exponent(double alpha, double beta);

struct ParameterPoint {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    double lambda = 0;
    double mu = 0;    // fraction of the middle mixer charged to the left side
    double eps = 0;   // measured mixer defect
    double chi = 0;
};

ParameterPoint make_point(double alpha, double beta, double mu, double eps);

// Integer split of n items into [M_L | L1..L4 | M | R4..R1 | M_R].
struct PartitionPlan {
    uint32_t n = 0;
    uint32_t mixer_size = 0;  // each of the three mixers
    uint32_t left_total = 0;
    uint32_t right_total = 0;
    std::array<uint32_t, 4> left_parts{};
    std::array<uint32_t, 4> right_parts{};
    bool clamped = false;  // some raw part size was negative and got zeroed
};

PartitionPlan partition_plan(uint32_t n, const ParameterPoint& pt);

// Rounds nonnegative reals to integers summing to total, largest remainder
// first, ties to the lower index.
std::vector<uint32_t> apportion(std::vector<double> weights, uint32_t total);

// (lower, upper) bounds on log2 C(n, k).
std::pair<double, double> binom_log_bounds(uint64_t n, uint64_t k);

struct ExponentReport {
    double step = 0;
    double tolerance = 0;
    double max_time = 0;
    double argmax_time = 0;
    double max_space = 0;
    double argmax_space = 0;
    uint64_t grid_points = 0;
    std::vector<std::string> violations;
};

// Sweeps alpha over [0,1] with the given step and checks the time exponent
// against 1/2 and the space exponent against 0.246. beta_boost shifts the
// schedule on the hard band; nonzero values exist to prove the check can fail.
ExponentReport verify_exponent_bounds(double step, double tol = 1e-9, int threads = 1,
                                      double beta_boost = 0.0);

double wov_f1(double mu);
double wov_f2(double mu);
double wov_bound();  // 1 - h(1/4)

struct WovBoundReport {
    double step = 0;
    double tolerance = 0;
    double bound = 0;
    double max_value = 0;
    double argmax_mu = 0;
    uint64_t grid_points = 0;
    std::vector<std::string> violations;
};

WovBoundReport verify_wov_inequality(double step, double tol = 1e-9);

}  // namespace sslab
