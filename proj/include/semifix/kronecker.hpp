#pragma once

#include "semifix/exact_real.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace semifix {

/// Search for orbit indices k with frac(k*alpha_j) inside the eps-box
/// around target_j for every j. Construction validates that
/// {1, alpha_1, ..., alpha_n} is independent over Q (exactly), that every
/// target lies in [0,1), and that eps > 0.
struct KroneckerProblem {
    std::vector<ExactReal> alphas;
    std::vector<double> target;
    double eps;

    KroneckerProblem(std::vector<ExactReal> alphas, std::vector<double> target, double eps);
    size_t n() const { return alphas.size(); }
};

/// The positive shift beta_j = alpha_j + ell with
/// ell = max_j(floor(|alpha_j|) + 1). Keeps Q-independence of {1, betas}.
struct BetaShift {
    std::int64_t ell;
    std::vector<ExactReal> betas;
};

/// Throws IndependenceViolated if {1, alphas} is rationally dependent.
/// Re-verifies {1, betas} exactly after the shift.
BetaShift beta_shift(const std::vector<ExactReal>& alphas);

/// Fractional-part orbit frac(k * alpha_j), advanced incrementally in
/// doubles and resynchronized against the exact values every 10^4 steps, so
/// the accumulated float error stays below kOrbitDriftBound.
class FracOrbit {
public:
    explicit FracOrbit(std::vector<ExactReal> alphas);

    void advance(); // k -> k+1
    std::int64_t k() const { return k_; }
    const std::vector<double>& fracs() const { return fracs_; }

    static constexpr std::int64_t kResyncEvery = 10'000;
    static constexpr double kDriftBound = 5e-12;

private:
    std::vector<ExactReal> alphas_;
    std::vector<double> addends_;
    std::vector<double> fracs_;
    std::int64_t k_ = 0;
};

/// Exact fractional parts frac(k*alpha_j), rounded to doubles within abs_err.
std::vector<double> exact_fracs(const std::vector<ExactReal>& alphas, std::int64_t k,
                                double abs_err = 1e-15);

/// Exact decision of "for all j: |frac(k*alpha_j) - target_j| < eps".
/// target and eps enter as the dyadic rationals the doubles denote.
bool certify_hit(const std::vector<ExactReal>& alphas, std::int64_t k,
                 const std::vector<double>& target, double eps);

/// Smallest k <= k_max satisfying the eps-box condition, certified by exact
/// arithmetic, or nullopt. A float prefilter (with torus metric and a slack
/// far above the orbit drift bound) selects candidates; only exact checks
/// accept them, so there are no false positives and no missed indices.
std::optional<std::int64_t> find_index(const KroneckerProblem& problem, std::int64_t k_max);

inline constexpr std::int64_t kDefaultSearchCap = 100'000'000;

/// The first `count` certified indices in increasing order. Throws
/// SearchBudgetExceeded (carrying the partial result) if the candidate cap
/// is hit first.
std::vector<std::int64_t> approx_sequence(const KroneckerProblem& problem, std::int64_t count,
                                          std::int64_t cap = kDefaultSearchCap);

/// max over grid^n cell centers c of min_{1<=k<=K} max_j |frac(k*alpha_j) - c_j|.
/// Small values certify empirical orbit density. Diagnostic (plain float
/// orbit with resync); grid^n is capped at 10^7 cells.
double orbit_dispersion(const std::vector<ExactReal>& alphas, std::int64_t K, int grid);

} // namespace semifix
