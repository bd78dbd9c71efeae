#include "semifix/kronecker.hpp"

#include "semifix/errors.hpp"

#include <algorithm>
#include <cmath>

namespace semifix {

KroneckerProblem::KroneckerProblem(std::vector<ExactReal> alphas_in,
                                   std::vector<double> target_in, double eps_in)
    : alphas(std::move(alphas_in)), target(std::move(target_in)), eps(eps_in) {
    if (alphas.empty()) throw Error("KroneckerProblem: need at least one alpha");
    if (target.size() != alphas.size())
        throw DimensionMismatch("KroneckerProblem: target arity mismatch");
    if (!(eps > 0)) throw Error("KroneckerProblem: eps must be positive");
    for (double t : target)
        if (!(t >= 0.0) || !(t < 1.0)) throw Error("KroneckerProblem: target must lie in [0,1)");
    if (!is_independent_over_Q(alphas, /*include_one=*/true))
        throw IndependenceViolated("KroneckerProblem: {1, alphas} is dependent over Q");
}

BetaShift beta_shift(const std::vector<ExactReal>& alphas) {
    if (alphas.empty()) throw Error("beta_shift: empty alphas");
    if (!is_independent_over_Q(alphas, /*include_one=*/true))
        throw IndependenceViolated("beta_shift: {1, alphas} is dependent over Q");
    BigInt ell_big = 0;
    for (const auto& a : alphas) ell_big = std::max(ell_big, BigInt(a.floor_abs() + 1));
    std::int64_t ell = ell_big.convert_to<std::int64_t>();
    BetaShift out;
    out.ell = ell;
    for (const auto& a : alphas) {
        ExactReal beta = a + ExactReal(ell);
        if (beta.sign() <= 0) throw Error("beta_shift: beta not positive (internal)");
        out.betas.push_back(std::move(beta));
    }
    // The paper's argument shows the shift preserves independence; we assert
    // it exactly rather than trust it.
    if (!is_independent_over_Q(out.betas, /*include_one=*/true))
        throw IndependenceViolated("beta_shift: {1, betas} lost independence (internal)");
    return out;
}

FracOrbit::FracOrbit(std::vector<ExactReal> alphas) : alphas_(std::move(alphas)) {
    addends_.reserve(alphas_.size());
    for (const auto& a : alphas_) addends_.push_back(a.fractional_part().to_double(1e-17));
    fracs_.assign(alphas_.size(), 0.0);
}

void FracOrbit::advance() {
    ++k_;
    for (size_t j = 0; j < fracs_.size(); ++j) {
        fracs_[j] += addends_[j];
        if (fracs_[j] >= 1.0) fracs_[j] -= 1.0;
    }
    if (k_ % kResyncEvery == 0) fracs_ = exact_fracs(alphas_, k_);
}

std::vector<double> exact_fracs(const std::vector<ExactReal>& alphas, std::int64_t k,
                                double abs_err) {
    std::vector<double> out;
    out.reserve(alphas.size());
    Rational kk(k);
    for (const auto& a : alphas) out.push_back(a.scaled(kk).fractional_part().to_double(abs_err));
    return out;
}

bool certify_hit(const std::vector<ExactReal>& alphas, std::int64_t k,
                 const std::vector<double>& target, double eps) {
    Rational kk(k);
    ExactReal eps_exact{rat_from_double(eps)};
    for (size_t j = 0; j < alphas.size(); ++j) {
        ExactReal diff = alphas[j].scaled(kk).fractional_part() -
                         ExactReal(rat_from_double(target[j]));
        if ((diff - eps_exact).sign() >= 0) return false;
        if ((diff + eps_exact).sign() <= 0) return false;
    }
    return true;
}

namespace {

// Torus distance never exceeds the plain |a-b| distance, so prefiltering on
// it cannot drop a true hit even when the incremental orbit mis-wraps near
// the 0/1 boundary.
double torus_dist(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, 1.0 - d);
}

constexpr double kPrefilterSlack = 1e-9;

std::optional<std::int64_t> scan(const KroneckerProblem& problem, std::int64_t k_max,
                                 FracOrbit& orbit) {
    double cutoff = problem.eps + kPrefilterSlack + FracOrbit::kDriftBound;
    while (orbit.k() < k_max) {
        orbit.advance();
        bool candidate = true;
        const auto& fr = orbit.fracs();
        for (size_t j = 0; j < fr.size() && candidate; ++j)
            candidate = torus_dist(fr[j], problem.target[j]) < cutoff;
        if (candidate && certify_hit(problem.alphas, orbit.k(), problem.target, problem.eps))
            return orbit.k();
    }
    return std::nullopt;
}

} // namespace

std::optional<std::int64_t> find_index(const KroneckerProblem& problem, std::int64_t k_max) {
    FracOrbit orbit(problem.alphas);
    return scan(problem, k_max, orbit);
}

std::vector<std::int64_t> approx_sequence(const KroneckerProblem& problem, std::int64_t count,
                                          std::int64_t cap) {
    std::vector<std::int64_t> hits;
    FracOrbit orbit(problem.alphas);
    while (std::ssize(hits) < count) {
        auto k = scan(problem, cap, orbit);
        if (!k) {
            throw SearchBudgetExceeded("approx_sequence: candidate cap " + std::to_string(cap) +
                                           " reached with " + std::to_string(hits.size()) + "/" +
                                           std::to_string(count) + " hits",
                                       hits);
        }
        hits.push_back(*k);
    }
    return hits;
}

double orbit_dispersion(const std::vector<ExactReal>& alphas, std::int64_t K, int grid) {
    if (K < 1) throw Error("orbit_dispersion: K must be >= 1");
    if (grid < 2) throw Error("orbit_dispersion: grid must be >= 2");
    size_t n = alphas.size();
    double cells_f = std::pow(static_cast<double>(grid), static_cast<double>(n));
    if (cells_f > 1e7) throw Error("orbit_dispersion: grid^n too large");
    std::int64_t cells = static_cast<std::int64_t>(cells_f);

    // Materialize the orbit once, then sweep it per cell center.
    std::vector<double> orbit_pts;
    orbit_pts.reserve(static_cast<size_t>(K) * n);
    FracOrbit orbit{alphas};
    for (std::int64_t k = 0; k < K; ++k) {
        orbit.advance();
        for (double f : orbit.fracs()) orbit_pts.push_back(f);
    }

    double dispersion = 0.0;
    std::vector<double> center(n);
    for (std::int64_t c = 0; c < cells; ++c) {
        std::int64_t idx = c;
        for (size_t j = 0; j < n; ++j) {
            center[j] = (static_cast<double>(idx % grid) + 0.5) / grid;
            idx /= grid;
        }
        double best = 2.0;
        const double* pt = orbit_pts.data();
        for (std::int64_t k = 0; k < K; ++k, pt += n) {
            double dev = 0.0;
            for (size_t j = 0; j < n; ++j) dev = std::max(dev, std::fabs(pt[j] - center[j]));
            best = std::min(best, dev);
            if (best == 0.0) break;
        }
        dispersion = std::max(dispersion, best);
    }
    return dispersion;
}

} // namespace semifix
