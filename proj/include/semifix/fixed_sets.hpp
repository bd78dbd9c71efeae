#pragma once

#include "semifix/exact_real.hpp"
#include "semifix/kronecker.hpp"
#include "semifix/report.hpp"
#include "semifix/semigroup.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace semifix {

/// The data (p_1..p_n, alpha_1..alpha_n, p_0 = sum alpha_j p_j) with all
/// hypotheses validated: {p_j} independent in the usual sense (exact
/// rational rank; doubles enter as the dyadic rationals they are),
/// {1, alpha_j} independent over Q (exact), and p_0 nonnegative (exact sign
/// of each coordinate).
struct ParameterBasis {
    size_t n = 0;
    std::vector<Parameter> ps;                   // float views
    std::vector<std::vector<Rational>> ps_exact; // n vectors x n coords
    std::vector<ExactReal> alphas;
    std::vector<ExactReal> p0_exact; // n coords
    Parameter p0;                    // floats within 1e-15 of p0_exact
};

ParameterBasis make_basis(const std::vector<std::vector<Rational>>& ps,
                          std::vector<ExactReal> alphas);
ParameterBasis make_basis(const std::vector<Parameter>& ps, std::vector<ExactReal> alphas);

/// Coefficients lambda with sum lambda_j p_j = p, solved exactly over the
/// rationals and rounded to doubles. May be negative.
std::vector<double> decompose(const ParameterBasis& basis, const Parameter& p);

/// A single self-map of a domain, with the norm its residuals are measured
/// in.
struct Mapping {
    std::function<Vector(const Vector&)> apply;
    ConvexSet domain = ConvexSet::whole_space(1);
    std::string label;
    NormKind norm_kind = NormKind::euclidean();
};

/// T(p) as a Mapping.
Mapping map_at(const SemigroupInstance& sg, const Parameter& p, const std::string& label = "");

/// S x = sum_{j=0}^{n} weights[j] * T(p_j) x with p_0 from the basis.
/// Weights must lie in (0,1) and sum to 1 within 1e-12.
Mapping combined_map(const SemigroupInstance& sg, const ParameterBasis& basis,
                     const std::vector<double>& weights);

double residual(const Mapping& m, const Vector& x);
bool is_fixed(const Mapping& m, const Vector& x, double tol);

struct VerifyOptions {
    double kronecker_eps = 1e-3;
    std::int64_t kronecker_k_max = 10'000'000;
    double cone_hi = 10.0;
    double full_hi = 10.0;
    std::uint64_t seed = kDefaultSeed;
};

/// Walks the proof pipeline of the main fixed-set reduction for a candidate
/// common fixed point z and reports each stage:
///   (a) hypothesis: residuals of z under T(p_0..p_n);
///   (b) beta_shift: T(p_0')z = z for p_0' = sum beta_j p_j, plus the
///       identity p_0' = p_0 + ell*(p_1+...+p_n);
///   (c) kronecker_grid: for sampled lambda in [0,1)^n, a certified orbit
///       index k gives T(sum frac(k beta_j) p_j)z = z and closeness to
///       T(sum lambda_j p_j)z within a continuity-modulus bound;
///   (d) cone: T(sum lambda_j p_j)z = z for lambda in [0,cone_hi]^n;
///   (e) full_cone: T(p)z = z for p in [0,full_hi]^n via decompose and the
///       shift m = max_j(floor(|lambda_j|)+1); the basis points p_0..p_n
///       are always included in the sample set, so a passing stage (e)
///       implies a passing stage (a).
/// Kronecker misses in stage (c) are soft failures with diagnostics.
StructuredReport verify_main_theorem(const SemigroupInstance& sg, const ParameterBasis& basis,
                                     const Vector& z, std::int64_t sample_count, double tol,
                                     const VerifyOptions& opts = {});

/// Pointwise check of the fixed-set identity for convex combinations: at
/// every probe x, [residual_S(x) <= tol] must equal
/// [max_j residual_{T_j}(x) <= tol]. Requires a strictly convex norm and a
/// witness common fixed point.
StructuredReport bruck_check(const std::vector<Mapping>& maps, const std::vector<double>& weights,
                             const std::vector<Vector>& probe_points, double tol,
                             const NormKind& norm_kind, const Vector& witness);

/// The two-parameter translation counterexample: S is the identity even
/// though no T(p) with p_1 != p_2 has any fixed point. Verifies the weight
/// identities exactly and probes S and T(e_1) at `probe_count` points of
/// [-1000, 1000].
StructuredReport counterexample_demo(std::int64_t probe_count = 100,
                                     std::uint64_t seed = kDefaultSeed);

/// The exact counterexample weights ((sqrt2+sqrt3+1)/6, (3-sqrt2)/6,
/// (2-sqrt3)/6), exposed for tests.
std::vector<ExactReal> counterexample_weights();

} // namespace semifix
