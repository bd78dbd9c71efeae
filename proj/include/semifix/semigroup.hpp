#pragma once

#include "semifix/geometry.hpp"
#include "semifix/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace semifix {

/// A point of the parameter cone [0,inf)^n.
struct Parameter {
    std::vector<double> coords;

    Parameter() = default;
    /// Validates nonnegativity; throws NegativeParameter.
    explicit Parameter(std::vector<double> c);

    size_t dim() const { return coords.size(); }
    double operator[](size_t i) const { return coords[i]; }

    static Parameter unit(size_t n, size_t j); // e_j, 0-based

    bool operator==(const Parameter&) const = default;
};

Parameter operator+(const Parameter& a, const Parameter& b);
/// sum_j coeffs[j] * ps[j]; throws NegativeParameter if a coordinate of the
/// result is negative.
Parameter param_lincomb(const std::vector<double>& coeffs, const std::vector<Parameter>& ps);

/// Affine subspace base + span(basis) with an orthonormal basis, or the
/// empty set. Encodes the fixed-point sets of the builtin instances.
struct AffineSubspace {
    bool empty = false;
    Vector base;
    std::vector<Vector> basis;

    static AffineSubspace empty_set(size_t ambient_dim);
    static AffineSubspace point(Vector base);
    static AffineSubspace whole(size_t ambient_dim);
    /// Checks orthonormality to 1e-12.
    static AffineSubspace make(Vector base, std::vector<Vector> basis);

    size_t ambient_dim() const { return base.dim(); }
    size_t dim() const { return basis.size(); }

    Vector project(const Vector& x) const; // throws on empty
    double distance(const Vector& x) const; // +inf on empty
    Vector sample(Rng& rng, double span = 1.0) const;
};

struct SemigroupMeta {
    bool claims_nonexpansive = true;
    bool exact_arithmetic_hint = false;
    /// F(T(p)) for this instance, when known in closed form.
    std::function<AffineSubspace(const Parameter&)> fixed_set_oracle;
    /// The common fixed set over all parameters, when known.
    std::optional<AffineSubspace> common_fixed_set;
};

/// An n-parameter family p -> T(p) acting on a convex domain.
struct SemigroupInstance {
    std::string kind;
    size_t n = 1;
    ConvexSet domain = ConvexSet::whole_space(1);
    std::function<Vector(const Parameter&, const Vector&)> evaluator;
    SemigroupMeta meta;
};

/// The two-parameter translation family T(l1*e1 + l2*e2)x = x + l1 - l2 on
/// R. No map T(p) with p1 != p2 has a fixed point.
SemigroupInstance make_translation_counterexample();

/// One-parameter rotation of R^2 about the origin, full turn every
/// `period_seconds`. Optional domain must be an origin-centered ball.
SemigroupInstance make_rotation(double period_seconds,
                                std::optional<ConvexSet> domain = std::nullopt);

/// Commuting linear contraction family
///   T(p)x = Q diag(exp(-sum_j p_j mu[j][i])) Q^T (x - b) + b,
/// with mu[j][i] >= 0 (n rows, d columns) and Q orthogonal (d x d,
/// rows of `q_rows`). Fixed sets are affine subspaces known in closed form.
SemigroupInstance make_matexp(size_t n, const std::vector<std::vector<double>>& mu,
                              const std::vector<std::vector<double>>& q_rows, const Vector& b);

SemigroupInstance make_identity(size_t n, ConvexSet domain);

/// Test fixture violating (sg 1): T(p)x = x + p_1^2.
SemigroupInstance make_broken_quadratic();

/// Applies T(p) with validation: p nonnegative and of the right arity,
/// x and the image inside the domain at tolerance 1e-9.
Vector evaluate(const SemigroupInstance& sg, const Parameter& p, const Vector& x);

/// m-fold composition T(p)^m; m = 0 is the identity.
Vector power_apply(const SemigroupInstance& sg, const Parameter& p, std::int64_t m,
                   const Vector& x);

struct CheckReport {
    std::string check;
    bool pass = true;
    std::int64_t samples = 0;
    double max_violation = 0.0;
    double tol = 0.0;
    std::string worst; // description of the worst sample
    std::string to_text() const;
};

/// Samples (p,q,x) from [0,10]^n x domain and reports the largest
/// ||T(p+q)x - T(p)T(q)x||.
CheckReport check_semigroup_law(const SemigroupInstance& sg, std::int64_t sample_count,
                                double tol, std::uint64_t seed = kDefaultSeed);

/// Samples (p,x,y) and reports the largest positive part of
/// ||T(p)x - T(p)y|| - ||x - y|| in the given norm.
CheckReport check_nonexpansive(const SemigroupInstance& sg, std::int64_t sample_count, double tol,
                               const NormKind& norm_kind = NormKind::euclidean(),
                               std::uint64_t seed = kDefaultSeed);

/// Diagnostic, not a pass/fail axiom: largest observed
/// ||T(p+h*e_j)x - T(p)x|| / h over sampled (p,x,j).
double estimate_continuity_modulus(const SemigroupInstance& sg, std::int64_t sample_count,
                                   double h = 1e-3, std::uint64_t seed = kDefaultSeed);

} // namespace semifix
