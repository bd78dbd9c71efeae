#include "semifix/semigroup.hpp"

#include "semifix/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace semifix {

namespace {
constexpr double kDomainTol = 1e-9;
constexpr double kOrthoTol = 1e-10;
constexpr double kParamBoxHi = 10.0;
} // namespace

Parameter::Parameter(std::vector<double> c) : coords(std::move(c)) {
    for (double x : coords) {
        if (!std::isfinite(x)) throw NegativeParameter("parameter coordinate not finite");
        if (x < 0) throw NegativeParameter("parameter coordinate " + std::to_string(x) + " < 0");
    }
}

Parameter Parameter::unit(size_t n, size_t j) {
    std::vector<double> c(n, 0.0);
    c.at(j) = 1.0;
    return Parameter(std::move(c));
}

Parameter operator+(const Parameter& a, const Parameter& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("parameter dims differ");
    std::vector<double> c(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
    return Parameter(std::move(c));
}

Parameter param_lincomb(const std::vector<double>& coeffs, const std::vector<Parameter>& ps) {
    if (coeffs.size() != ps.size()) throw DimensionMismatch("param_lincomb: size mismatch");
    if (ps.empty()) throw DimensionMismatch("param_lincomb: empty basis");
    std::vector<double> c(ps[0].dim(), 0.0);
    for (size_t j = 0; j < ps.size(); ++j) {
        if (ps[j].dim() != c.size()) throw DimensionMismatch("param_lincomb: mixed dims");
        for (size_t i = 0; i < c.size(); ++i) c[i] += coeffs[j] * ps[j][i];
    }
    return Parameter(std::move(c));
}

// ---------------------------------------------------------------------------
// AffineSubspace

AffineSubspace AffineSubspace::empty_set(size_t ambient_dim) {
    AffineSubspace s;
    s.empty = true;
    s.base = zeros(ambient_dim);
    return s;
}

AffineSubspace AffineSubspace::point(Vector base) {
    AffineSubspace s;
    s.base = std::move(base);
    return s;
}

AffineSubspace AffineSubspace::whole(size_t ambient_dim) {
    std::vector<Vector> basis;
    for (size_t i = 0; i < ambient_dim; ++i) {
        Vector e = zeros(ambient_dim);
        e.coords[i] = 1.0;
        basis.push_back(std::move(e));
    }
    return make(zeros(ambient_dim), std::move(basis));
}

AffineSubspace AffineSubspace::make(Vector base, std::vector<Vector> basis) {
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i; j < basis.size(); ++j) {
            double want = (i == j) ? 1.0 : 0.0;
            if (std::fabs(dot(basis[i], basis[j]) - want) > 1e-12)
                throw Error("AffineSubspace: basis not orthonormal");
        }
    }
    AffineSubspace s;
    s.base = std::move(base);
    s.basis = std::move(basis);
    return s;
}

Vector AffineSubspace::project(const Vector& x) const {
    if (empty) throw Error("AffineSubspace::project on empty set");
    Vector r = x - base;
    Vector out = base;
    for (const auto& b : basis) out = out + dot(r, b) * b;
    return out;
}

double AffineSubspace::distance(const Vector& x) const {
    if (empty) return std::numeric_limits<double>::infinity();
    return semifix::distance(x, project(x));
}

Vector AffineSubspace::sample(Rng& rng, double span) const {
    if (empty) throw Error("AffineSubspace::sample on empty set");
    Vector out = base;
    for (const auto& b : basis) out = out + rng.uniform(-span, span) * b;
    return out;
}

// ---------------------------------------------------------------------------
// Builtin instances

SemigroupInstance make_translation_counterexample() {
    SemigroupInstance sg;
    sg.kind = "translation_counterexample";
    sg.n = 2;
    sg.domain = ConvexSet::whole_space(1);
    sg.evaluator = [](const Parameter& p, const Vector& x) {
        return Vector{x[0] + p[0] - p[1]};
    };
    sg.meta.claims_nonexpansive = true;
    sg.meta.exact_arithmetic_hint = true;
    sg.meta.fixed_set_oracle = [](const Parameter& p) {
        return p[0] == p[1] ? AffineSubspace::whole(1) : AffineSubspace::empty_set(1);
    };
    sg.meta.common_fixed_set = AffineSubspace::empty_set(1);
    return sg;
}

SemigroupInstance make_rotation(double period_seconds, std::optional<ConvexSet> domain) {
    if (!(period_seconds > 0)) throw Error("make_rotation: period must be positive");
    ConvexSet dom = domain.value_or(ConvexSet::whole_space(2));
    if (dom.dim() != 2) throw Error("make_rotation: domain must live in R^2");
    if (dom.shape == ConvexSet::Shape::Box)
        throw Error("make_rotation: box domains are not rotation-invariant");
    if (dom.shape == ConvexSet::Shape::Ball && norm(dom.center) != 0.0)
        throw Error("make_rotation: ball domain must be centered at the origin");

    SemigroupInstance sg;
    sg.kind = "rotation";
    sg.n = 1;
    sg.domain = dom;
    double period = period_seconds;
    sg.evaluator = [period](const Parameter& p, const Vector& x) {
        double angle = 2.0 * M_PI * p[0] / period;
        double c = std::cos(angle), s = std::sin(angle);
        return Vector{c * x[0] - s * x[1], s * x[0] + c * x[1]};
    };
    sg.meta.claims_nonexpansive = true;
    sg.meta.fixed_set_oracle = [period](const Parameter& p) {
        double turns = p[0] / period;
        bool full_turn = std::fabs(turns - std::round(turns)) <= 1e-12;
        return full_turn ? AffineSubspace::whole(2) : AffineSubspace::point(zeros(2));
    };
    sg.meta.common_fixed_set = AffineSubspace::point(zeros(2));
    return sg;
}

SemigroupInstance make_matexp(size_t n, const std::vector<std::vector<double>>& mu,
                              const std::vector<std::vector<double>>& q_rows, const Vector& b) {
    size_t d = b.dim();
    if (mu.size() != n) throw Error("make_matexp: mu must have n rows");
    for (const auto& row : mu) {
        if (row.size() != d) throw Error("make_matexp: mu rows must have d entries");
        for (double v : row)
            if (!(v >= 0)) throw Error("make_matexp: mu entries must be >= 0");
    }
    if (q_rows.size() != d) throw Error("make_matexp: Q must be d x d");
    for (const auto& row : q_rows)
        if (row.size() != d) throw Error("make_matexp: Q must be d x d");
    // Q^T Q = I to 1e-10; columns are the shared eigdirections.
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = i; j < d; ++j) {
            double s = 0;
            for (size_t k = 0; k < d; ++k) s += q_rows[k][i] * q_rows[k][j];
            double want = (i == j) ? 1.0 : 0.0;
            if (std::fabs(s - want) > kOrthoTol) throw Error("make_matexp: Q not orthogonal");
        }
    }

    auto q_col = [q_rows, d](size_t i) {
        Vector col = zeros(d);
        for (size_t k = 0; k < d; ++k) col.coords[k] = q_rows[k][i];
        return col;
    };

    SemigroupInstance sg;
    sg.kind = "matexp";
    sg.n = n;
    sg.domain = ConvexSet::whole_space(d);
    sg.evaluator = [mu, q_rows, b, d, n](const Parameter& p, const Vector& x) {
        // y = Q^T (x - b), scale by exp(-sum_j p_j mu[j][i]), map back.
        std::vector<double> y(d, 0.0);
        for (size_t i = 0; i < d; ++i)
            for (size_t k = 0; k < d; ++k) y[i] += q_rows[k][i] * (x[k] - b[k]);
        for (size_t i = 0; i < d; ++i) {
            double rate = 0;
            for (size_t j = 0; j < n; ++j) rate += p[j] * mu[j][i];
            y[i] *= std::exp(-rate);
        }
        Vector out = b;
        for (size_t k = 0; k < d; ++k)
            for (size_t i = 0; i < d; ++i) out.coords[k] += q_rows[k][i] * y[i];
        return out;
    };
    sg.meta.claims_nonexpansive = true;
    sg.meta.fixed_set_oracle = [mu, q_col, b, d, n](const Parameter& p) {
        std::vector<Vector> basis;
        for (size_t i = 0; i < d; ++i) {
            double rate = 0;
            for (size_t j = 0; j < n; ++j) rate += p[j] * mu[j][i];
            if (rate <= 1e-15) basis.push_back(q_col(i));
        }
        return AffineSubspace::make(b, std::move(basis));
    };
    std::vector<Vector> common_basis;
    for (size_t i = 0; i < d; ++i) {
        bool neutral = true;
        for (size_t j = 0; j < n; ++j)
            if (mu[j][i] != 0.0) neutral = false;
        if (neutral) common_basis.push_back(q_col(i));
    }
    sg.meta.common_fixed_set = AffineSubspace::make(b, std::move(common_basis));
    return sg;
}

SemigroupInstance make_identity(size_t n, ConvexSet domain) {
    SemigroupInstance sg;
    sg.kind = "identity";
    sg.n = n;
    sg.domain = std::move(domain);
    sg.evaluator = [](const Parameter&, const Vector& x) { return x; };
    sg.meta.claims_nonexpansive = true;
    sg.meta.exact_arithmetic_hint = true;
    size_t d = sg.domain.dim();
    sg.meta.fixed_set_oracle = [d](const Parameter&) { return AffineSubspace::whole(d); };
    sg.meta.common_fixed_set = AffineSubspace::whole(d);
    return sg;
}

SemigroupInstance make_broken_quadratic() {
    SemigroupInstance sg;
    sg.kind = "broken_quadratic";
    sg.n = 1;
    sg.domain = ConvexSet::whole_space(1);
    sg.evaluator = [](const Parameter& p, const Vector& x) {
        return Vector{x[0] + p[0] * p[0]};
    };
    sg.meta.claims_nonexpansive = true; // translations are isometric; (sg 1) is what breaks
    return sg;
}

// ---------------------------------------------------------------------------

Vector evaluate(const SemigroupInstance& sg, const Parameter& p, const Vector& x) {
    if (p.dim() != sg.n)
        throw DimensionMismatch("evaluate: parameter has arity " + std::to_string(p.dim()) +
                                ", instance expects " + std::to_string(sg.n));
    if (!sg.domain.contains(x, kDomainTol))
        throw OutOfDomain("evaluate: point outside domain " + sg.domain.describe());
    Vector out = sg.evaluator(p, x);
    if (!sg.domain.contains(out, kDomainTol))
        throw OutOfDomain("evaluate: image escaped domain " + sg.domain.describe());
    return out;
}

Vector power_apply(const SemigroupInstance& sg, const Parameter& p, std::int64_t m,
                   const Vector& x) {
    if (m < 0) throw Error("power_apply: exponent must be >= 0");
    Vector out = x;
    for (std::int64_t i = 0; i < m; ++i) out = evaluate(sg, p, out);
    return out;
}

std::string CheckReport::to_text() const {
    std::ostringstream out;
    out << check << ": " << (pass ? "pass" : "FAIL") << " (samples=" << samples
        << ", max_violation=" << max_violation << ", tol=" << tol << ")";
    if (!worst.empty()) out << " worst at " << worst;
    return out.str();
}

CheckReport check_semigroup_law(const SemigroupInstance& sg, std::int64_t sample_count, double tol,
                                std::uint64_t seed) {
    if (!(tol > 0)) throw Error("check_semigroup_law: tol must be positive");
    Rng rng(seed);
    CheckReport rep;
    rep.check = "semigroup_law(" + sg.kind + ")";
    rep.tol = tol;
    for (std::int64_t i = 0; i < sample_count; ++i) {
        Parameter p(rng.box_point(sg.n, kParamBoxHi));
        Parameter q(rng.box_point(sg.n, kParamBoxHi));
        Vector x = rng.point_in(sg.domain);
        double viol = distance(evaluate(sg, p + q, x), evaluate(sg, p, evaluate(sg, q, x)));
        ++rep.samples;
        if (viol > rep.max_violation) {
            rep.max_violation = viol;
            std::ostringstream w;
            w << "p=(" << vector_to_string(Vector(p.coords)) << ") q=("
              << vector_to_string(Vector(q.coords)) << ") x=(" << vector_to_string(x) << ")";
            rep.worst = w.str();
        }
    }
    rep.pass = rep.max_violation <= tol;
    return rep;
}

CheckReport check_nonexpansive(const SemigroupInstance& sg, std::int64_t sample_count, double tol,
                               const NormKind& norm_kind, std::uint64_t seed) {
    if (!(tol > 0)) throw Error("check_nonexpansive: tol must be positive");
    Rng rng(seed);
    CheckReport rep;
    rep.check = "nonexpansive(" + sg.kind + ", " + norm_kind.name() + ")";
    rep.tol = tol;
    for (std::int64_t i = 0; i < sample_count; ++i) {
        Parameter p(rng.box_point(sg.n, kParamBoxHi));
        Vector x = rng.point_in(sg.domain);
        Vector y = rng.point_in(sg.domain);
        double expansion =
            distance(evaluate(sg, p, x), evaluate(sg, p, y), norm_kind) - distance(x, y, norm_kind);
        double viol = std::max(0.0, expansion);
        ++rep.samples;
        if (viol > rep.max_violation) {
            rep.max_violation = viol;
            std::ostringstream w;
            w << "p=(" << vector_to_string(Vector(p.coords)) << ") x=(" << vector_to_string(x)
              << ") y=(" << vector_to_string(y) << ")";
            rep.worst = w.str();
        }
    }
    rep.pass = rep.max_violation <= tol;
    return rep;
}

double estimate_continuity_modulus(const SemigroupInstance& sg, std::int64_t sample_count,
                                   double h, std::uint64_t seed) {
    Rng rng(seed);
    double modulus = 0;
    for (std::int64_t i = 0; i < sample_count; ++i) {
        Parameter p(rng.box_point(sg.n, kParamBoxHi));
        Vector x = rng.point_in(sg.domain);
        Vector base = evaluate(sg, p, x);
        for (size_t j = 0; j < sg.n; ++j) {
            std::vector<double> shifted = p.coords;
            shifted[j] += h;
            modulus = std::max(modulus, distance(evaluate(sg, Parameter(shifted), x), base) / h);
        }
    }
    return modulus;
}

} // namespace semifix
