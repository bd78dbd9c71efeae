#pragma once

#include "semifix/errors.hpp"
#include "semifix/geometry.hpp"

#include <cstdint>
#include <random>

namespace semifix {

/// Default seed for every sampling path; experiments are deterministic
/// unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Deterministic RNG. Doubles are derived from raw engine output rather
/// than std::uniform_real_distribution so that streams are identical across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0,1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform point of the parameter box [0, hi]^n.
    std::vector<double> box_point(size_t n, double hi) {
        std::vector<double> p(n);
        for (auto& x : p) x = uniform(0.0, hi);
        return p;
    }

    /// Deterministic sample from a convex domain. WholeSpace samples the
    /// box [-10,10]^d; Ball uses rejection from its bounding box.
    Vector point_in(const ConvexSet& c) {
        switch (c.shape) {
            case ConvexSet::Shape::WholeSpace: {
                Vector v = zeros(c.dim());
                for (auto& x : v.coords) x = uniform(-10.0, 10.0);
                return v;
            }
            case ConvexSet::Shape::Box: {
                Vector v = zeros(c.dim());
                for (size_t i = 0; i < c.dim(); ++i) v.coords[i] = uniform(c.lo[i], c.hi[i]);
                return v;
            }
            case ConvexSet::Shape::Ball: {
                for (int tries = 0; tries < 1000; ++tries) {
                    Vector v = c.center;
                    for (auto& x : v.coords) x += uniform(-c.radius, c.radius);
                    if (distance(v, c.center) <= c.radius) return v;
                }
                return c.center;
            }
        }
        throw Error("point_in: unknown shape");
    }

private:
    std::mt19937_64 engine_;
};

} // namespace semifix
