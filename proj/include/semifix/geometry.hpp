#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace semifix {

/// A point of R^d. Coordinates must stay finite.
struct Vector {
    std::vector<double> coords;

    Vector() = default;
    explicit Vector(std::vector<double> c);
    Vector(std::initializer_list<double> c) : Vector(std::vector<double>(c)) {}

    size_t dim() const { return coords.size(); }
    double& operator[](size_t i) { return coords[i]; }
    double operator[](size_t i) const { return coords[i]; }

    bool operator==(const Vector&) const = default;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double c, const Vector& v);
double dot(const Vector& a, const Vector& b);
Vector zeros(size_t d);

/// Which norm the ambient space carries. Euclidean and Lp (1<p<inf) are
/// strictly and uniformly convex with Frechet-differentiable norm; L1 and
/// LInf are neither.
struct NormKind {
    enum class Tag { Euclidean, L1, LInf, Lp };
    Tag tag = Tag::Euclidean;
    double p = 2.0; // only meaningful for Lp

    static NormKind euclidean() { return {Tag::Euclidean, 2.0}; }
    static NormKind l1() { return {Tag::L1, 1.0}; }
    static NormKind linf() { return {Tag::LInf, 0.0}; }
    static NormKind lp(double p);

    bool strictly_convex() const { return tag == Tag::Euclidean || tag == Tag::Lp; }
    bool uniformly_convex() const { return strictly_convex(); }
    bool frechet_differentiable() const { return strictly_convex(); }
    std::string name() const;
};

double norm(const Vector& v, const NormKind& kind = NormKind::euclidean());
double distance(const Vector& a, const Vector& b, const NormKind& kind = NormKind::euclidean());

/// Convex domain C: the whole space, a Euclidean ball, or an axis box.
/// Membership and metric projection are Euclidean.
struct ConvexSet {
    enum class Shape { WholeSpace, Ball, Box };
    Shape shape = Shape::WholeSpace;
    size_t dimension = 1;
    Vector center; // Ball
    double radius = 0.0;
    Vector lo, hi; // Box

    static ConvexSet whole_space(size_t d);
    static ConvexSet ball(Vector center, double radius);
    static ConvexSet box(Vector lo, Vector hi);

    size_t dim() const { return dimension; }
    bool bounded() const { return shape != Shape::WholeSpace; }
    bool contains(const Vector& v, double tol) const;
    Vector project(const Vector& v) const;
    std::string describe() const;
};

/// Serialization used by configs and CSV: comma-separated decimals.
std::string vector_to_string(const Vector& v);
Vector vector_from_string(const std::string& text);

} // namespace semifix
