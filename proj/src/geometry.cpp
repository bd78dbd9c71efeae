#include "semifix/geometry.hpp"

#include "semifix/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace semifix {

Vector::Vector(std::vector<double> c) : coords(std::move(c)) {
    for (double x : coords)
        if (!std::isfinite(x)) throw Error("Vector: non-finite coordinate");
}

static void check_dims(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("vector dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

Vector operator+(const Vector& a, const Vector& b) {
    check_dims(a, b);
    Vector out = a;
    for (size_t i = 0; i < b.dim(); ++i) out.coords[i] += b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    check_dims(a, b);
    Vector out = a;
    for (size_t i = 0; i < b.dim(); ++i) out.coords[i] -= b[i];
    return out;
}

Vector operator*(double c, const Vector& v) {
    Vector out = v;
    for (double& x : out.coords) x *= c;
    return out;
}

double dot(const Vector& a, const Vector& b) {
    check_dims(a, b);
    double s = 0;
    for (size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Vector zeros(size_t d) { return Vector(std::vector<double>(d, 0.0)); }

NormKind NormKind::lp(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) throw Error("NormKind::lp requires 1 < p < inf");
    return {Tag::Lp, p};
}

std::string NormKind::name() const {
    switch (tag) {
        case Tag::Euclidean: return "euclidean";
        case Tag::L1: return "l1";
        case Tag::LInf: return "linf";
        case Tag::Lp: return "lp(" + std::to_string(p) + ")";
    }
    return "?";
}

double norm(const Vector& v, const NormKind& kind) {
    switch (kind.tag) {
        case NormKind::Tag::Euclidean: {
            double s = 0;
            for (double x : v.coords) s += x * x;
            return std::sqrt(s);
        }
        case NormKind::Tag::L1: {
            double s = 0;
            for (double x : v.coords) s += std::fabs(x);
            return s;
        }
        case NormKind::Tag::LInf: {
            double s = 0;
            for (double x : v.coords) s = std::max(s, std::fabs(x));
            return s;
        }
        case NormKind::Tag::Lp: {
            double s = 0;
            for (double x : v.coords) s += std::pow(std::fabs(x), kind.p);
            return std::pow(s, 1.0 / kind.p);
        }
    }
    return 0;
}

double distance(const Vector& a, const Vector& b, const NormKind& kind) {
    return norm(a - b, kind);
}

ConvexSet ConvexSet::whole_space(size_t d) {
    ConvexSet c;
    c.shape = Shape::WholeSpace;
    c.dimension = d;
    return c;
}

ConvexSet ConvexSet::ball(Vector center, double radius) {
    if (!(radius > 0)) throw Error("ConvexSet::ball requires radius > 0");
    ConvexSet c;
    c.shape = Shape::Ball;
    c.dimension = center.dim();
    c.center = std::move(center);
    c.radius = radius;
    return c;
}

ConvexSet ConvexSet::box(Vector lo, Vector hi) {
    check_dims(lo, hi);
    for (size_t i = 0; i < lo.dim(); ++i)
        if (lo[i] > hi[i]) throw Error("ConvexSet::box requires lo <= hi coordinatewise");
    ConvexSet c;
    c.shape = Shape::Box;
    c.dimension = lo.dim();
    c.lo = std::move(lo);
    c.hi = std::move(hi);
    return c;
}

bool ConvexSet::contains(const Vector& v, double tol) const {
    if (v.dim() != dimension) return false;
    switch (shape) {
        case Shape::WholeSpace: return true;
        case Shape::Ball: return distance(v, center) <= radius + tol;
        case Shape::Box:
            for (size_t i = 0; i < dimension; ++i)
                if (v[i] < lo[i] - tol || v[i] > hi[i] + tol) return false;
            return true;
    }
    return false;
}

Vector ConvexSet::project(const Vector& v) const {
    if (v.dim() != dimension) throw DimensionMismatch("project: wrong dimension");
    switch (shape) {
        case Shape::WholeSpace: return v;
        case Shape::Ball: {
            Vector r = v - center;
            double n = norm(r);
            if (n <= radius) return v;
            return center + (radius / n) * r;
        }
        case Shape::Box: {
            Vector out = v;
            for (size_t i = 0; i < dimension; ++i)
                out.coords[i] = std::clamp(out.coords[i], lo[i], hi[i]);
            return out;
        }
    }
    return v;
}

std::string ConvexSet::describe() const {
    switch (shape) {
        case Shape::WholeSpace: return "wholespace:" + std::to_string(dimension);
        case Shape::Ball: {
            std::ostringstream out;
            out << "ball:" << vector_to_string(center) << ":" << radius;
            return out.str();
        }
        case Shape::Box: {
            std::ostringstream out;
            out << "box:" << vector_to_string(lo) << ":" << vector_to_string(hi);
            return out.str();
        }
    }
    return "?";
}

std::string vector_to_string(const Vector& v) {
    std::string out;
    char buf[40];
    for (size_t i = 0; i < v.dim(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", v[i]);
        if (i) out += ",";
        out += buf;
    }
    return out;
}

Vector vector_from_string(const std::string& text) {
    std::vector<double> coords;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        double x;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad vector coordinate \"" + item + "\"");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw ParseError("trailing junk in vector coordinate \"" + item + "\"");
        coords.push_back(x);
    }
    if (coords.empty()) throw ParseError("empty vector literal");
    return Vector(std::move(coords));
}

} // namespace semifix
