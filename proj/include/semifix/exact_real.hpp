#pragma once

#include "semifix/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semifix {

/// A number of the form q0 + sum_i qi * sqrt(di) with qi rational and di
/// distinct square-free integers > 1. The representation is canonical (no
/// zero coefficients), and since square roots of distinct square-free
/// integers are linearly independent over Q together with 1, equality of
/// canonical forms is exact equality of real numbers.
///
/// All comparisons, floors and fractional parts are certified: decided by
/// exact rational arithmetic where possible, otherwise by interval
/// refinement that terminates because a non-rational value keeps a positive
/// distance from every rational it is compared against.
class ExactReal {
public:
    ExactReal() = default;
    ExactReal(const Rational& q) : rational_(q) {}
    ExactReal(long long n) : rational_(n) {}

    /// sqrt(d) for integer d >= 0, normalized: sqrt(8) becomes 2*sqrt(2),
    /// sqrt(4) becomes 2. Throws ParseError for negative or oversized d.
    static ExactReal sqrt_of(std::int64_t d);

    /// Parses literals like "1/6 + 2/3*sqrt(2) - sqrt(3)".
    static ExactReal parse(std::string_view text);

    const Rational& rational_part() const { return rational_; }
    const std::map<std::int64_t, Rational>& surd_coeffs() const { return surds_; }

    bool is_rational() const { return surds_.empty(); }
    bool is_integer() const { return surds_.empty() && rat_is_integer(rational_); }
    bool is_zero() const { return surds_.empty() && rational_ == 0; }

    ExactReal operator-() const;
    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator*(const ExactReal& o) const;
    ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
    ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }

    /// Multiplication by a rational scalar.
    ExactReal scaled(const Rational& c) const;

    bool operator==(const ExactReal& o) const {
        return rational_ == o.rational_ && surds_ == o.surds_;
    }

    /// Exact sign: -1, 0, +1.
    int sign() const;
    bool operator<(const ExactReal& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const ExactReal& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const ExactReal& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const ExactReal& o) const { return (*this - o).sign() >= 0; }

    ExactReal abs() const { return sign() < 0 ? -*this : *this; }

    /// Greatest integer not exceeding the value. Certified.
    BigInt floor() const;
    /// floor(|x|), the form the proofs use.
    BigInt floor_abs() const { return abs().floor(); }
    /// x - floor(x), exact; lies in [0,1).
    ExactReal fractional_part() const;

    /// A double within abs_err of the true value (abs_err > 0). For
    /// abs_err below a few ulps the result is the nearest representable
    /// value the enclosure can certify.
    double to_double(double abs_err) const;

    /// Certified enclosure: lo <= value <= hi with hi - lo bounded by
    /// 2^-frac_bits times the sum of |surd coefficients|.
    std::pair<Rational, Rational> bounds(unsigned frac_bits) const;

    /// Canonical literal, reparseable by parse().
    std::string str() const;

private:
    void add_surd(std::int64_t d, const Rational& coeff);

    Rational rational_;
    std::map<std::int64_t, Rational> surds_;
};

inline ExactReal add(const ExactReal& x, const ExactReal& y) { return x + y; }
inline ExactReal scale(const ExactReal& x, const Rational& c) { return x.scaled(c); }
inline BigInt floor(const ExactReal& x) { return x.floor(); }
inline ExactReal fractional_part(const ExactReal& x) { return x.fractional_part(); }
inline double to_float(const ExactReal& x, double abs_err) { return x.to_double(abs_err); }

/// True iff the given reals (optionally together with the constant 1) admit
/// no nontrivial integer relation. Decided exactly via the rank of the
/// rational coordinate matrix in the basis {1} u {sqrt(d)}.
bool is_independent_over_Q(std::span<const ExactReal> xs, bool include_one);

/// A nontrivial rational relation sum_i nu_i * xs[i] = 0 if one exists.
std::optional<std::vector<Rational>> find_rational_relation(std::span<const ExactReal> xs);

} // namespace semifix
