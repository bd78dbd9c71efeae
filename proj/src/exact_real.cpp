#include "semifix/exact_real.hpp"

#include "semifix/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace semifix {

namespace {

constexpr std::int64_t kMaxRadicand = 1'000'000'000'000; // 1e12

// Splits d = s^2 * m with m square-free. Trial division up to 1e6 plus a
// perfect-square check covers every d <= 1e12: what remains after the trial
// division has at most two prime factors, so it is square-free unless it is
// itself a perfect square.
std::pair<std::int64_t, std::int64_t> extract_square_part(std::int64_t d) {
    std::int64_t s = 1, m = d;
    for (std::int64_t i = 2; i * i <= m && i <= 1'000'000; ++i) {
        while (m % (i * i) == 0) {
            m /= i * i;
            s *= i;
        }
    }
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
    for (std::int64_t c = std::max<std::int64_t>(r - 2, 0); c <= r + 2; ++c) {
        if (c * c == m) {
            s *= c;
            m = 1;
            break;
        }
    }
    return {s, m};
}

BigInt pow2(unsigned bits) { return BigInt(1) << bits; }

} // namespace

ExactReal ExactReal::sqrt_of(std::int64_t d) {
    if (d < 0) throw ParseError("sqrt of negative integer " + std::to_string(d));
    if (d > kMaxRadicand) throw ParseError("radicand too large: " + std::to_string(d));
    if (d == 0) return ExactReal();
    auto [s, m] = extract_square_part(d);
    ExactReal out;
    if (m == 1) {
        out.rational_ = Rational(s);
    } else {
        out.surds_.emplace(m, Rational(s));
    }
    return out;
}

void ExactReal::add_surd(std::int64_t d, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = surds_.find(d);
    if (it == surds_.end()) {
        surds_.emplace(d, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) surds_.erase(it);
    }
}

ExactReal ExactReal::operator-() const {
    ExactReal out;
    out.rational_ = -rational_;
    for (const auto& [d, q] : surds_) out.surds_.emplace(d, -q);
    return out;
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
    ExactReal out = *this;
    out.rational_ += o.rational_;
    for (const auto& [d, q] : o.surds_) out.add_surd(d, q);
    return out;
}

ExactReal ExactReal::operator-(const ExactReal& o) const { return *this + (-o); }

ExactReal ExactReal::operator*(const ExactReal& o) const {
    ExactReal out;
    out.rational_ = rational_ * o.rational_;
    for (const auto& [d, q] : o.surds_) out.add_surd(d, rational_ * q);
    for (const auto& [d, q] : surds_) out.add_surd(d, o.rational_ * q);
    // sqrt(a)*sqrt(b) = g*sqrt((a/g)*(b/g)) with g = gcd(a,b); the factors
    // are coprime and square-free, so their product is square-free.
    for (const auto& [a, qa] : surds_) {
        for (const auto& [b, qb] : o.surds_) {
            std::int64_t g = std::gcd(a, b);
            std::int64_t rest = (a / g) * (b / g);
            Rational c = qa * qb * g;
            if (rest == 1) {
                out.rational_ += c;
            } else {
                out.add_surd(rest, c);
            }
        }
    }
    return out;
}

ExactReal ExactReal::scaled(const Rational& c) const {
    ExactReal out;
    if (c == 0) return out;
    out.rational_ = rational_ * c;
    for (const auto& [d, q] : surds_) out.surds_.emplace(d, q * c);
    return out;
}

std::pair<Rational, Rational> ExactReal::bounds(unsigned frac_bits) const {
    Rational lo = rational_, hi = rational_;
    BigInt scale = pow2(frac_bits);
    BigInt scale2 = scale * scale;
    for (const auto& [d, q] : surds_) {
        // s <= sqrt(d)*2^p < s+1, strict on both sides since d is not a
        // perfect square.
        BigInt s = boost::multiprecision::sqrt(BigInt(d) * scale2);
        Rational slo(s, scale), shi(s + 1, scale);
        if (q > 0) {
            lo += q * slo;
            hi += q * shi;
        } else {
            lo += q * shi;
            hi += q * slo;
        }
    }
    return {lo, hi};
}

int ExactReal::sign() const {
    if (surds_.empty()) return rational_ == 0 ? 0 : (rational_ < 0 ? -1 : 1);
    // Nonempty surd part makes the value irrational, hence nonzero: the
    // refinement below terminates.
    for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = bounds(bits);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (bits > (1u << 20))
            throw Error("sign(): interval refinement failed to separate from zero");
    }
}

BigInt ExactReal::floor() const {
    if (surds_.empty()) return rat_floor(rational_);
    for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = bounds(bits);
        BigInt k = rat_floor(lo);
        if (hi < Rational(k + 1)) return k;
        if (bits > (1u << 20))
            throw Error("floor(): interval refinement failed to separate from an integer");
    }
}

ExactReal ExactReal::fractional_part() const {
    ExactReal out = *this - ExactReal(Rational(floor()));
    if (out.sign() < 0 || (out - ExactReal(1)).sign() >= 0)
        throw Error("fractional_part(): result escaped [0,1)");
    return out;
}

double ExactReal::to_double(double abs_err) const {
    if (!(abs_err > 0)) throw Error("to_double: abs_err must be positive");
    if (surds_.empty()) return rat_to_double(rational_);
    Rational target = rat_from_double(abs_err) / 2;
    for (unsigned bits = 64;; bits *= 2) {
        auto [lo, hi] = bounds(bits);
        if (hi - lo <= target) return rat_to_double((lo + hi) / 2);
        if (bits > (1u << 20)) return rat_to_double((lo + hi) / 2);
    }
}

std::string ExactReal::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rational& q, std::int64_t d) {
        Rational a = rat_abs(q);
        if (first) {
            if (q < 0) out << "-";
            first = false;
        } else {
            out << (q < 0 ? " - " : " + ");
        }
        if (d == 0) {
            out << rat_to_string(a);
        } else if (a == 1) {
            out << "sqrt(" << d << ")";
        } else {
            out << rat_to_string(a) << "*sqrt(" << d << ")";
        }
    };
    if (rational_ != 0) emit(rational_, 0);
    for (const auto& [d, q] : surds_) emit(q, d);
    return out.str();
}

// ---------------------------------------------------------------------------
// Literal parser. Grammar:
//   expr     := ['+'|'-'] term ( ('+'|'-') term )*
//   term     := rational [ '*' surd ] | surd
//   rational := integer [ '/' integer ]
//   surd     := 'sqrt' '(' integer ')'
// Non-square-free radicands are normalized (sqrt(8) -> 2*sqrt(2)).

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad ExactReal literal at offset " + std::to_string(pos) + ": " + why +
                         " in \"" + std::string(text) + "\"");
    }

    BigInt integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    Rational rational() {
        BigInt num = integer();
        if (eat('/')) {
            BigInt den = integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    ExactReal surd() {
        // caller saw "sqrt"
        pos += 4;
        if (!eat('(')) fail("expected '(' after sqrt");
        BigInt d = integer();
        if (!eat(')')) fail("expected ')'");
        if (d > kMaxRadicand) fail("radicand too large");
        return ExactReal::sqrt_of(d.convert_to<std::int64_t>());
    }

    bool at_sqrt() {
        skip_ws();
        return text.substr(pos, 4) == "sqrt";
    }

    ExactReal term() {
        if (at_sqrt()) return surd();
        Rational q = rational();
        if (eat('*')) {
            if (!at_sqrt()) fail("expected sqrt(...) after '*'");
            return surd().scaled(q);
        }
        return ExactReal(q);
    }
};

} // namespace

ExactReal ExactReal::parse(std::string_view text) {
    Cursor cur{text};
    if (cur.done()) cur.fail("empty literal");
    ExactReal acc;
    bool negate = cur.eat('-');
    if (!negate) cur.eat('+');
    ExactReal t = cur.term();
    acc = negate ? -t : t;
    while (!cur.done()) {
        if (cur.eat('+')) {
            acc += cur.term();
        } else if (cur.eat('-')) {
            acc -= cur.term();
        } else {
            cur.fail("expected '+' or '-'");
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Q-linear algebra on coordinate rows in the basis {1} u {sqrt(d)}.

namespace {

// Row-reduces in place and returns the rank.
size_t rational_rank(std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = m[rank][col];
        for (size_t j = col; j < cols; ++j) m[rank][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> coordinate_rows(std::span<const ExactReal> xs,
                                                   bool include_one) {
    std::vector<std::int64_t> ds;
    for (const auto& x : xs)
        for (const auto& [d, q] : x.surd_coeffs()) ds.push_back(d);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

    std::vector<std::vector<Rational>> rows;
    auto push_row = [&](const ExactReal& x) {
        std::vector<Rational> row(1 + ds.size());
        row[0] = x.rational_part();
        for (size_t j = 0; j < ds.size(); ++j) {
            auto it = x.surd_coeffs().find(ds[j]);
            if (it != x.surd_coeffs().end()) row[1 + j] = it->second;
        }
        rows.push_back(std::move(row));
    };
    if (include_one) push_row(ExactReal(1));
    for (const auto& x : xs) push_row(x);
    return rows;
}

} // namespace

bool is_independent_over_Q(std::span<const ExactReal> xs, bool include_one) {
    auto rows = coordinate_rows(xs, include_one);
    size_t count = rows.size();
    if (count == 0) return true;
    return rational_rank(rows) == count;
}

std::optional<std::vector<Rational>> find_rational_relation(std::span<const ExactReal> xs) {
    size_t m = xs.size();
    if (m == 0) return std::nullopt;
    auto rows = coordinate_rows(xs, false);
    size_t cols = rows[0].size();

    // Solve nu^T * rows = 0: row-reduce the transpose (cols x m) and read a
    // null vector from a free column.
    std::vector<std::vector<Rational>> t(cols, std::vector<Rational>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = rows[i][j];

    std::vector<size_t> pivot_col(cols, SIZE_MAX);
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < cols; ++col) {
        size_t pivot = rank;
        while (pivot < cols && t[pivot][col] == 0) ++pivot;
        if (pivot == cols) continue;
        std::swap(t[rank], t[pivot]);
        Rational inv = t[rank][col];
        for (size_t j = 0; j < m; ++j) t[rank][j] /= inv;
        for (size_t i = 0; i < cols; ++i) {
            if (i == rank || t[i][col] == 0) continue;
            Rational f = t[i][col];
            for (size_t j = 0; j < m; ++j) t[i][j] -= f * t[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }

    // Pivot columns by variable index.
    std::vector<bool> is_pivot(m, false);
    for (size_t r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    size_t free_var = SIZE_MAX;
    for (size_t v = 0; v < m; ++v) {
        if (!is_pivot[v]) {
            free_var = v;
            break;
        }
    }
    if (free_var == SIZE_MAX) return std::nullopt; // full column rank: independent

    std::vector<Rational> nu(m);
    nu[free_var] = 1;
    for (size_t r = 0; r < rank; ++r) nu[pivot_col[r]] = -t[r][free_var];
    return nu;
}

} // namespace semifix
