#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bordered {

using BigInt = mpz_class;

// Fixed-denominator rational: stores value*Den as a checked 64-bit integer.
template <std::int64_t Den>
class Fixed {
public:
    constexpr Fixed() = default;
    constexpr Fixed(std::int64_t whole) : units_(checked_mul(whole, Den)) {}

    static constexpr Fixed from_units(std::int64_t units) {
        Fixed f;
        f.units_ = units;
        return f;
    }

    constexpr std::int64_t units() const { return units_; }
    constexpr bool is_integer() const { return units_ % Den == 0; }
    constexpr bool is_zero() const { return units_ == 0; }
    double value() const { return static_cast<double>(units_) / static_cast<double>(Den); }

    constexpr Fixed operator-() const { return from_units(checked_mul(units_, -1)); }
    constexpr Fixed& operator+=(Fixed o) { units_ = checked_add(units_, o.units_); return *this; }
    constexpr Fixed& operator-=(Fixed o) { return *this += -o; }
    friend constexpr Fixed operator+(Fixed a, Fixed b) { return a += b; }
    friend constexpr Fixed operator-(Fixed a, Fixed b) { return a -= b; }
    friend constexpr Fixed operator*(Fixed a, std::int64_t k) { return from_units(checked_mul(a.units_, k)); }
    friend constexpr Fixed operator*(std::int64_t k, Fixed a) { return a * k; }

    friend constexpr auto operator<=>(Fixed, Fixed) = default;

    std::string to_string() const;

private:
    static constexpr std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r{};
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
        return r;
    }
    static constexpr std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r{};
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
        return r;
    }

    std::int64_t units_ = 0;
};

using HalfInt = Fixed<2>;
using QuarterInt = Fixed<4>;

enum class EdgeId : std::uint32_t {};

constexpr std::size_t index(EdgeId e) { return static_cast<std::size_t>(e); }
constexpr EdgeId edge_id(std::size_t i) { return static_cast<EdgeId>(i); }

// Sparse exponent vector over edges; never stores zero entries.
class ExpVector {
public:
    using Entry = std::pair<EdgeId, HalfInt>;

    ExpVector() = default;
    static ExpVector unit(EdgeId e, HalfInt power);
    static ExpVector from_entries(std::vector<Entry> entries);

    HalfInt at(EdgeId e) const;
    std::span<const Entry> entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    bool is_integral() const;

    ExpVector operator-() const;
    friend ExpVector operator+(const ExpVector& a, const ExpVector& b);
    friend ExpVector operator-(const ExpVector& a, const ExpVector& b) { return a + (-b); }
    friend ExpVector operator*(const ExpVector& a, std::int64_t k);

    friend bool operator==(const ExpVector&, const ExpVector&) = default;
    // Dense lexicographic order by edge index, missing entries read as zero.
    friend std::strong_ordering operator<=>(const ExpVector& a, const ExpVector& b);

private:
    std::vector<Entry> entries_;
};

// Rank over the rationals of a list of rows.
std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows);

// Antisymmetric integer pairing on edges; defines ω on exponent vectors.
class PoissonMatrix {
public:
    explicit PoissonMatrix(std::size_t size) : size_(size), data_(size * size, 0) {}

    std::size_t size() const { return size_; }
    int at(EdgeId a, EdgeId b) const { return data_[index(a) * size_ + index(b)]; }
    // Adds k to {a,b} and -k to {b,a}.
    void add(EdgeId a, EdgeId b, int k);

    QuarterInt omega(const ExpVector& u, const ExpVector& v) const;
    std::size_t rank() const;
    bool annihilates(const ExpVector& v) const;

    friend bool operator==(const PoissonMatrix&, const PoissonMatrix&) = default;

private:
    std::size_t size_;
    std::vector<int> data_;
};

// Integer Laurent polynomial in q with quarter-integer powers.
class QCoeff {
public:
    QCoeff() = default;
    QCoeff(long c) : QCoeff(BigInt(c)) {}
    QCoeff(const BigInt& c);
    static QCoeff monomial(QuarterInt power, const BigInt& c = 1);
    // ξ = q^2 - q^-2
    static QCoeff xi();

    const std::map<QuarterInt, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<QuarterInt> single_power() const;

    QCoeff conj() const;
    BigInt at_one() const;
    QCoeff shifted(QuarterInt power) const;

    QCoeff operator-() const;
    QCoeff& operator+=(const QCoeff& o);
    QCoeff& operator-=(const QCoeff& o);
    friend QCoeff operator+(QCoeff a, const QCoeff& b) { return a += b; }
    friend QCoeff operator-(QCoeff a, const QCoeff& b) { return a -= b; }
    friend QCoeff operator*(const QCoeff& a, const QCoeff& b);
    friend bool operator==(const QCoeff&, const QCoeff&) = default;

private:
    void add_term(QuarterInt p, const BigInt& c);
    std::map<QuarterInt, BigInt> terms_;
};

// Real values per edge, with explicit absence.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::size_t edges) : values_(edges) {}
    Assignment(std::span<const double> values);

    void set(EdgeId e, double v);
    double at(EdgeId e) const;
    bool has(EdgeId e) const { return index(e) < values_.size() && values_[index(e)].has_value(); }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<std::optional<double>> values_;
};

class AssignmentError : public std::runtime_error {
public:
    explicit AssignmentError(std::vector<EdgeId> missing);
    const std::vector<EdgeId>& missing() const { return missing_; }

private:
    std::vector<EdgeId> missing_;
};

// Commutative Laurent polynomial in e^{Z/2} with integer coefficients.
class LaurentElem {
public:
    LaurentElem() = default;
    LaurentElem(long c) : LaurentElem(BigInt(c)) {}
    LaurentElem(const BigInt& c);
    static LaurentElem monomial(const ExpVector& v, const BigInt& c = 1);

    const std::map<ExpVector, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_positive_coefficients() const;

    LaurentElem operator-() const;
    LaurentElem& operator+=(const LaurentElem& o);
    LaurentElem& operator-=(const LaurentElem& o);
    friend LaurentElem operator+(LaurentElem a, const LaurentElem& b) { return a += b; }
    friend LaurentElem operator-(LaurentElem a, const LaurentElem& b) { return a -= b; }
    friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);
    friend bool operator==(const LaurentElem&, const LaurentElem&) = default;

    void add_term(const ExpVector& v, const BigInt& c);

private:
    std::map<ExpVector, BigInt> terms_;
};

double evaluate(const LaurentElem& a, const Assignment& at);

class ContextError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using TorusContext = std::shared_ptr<const PoissonMatrix>;

// Quantum torus element: Weyl-ordered monomials with q-Laurent coefficients.
class TorusElem {
public:
    explicit TorusElem(TorusContext ctx) : ctx_(std::move(ctx)) {}
    TorusElem(TorusContext ctx, const QCoeff& c);
    static TorusElem monomial(TorusContext ctx, const ExpVector& v, const QCoeff& c = QCoeff(1));

    const TorusContext& context() const { return ctx_; }
    const std::map<ExpVector, QCoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Multiplies every coefficient by q^power.
    TorusElem q_shifted(QuarterInt power) const;
    TorusElem scaled(const QCoeff& c) const;

    TorusElem operator-() const;
    TorusElem& operator+=(const TorusElem& o);
    TorusElem& operator-=(const TorusElem& o);
    friend TorusElem operator+(TorusElem a, const TorusElem& b) { return a += b; }
    friend TorusElem operator-(TorusElem a, const TorusElem& b) { return a -= b; }
    friend bool operator==(const TorusElem& a, const TorusElem& b);

    void add_term(const ExpVector& v, const QCoeff& c);

private:
    void require_same_context(const TorusElem& o) const;
    friend TorusElem torus_mul(const TorusElem& a, const TorusElem& b);

    TorusContext ctx_;
    std::map<ExpVector, QCoeff> terms_;
};

TorusElem torus_mul(const TorusElem& a, const TorusElem& b);
inline TorusElem operator*(const TorusElem& a, const TorusElem& b) { return torus_mul(a, b); }
TorusElem hermitian_conjugate(const TorusElem& a);
LaurentElem classical_limit(const TorusElem& a);
// Weyl-ordered lift of a classical polynomial (every coefficient q-free).
TorusElem weyl_lift(TorusContext ctx, const LaurentElem& a);
// [a,b] = ab - ba
TorusElem commutator(const TorusElem& a, const TorusElem& b);

using EdgeNames = std::span<const std::string>;

std::string render(const ExpVector& v, EdgeNames names);
std::string render(const QCoeff& c);
std::string render(const LaurentElem& a, EdgeNames names);
std::string render(const TorusElem& a, EdgeNames names);

}  // namespace bordered
