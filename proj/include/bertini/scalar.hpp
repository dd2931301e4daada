#ifndef BERTINI_SCALAR_HPP
#define BERTINI_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "bertini/errors.hpp"

namespace bertini {

/*
 * Coefficient domain: the rationals, or a prime field F_p with p an odd
 * prime.  p = 2 is rejected because the discriminant of a quadric (the
 * symmetric matrix with doubled diagonal) degenerates in characteristic 2.
 */
struct FieldTag {
    std::uint64_t p = 0;  // 0 encodes the rationals

    static FieldTag rationals() { return FieldTag{0}; }
    static FieldTag prime_field(std::uint64_t p);  // validates: odd prime, 3 <= p < 2^31

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldTag&) const = default;

    std::string str() const { return is_rational() ? "Q" : "F" + std::to_string(p); }
};

/// An exact field element: a reduced fraction of arbitrary-precision
/// integers, or a residue in [0, p).  All arithmetic is exact.
class Scalar {
public:
    static Scalar zero(FieldTag tag);
    static Scalar one(FieldTag tag);
    static Scalar from_int(FieldTag tag, long long v);
    static Scalar rational(mpq_class v);             // canonicalizes
    static Scalar rational(long long num, long long den);
    static Scalar residue(std::uint64_t p, std::uint64_t r);

    /// Strict parse of a whole scalar token: "int" or, over Q, "int/uint".
    static Scalar parse(FieldTag tag, std::string_view text);

    FieldTag tag() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Three-way comparison in a fixed total order (for deterministic
    /// sorting only; the order on F_p is the residue order).
    int compare(const Scalar& o) const;

    std::string str() const;

    const mpq_class& rat() const;  // requires rational domain
    std::uint64_t res() const;     // requires prime-field domain

private:
    struct FpElem {
        std::uint64_t r;
        std::uint64_t p;
    };
    std::variant<mpq_class, FpElem> v_;

    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(FpElem e) : v_(e) {}
    static void require_same(const Scalar& a, const Scalar& b);
};

/// true iff p is a prime number (trial division; intended for moduli < 2^31).
bool is_prime_u64(std::uint64_t p);

}  // namespace bertini

#endif  // BERTINI_SCALAR_HPP
