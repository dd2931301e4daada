#include "bertini/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace bertini {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // p < 2^31, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw Error("element not invertible mod " + std::to_string(p));
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_ll(long long v, std::uint64_t p) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
}

}  // namespace

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

FieldTag FieldTag::prime_field(std::uint64_t p) {
    if (p == 2)
        throw ConfigError("characteristic 2 is not supported (quadric discriminants degenerate)");
    if (p < 3 || p >= (1ull << 31))
        throw ConfigError("prime modulus must satisfy 3 <= p < 2^31, got " + std::to_string(p));
    if (!is_prime_u64(p))
        throw ConfigError(std::to_string(p) + " is not prime");
    return FieldTag{p};
}

Scalar Scalar::zero(FieldTag tag) {
    if (tag.is_rational()) return Scalar(mpq_class(0));
    return Scalar(FpElem{0, tag.p});
}

Scalar Scalar::one(FieldTag tag) {
    if (tag.is_rational()) return Scalar(mpq_class(1));
    return Scalar(FpElem{1, tag.p});
}

Scalar Scalar::from_int(FieldTag tag, long long v) {
    if (tag.is_rational()) {
        mpq_class q;
        q = static_cast<long>(v);
        return Scalar(std::move(q));
    }
    return Scalar(FpElem{reduce_ll(v, tag.p), tag.p});
}

Scalar Scalar::rational(mpq_class v) {
    v.canonicalize();
    return Scalar(std::move(v));
}

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw Error("zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::residue(std::uint64_t p, std::uint64_t r) {
    return Scalar(FpElem{r % p, p});
}

FieldTag Scalar::tag() const {
    if (std::holds_alternative<mpq_class>(v_)) return FieldTag::rationals();
    return FieldTag{std::get<FpElem>(v_).p};
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<FpElem>(v_).r == 0;
}

bool Scalar::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    return std::get<FpElem>(v_).r == 1;
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
    if (a.tag() != b.tag())
        throw FieldMismatchError("mixed domains: " + a.tag().str() + " vs " + b.tag().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return Scalar(mpq_class(*q + std::get<mpq_class>(o.v_)));
    const auto& a = std::get<FpElem>(v_);
    const auto& b = std::get<FpElem>(o.v_);
    return Scalar(FpElem{addmod(a.r, b.r, a.p), a.p});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return Scalar(mpq_class(*q * std::get<mpq_class>(o.v_)));
    const auto& a = std::get<FpElem>(v_);
    const auto& b = std::get<FpElem>(o.v_);
    return Scalar(FpElem{mulmod(a.r, b.r, a.p), a.p});
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
    const auto& a = std::get<FpElem>(v_);
    return Scalar(FpElem{a.r == 0 ? 0 : a.p - a.r, a.p});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
    const auto& a = std::get<FpElem>(v_);
    return Scalar(FpElem{invmod(a.r, a.p), a.p});
}

Scalar Scalar::pow(unsigned e) const {
    Scalar acc = Scalar::one(tag());
    Scalar base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == std::get<mpq_class>(o.v_);
    return std::get<FpElem>(v_).r == std::get<FpElem>(o.v_).r;
}

int Scalar::compare(const Scalar& o) const {
    require_same(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_)) return cmp(*q, std::get<mpq_class>(o.v_));
    std::uint64_t a = std::get<FpElem>(v_).r, b = std::get<FpElem>(o.v_).r;
    return a < b ? -1 : (a > b ? 1 : 0);
}

std::string Scalar::str() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<FpElem>(v_).r);
}

const mpq_class& Scalar::rat() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
    throw FieldMismatchError("rational value requested from a prime-field scalar");
}

std::uint64_t Scalar::res() const {
    if (const auto* e = std::get_if<FpElem>(&v_)) return e->r;
    throw FieldMismatchError("residue requested from a rational scalar");
}

Scalar Scalar::parse(FieldTag tag, std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    std::size_t start = i;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t digits_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_begin) throw ParseError("expected integer", start);
    std::string num(text.substr(digits_begin, i - digits_begin));

    std::string den;
    if (i < text.size() && text[i] == '/') {
        if (!tag.is_rational())
            throw ParseError("fractional coefficient not valid over " + tag.str(), i);
        ++i;
        std::size_t db = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == db) throw ParseError("expected denominator", db);
        den = std::string(text.substr(db, i - db));
        if (den.find_first_not_of('0') == std::string::npos)
            throw ParseError("zero denominator", db);
    }
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters after scalar", i);

    if (tag.is_rational()) {
        mpq_class q(den.empty() ? num : num + "/" + den);
        q.canonicalize();
        if (neg) q = -q;
        return Scalar::rational(std::move(q));
    }
    mpz_class z(num);
    mpz_class m(static_cast<unsigned long>(tag.p));
    mpz_class r = z % m;
    std::uint64_t rr = r.get_ui();
    if (neg && rr != 0) rr = tag.p - rr;
    return Scalar::residue(tag.p, rr);
}

}  // namespace bertini
