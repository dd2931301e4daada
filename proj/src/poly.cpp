#include "bertini/poly.hpp"

#include <cctype>

namespace bertini {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // equal degree: a < b iff the rightmost index where they differ has
    // a larger exponent in a
    for (std::size_t j = a.size(); j-- > 0;) {
        if (a[j] != b[j]) return a[j] > b[j];
    }
    return false;
}

MultiPoly MultiPoly::constant(FieldTag tag, unsigned nvars, const Scalar& c) {
    MultiPoly p(tag, nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(FieldTag tag, unsigned nvars, unsigned i) {
    if (i >= nvars) throw ShapeError("variable index out of range");
    MultiPoly p(tag, nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, Scalar::one(tag));
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != nvars_) throw ShapeError("exponent vector length mismatch");
    if (c.tag() != tag_)
        throw FieldMismatchError("coefficient domain " + c.tag().str() +
                                 " differs from polynomial domain " + tag_.str());
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(tag_) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (tag_ != o.tag_ || nvars_ != o.nvars_)
        throw FieldMismatchError("polynomial sum across incompatible rings");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (tag_ != o.tag_ || nvars_ != o.nvars_)
        throw FieldMismatchError("polynomial difference across incompatible rings");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (tag_ != o.tag_ || nvars_ != o.nvars_)
        throw FieldMismatchError("polynomial product across incompatible rings");
    MultiPoly r(tag_, nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (unsigned j = 0; j < nvars_; ++j) m[j] = ma[j] + mb[j];
            r.add_term(m, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(tag_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.add_term(m, a * c);
    return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& mm) const {
    if (mm.size() != nvars_) throw ShapeError("exponent vector length mismatch");
    MultiPoly r(tag_, nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial t(nvars_);
        for (unsigned j = 0; j < nvars_; ++j) t[j] = m[j] + mm[j];
        r.add_term(t, c);
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (tag_ != o.tag_ || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

MultiPoly MultiPoly::partial(unsigned i) const {
    if (i >= nvars_) throw ShapeError("partial with respect to an unknown variable");
    MultiPoly r(tag_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial t = m;
        t[i] -= 1;
        r.add_term(t, c * Scalar::from_int(tag_, static_cast<long long>(m[i])));
    }
    return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& pt) const {
    if (pt.size() != nvars_) throw ShapeError("point length differs from variable count");
    for (const auto& v : pt)
        if (v.tag() != tag_) throw FieldMismatchError("point domain differs from polynomial domain");
    Scalar acc = Scalar::zero(tag_);
    for (const auto& [m, c] : terms_) {
        Scalar v = c;
        for (unsigned j = 0; j < nvars_; ++j) {
            if (m[j] == 0) continue;
            v = v * pt[j].pow(m[j]);
        }
        acc += v;
    }
    return acc;
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0u;
    unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return std::nullopt;
    return d;
}

MultiPoly MultiPoly::linear_change(const Matrix& t) const {
    if (t.rows() != nvars_ || t.cols() != nvars_)
        throw ShapeError("coordinate change must be square of size nvars");
    if (t.tag() != tag_) throw FieldMismatchError("transform domain differs");
    if (t.det().is_zero()) throw InvalidTransformError("coordinate change is singular");

    std::vector<MultiPoly> forms;  // image of each variable
    forms.reserve(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        MultiPoly f(tag_, nvars_);
        for (unsigned j = 0; j < nvars_; ++j) {
            Monomial m(nvars_, 0);
            m[j] = 1;
            f.add_term(m, t.at(i, j));
        }
        forms.push_back(std::move(f));
    }
    MultiPoly r(tag_, nvars_);
    for (const auto& [m, c] : terms_) {
        MultiPoly prod = MultiPoly::constant(tag_, nvars_, c);
        for (unsigned j = 0; j < nvars_; ++j)
            for (unsigned e = 0; e < m[j]; ++e) prod = prod * forms[j];
        r = r + prod;
    }
    return r;
}

MultiPoly MultiPoly::dehomogenize_chart(unsigned chart) const {
    if (chart >= nvars_) throw ShapeError("chart index out of range");
    if (!homogeneous_degree())
        throw NonHomogeneousError("dehomogenization requires a homogeneous form");
    MultiPoly r(tag_, nvars_ - 1);
    for (const auto& [m, c] : terms_) {
        Monomial t(nvars_ - 1);
        for (unsigned j = 0; j < nvars_; ++j) {
            if (j == chart) continue;
            t[j < chart ? j : j - 1] = m[j];
        }
        r.add_term(t, c);
    }
    return r;
}

MultiPoly::EulerVerdict MultiPoly::euler_check() const {
    auto deg = homogeneous_degree();
    if (!deg) throw NonHomogeneousError("Euler identity requires a homogeneous form");
    if (!tag_.is_rational() && *deg % tag_.p == 0) return EulerVerdict::inapplicable;
    MultiPoly lhs(tag_, nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        Monomial xi(nvars_, 0);
        xi[i] = 1;
        lhs = lhs + partial(i).times_monomial(xi);
    }
    MultiPoly rhs = scaled(Scalar::from_int(tag_, static_cast<long long>(*deg)));
    return lhs == rhs ? EulerVerdict::holds : EulerVerdict::fails;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mon;
        for (unsigned j = 0; j < nvars_; ++j) {
            if (m[j] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += "x" + std::to_string(j);
            if (m[j] > 1) mon += "^" + std::to_string(m[j]);
        }
        bool neg = tag_.is_rational() && sgn(c.rat()) < 0;
        Scalar mag = neg && !first ? -c : c;
        std::string cs = mag.str();
        std::string body;
        if (mon.empty())
            body = cs;
        else if (mag.is_one())
            body = mon;
        else
            body = cs + "*" + mon;
        if (first) {
            out = body;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    std::size_t pos() {
        skip_ws();
        return i;
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string read_uint() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected an unsigned integer", start);
        return s.substr(start, i - start);
    }
};

struct PolyParser {
    Lexer lx;
    unsigned nvars;
    FieldTag tag;

    MultiPoly run() {
        MultiPoly acc(tag, nvars);
        parse_term(acc, false);
        while (!lx.eof()) {
            std::size_t p = lx.pos();
            bool minus;
            if (lx.accept('+'))
                minus = false;
            else if (lx.accept('-'))
                minus = true;
            else
                throw ParseError("expected '+' or '-' between terms", p);
            parse_term(acc, minus);
        }
        return acc;
    }

    // one term, added into acc with an optional external minus sign
    void parse_term(MultiPoly& acc, bool negate) {
        std::size_t start = lx.pos();
        if (lx.eof()) throw ParseError("expected a term", start);

        Scalar c = Scalar::one(tag);
        bool saw_coeff = false;
        char head = lx.peek();
        if (head == '+' || head == '-' || std::isdigit(static_cast<unsigned char>(head))) {
            c = parse_coeff();
            saw_coeff = true;
        }
        Monomial m(nvars, 0);
        bool saw_factor = false;
        if (!saw_coeff) {
            parse_factor(m);
            saw_factor = true;
        }
        while (true) {
            if (!lx.accept('*')) break;
            if (lx.eof()) throw ParseError("expected a factor after '*'", lx.pos());
            parse_factor(m);
            saw_factor = true;
        }
        if (!saw_coeff && !saw_factor) throw ParseError("expected a term", start);
        if (negate) c = -c;
        acc.add_term(m, c);
    }

    Scalar parse_coeff() {
        std::size_t start = lx.pos();
        bool neg = false;
        if (lx.accept('-'))
            neg = true;
        else
            lx.accept('+');
        std::string num = lx.read_uint();
        std::string text = (neg ? "-" : "") + num;
        if (lx.peek() == '/') {
            std::size_t slash = lx.pos();
            if (!tag.is_rational())
                throw ParseError("fractional coefficient not valid over " + tag.str(), slash);
            lx.accept('/');
            std::string den = lx.read_uint();
            if (den.find_first_not_of('0') == std::string::npos)
                throw ParseError("zero denominator", slash + 1);
            text += "/" + den;
        }
        try {
            return Scalar::parse(tag, text);
        } catch (const ParseError&) {
            throw ParseError("invalid coefficient", start);
        }
    }

    void parse_factor(Monomial& m) {
        std::size_t p = lx.pos();
        if (!lx.accept('x')) throw ParseError("expected a variable", p);
        std::size_t idx_pos = lx.pos();
        unsigned long idx = std::stoul(lx.read_uint());
        if (idx >= nvars)
            throw ParseError("unknown variable x" + std::to_string(idx) + " (nvars = " +
                                 std::to_string(nvars) + ")",
                             idx_pos);
        unsigned e = 1;
        if (lx.accept('^')) {
            std::size_t e_pos = lx.pos();
            unsigned long ev = std::stoul(lx.read_uint());
            if (ev > 64) throw ParseError("exponent too large", e_pos);
            e = static_cast<unsigned>(ev);
        }
        m[idx] += e;
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, unsigned nvars, FieldTag tag) {
    PolyParser p{Lexer{text}, nvars, tag};
    return p.run();
}

MultiPoly reduce_mod_p(const MultiPoly& p, std::uint64_t prime) {
    if (!p.tag().is_rational())
        throw FieldMismatchError("reduction mod p expects a rational polynomial");
    FieldTag fp = FieldTag::prime_field(prime);
    mpz_class m(static_cast<unsigned long>(prime));
    MultiPoly r(fp, p.nvars());
    for (const auto& [mon, c] : p.terms()) {
        const mpq_class& q = c.rat();
        if (mpz_divisible_p(q.get_den().get_mpz_t(), m.get_mpz_t()))
            throw ConfigError("prime " + std::to_string(prime) +
                              " divides the denominator of coefficient " + q.get_str());
        mpz_class num = q.get_num() % m;
        mpz_class den = q.get_den() % m;
        std::uint64_t nr = num.get_si() < 0 ? prime - static_cast<std::uint64_t>(-num.get_si())
                                            : static_cast<std::uint64_t>(num.get_si());
        std::uint64_t dr = static_cast<std::uint64_t>(den.get_ui());
        Scalar v = Scalar::residue(prime, nr) * Scalar::residue(prime, dr).inverse();
        r.add_term(mon, v);
    }
    return r;
}

std::uint64_t FpPoly::eval(const std::uint64_t* pt) const {
    unsigned __int128 acc = 0;
    const std::size_t nterms = coeffs.size();
    for (std::size_t t = 0; t < nterms; ++t) {
        std::uint64_t v = coeffs[t];
        const unsigned* e = &exps[t * nvars];
        for (unsigned j = 0; j < nvars; ++j) {
            for (unsigned k = 0; k < e[j]; ++k)
                v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * pt[j]) % p);
        }
        acc += v;
    }
    return static_cast<std::uint64_t>(acc % p);
}

FpPoly compile_fp(const MultiPoly& p) {
    if (p.tag().is_rational())
        throw FieldMismatchError("compile_fp expects a prime-field polynomial");
    FpPoly f;
    f.p = p.tag().p;
    f.nvars = p.nvars();
    for (const auto& [m, c] : p.terms()) {
        f.coeffs.push_back(c.res());
        for (unsigned j = 0; j < f.nvars; ++j) f.exps.push_back(m[j]);
    }
    return f;
}

}  // namespace bertini
