#include "bertini/variety.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bertini/linear_system.hpp"

namespace bertini {

VarietySpec::VarietySpec(FieldTag tag, unsigned n, unsigned dim, std::string label,
                         std::vector<MultiPoly> generators)
    : tag_(tag), n_(n), dim_(dim), label_(std::move(label)), generators_(std::move(generators)) {
    if (dim_ > n_) throw ConfigError("variety dimension exceeds the ambient dimension");
    if (generators_.size() != static_cast<std::size_t>(n_ - dim_))
        throw ConfigError("complete intersection needs exactly n - dim generators, got " +
                          std::to_string(generators_.size()));
    for (const auto& g : generators_) {
        if (g.tag() != tag_) throw FieldMismatchError("generator domain differs from variety");
        if (g.nvars() != n_ + 1) throw ConfigError("generator variable count differs from n+1");
        auto d = g.homogeneous_degree();
        if (g.is_zero() || !d || *d == 0)
            throw ConfigError("generators must be nonzero homogeneous forms of positive degree");
    }
}

bool VarietySpec::contains(const std::vector<Scalar>& coords) const {
    for (const auto& g : generators_)
        if (!g.eval(coords).is_zero()) return false;
    return true;
}

Matrix VarietySpec::jacobian_at(const ProjPoint& x) const {
    Matrix j(tag_, codim(), n_ + 1);
    for (std::size_t k = 0; k < generators_.size(); ++k)
        for (unsigned v = 0; v <= n_; ++v)
            j.set(k, v, generators_[k].partial(v).eval(x.coords()));
    return j;
}

VarietySpec VarietySpec::reduced_mod_p(std::uint64_t prime) const {
    if (!tag_.is_rational()) {
        if (tag_.p != prime)
            throw FieldMismatchError("variety already lives over " + tag_.str());
        return *this;
    }
    std::vector<MultiPoly> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_) gens.push_back(reduce_mod_p(g, prime));
    return VarietySpec(FieldTag::prime_field(prime), n_, dim_, label_, std::move(gens));
}

// ---------------------------------------------------------------------------
// JSON files

VarietySpec variety_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("variety file is not valid JSON: ") + e.what());
    }
    try {
        unsigned n = j.at("n").get<unsigned>();
        unsigned dim = j.at("dim").get<unsigned>();
        std::string label = j.value("label", std::string("X"));
        std::vector<MultiPoly> gens;
        for (const auto& s : j.at("generators"))
            gens.push_back(parse_poly(s.get<std::string>(), n + 1, FieldTag::rationals()));
        return VarietySpec(FieldTag::rationals(), n, dim, label, std::move(gens));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed variety file: ") + e.what());
    }
}

VarietySpec load_variety_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open variety file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return variety_from_json_text(ss.str());
}

std::string variety_to_json_text(const VarietySpec& X) {
    nlohmann::ordered_json j;
    j["n"] = X.n();
    j["dim"] = X.dim();
    j["label"] = X.label();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& g : X.generators()) arr.push_back(g.str());
    j["generators"] = arr;
    return j.dump();
}

// ---------------------------------------------------------------------------
// enumeration

ProjPoint FpPointSet::point_at(std::size_t k) const {
    std::vector<Scalar> c;
    c.reserve(n + 1);
    const std::uint64_t* row = point(k);
    for (unsigned j = 0; j <= n; ++j) c.push_back(Scalar::residue(p, row[j]));
    return ProjPoint(std::move(c));
}

std::optional<std::size_t> FpPointSet::index_of(const ProjPoint& x) const {
    if (x.tag() != FieldTag::prime_field(p) || x.n() != n) return std::nullopt;
    std::vector<std::uint64_t> rep(n + 1);
    for (unsigned j = 0; j <= n; ++j) rep[j] = x.coords()[j].res();
    for (std::size_t k = 0; k < count; ++k) {
        const std::uint64_t* row = point(k);
        bool eq = true;
        for (unsigned j = 0; j <= n && eq; ++j) eq = row[j] == rep[j];
        if (eq) return k;
    }
    return std::nullopt;
}

namespace {

std::uint64_t projective_count(unsigned n, std::uint64_t p, std::uint64_t cap) {
    // (p^(n+1)-1)/(p-1), watching for overflow against the cap
    unsigned __int128 total = 0;
    unsigned __int128 power = 1;
    for (unsigned i = 0; i <= n; ++i) {
        total += power;
        power *= p;
        if (total > cap)
            throw CapExceededError("P^" + std::to_string(n) + "(F_" + std::to_string(p) +
                                   ") has more than " + std::to_string(cap) +
                                   " points; raise the enumeration cap to proceed");
    }
    return static_cast<std::uint64_t>(total);
}

// Visits every canonical representative (0,...,0,1,t_{i+1},...,t_n).
template <typename Visit>
void sweep_projective(unsigned n, std::uint64_t p, Visit&& visit) {
    std::vector<std::uint64_t> pt(n + 1, 0);
    for (unsigned lead = 0; lead <= n; ++lead) {
        std::fill(pt.begin(), pt.end(), 0);
        pt[lead] = 1;
        // odometer over positions lead+1..n
        while (true) {
            visit(pt.data());
            unsigned j = n + 1;
            bool done = true;
            for (j = n + 1; j-- > lead + 1;) {
                if (pt[j] + 1 < p) {
                    ++pt[j];
                    done = false;
                    break;
                }
                pt[j] = 0;
            }
            if (done) break;
        }
    }
}

}  // namespace

FpPointSet enumerate_projective_points(unsigned n, std::uint64_t p, std::uint64_t cap) {
    FieldTag::prime_field(p);  // validate
    std::uint64_t total = projective_count(n, p, cap);
    FpPointSet out;
    out.p = p;
    out.n = n;
    out.count = total;
    out.flat.reserve(total * (n + 1));
    sweep_projective(n, p, [&](const std::uint64_t* pt) {
        out.flat.insert(out.flat.end(), pt, pt + n + 1);
    });
    return out;
}

VarietyPoints enumerate_variety_points(const VarietySpec& X, std::uint64_t cap) {
    if (X.tag().is_rational())
        throw FieldMismatchError("point enumeration needs a prime-field variety");
    const std::uint64_t p = X.tag().p;
    const unsigned n = X.n();
    projective_count(n, p, cap);

    std::vector<FpPoly> gens;
    std::vector<FpPoly> partials;  // codim x (n+1), row-major
    for (const auto& g : X.generators()) {
        gens.push_back(compile_fp(g));
        for (unsigned v = 0; v <= n; ++v) partials.push_back(compile_fp(g.partial(v)));
    }
    const unsigned codim = X.codim();

    VarietyPoints out;
    out.points.p = p;
    out.points.n = n;

    std::vector<std::uint64_t> jac(codim * (n + 1));
    sweep_projective(n, p, [&](const std::uint64_t* pt) {
        for (const auto& g : gens)
            if (g.eval(pt) != 0) return;
        out.points.flat.insert(out.points.flat.end(), pt, pt + n + 1);
        ++out.points.count;
        if (codim == 0 || out.singular_witness) return;
        for (std::size_t k = 0; k < partials.size(); ++k) jac[k] = partials[k].eval(pt);
        // tiny in-place Gaussian elimination mod p
        std::size_t rank = 0;
        std::vector<std::uint64_t> a = jac;
        const unsigned cols = n + 1;
        for (unsigned c = 0; c < cols && rank < codim; ++c) {
            std::size_t piv = rank;
            while (piv < codim && a[piv * cols + c] == 0) ++piv;
            if (piv == codim) continue;
            std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols,
                             a.begin() + rank * cols);
            std::uint64_t inv =
                Scalar::residue(p, a[rank * cols + c]).inverse().res();
            for (unsigned j = c; j < cols; ++j)
                a[rank * cols + j] =
                    static_cast<std::uint64_t>((static_cast<unsigned __int128>(a[rank * cols + j]) * inv) % p);
            for (std::size_t i = rank + 1; i < codim; ++i) {
                std::uint64_t f = a[i * cols + c];
                if (f == 0) continue;
                for (unsigned j = c; j < cols; ++j) {
                    unsigned __int128 sub = static_cast<unsigned __int128>(f) * a[rank * cols + j] % p;
                    a[i * cols + j] = (a[i * cols + j] + p - static_cast<std::uint64_t>(sub)) % p;
                }
            }
            ++rank;
        }
        if (rank < codim)
            out.singular_witness = out.points.point_at(out.points.count - 1);
    });
    return out;
}

MonomialValueTable monomial_values(const FpPointSet& pts, unsigned degree) {
    MonomialValueTable t;
    t.monomials = monomial_basis(pts.n, degree);
    t.stride = t.monomials.size();
    t.values.resize(pts.count * t.stride);
    const std::uint64_t p = pts.p;
    for (std::size_t k = 0; k < pts.count; ++k) {
        const std::uint64_t* pt = pts.point(k);
        std::uint64_t* row = &t.values[k * t.stride];
        for (std::size_t m = 0; m < t.stride; ++m) {
            unsigned __int128 v = 1;
            for (unsigned j = 0; j <= pts.n; ++j)
                for (unsigned e = 0; e < t.monomials[m][j]; ++e) v = v * pt[j] % p;
            row[m] = static_cast<std::uint64_t>(v);
        }
    }
    return t;
}

}  // namespace bertini
