#include "bertini/projective.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bertini {

ProjPoint::ProjPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw ConfigError("empty coordinate vector");
    FieldTag tag = coords_[0].tag();
    std::size_t lead = coords_.size();
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j].tag() != tag) throw FieldMismatchError("mixed domains in coordinates");
        if (lead == coords_.size() && !coords_[j].is_zero()) lead = j;
    }
    if (lead == coords_.size()) throw ConfigError("projective point cannot be the zero vector");
    Scalar inv = coords_[lead].inverse();
    for (auto& c : coords_) c = c * inv;
}

ProjPoint ProjPoint::from_ints(FieldTag tag, const std::vector<long long>& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (long long x : v) c.push_back(Scalar::from_int(tag, x));
    return ProjPoint(std::move(c));
}

ProjPoint ProjPoint::from_strings(FieldTag tag, const std::vector<std::string>& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (const auto& s : v) c.push_back(Scalar::parse(tag, s));
    return ProjPoint(std::move(c));
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (coords_.size() != o.coords_.size() || tag() != o.tag()) return false;
    for (std::size_t j = 0; j < coords_.size(); ++j)
        if (coords_[j] != o.coords_[j]) return false;
    return true;
}

int ProjPoint::compare(const ProjPoint& o) const {
    if (coords_.size() != o.coords_.size())
        return coords_.size() < o.coords_.size() ? -1 : 1;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        int c = coords_[j].compare(o.coords_[j]);
        if (c != 0) return c;
    }
    return 0;
}

unsigned ProjPoint::leading_index() const {
    for (std::size_t j = 0; j < coords_.size(); ++j)
        if (!coords_[j].is_zero()) return static_cast<unsigned>(j);
    throw Error("normalized point has no nonzero coordinate");
}

std::vector<Scalar> ProjPoint::chart_coords(unsigned chart) const {
    if (chart >= coords_.size()) throw ShapeError("chart index out of range");
    if (coords_[chart].is_zero())
        throw ConfigError("point does not lie in chart " + std::to_string(chart));
    Scalar inv = coords_[chart].inverse();
    std::vector<Scalar> out;
    out.reserve(coords_.size() - 1);
    for (std::size_t j = 0; j < coords_.size(); ++j)
        if (j != chart) out.push_back(coords_[j] * inv);
    return out;
}

ProjPoint ProjPoint::transformed(const Matrix& t) const {
    return ProjPoint(t.apply(coords_));
}

ProjPoint ProjPoint::reduced_mod_p(std::uint64_t prime) const {
    if (!tag().is_rational())
        throw FieldMismatchError("reduction mod p expects rational coordinates");
    FieldTag::prime_field(prime);  // validate
    mpz_class m(static_cast<unsigned long>(prime));
    // scale to coprime integer coordinates first, so that reduction is
    // defined whenever it can be
    mpz_class l(1);
    for (const auto& c : coords_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rat().get_den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(coords_.size());
    mpz_class g(0);
    for (const auto& c : coords_) {
        mpq_class v = c.rat() * mpq_class(l);
        z.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    std::vector<Scalar> out;
    out.reserve(z.size());
    bool all_zero = true;
    for (auto& v : z) {
        mpz_class q = v / g;
        mpz_class r = q % m;
        long ri = r.get_si();
        std::uint64_t rr = ri < 0 ? prime - static_cast<std::uint64_t>(-ri)
                                  : static_cast<std::uint64_t>(ri);
        if (rr != 0) all_zero = false;
        out.push_back(Scalar::residue(prime, rr));
    }
    if (all_zero)
        throw ConfigError("point reduces to zero mod " + std::to_string(prime));
    return ProjPoint(std::move(out));
}

std::vector<std::string> ProjPoint::coord_strings() const {
    std::vector<std::string> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(c.str());
    return out;
}

std::string ProjPoint::str() const {
    std::string s = "(";
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (j) s += ", ";
        s += coords_[j].str();
    }
    return s + ")";
}

PointConfig::PointConfig(FieldTag tag, unsigned n, std::vector<ProjPoint> points)
    : tag_(tag), n_(n), points_(std::move(points)) {
    if (points_.size() > static_cast<std::size_t>(n_) + 2)
        throw ConfigError("at most n+2 points are accepted, got " +
                          std::to_string(points_.size()));
    for (std::size_t s = 0; s < points_.size(); ++s) {
        if (points_[s].n() != n_) throw ConfigError("point dimension differs from n");
        if (points_[s].tag() != tag_) throw FieldMismatchError("point domain differs from config");
        for (std::size_t t = 0; t < s; ++t)
            if (points_[s] == points_[t])
                throw ConfigError("configuration points must be distinct");
    }
}

Matrix PointConfig::coordinate_matrix() const {
    Matrix m(tag_, points_.size(), n_ + 1);
    for (std::size_t s = 0; s < points_.size(); ++s)
        for (unsigned j = 0; j <= n_; ++j) m.set(s, j, points_[s].coords()[j]);
    return m;
}

PointConfig PointConfig::transformed(const Matrix& t) const {
    std::vector<ProjPoint> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) pts.push_back(p.transformed(t));
    return PointConfig(tag_, n_, std::move(pts));
}

PointConfig PointConfig::reduced_mod_p(std::uint64_t prime) const {
    std::vector<ProjPoint> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_) pts.push_back(p.reduced_mod_p(prime));
    return PointConfig(FieldTag::prime_field(prime), n_, std::move(pts));
}

bool general_position(const PointConfig& cfg) {
    std::size_t q = cfg.q();
    unsigned n = cfg.n();
    if (q > static_cast<std::size_t>(n) + 1)
        throw ConfigError("general position is defined for q <= n+1, got q = " +
                          std::to_string(q));
    if (q == 0) return true;
    if (q < static_cast<std::size_t>(n) + 1) return cfg.coordinate_matrix().rank() == q;
    // q = n+1: every n-subset must be independent
    for (std::size_t skip = 0; skip < q; ++skip) {
        Matrix m(cfg.tag(), q - 1, n + 1);
        std::size_t r = 0;
        for (std::size_t s = 0; s < q; ++s) {
            if (s == skip) continue;
            for (unsigned j = 0; j <= n; ++j) m.set(r, j, cfg.points()[s].coords()[j]);
            ++r;
        }
        if (m.rank() != q - 1) return false;
    }
    return true;
}

namespace {

bool avoids_all(const PointConfig& cfg, const std::vector<Scalar>& c) {
    for (const auto& pt : cfg.points()) {
        Scalar dot = Scalar::zero(cfg.tag());
        for (unsigned j = 0; j <= cfg.n(); ++j) dot += c[j] * pt.coords()[j];
        if (dot.is_zero()) return false;
    }
    return true;
}

// Odometer sweep of coefficient vectors with entries in [0, height],
// most significant digit first, in increasing counter order.
bool sweep_heights(const PointConfig& cfg, std::uint64_t height, std::vector<Scalar>& out) {
    unsigned len = cfg.n() + 1;
    std::vector<std::uint64_t> digits(len, 0);
    while (true) {
        // increment
        std::size_t j = len;
        while (j-- > 0) {
            if (digits[j] < height) {
                ++digits[j];
                break;
            }
            digits[j] = 0;
            if (j == 0) return false;  // wrapped around
        }
        std::vector<Scalar> c;
        c.reserve(len);
        for (std::uint64_t d : digits)
            c.push_back(Scalar::from_int(cfg.tag(), static_cast<long long>(d)));
        if (avoids_all(cfg, c)) {
            out = std::move(c);
            return true;
        }
    }
}

}  // namespace

std::vector<Scalar> avoiding_hyperplane(const PointConfig& cfg) {
    std::uint64_t height = std::max<std::uint64_t>(cfg.q(), 1);
    if (!cfg.tag().is_rational()) height = std::min<std::uint64_t>(height, cfg.tag().p - 1);
    std::vector<Scalar> c;
    if (sweep_heights(cfg, height, c)) return c;
    // over a tiny prime field the small-height sweep can be the whole
    // space short of a full sweep; finish it before giving up
    if (!cfg.tag().is_rational() && height < cfg.tag().p - 1 &&
        sweep_heights(cfg, cfg.tag().p - 1, c))
        return c;
    throw ConfigError("no avoiding hyperplane exists over " + cfg.tag().str() +
                      " for this configuration");
}

namespace {

// Candidate rows for position s.  Rows must annihilate P_0 so that P_0
// lands on (1,0,...,0); when s indexes a configuration point and `strict`
// is set, the row must annihilate P_s as well.
std::vector<std::vector<Scalar>> row_candidates(const PointConfig& cfg, std::size_t s,
                                                bool strict) {
    FieldTag tag = cfg.tag();
    unsigned len = cfg.n() + 1;
    std::vector<std::vector<Scalar>> cands;
    if (s < cfg.q()) {
        Matrix both(tag, 2, len);
        for (unsigned j = 0; j < len; ++j) {
            both.set(0, j, cfg.points()[0].coords()[j]);
            both.set(1, j, cfg.points()[s].coords()[j]);
        }
        for (auto& v : both.kernel_basis()) cands.push_back(std::move(v));
        if (strict) return cands;
    }
    Matrix p0(tag, 1, len);
    for (unsigned j = 0; j < len; ++j) p0.set(0, j, cfg.points()[0].coords()[j]);
    for (auto& v : p0.kernel_basis()) cands.push_back(std::move(v));
    return cands;
}

bool pick_rows(const PointConfig& cfg, std::vector<std::vector<Scalar>>& rows, std::size_t s,
               bool strict) {
    unsigned n = cfg.n();
    if (s > n) return true;
    for (auto& cand : row_candidates(cfg, s, strict)) {
        rows.push_back(cand);
        if (Matrix::from_rows(cfg.tag(), rows).rank() == rows.size() &&
            pick_rows(cfg, rows, s + 1, strict))
            return true;
        rows.pop_back();
    }
    return false;
}

}  // namespace

Matrix normalize_coordinates(const PointConfig& cfg) {
    if (cfg.q() == 0) throw ConfigError("normalization needs at least one point");
    if (!general_position(cfg))
        throw ConfigError("configuration is not in general position");

    std::vector<std::vector<Scalar>> rows;
    rows.push_back(avoiding_hyperplane(cfg));
    // prefer an assignment where row s annihilates P_s outright; some
    // degenerate q = n+1 configurations admit none, so fall back to any
    // basis of the P_0-annihilator
    if (!pick_rows(cfg, rows, 1, true)) {
        rows.resize(1);
        if (!pick_rows(cfg, rows, 1, false))
            throw Error("internal: coordinate normalization search failed");
    }
    Matrix t = Matrix::from_rows(cfg.tag(), rows);

    // postconditions, by evaluation
    if (t.det().is_zero()) throw Error("internal: normalization produced a singular matrix");
    ProjPoint image = cfg.points()[0].transformed(t);
    std::vector<long long> e0(cfg.n() + 1, 0);
    e0[0] = 1;
    if (image != ProjPoint::from_ints(cfg.tag(), e0))
        throw Error("internal: normalization does not send P_0 to (1,0,...,0)");
    for (const auto& pt : cfg.points())
        if (pt.transformed(t).coords()[0].is_zero())
            throw Error("internal: hyperplane at infinity meets a configuration point");
    return t;
}

// ---------------------------------------------------------------------------
// JSON files

namespace {

using nlohmann::json;

FieldTag field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldTag::rationals();
        throw ConfigError("unknown field \"" + j.get<std::string>() + "\" (expected \"Q\" or {\"p\": int})");
    }
    if (j.is_object() && j.contains("p"))
        return FieldTag::prime_field(j.at("p").get<std::uint64_t>());
    throw ConfigError("field must be \"Q\" or {\"p\": int}");
}

nlohmann::ordered_json field_to_json(FieldTag tag) {
    if (tag.is_rational()) return nlohmann::ordered_json("Q");
    nlohmann::ordered_json j;
    j["p"] = tag.p;
    return j;
}

std::string coord_to_string(const json& c) {
    if (c.is_string()) return c.get<std::string>();
    if (c.is_number_integer()) return std::to_string(c.get<long long>());
    throw ConfigError("coordinates must be strings or integers");
}

}  // namespace

PointConfig points_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("points file is not valid JSON: ") + e.what());
    }
    try {
        unsigned n = j.at("n").get<unsigned>();
        FieldTag tag = field_from_json(j.at("field"));
        std::vector<ProjPoint> pts;
        for (const auto& row : j.at("points")) {
            std::vector<std::string> coords;
            for (const auto& c : row) coords.push_back(coord_to_string(c));
            if (coords.size() != static_cast<std::size_t>(n) + 1)
                throw ConfigError("each point needs n+1 coordinates");
            pts.push_back(ProjPoint::from_strings(tag, coords));
        }
        return PointConfig(tag, n, std::move(pts));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed points file: ") + e.what());
    }
}

PointConfig load_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open points file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return points_from_json_text(ss.str());
}

std::string points_to_json_text(const PointConfig& cfg) {
    nlohmann::ordered_json j;
    j["n"] = cfg.n();
    j["field"] = field_to_json(cfg.tag());
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : cfg.points()) arr.push_back(p.coord_strings());
    j["points"] = arr;
    return j.dump();
}

}  // namespace bertini
