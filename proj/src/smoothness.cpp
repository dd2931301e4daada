#include "bertini/smoothness.hpp"

#include <json.hpp>

namespace bertini {

Matrix quadric_matrix(const MultiPoly& h) {
    auto deg = h.homogeneous_degree();
    if (h.is_zero() || !deg || *deg != 2)
        throw NonHomogeneousError("quadric matrix requires a nonzero homogeneous degree-2 form");
    const unsigned n1 = h.nvars();
    FieldTag tag = h.tag();  // p = 2 is already unrepresentable
    Matrix a(tag, n1, n1);
    Scalar two = Scalar::from_int(tag, 2);
    for (const auto& [m, c] : h.terms()) {
        unsigned i = 0, j = 0;
        bool seen_i = false;
        for (unsigned v = 0; v < n1; ++v) {
            if (m[v] == 2) {
                i = j = v;
                seen_i = true;
                break;
            }
            if (m[v] == 1) {
                if (!seen_i) {
                    i = v;
                    seen_i = true;
                } else {
                    j = v;
                }
            }
        }
        if (i == j) {
            a.set(i, i, two * c);
        } else {
            a.set(i, j, c);
            a.set(j, i, c);
        }
    }
    return a;
}

bool quadric_is_singular(const MultiPoly& h) { return quadric_matrix(h).det().is_zero(); }

std::vector<ProjPoint> singular_points_bruteforce(const MultiPoly& h, std::uint64_t p,
                                                  std::uint64_t cap) {
    MultiPoly hp = h.tag().is_rational() ? reduce_mod_p(h, p) : h;
    if (!hp.tag().is_rational() && hp.tag().p != p)
        throw FieldMismatchError("form lives over " + hp.tag().str() + ", not F_" +
                                 std::to_string(p));
    auto deg = hp.homogeneous_degree();
    if (!deg || hp.is_zero())
        throw NonHomogeneousError("singular-locus search requires a nonzero homogeneous form");
    if (*deg % p == 0)
        throw ConfigError("p divides deg(h): the Euler identity degenerates, verdict inapplicable");

    const unsigned n = hp.nvars() - 1;
    FpPointSet all = enumerate_projective_points(n, p, cap);
    std::vector<FpPoly> partials;
    for (unsigned v = 0; v <= n; ++v) partials.push_back(compile_fp(hp.partial(v)));

    std::vector<ProjPoint> out;
    for (std::size_t k = 0; k < all.count; ++k) {
        const std::uint64_t* pt = all.point(k);
        bool sing = true;
        for (const auto& d : partials)
            if (d.eval(pt) != 0) {
                sing = false;
                break;
            }
        if (sing) out.push_back(all.point_at(k));
    }
    return out;
}

std::size_t jacobian_rank_at(const VarietySpec& X, const MultiPoly& h, const ProjPoint& x) {
    if (h.tag() != X.tag()) throw FieldMismatchError("form and variety domains differ");
    if (!X.contains(x)) throw ConfigError("point " + x.str() + " is not on " + X.label());
    if (!h.eval(x.coords()).is_zero())
        throw ConfigError("point " + x.str() + " is not on the hypersurface");
    unsigned chart = x.leading_index();
    std::vector<Scalar> y = x.chart_coords(chart);
    const unsigned n = X.n();
    Matrix jac(X.tag(), X.codim() + 1, n);
    for (std::size_t k = 0; k < X.generators().size(); ++k) {
        MultiPoly g = X.generators()[k].dehomogenize_chart(chart);
        for (unsigned v = 0; v < n; ++v) jac.set(k, v, g.partial(v).eval(y));
    }
    MultiPoly hc = h.dehomogenize_chart(chart);
    for (unsigned v = 0; v < n; ++v) jac.set(X.codim(), v, hc.partial(v).eval(y));
    return jac.rank();
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::smooth_at_rational_points:
            return "smooth-at-rational-points";
        case Verdict::singular:
            return "singular";
        case Verdict::inapplicable:
            return "inapplicable";
    }
    return "unknown";
}

SingularityReport check_intersection(const VarietySpec& X, const MultiPoly& h,
                                     const VarietyPoints& pts, const MonomialValueTable* table) {
    if (X.tag().is_rational() || h.tag() != X.tag())
        throw FieldMismatchError("intersection check expects variety and form over one F_p");
    SingularityReport rep;
    rep.form = h.str();
    rep.variety_label = X.label();
    rep.field = X.tag();

    if (pts.singular_witness) {
        rep.verdict = Verdict::inapplicable;
        rep.degeneration_witness = pts.singular_witness;
        rep.reason = "variety degenerates over " + X.tag().str() + ": Jacobian rank drops at " +
                     pts.singular_witness->str();
        return rep;
    }

    // values of h on the rational points of X
    const std::size_t count = pts.points.count;
    std::vector<std::size_t> on_section;
    if (table && !h.is_zero()) {
        // dot product against the cached monomial values
        std::vector<std::pair<std::size_t, std::uint64_t>> coeffs;
        bool in_span = true;
        for (const auto& [m, c] : h.terms()) {
            std::size_t idx = table->stride;
            for (std::size_t k = 0; k < table->monomials.size(); ++k)
                if (table->monomials[k] == m) {
                    idx = k;
                    break;
                }
            if (idx == table->stride) {
                in_span = false;
                break;
            }
            coeffs.emplace_back(idx, c.res());
        }
        if (in_span) {
            const std::uint64_t p = X.tag().p;
            for (std::size_t k = 0; k < count; ++k) {
                const std::uint64_t* row = table->row(k);
                unsigned __int128 acc = 0;
                for (const auto& [idx, cv] : coeffs)
                    acc += static_cast<unsigned __int128>(cv) * row[idx] % p;
                if (acc % p == 0) on_section.push_back(k);
            }
        } else {
            table = nullptr;  // degree mismatch: fall through to direct evaluation
        }
    }
    if (!table || h.is_zero()) {
        FpPoly f = compile_fp(h);
        for (std::size_t k = 0; k < count; ++k)
            if (f.eval(pts.points.point(k)) == 0) on_section.push_back(k);
    }

    if (count > 0 && on_section.size() == count) {
        rep.verdict = Verdict::inapplicable;
        rep.reason = "form vanishes at every rational point of " + X.label() +
                     " (variety contained in the hypersurface, up to the rational-point proxy)";
        return rep;
    }

    rep.points_checked = on_section.size();
    const std::size_t expected = X.codim() + 1;
    for (std::size_t k : on_section) {
        ProjPoint x = pts.points.point_at(k);
        if (jacobian_rank_at(X, h, x) != expected) rep.singular_points.push_back(x);
    }
    rep.verdict =
        rep.singular_points.empty() ? Verdict::smooth_at_rational_points : Verdict::singular;
    return rep;
}

SingularityReport smooth_intersection_check(const VarietySpec& X, const MultiPoly& h,
                                            std::uint64_t p, std::uint64_t cap) {
    VarietySpec xp = X.reduced_mod_p(p);
    MultiPoly hp = h.tag().is_rational() ? reduce_mod_p(h, p) : h;
    if (hp.tag() != xp.tag())
        throw FieldMismatchError("form lives over " + hp.tag().str() + ", not F_" +
                                 std::to_string(p));
    if (hp.is_zero() || !hp.homogeneous_degree())
        throw NonHomogeneousError("intersection check requires a nonzero homogeneous form");
    VarietyPoints pts = enumerate_variety_points(xp, cap);
    return check_intersection(xp, hp, pts, nullptr);
}

bool tangent_hyperplane_test(const VarietySpec& X, const std::vector<Scalar>& c,
                             const ProjPoint& x) {
    if (!X.contains(x)) throw ConfigError("point " + x.str() + " is not on " + X.label());
    if (c.size() != static_cast<std::size_t>(X.n()) + 1)
        throw ShapeError("hyperplane coefficient vector has the wrong length");
    bool all_zero = true;
    for (const auto& v : c) {
        if (v.tag() != X.tag()) throw FieldMismatchError("hyperplane domain differs from variety");
        if (!v.is_zero()) all_zero = false;
    }
    if (all_zero) throw ConfigError("zero vector does not define a hyperplane");

    // contains x?
    Scalar dot = Scalar::zero(X.tag());
    for (unsigned j = 0; j <= X.n(); ++j) dot += c[j] * x.coords()[j];
    if (!dot.is_zero()) return false;

    // tangency: c in the row span of the Jacobian at x
    Matrix jac = X.jacobian_at(x);
    std::size_t base_rank = jac.rank();
    Matrix ext(X.tag(), jac.rows() + 1, jac.cols());
    for (std::size_t i = 0; i < jac.rows(); ++i)
        for (std::size_t j = 0; j < jac.cols(); ++j) ext.set(i, j, jac.at(i, j));
    for (std::size_t j = 0; j < jac.cols(); ++j) ext.set(jac.rows(), j, c[j]);
    return ext.rank() == base_rank;
}

std::string SingularityReport::to_json_text(std::optional<long long> runtime_ms) const {
    nlohmann::ordered_json j;
    j["verdict"] = verdict_str(verdict);
    j["points_checked"] = points_checked;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& pt : singular_points) arr.push_back(pt.coord_strings());
    j["singular_points"] = arr;
    if (field.is_rational())
        j["field"] = "Q";
    else
        j["field"] = nlohmann::ordered_json{{"p", field.p}};
    j["form"] = form;
    if (variety_label) j["variety"] = *variety_label;
    if (!reason.empty()) j["reason"] = reason;
    if (degeneration_witness) j["degeneration_witness"] = degeneration_witness->coord_strings();
    if (runtime_ms) j["runtime_ms"] = *runtime_ms;
    return j.dump(2) + "\n";
}

}  // namespace bertini
