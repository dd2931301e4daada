#include "bertini/experiments.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "bertini/rng.hpp"

namespace bertini {

namespace {

using nlohmann::ordered_json;

void require(bool cond, const std::string& msg) {
    if (!cond) throw ConfigError(msg);
}

ordered_json field_json(FieldTag tag) {
    if (tag.is_rational()) return ordered_json("Q");
    ordered_json j;
    j["p"] = tag.p;
    return j;
}

std::string kind_str(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::bertini_sample:
            return "bertini-sample";
        case ExperimentKind::jet_survey:
            return "jet-survey";
        case ExperimentKind::disc_density:
            return "disc-density";
    }
    return "unknown";
}

ordered_json config_echo(const ExperimentConfig& cfg) {
    ordered_json j;
    j["experiment"] = kind_str(cfg.kind);
    if (cfg.variety)
        j["variety"] = ordered_json::parse(variety_to_json_text(*cfg.variety));
    else
        j["variety"] = nullptr;
    if (cfg.points)
        j["points"] = ordered_json::parse(points_to_json_text(*cfg.points));
    else
        j["points"] = nullptr;
    j["degree"] = cfg.degree;
    j["field"] = field_json(cfg.field);
    if (cfg.kind == ExperimentKind::jet_survey)
        j["samples"] = cfg.samples;
    else
        j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["coeff_bound"] = cfg.coeff_bound;
    if (cfg.kind == ExperimentKind::bertini_sample)
        j["singular_threshold"] = cfg.singular_threshold;
    if (cfg.kind == ExperimentKind::disc_density) j["exhaustive"] = cfg.exhaustive;
    j["enumeration_cap"] = cfg.enumeration_cap;
    return j;
}

PointConfig reduce_points(const PointConfig& pts, FieldTag field) {
    if (pts.tag() == field) return pts;
    require(pts.tag().is_rational(),
            "points live over " + pts.tag().str() + ", expected " + field.str());
    return pts.reduced_mod_p(field.p);
}

VarietySpec reduce_variety(const VarietySpec& X, FieldTag field) {
    if (X.tag() == field) return X;
    return X.reduced_mod_p(field.p);
}

ordered_json point_json(const ProjPoint& pt) {
    ordered_json a = ordered_json::array();
    for (const auto& s : pt.coord_strings()) a.push_back(s);
    return a;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// bertini-sample

ExperimentReport run_bertini_experiment(const ExperimentConfig& cfg) {
    Timer timer;
    require(cfg.kind == ExperimentKind::bertini_sample, "config kind is not bertini-sample");
    require(!cfg.field.is_rational(), "bertini sampling needs a finite field");
    require(cfg.variety.has_value(), "bertini sampling needs a variety");
    require(cfg.points.has_value(), "bertini sampling needs a base point set (may be empty)");
    require(cfg.trials >= 1, "trials must be at least 1");
    require(cfg.degree >= 1, "degree must be at least 1");

    VarietySpec X = reduce_variety(*cfg.variety, cfg.field);
    PointConfig pts = reduce_points(*cfg.points, cfg.field);
    require(pts.n() == X.n(), "points and variety live in different ambient spaces");
    LinearSystem L = vanishing_system(pts, cfg.degree);
    if (L.dim() == 0) throw EmptySystemError("the vanishing system is zero; nothing to sample");

    VarietyPoints vpts = enumerate_variety_points(X, cfg.enumeration_cap);
    std::optional<MonomialValueTable> table;
    if (!vpts.singular_witness) table = monomial_values(vpts.points, cfg.degree);

    ExperimentReport rep;
    rep.config = config_echo(cfg);
    rep.trials = ordered_json::array();

    std::size_t n_singular = 0, n_smooth = 0, n_inapplicable = 0;
    for (unsigned t = 0; t < cfg.trials; ++t) {
        MultiPoly member = random_member(L, cfg.seed ^ t, MemberOptions{cfg.coeff_bound});
        SingularityReport r =
            check_intersection(X, member, vpts, table ? &*table : nullptr);
        ordered_json rec;
        rec["trial"] = t;
        rec["member"] = member.str();
        rec["verdict"] = verdict_str(r.verdict);
        ordered_json wit = ordered_json::array();
        for (const auto& w : r.singular_points) wit.push_back(point_json(w));
        rec["singular_points"] = wit;
        rep.trials.push_back(std::move(rec));
        switch (r.verdict) {
            case Verdict::singular:
                ++n_singular;
                break;
            case Verdict::smooth_at_rational_points:
                ++n_smooth;
                break;
            case Verdict::inapplicable:
                ++n_inapplicable;
                break;
        }
    }
    double fraction = static_cast<double>(n_singular) / cfg.trials;
    rep.aggregates["trials"] = cfg.trials;
    rep.aggregates["singular"] = n_singular;
    rep.aggregates["smooth"] = n_smooth;
    rep.aggregates["inapplicable"] = n_inapplicable;
    rep.aggregates["singular_fraction"] = fraction;
    rep.aggregates["singular_threshold"] = cfg.singular_threshold;
    rep.aggregates["threshold_exceeded"] = fraction > cfg.singular_threshold;
    rep.aggregates["system_dim"] = L.dim();
    rep.aggregates["variety_points"] = vpts.points.count;
    rep.runtime_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// jet-survey

namespace {

struct SurveyPoint {
    ProjPoint point;
    bool is_base;
};

std::vector<SurveyPoint> survey_points_fp(const VarietySpec& X, const PointConfig& base,
                                          unsigned samples, std::uint64_t seed,
                                          std::uint64_t cap) {
    VarietyPoints vpts = enumerate_variety_points(X, cap);
    if (vpts.singular_witness)
        throw SmoothnessViolationError(X.label() + " is singular at " +
                                       vpts.singular_witness->str() + " over " + X.tag().str());
    std::vector<SurveyPoint> out;
    std::set<std::size_t> taken;
    for (const auto& b : base.points()) {
        if (!X.contains(b)) continue;  // points off X carry no jet data
        out.push_back({b, true});
        if (auto idx = vpts.points.index_of(b)) taken.insert(*idx);
    }
    const std::size_t pool = vpts.points.count;
    require(pool > taken.size(), "the variety has no non-base rational points to sample");
    SplitMix64 rng(seed);
    std::size_t want = std::min<std::size_t>(samples, pool - taken.size());
    while (want > 0) {
        std::size_t k = rng.below(pool);
        if (taken.count(k)) continue;
        taken.insert(k);
        out.push_back({vpts.points.point_at(k), false});
        --want;
    }
    return out;
}

std::vector<SurveyPoint> survey_points_q(const VarietySpec& X, const PointConfig& base,
                                         unsigned samples, std::uint64_t seed,
                                         long long bound) {
    require(X.generators().empty(),
            "sampling over Q is supported for the full projective space only; "
            "use a finite field for a variety with generators");
    std::vector<SurveyPoint> out;
    for (const auto& b : base.points()) out.push_back({b, true});
    SplitMix64 rng(seed);
    unsigned got = 0;
    while (got < samples) {
        std::vector<Scalar> c;
        bool nonzero = false;
        for (unsigned j = 0; j <= X.n(); ++j) {
            long long v = rng.signed_bounded(bound);
            nonzero |= v != 0;
            c.push_back(Scalar::from_int(FieldTag::rationals(), v));
        }
        if (!nonzero) continue;
        ProjPoint pt(std::move(c));
        bool dup = false;
        for (const auto& sp : out)
            if (sp.point == pt) {
                dup = true;
                break;
            }
        if (dup) continue;
        out.push_back({pt, false});
        ++got;
    }
    return out;
}

}  // namespace

ExperimentReport run_jet_survey(const ExperimentConfig& cfg) {
    Timer timer;
    require(cfg.kind == ExperimentKind::jet_survey, "config kind is not jet-survey");
    require(cfg.variety.has_value(), "jet survey needs a variety");
    require(cfg.points.has_value(), "jet survey needs a base point set (may be empty)");
    require(cfg.samples >= 1, "samples must be at least 1");
    require(cfg.degree >= 1, "degree must be at least 1");

    VarietySpec X = reduce_variety(*cfg.variety, cfg.field);
    PointConfig pts = reduce_points(*cfg.points, cfg.field);
    require(pts.n() == X.n(), "points and variety live in different ambient spaces");
    LinearSystem L = vanishing_system(pts, cfg.degree);
    if (L.dim() == 0) throw EmptySystemError("the vanishing system is zero");

    std::vector<SurveyPoint> survey =
        cfg.field.is_rational()
            ? survey_points_q(X, pts, cfg.samples, cfg.seed, cfg.coeff_bound)
            : survey_points_fp(X, pts, cfg.samples, cfg.seed, cfg.enumeration_cap);

    const unsigned d = X.dim();
    ExperimentReport rep;
    rep.config = config_echo(cfg);
    rep.trials = ordered_json::array();

    std::map<std::size_t, std::size_t> histogram;
    bool stratification_ok = true;
    std::vector<ProjPoint> sample_points;
    for (const auto& sp : survey) {
        if (!X.contains(sp.point))
            throw Error("internal: surveyed point " + sp.point.str() + " is off the variety");
        JetMatrix jm = xi_matrix(L, X, sp.point);
        std::size_t rank = jm.m.rank();
        long fiber = system_dimension(L).projective_dim - static_cast<long>(rank);
        bool const_zero = true;
        for (std::size_t i = 0; i < jm.m.rows(); ++i)
            if (!jm.m.at(i, 0).is_zero()) const_zero = false;
        ordered_json rec;
        rec["point"] = point_json(sp.point);
        rec["is_base"] = sp.is_base;
        rec["xi_rank"] = rank;
        rec["fiber_dim"] = fiber;
        rec["constant_column_zero"] = const_zero;
        if (sp.is_base)
            stratification_ok &= const_zero && rank == d;
        else
            stratification_ok &= rank == d + 1;
        rep.trials.push_back(std::move(rec));
        ++histogram[rank];
        sample_points.push_back(sp.point);
    }

    IncidenceDimension inc = incidence_dimension(L, X, sample_points);
    ordered_json hist;
    for (const auto& [r, c] : histogram) hist[std::to_string(r)] = c;
    rep.aggregates["rank_histogram"] = hist;
    rep.aggregates["dim_X"] = d;
    rep.aggregates["dim_S"] = inc.dim_S;
    rep.aggregates["dim_V"] = inc.dim_V;
    rep.aggregates["margin"] = inc.margin;
    rep.aggregates["generic_fiber_dim"] = inc.generic_fiber_dim;
    rep.aggregates["base_fiber_dim"] = inc.base_fiber_dim;
    ordered_json jumps = ordered_json::array();
    for (const auto& [pt, f] : inc.fiber_jumps) {
        ordered_json jj;
        jj["point"] = point_json(pt);
        jj["fiber_dim"] = f;
        jumps.push_back(std::move(jj));
    }
    rep.aggregates["fiber_jumps"] = jumps;
    rep.aggregates["stratification_ok"] = stratification_ok;
    rep.runtime_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// disc-density

ExperimentReport run_disc_density(const ExperimentConfig& cfg) {
    Timer timer;
    require(cfg.kind == ExperimentKind::disc_density, "config kind is not disc-density");
    require(cfg.degree == 2, "discriminant density is defined for degree 2");
    require(!cfg.field.is_rational(), "discriminant density needs a finite field");
    require(cfg.points.has_value(), "disc-density needs a point set (may be empty)");

    const std::uint64_t p = cfg.field.p;
    PointConfig pts = reduce_points(*cfg.points, cfg.field);
    LinearSystem L = vanishing_system(pts, 2);
    if (L.dim() == 0)
        throw EmptySystemError("the vanishing system is zero; no quadrics to sample");

    ExperimentReport rep;
    rep.config = config_echo(cfg);
    rep.trials = ordered_json::array();

    std::size_t checked = 0, det_zero = 0, agreements = 0;
    bool all_agree = true;

    if (cfg.exhaustive) {
        const std::size_t m = L.dim();
        unsigned __int128 classes = 0, power = 1;
        for (std::size_t i = 0; i < m; ++i) {
            classes += power;
            power *= p;
            if (classes > cfg.enumeration_cap)
                throw CapExceededError("member classes exceed the enumeration cap");
        }
        std::vector<std::uint64_t> coeff(m, 0);
        for (std::size_t lead = 0; lead < m; ++lead) {
            std::fill(coeff.begin(), coeff.end(), 0);
            coeff[lead] = 1;
            while (true) {
                MultiPoly member(L.tag(), L.n() + 1);
                for (std::size_t i = 0; i < m; ++i)
                    if (coeff[i] != 0)
                        member = member + L.basis()[i].scaled(Scalar::residue(p, coeff[i]));
                bool dz = quadric_is_singular(member);
                bool bf = !singular_points_bruteforce(member, p, cfg.enumeration_cap).empty();
                ordered_json rec;
                rec["index"] = checked;
                rec["member"] = member.str();
                rec["det_zero"] = dz;
                rec["bruteforce_singular"] = bf;
                rep.trials.push_back(std::move(rec));
                ++checked;
                if (dz) ++det_zero;
                if (dz == bf)
                    ++agreements;
                else
                    all_agree = false;
                // odometer over positions lead+1..m-1
                std::size_t j = m;
                bool done = true;
                for (j = m; j-- > lead + 1;) {
                    if (coeff[j] + 1 < p) {
                        ++coeff[j];
                        done = false;
                        break;
                    }
                    coeff[j] = 0;
                }
                if (done) break;
            }
        }
    } else {
        require(cfg.trials >= 1, "trials must be at least 1");
        for (unsigned t = 0; t < cfg.trials; ++t) {
            MultiPoly member = random_member(L, cfg.seed ^ t, MemberOptions{cfg.coeff_bound});
            bool dz = quadric_is_singular(member);
            ordered_json rec;
            rec["trial"] = t;
            rec["member"] = member.str();
            rec["det_zero"] = dz;
            rep.trials.push_back(std::move(rec));
            ++checked;
            if (dz) ++det_zero;
        }
    }

    rep.aggregates["mode"] = cfg.exhaustive ? "exhaustive" : "sampled";
    rep.aggregates["checked"] = checked;
    rep.aggregates["det_zero"] = det_zero;
    rep.aggregates["singular_fraction"] = static_cast<double>(det_zero) / checked;
    if (cfg.exhaustive) {
        rep.aggregates["bruteforce_agreements"] = agreements;
        rep.aggregates["bruteforce_agrees"] = all_agree;
    }
    rep.aggregates["system_dim"] = L.dim();
    rep.runtime_ms = timer.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// serialization

std::string ExperimentReport::to_json_text(bool with_timing) const {
    ordered_json j;
    j["config"] = config;
    j["trials"] = trials;
    j["aggregates"] = aggregates;
    if (with_timing) j["runtime_ms"] = runtime_ms;
    return j.dump(2) + "\n";
}

namespace {

// Arrays flatten to plain text: coordinates join with ':', lists of
// points with ';'.  Keeps witness cells readable in spreadsheet tools.
std::string csv_flatten(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        bool inner_scalars = !v.empty() && !v[0].is_array();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += inner_scalars ? ":" : ";";
            out += csv_flatten(v[i]);
        }
        return out;
    }
    return v.dump();
}

std::string csv_cell(const ordered_json& v) {
    std::string s = csv_flatten(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string ExperimentReport::to_csv_text() const {
    std::string out;
    if (trials.empty()) return out;
    bool first = true;
    for (const auto& [key, value] : trials[0].items()) {
        if (!first) out += ",";
        out += csv_cell(ordered_json(key));
        first = false;
    }
    out += "\n";
    for (const auto& rec : trials) {
        first = true;
        for (const auto& [key, value] : rec.items()) {
            if (!first) out += ",";
            out += csv_cell(value);
            first = false;
        }
        out += "\n";
    }
    return out;
}

void emit_report(const ExperimentReport& report, const std::string& format,
                 const std::string& path, bool with_timing) {
    std::string payload;
    if (format == "json")
        payload = report.to_json_text(with_timing);
    else if (format == "csv")
        payload = report.to_csv_text();
    else
        throw ConfigError("unknown report format: " + format);
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write report to " + path);
    out << payload;
}

}  // namespace bertini
