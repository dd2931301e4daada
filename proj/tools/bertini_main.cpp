#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bertini/experiments.hpp"

using namespace bertini;

namespace {

FieldTag parse_field(const std::string& s) {
    if (s == "Q" || s == "q") return FieldTag::rationals();
    if (!s.empty() && (s[0] == 'p' || s[0] == 'P')) {
        try {
            return FieldTag::prime_field(std::stoull(s.substr(1)));
        } catch (const std::invalid_argument&) {
            throw ConfigError("cannot parse field \"" + s + "\" (expected Q or pINT)");
        }
    }
    throw ConfigError("cannot parse field \"" + s + "\" (expected Q or pINT)");
}

unsigned max_variable_index(const std::string& form) {
    unsigned best = 0;
    for (std::size_t i = 0; i + 1 < form.size(); ++i) {
        if (form[i] != 'x' || !std::isdigit(static_cast<unsigned char>(form[i + 1]))) continue;
        std::size_t j = i + 1;
        unsigned idx = 0;
        while (j < form.size() && std::isdigit(static_cast<unsigned char>(form[j]))) {
            idx = idx * 10 + (form[j] - '0');
            ++j;
        }
        best = std::max(best, idx);
    }
    return best;
}

void write_output(const std::string& payload, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write to " + path);
    out << payload;
}

struct CommonOpts {
    std::string out = "-";
    std::string format = "json";
    bool timing = false;
    std::uint64_t cap = 100000000ull;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_cap = true) {
    cmd->add_option("--out", o.out, "output path ('-' for stdout)");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--timing", o.timing, "include measured runtime_ms in the report");
    if (with_cap)
        cmd->add_option("--cap", o.cap, "point-enumeration budget (default 1e8)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear systems of hypersurfaces through points: exact dimension counts, "
                 "jet-rank surveys and finite-field smoothness verification"};
    app.require_subcommand(1);

    // --- linsys ---
    std::string ls_points;
    unsigned ls_n = 0, ls_degree = 2;
    std::string ls_field;
    CommonOpts ls_common;
    auto* ls = app.add_subcommand("linsys", "basis and dimension of the vanishing system");
    ls->add_option("--n", ls_n, "ambient projective dimension")->required();
    ls->add_option("--degree", ls_degree, "form degree")->required();
    ls->add_option("--points", ls_points, "points file (JSON)")->required();
    ls->add_option("--field", ls_field, "Q or pINT (defaults to the points file field)");
    add_common(ls, ls_common, false);

    // --- check-member ---
    std::string cm_variety, cm_form, cm_field;
    CommonOpts cm_common;
    auto* cm = app.add_subcommand("check-member",
                                  "smoothness of X meet {form = 0} at rational points");
    cm->add_option("--variety", cm_variety, "variety file (JSON)")->required();
    cm->add_option("--form", cm_form, "homogeneous form")->required();
    cm->add_option("--field", cm_field, "pINT")->required();
    add_common(cm, cm_common);

    // --- disc ---
    std::string d_form;
    std::optional<unsigned> d_n;
    CommonOpts d_common;
    auto* dc = app.add_subcommand("disc", "discriminant verdict for a single quadric");
    dc->add_option("--form", d_form, "degree-2 form over Q")->required();
    dc->add_option("--n", d_n, "ambient dimension (default: inferred from the form)");
    add_common(dc, d_common, false);

    // --- jet-survey ---
    std::string js_variety, js_points, js_field;
    unsigned js_degree = 2, js_samples = 50;
    std::uint64_t js_seed = 0;
    long long js_bound = 10;
    CommonOpts js_common;
    auto* js = app.add_subcommand("jet-survey", "jet-rank stratification over a point sample");
    js->add_option("--variety", js_variety)->required();
    js->add_option("--points", js_points)->required();
    js->add_option("--degree", js_degree)->required();
    js->add_option("--field", js_field, "pINT (Q only for generator-free varieties)")->required();
    js->add_option("--samples", js_samples)->required();
    js->add_option("--seed", js_seed)->required();
    js->add_option("--coeff-bound", js_bound, "coordinate height for Q sampling");
    add_common(js, js_common);

    // --- bertini-sample ---
    std::string bs_variety, bs_points, bs_field;
    unsigned bs_degree = 2, bs_trials = 100;
    std::uint64_t bs_seed = 0;
    long long bs_bound = 10;
    double bs_threshold = 0.10;
    CommonOpts bs_common;
    auto* bs = app.add_subcommand("bertini-sample",
                                  "Monte Carlo smoothness of random members over F_p");
    bs->add_option("--variety", bs_variety)->required();
    bs->add_option("--points", bs_points)->required();
    bs->add_option("--degree", bs_degree)->required();
    bs->add_option("--field", bs_field, "pINT")->required();
    bs->add_option("--trials", bs_trials)->required();
    bs->add_option("--seed", bs_seed)->required();
    bs->add_option("--threshold", bs_threshold, "singular-fraction report threshold");
    bs->add_option("--coeff-bound", bs_bound);
    add_common(bs, bs_common);

    // --- disc-density ---
    std::string dd_points, dd_field;
    unsigned dd_trials = 1000;
    std::uint64_t dd_seed = 0;
    bool dd_exhaustive = false;
    CommonOpts dd_common;
    auto* dd = app.add_subcommand("disc-density",
                                  "fraction of degree-2 members with vanishing discriminant");
    dd->add_option("--points", dd_points)->required();
    dd->add_option("--field", dd_field, "pINT")->required();
    dd->add_option("--trials", dd_trials);
    dd->add_option("--seed", dd_seed);
    dd->add_flag("--exhaustive", dd_exhaustive, "sweep every member class instead of sampling");
    add_common(dd, dd_common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ls) {
            PointConfig pts = load_points_file(ls_points);
            if (pts.n() != ls_n)
                throw ConfigError("--n disagrees with the points file (file has n = " +
                                  std::to_string(pts.n()) + ")");
            if (!ls_field.empty()) {
                FieldTag tag = parse_field(ls_field);
                if (tag != pts.tag()) {
                    if (!tag.is_rational() && pts.tag().is_rational())
                        pts = pts.reduced_mod_p(tag.p);
                    else
                        throw ConfigError("--field disagrees with the points file");
                }
            }
            LinearSystem L = vanishing_system(pts, ls_degree);
            SystemDimension dim = system_dimension(L);
            if (ls_common.format == "csv") {
                std::string csv = "basis\n";
                for (const auto& b : L.basis()) csv += b.str() + "\n";
                write_output(csv, ls_common.out);
            } else {
                nlohmann::ordered_json j;
                j["vector_dim"] = dim.vector_dim;
                j["projective_dim"] = dim.projective_dim;
                auto arr = nlohmann::ordered_json::array();
                for (const auto& b : L.basis()) arr.push_back(b.str());
                j["basis"] = arr;
                write_output(j.dump(2) + "\n", ls_common.out);
            }
        } else if (*cm) {
            FieldTag tag = parse_field(cm_field);
            if (tag.is_rational()) throw ConfigError("check-member needs a finite field (pINT)");
            VarietySpec X = load_variety_file(cm_variety);
            MultiPoly h = parse_poly(cm_form, X.n() + 1, FieldTag::rationals());
            auto start = std::chrono::steady_clock::now();
            SingularityReport rep = smooth_intersection_check(X, h, tag.p, cm_common.cap);
            long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            write_output(rep.to_json_text(ms), cm_common.out);
        } else if (*dc) {
            unsigned nvars = d_n ? *d_n + 1 : max_variable_index(d_form) + 1;
            MultiPoly h = parse_poly(d_form, nvars, FieldTag::rationals());
            Matrix a = quadric_matrix(h);
            Scalar det = a.det();
            nlohmann::ordered_json j;
            j["form"] = h.str();
            j["n"] = nvars - 1;
            j["det"] = det.str();
            j["singular"] = det.is_zero();
            write_output(j.dump(2) + "\n", d_common.out);
        } else if (*js) {
            ExperimentConfig cfg;
            cfg.kind = ExperimentKind::jet_survey;
            cfg.variety = load_variety_file(js_variety);
            cfg.points = load_points_file(js_points);
            cfg.degree = js_degree;
            cfg.field = parse_field(js_field);
            cfg.samples = js_samples;
            cfg.seed = js_seed;
            cfg.coeff_bound = js_bound;
            cfg.enumeration_cap = js_common.cap;
            ExperimentReport rep = run_jet_survey(cfg);
            if (js_common.timing) std::cerr << "runtime: " << rep.runtime_ms << " ms\n";
            emit_report(rep, js_common.format, js_common.out, js_common.timing);
        } else if (*bs) {
            ExperimentConfig cfg;
            cfg.kind = ExperimentKind::bertini_sample;
            cfg.variety = load_variety_file(bs_variety);
            cfg.points = load_points_file(bs_points);
            cfg.degree = bs_degree;
            cfg.field = parse_field(bs_field);
            cfg.trials = bs_trials;
            cfg.seed = bs_seed;
            cfg.coeff_bound = bs_bound;
            cfg.singular_threshold = bs_threshold;
            cfg.enumeration_cap = bs_common.cap;
            ExperimentReport rep = run_bertini_experiment(cfg);
            if (bs_common.timing) std::cerr << "runtime: " << rep.runtime_ms << " ms\n";
            emit_report(rep, bs_common.format, bs_common.out, bs_common.timing);
        } else if (*dd) {
            ExperimentConfig cfg;
            cfg.kind = ExperimentKind::disc_density;
            cfg.points = load_points_file(dd_points);
            cfg.degree = 2;
            cfg.field = parse_field(dd_field);
            cfg.trials = dd_trials;
            cfg.seed = dd_seed;
            cfg.exhaustive = dd_exhaustive;
            cfg.enumeration_cap = dd_common.cap;
            ExperimentReport rep = run_disc_density(cfg);
            if (dd_common.timing) std::cerr << "runtime: " << rep.runtime_ms << " ms\n";
            emit_report(rep, dd_common.format, dd_common.out, dd_common.timing);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
