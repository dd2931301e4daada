#ifndef BERTINI_EXPERIMENTS_HPP
#define BERTINI_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "bertini/jets.hpp"
#include "bertini/linear_system.hpp"
#include "bertini/smoothness.hpp"

namespace bertini {

enum class ExperimentKind { bertini_sample, jet_survey, disc_density };

/*
 * One experiment = one (configuration, seed) pair.  Everything a trial
 * does is a deterministic function of these fields; trial t draws its
 * randomness from seed XOR t, so trials can run in any order.
 */
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::disc_density;
    std::optional<VarietySpec> variety;   // as loaded (usually over Q)
    std::optional<PointConfig> points;    // base points (may be empty)
    unsigned degree = 2;
    FieldTag field = FieldTag::rationals();
    unsigned trials = 1;                  // bertini-sample, sampled disc-density
    unsigned samples = 0;                 // jet-survey
    std::uint64_t seed = 0;
    long long coeff_bound = 10;           // member coefficient height over Q
    double singular_threshold = 0.10;     // echoed into bertini reports
    bool exhaustive = false;              // disc-density: sweep every member class
    std::uint64_t enumeration_cap = 100000000ull;
};

struct ExperimentReport {
    nlohmann::ordered_json config;      // full echo
    nlohmann::ordered_json trials;      // array of per-trial records
    nlohmann::ordered_json aggregates;  // recomputable from the records
    long long runtime_ms = 0;           // measured; not serialized by default

    /// Deterministic serialization.  Timing is opt-in: with it the output
    /// is no longer a pure function of (config, seed).
    std::string to_json_text(bool with_timing = false) const;

    /// Header plus one row per trial record.
    std::string to_csv_text() const;
};

/// Draws random members of the system through the base points and runs
/// the smooth-intersection check on each; aggregates the singular
/// fraction.  Finite fields only; the variety's rational points are
/// enumerated once and shared by all trials.
ExperimentReport run_bertini_experiment(const ExperimentConfig& cfg);

/// Surveys jet ranks over a point sample of X: every base point lying on
/// X plus `samples` distinct non-base points.  Tabulates the rank
/// histogram, fiber dimensions and the incidence dimension margin, and
/// asserts the base/non-base rank stratification.
ExperimentReport run_jet_survey(const ExperimentConfig& cfg);

/// Fraction of members of a degree-2 system with vanishing discriminant,
/// by exhaustive sweep of member classes or seeded sampling.  Exhaustive
/// runs cross-check the discriminant against brute-force enumeration.
ExperimentReport run_disc_density(const ExperimentConfig& cfg);

/// Writes a report to `path` ("-" for stdout) in json or csv.
void emit_report(const ExperimentReport& report, const std::string& format,
                 const std::string& path, bool with_timing = false);

}  // namespace bertini

#endif  // BERTINI_EXPERIMENTS_HPP
