#ifndef BERTINI_SMOOTHNESS_HPP
#define BERTINI_SMOOTHNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bertini/variety.hpp"

namespace bertini {

/// A_ii = 2*a_ii, A_ij = A_ji = a_ij for the degree-2 form
/// h = sum_{i<=j} a_ij x_i x_j, so that grad h = A x holds identically.
/// The form h = 0 exactly when x is in the kernel of A, and h is singular
/// somewhere iff det A = 0 (characteristic != 2).
Matrix quadric_matrix(const MultiPoly& h);

bool quadric_is_singular(const MultiPoly& h);

/// Every rational point of P^n(F_p) where all partials of h vanish.
/// Complete over rational points; deterministic enumeration order.
/// Requires p not dividing deg h (the Euler identity must apply);
/// rational input is reduced mod p first.
std::vector<ProjPoint> singular_points_bruteforce(const MultiPoly& h, std::uint64_t p,
                                                  std::uint64_t cap = 100000000ull);

/// Rank at x of the chart Jacobian of (generators of X, h).  The section
/// X meet {h = 0} is smooth at x exactly when this equals codim(X) + 1.
std::size_t jacobian_rank_at(const VarietySpec& X, const MultiPoly& h, const ProjPoint& x);

enum class Verdict { smooth_at_rational_points, singular, inapplicable };
std::string verdict_str(Verdict v);

struct SingularityReport {
    std::string form;
    std::optional<std::string> variety_label;
    FieldTag field = FieldTag::rationals();
    std::size_t points_checked = 0;  // points where the rank condition was tested
    std::vector<ProjPoint> singular_points;
    Verdict verdict = Verdict::smooth_at_rational_points;
    std::string reason;  // set for inapplicable verdicts
    std::optional<ProjPoint> degeneration_witness;

    /// JSON per the report schema; runtime is caller-supplied so that
    /// deterministic outputs can omit it.
    std::string to_json_text(std::optional<long long> runtime_ms = std::nullopt) const;
};

/// Enumerates the rational points of X meet {h = 0} over F_p and tests
/// the Jacobian criterion at each.  Verdicts:
///   - inapplicable: X degenerates mod p (witness attached), or h
///     vanishes at every rational point of X (the "X contained in H"
///     branch, detectable only up to the rational-point proxy);
///   - singular: some section point fails the rank test (witnesses listed,
///     sorted in enumeration order);
///   - smooth-at-rational-points otherwise.
SingularityReport smooth_intersection_check(const VarietySpec& X, const MultiPoly& h,
                                            std::uint64_t p, std::uint64_t cap = 100000000ull);

/// Same check against a pre-enumerated point set (X and h already over
/// F_p); `table` optionally accelerates the h values when its degree
/// matches h.
SingularityReport check_intersection(const VarietySpec& X, const MultiPoly& h,
                                     const VarietyPoints& pts,
                                     const MonomialValueTable* table = nullptr);

/// true iff the hyperplane sum c_i x_i = 0 is tangent to X at x: it
/// contains x and its coefficient vector annihilates the tangent space,
/// i.e. c lies in the row span of the Jacobian of X at x.
bool tangent_hyperplane_test(const VarietySpec& X, const std::vector<Scalar>& c,
                             const ProjPoint& x);

}  // namespace bertini

#endif  // BERTINI_SMOOTHNESS_HPP
