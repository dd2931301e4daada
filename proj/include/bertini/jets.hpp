#ifndef BERTINI_JETS_HPP
#define BERTINI_JETS_HPP

#include <utility>
#include <vector>

#include "bertini/linear_system.hpp"
#include "bertini/variety.hpp"

namespace bertini {

/*
 * The jet of a member h of a linear system at a point x of X is the
 * class of h / x_chart^deg in the local ring modulo squares of the
 * maximal ideal: its value at x together with its derivative along a
 * tangent basis of X.  Stacking one row per basis member gives a matrix
 * whose rank drives every dimension count in this toolkit.
 */
struct JetMatrix {
    Matrix m;  // rows: basis members; columns: value, then d tangent derivatives
    unsigned chart;
    ProjPoint at;
};

/// Basis of the tangent space of X at x in chart coordinates: the kernel
/// of the chart Jacobian of the generators.  Throws
/// SmoothnessViolationError when the Jacobian rank drops below codim.
/// chart = -1 selects the lowest chart containing x.
std::vector<std::vector<Scalar>> tangent_basis(const VarietySpec& X, const ProjPoint& x,
                                               int chart = -1);

JetMatrix xi_matrix(const LinearSystem& L, const VarietySpec& X, const ProjPoint& x,
                    int chart = -1);

std::size_t xi_rank(const LinearSystem& L, const VarietySpec& X, const ProjPoint& x,
                    int chart = -1);

/// Projective dimension of the members singular at x (or meeting x with
/// singular contact): projective_dim(L) - xi_rank.
long fiber_dimension(const LinearSystem& L, const VarietySpec& X, const ProjPoint& x,
                     int chart = -1);

struct IncidenceDimension {
    long dim_S;
    long dim_V;
    long margin;              // dim_V - dim_S
    long generic_fiber_dim;   // smallest fiber over the non-base sample; -1 if none
    long base_fiber_dim;      // largest fiber over sampled base points; -1 if none
    std::vector<std::pair<ProjPoint, long>> fiber_jumps;  // non-base points above generic
};

/// Dimension estimate for the incidence set {(x, H) : x singular on
/// H meet X}: fibers over a point sample of X, the base locus counted as
/// isolated points.  Fiber jumps at non-base points are reported as
/// findings, not errors.
IncidenceDimension incidence_dimension(const LinearSystem& L, const VarietySpec& X,
                                       const std::vector<ProjPoint>& sample);

}  // namespace bertini

#endif  // BERTINI_JETS_HPP
