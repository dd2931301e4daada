#ifndef BERTINI_PROJECTIVE_HPP
#define BERTINI_PROJECTIVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bertini/matrix.hpp"
#include "bertini/scalar.hpp"

namespace bertini {

/*
 * Point of P^n in canonical homogeneous coordinates: scaled so the first
 * nonzero coordinate is 1.  Equality of ProjPoint values is equality in
 * projective space.
 */
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Scalar> coords);  // normalizes; rejects the zero vector
    static ProjPoint from_ints(FieldTag tag, const std::vector<long long>& v);
    static ProjPoint from_strings(FieldTag tag, const std::vector<std::string>& v);

    const std::vector<Scalar>& coords() const { return coords_; }
    unsigned n() const { return static_cast<unsigned>(coords_.size()) - 1; }
    FieldTag tag() const { return coords_[0].tag(); }

    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    int compare(const ProjPoint& o) const;  // deterministic total order

    /// Lowest index with a nonzero coordinate (always defines a chart).
    unsigned leading_index() const;

    /// Affine coordinates x_j / x_chart, j != chart, in increasing j.
    std::vector<Scalar> chart_coords(unsigned chart) const;

    ProjPoint transformed(const Matrix& t) const;
    ProjPoint reduced_mod_p(std::uint64_t prime) const;

    std::vector<std::string> coord_strings() const;
    std::string str() const;

private:
    std::vector<Scalar> coords_;
};

/// A list of distinct points of P^n.  Up to n+2 points are accepted;
/// general-position queries are restricted to q <= n+1.
class PointConfig {
public:
    PointConfig(FieldTag tag, unsigned n, std::vector<ProjPoint> points);

    FieldTag tag() const { return tag_; }
    unsigned n() const { return n_; }
    std::size_t q() const { return points_.size(); }
    const std::vector<ProjPoint>& points() const { return points_; }

    /// q x (n+1) matrix of homogeneous coordinates.
    Matrix coordinate_matrix() const;

    PointConfig transformed(const Matrix& t) const;
    PointConfig reduced_mod_p(std::uint64_t prime) const;

private:
    FieldTag tag_;
    unsigned n_;
    std::vector<ProjPoint> points_;
};

/// General position test: for q < n+1, the q coordinate vectors are
/// linearly independent; for q = n+1, every n-subset is.  q > n+1 is an
/// error, q = 0 is vacuously true.
bool general_position(const PointConfig& cfg);

/// Coefficients c of a hyperplane sum c_i x_i = 0 with c . P != 0 for
/// every point P of the configuration.  Deterministic small-height
/// search; over tiny prime fields the hyperplane may not exist, which is
/// reported as a ConfigError.
std::vector<Scalar> avoiding_hyperplane(const PointConfig& cfg);

/// Invertible change of coordinates T with T.P_0 ~ (1,0,...,0) and the
/// new hyperplane {X_0 = 0} avoiding every configuration point.  Rows
/// 1..n annihilate their matching point where that is jointly feasible.
/// Both postconditions are re-checked by evaluation before returning.
Matrix normalize_coordinates(const PointConfig& cfg);

/// Points-file JSON: { "n": int, "field": "Q" | {"p": int},
///                     "points": [[str,...], ...] }.
PointConfig points_from_json_text(const std::string& text);
PointConfig load_points_file(const std::string& path);
std::string points_to_json_text(const PointConfig& cfg);

}  // namespace bertini

#endif  // BERTINI_PROJECTIVE_HPP
