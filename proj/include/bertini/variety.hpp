#ifndef BERTINI_VARIETY_HPP
#define BERTINI_VARIETY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bertini/poly.hpp"
#include "bertini/projective.hpp"

namespace bertini {

/*
 * A smooth complete intersection X in P^n: homogeneous generators, one
 * per codimension, plus the declared dimension.  Smoothness is not
 * taken on faith; every operation that touches a point of X re-checks
 * the Jacobian rank there.
 */
class VarietySpec {
public:
    VarietySpec(FieldTag tag, unsigned n, unsigned dim, std::string label,
                std::vector<MultiPoly> generators);

    FieldTag tag() const { return tag_; }
    unsigned n() const { return n_; }
    unsigned dim() const { return dim_; }
    unsigned codim() const { return n_ - dim_; }
    const std::string& label() const { return label_; }
    const std::vector<MultiPoly>& generators() const { return generators_; }

    bool contains(const std::vector<Scalar>& coords) const;
    bool contains(const ProjPoint& x) const { return contains(x.coords()); }

    /// Homogeneous Jacobian (d generators' gradients) at x: codim x (n+1).
    Matrix jacobian_at(const ProjPoint& x) const;

    VarietySpec reduced_mod_p(std::uint64_t prime) const;

private:
    FieldTag tag_;
    unsigned n_;
    unsigned dim_;
    std::string label_;
    std::vector<MultiPoly> generators_;
};

/// Variety-file JSON: { "n": int, "dim": int, "label": str,
///                      "generators": [poly strings] }, coefficients
/// rational.
VarietySpec variety_from_json_text(const std::string& text);
VarietySpec load_variety_file(const std::string& path);
std::string variety_to_json_text(const VarietySpec& X);

/// Flat list of canonical representatives (first nonzero coordinate 1).
struct FpPointSet {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::size_t count = 0;
    std::vector<std::uint64_t> flat;  // count * (n+1)

    const std::uint64_t* point(std::size_t k) const { return &flat[k * (n + 1)]; }
    ProjPoint point_at(std::size_t k) const;
    std::optional<std::size_t> index_of(const ProjPoint& x) const;
};

/// All (p^(n+1)-1)/(p-1) points of P^n(F_p).  Throws CapExceededError
/// when that count exceeds `cap`.
FpPointSet enumerate_projective_points(unsigned n, std::uint64_t p, std::uint64_t cap = 100000000ull);

struct VarietyPoints {
    FpPointSet points;                          // the rational points of X
    std::optional<ProjPoint> singular_witness;  // set if X fails its own Jacobian check
};

/// Rational points of X over its prime field, with a smoothness audit of
/// X itself at every point found.
VarietyPoints enumerate_variety_points(const VarietySpec& X, std::uint64_t cap = 100000000ull);

/// Values of every degree-a monomial at every point: row k holds the
/// monomial values at point k, in monomial_basis(n, degree) order.
struct MonomialValueTable {
    std::vector<Monomial> monomials;
    std::size_t stride = 0;
    std::vector<std::uint64_t> values;

    const std::uint64_t* row(std::size_t k) const { return &values[k * stride]; }
};

MonomialValueTable monomial_values(const FpPointSet& pts, unsigned degree);

}  // namespace bertini

#endif  // BERTINI_VARIETY_HPP
