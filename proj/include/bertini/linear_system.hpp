#ifndef BERTINI_LINEAR_SYSTEM_HPP
#define BERTINI_LINEAR_SYSTEM_HPP

#include <cstdint>
#include <vector>

#include "bertini/poly.hpp"
#include "bertini/projective.hpp"

namespace bertini {

unsigned long long binomial(unsigned n, unsigned k);

/// All C(n+a, n) exponent vectors of total degree a in n+1 variables,
/// in descending grevlex order.
std::vector<Monomial> monomial_basis(unsigned n, unsigned a);

/*
 * The space of degree-a forms vanishing at a prescribed point set,
 * realized as the kernel of the q x C(n+a,n) evaluation matrix.  The
 * basis is the canonical kernel basis (reduced echelon over the
 * monomial coordinates), so equal subspaces have equal bases.
 */
class LinearSystem {
public:
    LinearSystem(PointConfig basepoints, unsigned degree, std::vector<Monomial> monomials,
                 std::vector<MultiPoly> basis);

    unsigned n() const { return basepoints_.n(); }
    unsigned degree() const { return degree_; }
    FieldTag tag() const { return basepoints_.tag(); }
    const PointConfig& basepoints() const { return basepoints_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    const std::vector<MultiPoly>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    /// Coefficients of a degree-a form over monomials(); rejects forms
    /// with terms outside the degree-a span.
    std::vector<Scalar> coefficients_of(const MultiPoly& h) const;

    /// Exact membership test by a rank comparison.
    bool contains(const MultiPoly& h) const;

    /// RREF of the basis coefficient matrix: a canonical subspace
    /// representative, comparable across construction routes.
    Matrix canonical_span() const;

private:
    PointConfig basepoints_;
    unsigned degree_;
    std::vector<Monomial> monomials_;
    std::vector<MultiPoly> basis_;
};

/// The full vanishing system {h of degree a : h(P_s) = 0 for all s}.
LinearSystem vanishing_system(const PointConfig& cfg, unsigned degree);

struct SystemDimension {
    std::size_t vector_dim;
    long projective_dim;  // vector_dim - 1; -1 flags the empty system
};
SystemDimension system_dimension(const LinearSystem& L);

struct MemberOptions {
    long long coeff_bound = 10;  // coefficient height over Q
};

/// A nonzero random combination of the basis, deterministic in the seed.
/// Coefficients are uniform residues over F_p and uniform integers in
/// [-coeff_bound, coeff_bound] over Q; the zero draw is rejected.
MultiPoly random_member(const LinearSystem& L, std::uint64_t seed, MemberOptions opts = {});

/// The vanishing system at the same points in a strictly larger degree.
/// Verifies the lifting containment x_i^(a_new - a) * h for every basis
/// member h and every variable before returning.
LinearSystem lift_degree(const LinearSystem& L, unsigned new_degree);

}  // namespace bertini

#endif  // BERTINI_LINEAR_SYSTEM_HPP
