#include "bertini/linear_system.hpp"

#include <algorithm>

#include "bertini/rng.hpp"

namespace bertini {

unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::vector<Monomial> monomial_basis(unsigned n, unsigned a) {
    if (a < 1) throw ConfigError("degree must be at least 1");
    std::vector<Monomial> out;
    Monomial cur(n + 1, 0);
    // enumerate all compositions of a into n+1 parts
    auto rec = [&](auto&& self, unsigned var, unsigned rem) -> void {
        if (var == n) {
            cur[var] = rem;
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= rem; ++e) {
            cur[var] = e;
            self(self, var + 1, rem - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, a);
    std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
        return grevlex_less(y, x);  // descending
    });
    return out;
}

LinearSystem::LinearSystem(PointConfig basepoints, unsigned degree,
                           std::vector<Monomial> monomials, std::vector<MultiPoly> basis)
    : basepoints_(std::move(basepoints)),
      degree_(degree),
      monomials_(std::move(monomials)),
      basis_(std::move(basis)) {
    for (const auto& h : basis_) {
        auto d = h.homogeneous_degree();
        if (h.is_zero() || !d || *d != degree_)
            throw Error("internal: basis member is not homogeneous of the system degree");
        for (const auto& p : basepoints_.points())
            if (!h.eval(p.coords()).is_zero())
                throw Error("internal: basis member does not vanish at a base point");
    }
}

std::vector<Scalar> LinearSystem::coefficients_of(const MultiPoly& h) const {
    if (h.tag() != tag() || h.nvars() != n() + 1)
        throw FieldMismatchError("form lives in a different ring than the system");
    std::vector<Scalar> c(monomials_.size(), Scalar::zero(tag()));
    std::size_t found = 0;
    for (std::size_t k = 0; k < monomials_.size(); ++k) {
        Scalar v = h.coeff(monomials_[k]);
        if (!v.is_zero()) ++found;
        c[k] = v;
    }
    if (found != h.terms().size())
        throw ShapeError("form has terms outside the degree-" + std::to_string(degree_) +
                         " monomial span");
    return c;
}

bool LinearSystem::contains(const MultiPoly& h) const {
    std::vector<Scalar> c = coefficients_of(h);
    Matrix m(tag(), basis_.size() + 1, monomials_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::vector<Scalar> b = coefficients_of(basis_[i]);
        for (std::size_t j = 0; j < b.size(); ++j) m.set(i, j, b[j]);
    }
    for (std::size_t j = 0; j < c.size(); ++j) m.set(basis_.size(), j, c[j]);
    return m.rank() == basis_.size();
}

Matrix LinearSystem::canonical_span() const {
    Matrix m(tag(), basis_.size(), monomials_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::vector<Scalar> b = coefficients_of(basis_[i]);
        for (std::size_t j = 0; j < b.size(); ++j) m.set(i, j, b[j]);
    }
    return m.rref();
}

LinearSystem vanishing_system(const PointConfig& cfg, unsigned degree) {
    std::vector<Monomial> mons = monomial_basis(cfg.n(), degree);
    Matrix eval(cfg.tag(), cfg.q(), mons.size());
    for (std::size_t s = 0; s < cfg.q(); ++s) {
        const auto& pt = cfg.points()[s].coords();
        for (std::size_t k = 0; k < mons.size(); ++k) {
            Scalar v = Scalar::one(cfg.tag());
            for (unsigned j = 0; j <= cfg.n(); ++j)
                if (mons[k][j] > 0) v = v * pt[j].pow(mons[k][j]);
            eval.set(s, k, v);
        }
    }
    std::vector<MultiPoly> basis;
    for (const auto& vec : eval.kernel_basis()) {
        MultiPoly h(cfg.tag(), cfg.n() + 1);
        for (std::size_t k = 0; k < mons.size(); ++k) h.add_term(mons[k], vec[k]);
        basis.push_back(std::move(h));
    }
    return LinearSystem(cfg, degree, std::move(mons), std::move(basis));
}

SystemDimension system_dimension(const LinearSystem& L) {
    return SystemDimension{L.dim(), static_cast<long>(L.dim()) - 1};
}

MultiPoly random_member(const LinearSystem& L, std::uint64_t seed, MemberOptions opts) {
    if (L.dim() == 0) throw EmptySystemError("cannot sample from an empty linear system");
    SplitMix64 rng(seed);
    FieldTag tag = L.tag();
    while (true) {
        MultiPoly h(tag, L.n() + 1);
        for (const auto& b : L.basis()) {
            Scalar c = tag.is_rational()
                           ? Scalar::from_int(tag, rng.signed_bounded(opts.coeff_bound))
                           : Scalar::residue(tag.p, rng.below(tag.p));
            if (!c.is_zero()) h = h + b.scaled(c);
        }
        if (!h.is_zero()) return h;
    }
}

LinearSystem lift_degree(const LinearSystem& L, unsigned new_degree) {
    if (new_degree <= L.degree())
        throw ConfigError("lift target degree must exceed the current degree");
    LinearSystem lifted = vanishing_system(L.basepoints(), new_degree);
    const unsigned shift = new_degree - L.degree();
    for (unsigned i = 0; i <= L.n(); ++i) {
        Monomial xi(L.n() + 1, 0);
        xi[i] = shift;
        for (const auto& h : L.basis())
            if (!lifted.contains(h.times_monomial(xi)))
                throw Error("internal: lifted member escapes the larger system");
    }
    return lifted;
}

}  // namespace bertini
