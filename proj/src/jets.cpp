#include "bertini/jets.hpp"

#include <algorithm>

namespace bertini {

namespace {

unsigned resolve_chart(const ProjPoint& x, int chart) {
    if (chart < 0) return x.leading_index();
    unsigned c = static_cast<unsigned>(chart);
    if (c > x.n()) throw ShapeError("chart index out of range");
    if (x.coords()[c].is_zero())
        throw ConfigError("point does not lie in chart " + std::to_string(c));
    return c;
}

void require_on_variety(const VarietySpec& X, const ProjPoint& x) {
    if (x.tag() != X.tag()) throw FieldMismatchError("point domain differs from variety");
    if (x.n() != X.n()) throw ShapeError("point dimension differs from ambient space");
    if (!X.contains(x)) throw ConfigError("point " + x.str() + " is not on " + X.label());
}

}  // namespace

std::vector<std::vector<Scalar>> tangent_basis(const VarietySpec& X, const ProjPoint& x,
                                               int chart) {
    require_on_variety(X, x);
    unsigned c = resolve_chart(x, chart);
    std::vector<Scalar> y = x.chart_coords(c);

    Matrix jac(X.tag(), X.codim(), X.n());
    for (std::size_t k = 0; k < X.generators().size(); ++k) {
        MultiPoly g = X.generators()[k].dehomogenize_chart(c);
        for (unsigned v = 0; v < X.n(); ++v) jac.set(k, v, g.partial(v).eval(y));
    }
    if (jac.rank() != X.codim())
        throw SmoothnessViolationError(X.label() + " is singular at " + x.str() +
                                       " (Jacobian rank below codimension)");
    return jac.kernel_basis();
}

JetMatrix xi_matrix(const LinearSystem& L, const VarietySpec& X, const ProjPoint& x, int chart) {
    if (L.tag() != X.tag()) throw FieldMismatchError("system and variety domains differ");
    if (L.n() != X.n()) throw ShapeError("system and variety ambient dimensions differ");
    unsigned c = resolve_chart(x, chart);
    std::vector<std::vector<Scalar>> tangents = tangent_basis(X, x, static_cast<int>(c));
    std::vector<Scalar> y = x.chart_coords(c);
    const unsigned d = X.dim();

    Matrix m(L.tag(), L.dim(), 1 + d);
    for (std::size_t i = 0; i < L.basis().size(); ++i) {
        MultiPoly f = L.basis()[i].dehomogenize_chart(c);
        m.set(i, 0, f.eval(y));
        std::vector<Scalar> grad;
        grad.reserve(X.n());
        for (unsigned v = 0; v < X.n(); ++v) grad.push_back(f.partial(v).eval(y));
        for (unsigned t = 0; t < d; ++t) {
            Scalar dot = Scalar::zero(L.tag());
            for (unsigned v = 0; v < X.n(); ++v) dot += grad[v] * tangents[t][v];
            m.set(i, 1 + t, dot);
        }
    }
    return JetMatrix{std::move(m), c, x};
}

std::size_t xi_rank(const LinearSystem& L, const VarietySpec& X, const ProjPoint& x, int chart) {
    return xi_matrix(L, X, x, chart).m.rank();
}

long fiber_dimension(const LinearSystem& L, const VarietySpec& X, const ProjPoint& x, int chart) {
    return system_dimension(L).projective_dim -
           static_cast<long>(xi_rank(L, X, x, chart));
}

IncidenceDimension incidence_dimension(const LinearSystem& L, const VarietySpec& X,
                                       const std::vector<ProjPoint>& sample) {
    if (sample.empty()) throw ConfigError("incidence dimension needs a nonempty sample");
    const auto& base = L.basepoints().points();
    auto is_base = [&](const ProjPoint& x) {
        return std::find(base.begin(), base.end(), x) != base.end();
    };

    IncidenceDimension out;
    out.dim_V = system_dimension(L).projective_dim;
    out.generic_fiber_dim = -1;
    out.base_fiber_dim = -1;

    long nonbase_max = -1;
    std::vector<std::pair<ProjPoint, long>> nonbase_fibers;
    for (const auto& x : sample) {
        require_on_variety(X, x);
        long f = fiber_dimension(L, X, x);
        if (is_base(x)) {
            out.base_fiber_dim = std::max(out.base_fiber_dim, f);
        } else {
            nonbase_fibers.emplace_back(x, f);
            nonbase_max = std::max(nonbase_max, f);
            out.generic_fiber_dim =
                out.generic_fiber_dim < 0 ? f : std::min(out.generic_fiber_dim, f);
        }
    }
    for (auto& [x, f] : nonbase_fibers)
        if (f > out.generic_fiber_dim) out.fiber_jumps.emplace_back(x, f);

    // the base locus is a finite point set: its fibers enter without the
    // +dim(X) that a family of fibers over all of X picks up
    long dim_s = -1;
    if (nonbase_max >= 0) dim_s = nonbase_max + static_cast<long>(X.dim());
    if (out.base_fiber_dim >= 0) dim_s = std::max(dim_s, out.base_fiber_dim);
    out.dim_S = dim_s;
    out.margin = out.dim_V - out.dim_S;
    return out;
}

}  // namespace bertini
