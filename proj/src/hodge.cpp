#include "pcy/hodge.hpp"

#include "pcy/errors.hpp"
#include <initializer_list>

namespace pcy {

namespace {

TangentReport from_basis(SliceBasis basis) {
    TangentReport out;
    out.ambient_dim = basis.ambient_dim();
    out.tangent_dim = basis.dim();
    out.codim = out.ambient_dim - out.tangent_dim;
    out.basis = std::move(basis);
    return out;
}

void require_sigma(const HypersurfaceContext& ctx, const Poly& p) {
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != ctx.sigma()))
        throw DomainError("associated polynomial must have degree " +
                          std::to_string(ctx.sigma()));
}

} // namespace

TangentReport tangent(const HypersurfaceContext& ctx, const Poly& p_delta) {
    require_sigma(ctx, p_delta);
    // a P inside the ideal induces the zero map, so the colon is everything
    return from_basis(colon_slice(ctx.jacobian_ideal(), p_delta, ctx.d()));
}

TangentReport tangent_meet(const HypersurfaceContext& ctx, const Poly& p1,
                           const Poly& p2) {
    require_sigma(ctx, p1);
    require_sigma(ctx, p2);
    SliceBasis a = colon_slice(ctx.jacobian_ideal(), p1, ctx.d());
    SliceBasis b = colon_slice(ctx.jacobian_ideal(), p2, ctx.d());
    return from_basis(slice_meet(a, b));
}

ColonEqualityReport colon_equality(const GradedIdeal& I, const Poly& R1,
                                   const Poly& R2, int e) {
    if (R1.is_zero() || R2.is_zero())
        throw DomainError("colon equality needs nonzero polynomials");
    if (!R1.is_homogeneous() || !R2.is_homogeneous() ||
        R1.degree() != R2.degree())
        throw DomainError("R1 and R2 must be homogeneous of equal degree");
    Poly sum = R1 + R2;
    if (sum.is_zero())
        throw DomainError("R1 + R2 must be nonzero");
    for (const Poly* p : std::initializer_list<const Poly*>{&R1, &R2, &sum})
        if (normal_form(*p, I).is_zero())
            throw DomainError("R1, R2 and R1+R2 must lie outside the ideal");

    SliceBasis a = colon_slice(I, R1, e);
    SliceBasis b = colon_slice(I, R2, e);
    SliceBasis meet = slice_meet(a, b);
    SliceBasis s = colon_slice(I, sum, e);

    ColonEqualityReport rep;
    rep.lhs_dim = meet.dim();
    rep.rhs_dim = s.dim();
    bool contained = true; // meet inside the sum colon, verified
    for (std::size_t i = 0; i < meet.rows.size() && contained; ++i)
        contained = subspace_contains(s, meet.row_poly(I.ring(), i));
    rep.holds = contained && rep.lhs_dim == rep.rhs_dim;
    if (!rep.holds) {
        for (const SliceBasis* side : {&a, &b}) {
            for (std::size_t i = 0; i < s.rows.size(); ++i) {
                Poly cand = s.row_poly(I.ring(), i);
                if (!subspace_contains(*side, cand)) {
                    rep.witness = cand;
                    break;
                }
            }
            if (rep.witness.has_value())
                break;
        }
    }
    return rep;
}

} // namespace pcy
