#ifndef PCY_HODGE_HPP
#define PCY_HODGE_HPP

#include <optional>

#include "pcy/periods.hpp"

namespace pcy {

// Zariski tangent space of the Hodge locus of a cycle with associated
// polynomial P, realized as the colon-ideal slice (J : P)_d inside the
// degree-d coefficient space of hypersurface deformations.
struct TangentReport {
    long ambient_dim = 0;
    long tangent_dim = 0;
    long codim = 0;
    SliceBasis basis;
};

TangentReport tangent(const HypersurfaceContext& ctx, const Poly& p_delta);

// Intersection of the two tangent spaces at degree d.
TangentReport tangent_meet(const HypersurfaceContext& ctx, const Poly& p1,
                           const Poly& p2);

// Compares (I:R1)_e meet (I:R2)_e with (I:R1+R2)_e. The meet always sits
// inside the sum colon; when the spaces differ, `witness` is a polynomial
// of the sum colon outside (I:R1)_e (outside (I:R2)_e as a fallback).
struct ColonEqualityReport {
    bool holds = false;
    long lhs_dim = 0; // meet
    long rhs_dim = 0; // sum colon
    std::optional<Poly> witness;
};

ColonEqualityReport colon_equality(const GradedIdeal& I, const Poly& R1,
                                   const Poly& R2, int e);

} // namespace pcy

#endif
