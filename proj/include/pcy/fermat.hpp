#ifndef PCY_FERMAT_HPP
#define PCY_FERMAT_HPP

#include "pcy/hodge.hpp"
#include "pcy/periods.hpp"

namespace pcy {

// A half-dimensional linear subvariety of the Fermat variety, cut by the
// binomials x_{2j-2} - zeta_{2d}^{alpha_j} x_{2j-1}. The exponents are odd
// so that f_j divides x_{2j-2}^d + x_{2j-1}^d.
struct LinearCycleSpec {
    int n = 0;
    int d = 0;
    std::vector<int> alphas; // n/2+1 odd values in {1, 3, ..., 2d-1}

    void validate() const;
};

// Context for the Fermat variety over Q(zeta_2d); the Jacobian ideal is
// the monomial ideal <d x_i^{d-1}>.
HypersurfaceContext fermat_context(int n, int d);

// The cycle with f_j = x_{2j-2} - zeta^{alpha_j} x_{2j-1} and the
// telescoping cofactor g_j = sum_l zeta^{alpha_j l} x_{2j-2}^{d-1-l} x_{2j-1}^l,
// so that f_j g_j = x_{2j-2}^d + x_{2j-1}^d exactly.
CitCycle linear_cycle(const LinearCycleSpec& spec);

// Closed form of the associated polynomial:
// d^{n/2+1} zeta^{sum alphas} prod_j sum_l x_{2j-2}^{d-2-l} zeta^{alpha_j l} x_{2j-1}^l.
Poly associated_poly_closed(const LinearCycleSpec& spec);

// (1 - (1-d)^{m+1}) / d with m = #{j : alpha_j = beta_j} - 1.
Rational linear_intersection_closed(const LinearCycleSpec& a,
                                    const LinearCycleSpec& b);

// Period of the monomial residue form x^i against the alpha = (1,...,1)
// linear cycle: (2*pi*i)^{n/2} / (d^{n/2+1} (n/2)!) zeta^{n/2+1+i_0+i_2+...+i_n}
// when every pair sum i_{2l-2} + i_{2l-1} equals d-2, and 0 otherwise.
PeriodValue linear_period_closed(int n, int d, const Monomial& i);

// Codimension of the locus of hypersurfaces containing two linear cycles
// meeting in a P^m: 2 binom(n/2+d, d) - 2 (n/2+1)^2 - binom(m+d, d) + (m+1)^2.
Integer codim_formula(int n, int d, int m);

// Tangent-space comparison for delta = a P + b P~ built from the all-ones
// cycle and a second cycle differing (odd exponents >= 3) in the first
// n/2 - m coordinate pairs: does the tangent space of the combined cycle
// equal the meet of the two individual tangent spaces, and does that match
// the threshold m < n/2 - d/(d-2)?
struct FermatVerdict {
    int n = 0, d = 0, m = 0;
    Integer a, b;
    long ambient = 0;
    long dim_tangent_1 = 0;
    long dim_tangent_2 = 0;
    long dim_meet = 0;
    long dim_delta_tangent = 0;
    bool equal = false;          // meet == tangent of the sum, as subspaces
    bool expected_equal = false; // m < n/2 - d/(d-2)
    bool consistent = false;     // equal == expected_equal
    Integer codim_formula_value;
    bool codim_match = false;    // dim_meet == ambient - codim formula
};

FermatVerdict fermat_verdict(int n, int d, int m, const std::vector<int>& alphas_b,
                             const Integer& a, const Integer& b);

} // namespace pcy

#endif
