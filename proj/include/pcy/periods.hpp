#ifndef PCY_PERIODS_HPP
#define PCY_PERIODS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcy/ideal.hpp"
#include "pcy/matrix.hpp"

namespace pcy {

// A smooth degree-d hypersurface {F = 0} in P^{n+1}, n even, together with
// its Jacobian ideal and the degrees that drive the period formulas:
// sigma = (d-2)(n/2+1) for associated polynomials, socle = (d-2)(n+2).
class HypersurfaceContext {
public:
    // verify = run the Gorenstein checks on the Jacobian ideal at the
    // socle degree; a singular F fails them.
    static HypersurfaceContext make(int n, int d, Poly F, bool verify = true);
    // Fermat variety x_0^d + ... + x_{n+1}^d over Q(zeta_2d); the Jacobian
    // ideal is monomial and all slice work stays combinatorial.
    static HypersurfaceContext fermat(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    const RingPtr& ring() const { return ring_; }
    const Poly& F() const { return F_; }
    const GradedIdeal& jacobian_ideal() const { return *J_; }
    int sigma() const { return sigma_; }
    int socle() const { return socle_; }
    const Poly& hessian_det() const;

private:
    HypersurfaceContext() = default;

    int n_ = 0, d_ = 0;
    RingPtr ring_;
    Poly F_{PolyRing::get(2, 1)};
    std::shared_ptr<GradedIdeal> J_;
    int sigma_ = 0, socle_ = 0;
    mutable std::shared_ptr<Poly> hess_det_;
};

// One complete intersection Z = {f_1 = ... = f_{n/2+1} = 0} with the
// decomposition F = sum_j f_j g_j, weighted by an integer coefficient.
struct CitSummand {
    Integer coeff;
    std::vector<Poly> fs;
    std::vector<Poly> gs;
};

// Integer combination of complete-intersection cycles.
struct CitCycle {
    std::vector<CitSummand> summands;
};

// Exact symbolic period: algebraic * (2*pi*i)^tpi_power / (inv_factorial!)
// (squared divisor when inv_factorial_power is 2, as for cup products).
struct PeriodValue {
    int tpi_power = 0;
    int inv_factorial = 0;
    int inv_factorial_power = 1;
    CycloScalar algebraic;

    bool is_zero() const { return algebraic.is_zero(); }
    std::string str() const;
    bool operator==(const PeriodValue& o) const;
};

struct SummandValidation {
    bool arity_ok = true;
    bool degrees_ok = true;
    bool decomposition_ok = true;
    Poly residual;                 // sum f_j g_j - F when decomposition fails
    std::optional<bool> ci_ok;     // set when the regular-sequence check ran
    std::string message;
    bool ok() const {
        return arity_ok && degrees_ok && decomposition_ok &&
               (!ci_ok.has_value() || *ci_ok);
    }
};

struct CycleValidation {
    std::vector<SummandValidation> summands;
    bool ok() const {
        for (const auto& s : summands)
            if (!s.ok())
                return false;
        return !summands.empty();
    }
};

// Checks sum_j f_j g_j = F and the degree bookkeeping per summand. With
// ci_check, additionally compares the Hilbert function of <f_1,...> with
// the complete-intersection series through degree sum(deg f_j); equality
// in that range certifies a regular sequence there (heuristic).
CycleValidation validate_cycle(const HypersurfaceContext& ctx,
                               const CitCycle& cycle, bool ci_check = false);

// Throws DomainError when validate_cycle fails.
void require_valid_cycle(const HypersurfaceContext& ctx, const CitCycle& cycle);

// deg(delta) = sum_i n_i prod_j deg f_{i,j} (Bezout).
Integer cycle_degree(const CitCycle& cycle);

// P_delta = sum_i n_i det Jac(f_{i,1}, g_{i,1}, ..., f_{i,n/2+1}, g_{i,n/2+1}).
Poly associated_polynomial(const HypersurfaceContext& ctx, const CitCycle& cycle);

// Integral over the cycle of the residue form of P Omega / F^{n/2+1}:
// (2*pi*i)^{n/2} / (n/2)! times (sum_i n_i c_i) (d-1)^{n+2}, where
// P det Jac(H_i) = c_i det Hess(F) modulo the Jacobian ideal.
PeriodValue period(const HypersurfaceContext& ctx, const CitCycle& cycle,
                   const Poly& P);

// [delta] = theta_coeff * theta^{n/2} + primitive_scale * (residue class
// of primitive_poly); primitive_nf is its normal form mod the Jacobian
// ideal, which determines the class.
struct CycleClassRepr {
    Rational theta_coeff;
    Rational primitive_scale;
    Poly primitive_poly;
    Poly primitive_nf;
    bool is_theta_multiple() const { return primitive_nf.is_zero(); }
};

CycleClassRepr cycle_class(const HypersurfaceContext& ctx, const CitCycle& cycle);

// Cup product of the primitive residue classes of P and Q:
// -(2*pi*i)^n / ((n/2)!)^2 * c (d-1)^{n+2} d with PQ = c det Hess(F) mod J.
PeriodValue cup_primitive(const HypersurfaceContext& ctx, const Poly& P,
                          const Poly& Q);

// Exact intersection number of two complete-intersection-type cycles.
// Asserts integrality of the result, of c (d-1)^{n+2}, and the congruence
// c (d-1)^{n+2} = deg(delta) deg(mu) (mod d).
Rational intersection_number(const HypersurfaceContext& ctx, const CitCycle& a,
                             const CitCycle& b);

// Integral of Q Omega / (f_0 ... f_{n+1}) over P^{n+1} for a base-point
// free tuple of degree-l forms: c l^{n+2} (-1)^{binom(n+2,2)} (2*pi*i)^{n+1}
// with Q = c det Jac(f) modulo <f_0, ..., f_{n+1}>.
PeriodValue top_form_period(const std::vector<Poly>& f, const Poly& Q);

} // namespace pcy

#endif
