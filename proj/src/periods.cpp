#include "pcy/periods.hpp"

#include <algorithm>

#include "pcy/errors.hpp"

namespace pcy {

// ------------------------------------------------------------- context --

HypersurfaceContext HypersurfaceContext::make(int n, int d, Poly F, bool verify) {
    if (n < 2 || n % 2 != 0)
        throw DomainError("dimension n must be even and >= 2, got " +
                          std::to_string(n));
    if (d < 2)
        throw DomainError("degree d must be >= 2, got " + std::to_string(d));
    RingPtr ring = F.ring();
    if (ring->num_vars() != n + 2)
        throw DomainError("F must live in " + std::to_string(n + 2) +
                          " variables");
    if (F.is_zero() || !F.is_homogeneous() || F.degree() != d)
        throw DomainError("F must be homogeneous of degree " + std::to_string(d));

    HypersurfaceContext ctx;
    ctx.n_ = n;
    ctx.d_ = d;
    ctx.ring_ = ring;
    ctx.F_ = std::move(F);
    ctx.sigma_ = (d - 2) * (n / 2 + 1);
    ctx.socle_ = (d - 2) * (n + 2);

    std::vector<Poly> gens;
    for (int i = 0; i < n + 2; ++i) {
        Poly p = ctx.F_.partial(i);
        if (p.is_zero())
            throw DomainError("F is singular: dF/dx" + std::to_string(i) +
                              " vanishes identically");
        gens.push_back(std::move(p));
    }
    ctx.J_ = std::make_shared<GradedIdeal>(ring, std::move(gens));

    if (verify) {
        GorensteinReport rep = gorenstein_check(*ctx.J_, ctx.socle_);
        if (!rep.ok())
            throw DomainError(
                "the Jacobian ideal is not Gorenstein of socle " +
                std::to_string(ctx.socle_) +
                " (F is singular): socle dim = " + std::to_string(rep.socle_dim) +
                ", dim above = " + std::to_string(rep.above_dim));
    }
    return ctx;
}

HypersurfaceContext HypersurfaceContext::fermat(int n, int d) {
    RingPtr ring = PolyRing::get(n + 2, 2ul * static_cast<unsigned long>(d));
    Poly F(ring);
    for (int i = 0; i < n + 2; ++i)
        F.add_term(Monomial::var(n + 2, i, d), CycloScalar::one(ring->field()));
    return make(n, d, std::move(F), /*verify=*/true);
}

const Poly& HypersurfaceContext::hessian_det() const {
    if (!hess_det_)
        hess_det_ = std::make_shared<Poly>(det(hessian(F_)));
    return *hess_det_;
}

// ---------------------------------------------------------- validation --

CycleValidation validate_cycle(const HypersurfaceContext& ctx,
                               const CitCycle& cycle, bool ci_check) {
    CycleValidation out;
    const int half = ctx.n() / 2 + 1;
    for (const CitSummand& s : cycle.summands) {
        SummandValidation v{.residual = Poly(ctx.ring())};
        if (s.coeff == 0) {
            v.arity_ok = false;
            v.message = "summand coefficient must be nonzero";
            out.summands.push_back(std::move(v));
            continue;
        }
        if (static_cast<int>(s.fs.size()) != half ||
            static_cast<int>(s.gs.size()) != half) {
            v.arity_ok = false;
            v.message = "expected " + std::to_string(half) +
                        " f and g polynomials, got " + std::to_string(s.fs.size()) +
                        " and " + std::to_string(s.gs.size());
            out.summands.push_back(std::move(v));
            continue;
        }
        for (int j = 0; j < half && v.degrees_ok; ++j) {
            const Poly& f = s.fs[static_cast<std::size_t>(j)];
            const Poly& g = s.gs[static_cast<std::size_t>(j)];
            if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1 ||
                f.degree() > ctx.d()) {
                v.degrees_ok = false;
                v.message = "f_" + std::to_string(j + 1) +
                            " must be nonzero homogeneous of degree 1..d";
            } else if (!g.is_zero() &&
                       (!g.is_homogeneous() ||
                        f.degree() + g.degree() != ctx.d())) {
                v.degrees_ok = false;
                v.message = "deg f_" + std::to_string(j + 1) + " + deg g_" +
                            std::to_string(j + 1) + " != d";
            }
        }
        if (!v.degrees_ok) {
            out.summands.push_back(std::move(v));
            continue;
        }
        Poly sum(ctx.ring());
        for (int j = 0; j < half; ++j)
            sum += s.fs[static_cast<std::size_t>(j)] *
                   s.gs[static_cast<std::size_t>(j)];
        if (sum != ctx.F()) {
            v.decomposition_ok = false;
            v.residual = sum - ctx.F();
            v.message = "decomposition mismatch, residual " + v.residual.str();
        }
        if (ci_check) {
            std::vector<int> degs;
            int total = 0;
            for (const Poly& f : s.fs) {
                degs.push_back(f.degree());
                total += f.degree();
            }
            GradedIdeal Z(ctx.ring(), s.fs);
            std::vector<Integer> expect =
                ci_hilbert_coeffs(degs, ctx.ring()->num_vars(), total);
            bool ok = true;
            for (int e = 0; e <= total && ok; ++e)
                if (Integer(quotient_dim(Z, e)) !=
                    expect[static_cast<std::size_t>(e)])
                    ok = false;
            v.ci_ok = ok;
            if (!ok)
                v.message = "complete-intersection certificate failed "
                            "(Hilbert function deviates from the product series)";
        }
        out.summands.push_back(std::move(v));
    }
    return out;
}

void require_valid_cycle(const HypersurfaceContext& ctx, const CitCycle& cycle) {
    CycleValidation v = validate_cycle(ctx, cycle, false);
    if (v.summands.empty())
        throw DomainError("cycle has no summands");
    for (std::size_t i = 0; i < v.summands.size(); ++i)
        if (!v.summands[i].ok())
            throw DomainError("invalid cycle (summand " + std::to_string(i + 1) +
                              "): " + v.summands[i].message);
}

Integer cycle_degree(const CitCycle& cycle) {
    Integer total(0);
    for (const CitSummand& s : cycle.summands) {
        Integer prod(1);
        for (const Poly& f : s.fs)
            prod *= f.degree();
        total += s.coeff * prod;
    }
    return total;
}

// ------------------------------------------------------------- periods --

namespace {

// H = (f_1, g_1, f_2, g_2, ...), the interleaving that drives Jac(H).
std::vector<Poly> interleave(const CitSummand& s, const RingPtr& ring) {
    std::vector<Poly> h;
    h.reserve(2 * s.fs.size());
    for (std::size_t j = 0; j < s.fs.size(); ++j) {
        h.push_back(s.fs[j]);
        // a degree-0 g contributes a constant entry whose row of partials
        // is zero; the determinant path handles it uniformly
        h.push_back(s.gs[j].is_zero() ? Poly::zero(ring) : s.gs[j]);
    }
    return h;
}

Poly summand_assoc(const HypersurfaceContext& ctx, const CitSummand& s) {
    return det(jacobian(interleave(s, ctx.ring())));
}

// scalar_ratio(A * B, hess, J) with the product reduced while multiplying
// when the Jacobian ideal is monomial.
CycloScalar ratio_of_product(const HypersurfaceContext& ctx, const Poly& A,
                             const Poly& B) {
    const GradedIdeal& J = ctx.jacobian_ideal();
    Poly prod = J.is_monomial()
                    ? A.mul_filtered(B, [&J](const Monomial& m) {
                          return !J.monomial_in_ideal(m);
                      })
                    : A * B;
    if (prod.is_zero())
        return CycloScalar::zero(ctx.ring()->field());
    return scalar_ratio(prod, ctx.hessian_det(), J);
}

} // namespace

Poly associated_polynomial(const HypersurfaceContext& ctx, const CitCycle& cycle) {
    require_valid_cycle(ctx, cycle);
    Poly acc(ctx.ring());
    for (const CitSummand& s : cycle.summands)
        acc += summand_assoc(ctx, s) * Rational(s.coeff);
    return acc;
}

PeriodValue period(const HypersurfaceContext& ctx, const CitCycle& cycle,
                   const Poly& P) {
    require_valid_cycle(ctx, cycle);
    if (P.is_zero() || !P.is_homogeneous() || P.degree() != ctx.sigma())
        throw DomainError("period needs P homogeneous of degree " +
                          std::to_string(ctx.sigma()));
    CycloScalar c = CycloScalar::zero(ctx.ring()->field());
    for (const CitSummand& s : cycle.summands) {
        CycloScalar ci = ratio_of_product(ctx, P, summand_assoc(ctx, s));
        c += ci * Rational(s.coeff);
    }
    PeriodValue out;
    out.tpi_power = ctx.n() / 2;
    out.inv_factorial = ctx.n() / 2;
    out.inv_factorial_power = 1;
    out.algebraic =
        c * Rational(int_pow(Integer(ctx.d() - 1),
                             static_cast<unsigned long>(ctx.n() + 2)));
    return out;
}

CycleClassRepr cycle_class(const HypersurfaceContext& ctx, const CitCycle& cycle) {
    Poly p_delta = associated_polynomial(ctx, cycle);
    CycleClassRepr out{
        .theta_coeff = Rational(cycle_degree(cycle), Integer(ctx.d())),
        .primitive_scale = Rational(-factorial(static_cast<unsigned long>(ctx.n() / 2)),
                                    Integer(ctx.d())),
        .primitive_poly = p_delta,
        .primitive_nf = p_delta.is_zero() ? p_delta
                                          : normal_form(p_delta, ctx.jacobian_ideal()),
    };
    out.theta_coeff.canonicalize();
    out.primitive_scale.canonicalize();
    return out;
}

PeriodValue cup_primitive(const HypersurfaceContext& ctx, const Poly& P,
                          const Poly& Q) {
    for (const Poly* p : std::initializer_list<const Poly*>{&P, &Q})
        if (p->is_zero() || !p->is_homogeneous() || p->degree() != ctx.sigma())
            throw DomainError("cup product needs polynomials of degree " +
                              std::to_string(ctx.sigma()));
    CycloScalar c = ratio_of_product(ctx, P, Q);
    PeriodValue out;
    out.tpi_power = ctx.n();
    out.inv_factorial = ctx.n() / 2;
    out.inv_factorial_power = 2;
    Rational scale(-int_pow(Integer(ctx.d() - 1),
                            static_cast<unsigned long>(ctx.n() + 2)) *
                   Integer(ctx.d()));
    out.algebraic = c * scale;
    return out;
}

Rational intersection_number(const HypersurfaceContext& ctx, const CitCycle& a,
                             const CitCycle& b) {
    require_valid_cycle(ctx, a);
    require_valid_cycle(ctx, b);
    // c is bilinear over summand pairs
    CycloScalar c = CycloScalar::zero(ctx.ring()->field());
    std::vector<Poly> assoc_b;
    for (const CitSummand& t : b.summands)
        assoc_b.push_back(summand_assoc(ctx, t));
    for (const CitSummand& s : a.summands) {
        Poly pa = summand_assoc(ctx, s);
        for (std::size_t j = 0; j < b.summands.size(); ++j) {
            CycloScalar cij = ratio_of_product(ctx, pa, assoc_b[j]);
            c += cij * Rational(s.coeff * b.summands[j].coeff);
        }
    }
    if (!c.is_rational())
        throw DomainError("intersection number: c is not rational "
                          "(invalid input cycle), c = " + c.str());
    Rational cr = c.rational_value();
    Integer dm1_pow = int_pow(Integer(ctx.d() - 1),
                              static_cast<unsigned long>(ctx.n() + 2));
    Rational c_scaled = cr * Rational(dm1_pow);
    if (!is_integer(c_scaled))
        throw DomainError("intersection number: c*(d-1)^(n+2) = " +
                          rational_str(c_scaled) + " is not an integer "
                          "(invalid input cycle)");
    Integer deg_a = cycle_degree(a);
    Integer deg_b = cycle_degree(b);
    Rational value = Rational(deg_a * deg_b, Integer(ctx.d())) -
                     c_scaled / Rational(Integer(ctx.d()));
    value.canonicalize();
    if (!is_integer(value))
        throw DomainError("intersection number " + rational_str(value) +
                          " is not an integer (invalid input cycle)");
    // congruence carried by the intersection formula:
    // c (d-1)^{n+2} = deg(a) deg(b) - d (a.b)
    Integer diff = c_scaled.get_num() - deg_a * deg_b;
    if (diff % ctx.d() != 0)
        throw DomainError("intersection number congruence failed: "
                          "c*(d-1)^(n+2) = " + c_scaled.get_num().get_str() +
                          " != deg(a)*deg(b) mod d");
    return value;
}

PeriodValue top_form_period(const std::vector<Poly>& f, const Poly& Q) {
    if (f.empty())
        throw DomainError("empty tuple");
    const RingPtr& ring = f.front().ring();
    int nv = ring->num_vars();
    int n = nv - 2;
    if (static_cast<int>(f.size()) != nv)
        throw DomainError("expected " + std::to_string(nv) + " polynomials");
    int l = f.front().degree();
    if (l < 1)
        throw DomainError("tuple entries must have degree >= 1");
    for (const Poly& fi : f)
        if (fi.is_zero() || fi.degree() != l)
            throw DomainError("tuple entries must be homogeneous of one degree");
    int sigma = (l - 1) * nv;
    if (!Q.is_zero() && Q.degree() != sigma)
        throw DomainError("Q must be homogeneous of degree " +
                          std::to_string(sigma));

    GradedIdeal ideal(ring, f);
    GorensteinReport rep = gorenstein_check(ideal, sigma);
    if (!rep.ok())
        throw DomainError("the tuple has a nonempty base locus: "
                          "<f_0,...> is not Gorenstein of socle " +
                          std::to_string(sigma));
    CycloScalar c = Q.is_zero() ? CycloScalar::zero(ring->field())
                                : scalar_ratio(Q, det(jacobian(f)), ideal);
    PeriodValue out;
    out.tpi_power = n + 1;
    out.inv_factorial = 0;
    out.inv_factorial_power = 1;
    Integer l_pow = int_pow(Integer(l), static_cast<unsigned long>(nv));
    Integer sign_exp = binomial(static_cast<unsigned long>(nv), 2);
    Rational scale(l_pow);
    if (sign_exp % 2 != 0)
        scale = -scale;
    out.algebraic = c * scale;
    return out;
}

// ---------------------------------------------------------- PeriodValue --

std::string PeriodValue::str() const {
    std::string out = "(2*pi*i)^" + std::to_string(tpi_power);
    if (inv_factorial >= 1) {
        if (inv_factorial_power == 1)
            out += "/" + std::to_string(inv_factorial) + "!";
        else
            out += "/(" + std::to_string(inv_factorial) + "!)^" +
                   std::to_string(inv_factorial_power);
    }
    out += " * (" + algebraic.str() + ")";
    return out;
}

bool PeriodValue::operator==(const PeriodValue& o) const {
    if (algebraic.is_zero() && o.algebraic.is_zero())
        return true;
    return tpi_power == o.tpi_power && inv_factorial == o.inv_factorial &&
           inv_factorial_power == o.inv_factorial_power &&
           algebraic == o.algebraic;
}

} // namespace pcy
