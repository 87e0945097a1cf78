#include <doctest.h>

#include "pcy/errors.hpp"
#include "pcy/fermat.hpp"
#include "pcy/parse.hpp"
#include "pcy/periods.hpp"

using namespace pcy;

namespace {

Poly P(const RingPtr& ring, const char* text) { return parse_poly(text, ring); }

// the line {x0+x1 = x2+x3 = 0} on the Fermat cubic surface
CitCycle cubic_line(const HypersurfaceContext& ctx) {
    const RingPtr& r = ctx.ring();
    CitSummand s{.coeff = Integer(1)};
    s.fs = {P(r, "x0 + x1"), P(r, "x2 + x3")};
    s.gs = {P(r, "x0^2 - x0*x1 + x1^2"), P(r, "x2^2 - x2*x3 + x3^2")};
    return CitCycle{.summands = {s}};
}

} // namespace

TEST_CASE("context construction") {
    HypersurfaceContext ctx = fermat_context(2, 3);
    CHECK(ctx.sigma() == 2);
    CHECK(ctx.socle() == 4);
    CHECK(ctx.jacobian_ideal().is_power_ideal());
    CHECK(ctx.hessian_det() == P(ctx.ring(), "1296*x0*x1*x2*x3"));

    CHECK_THROWS_AS(fermat_context(3, 3), DomainError);
    CHECK_THROWS_AS(fermat_context(2, 1), DomainError);

    // a visibly singular form fails the Gorenstein verification
    RingPtr r = PolyRing::get(4, 6);
    CHECK_THROWS_AS(
        HypersurfaceContext::make(2, 3, P(r, "x0^3 + x1^3 + x2^3"), true),
        DomainError); // cone: dF/dx3 = 0
    CHECK_THROWS_AS(
        HypersurfaceContext::make(2, 3, P(r, "x0^3 + x1^3 + x2^3 + x2^2*x3"),
                                  true),
        DomainError); // singular at (0:0:0:1)
}

TEST_CASE("validate_cycle") {
    HypersurfaceContext ctx = fermat_context(2, 3);
    const RingPtr& r = ctx.ring();
    CitCycle line = cubic_line(ctx);
    CHECK(validate_cycle(ctx, line, false).ok());
    CHECK(validate_cycle(ctx, line, true).ok());

    // swapped cofactors no longer sum to F
    CitCycle swapped = line;
    std::swap(swapped.summands[0].gs[0], swapped.summands[0].gs[1]);
    CycleValidation v = validate_cycle(ctx, swapped, false);
    CHECK_FALSE(v.ok());
    CHECK_FALSE(v.summands[0].decomposition_ok);
    CHECK_FALSE(v.summands[0].residual.is_zero());

    // (x0, x0^2) is not a regular sequence; the certificate flags it on
    // any F regardless of the decomposition
    CitCycle degenerate;
    degenerate.summands.push_back(
        CitSummand{.coeff = Integer(1),
                   .fs = {P(r, "x0"), P(r, "x0^2")},
                   .gs = {P(r, "x0^2"), P(r, "x0")}});
    CycleValidation ci = validate_cycle(ctx, degenerate, true);
    REQUIRE(ci.summands[0].ci_ok.has_value());
    CHECK_FALSE(*ci.summands[0].ci_ok);

    // arity error
    CitCycle short_cycle;
    short_cycle.summands.push_back(
        CitSummand{.coeff = Integer(1), .fs = {P(r, "x0")}, .gs = {P(r, "x0^2")}});
    CHECK_FALSE(validate_cycle(ctx, short_cycle, false).ok());
}

TEST_CASE("associated polynomial of the cubic line") {
    HypersurfaceContext ctx = fermat_context(2, 3);
    const RingPtr& r = ctx.ring();
    CitCycle line = cubic_line(ctx);
    Poly expected = P(r, "9*(x0 - x1)*(x2 - x3)");
    CHECK(associated_polynomial(ctx, line) == expected);

    CitCycle scaled = line;
    scaled.summands[0].coeff = Integer(-2);
    CHECK(associated_polynomial(ctx, scaled) == expected * Rational(-2));
}

TEST_CASE("period examples on the cubic line") {
    HypersurfaceContext ctx = fermat_context(2, 3);
    const RingPtr& r = ctx.ring();
    CitCycle line = cubic_line(ctx);

    PeriodValue v = period(ctx, line, P(r, "x0*x2"));
    CHECK(v.tpi_power == 1);
    CHECK(v.inv_factorial == 1);
    CHECK(v.inv_factorial_power == 1);
    CHECK(v.algebraic ==
          CycloScalar::of(r->field(), Rational(Integer(1), Integer(9))));
    CHECK(v.str() == "(2*pi*i)^1/1! * (1/9)");

    CHECK(period(ctx, line, P(r, "x0*x1")).is_zero());
    CHECK_THROWS_AS(period(ctx, line, P(r, "x0")), DomainError);
}

TEST_CASE("cycle class of the cubic line and of a plane section") {
    HypersurfaceContext ctx = fermat_context(2, 3);
    const RingPtr& r = ctx.ring();
    CycleClassRepr repr = cycle_class(ctx, cubic_line(ctx));
    CHECK(repr.theta_coeff == Rational(Integer(1), Integer(3)));
    CHECK(repr.primitive_scale == Rational(Integer(-1), Integer(3)));
    CHECK(repr.primitive_poly == P(r, "9*(x0 - x1)*(x2 - x3)"));
    CHECK_FALSE(repr.is_theta_multiple());

    // doubling is linear
    CitCycle twice = cubic_line(ctx);
    twice.summands[0].coeff = Integer(2);
    CycleClassRepr repr2 = cycle_class(ctx, twice);
    CHECK(repr2.theta_coeff == Rational(Integer(2), Integer(3)));
    CHECK(repr2.primitive_poly == repr.primitive_poly * Rational(2));

    // plane section: f = (x0, x1^3 + x2^3 + x3^3), g = (x0^2, 1);
    // the constant cofactor forces det Jac(H) = 0, so the class is a
    // rational multiple of the polarization
    CitCycle plane;
    plane.summands.push_back(
        CitSummand{.coeff = Integer(1),
                   .fs = {P(r, "x0"), P(r, "x1^3 + x2^3 + x3^3")},
                   .gs = {P(r, "x0^2"), P(r, "1")}});
    CHECK(validate_cycle(ctx, plane, false).ok());
    CycleClassRepr repr3 = cycle_class(ctx, plane);
    CHECK(repr3.primitive_poly.is_zero());
    CHECK(repr3.is_theta_multiple());
    CHECK(repr3.theta_coeff == Rational(1));
}

TEST_CASE("cup product examples") {
    HypersurfaceContext ctx = fermat_context(2, 3);
    const RingPtr& r = ctx.ring();
    PeriodValue zero = cup_primitive(ctx, P(r, "x0*x2"), P(r, "x0*x2"));
    CHECK(zero.is_zero()); // x0^2 x2^2 lies in <x_i^2>

    PeriodValue v = cup_primitive(ctx, P(r, "x0*x2"), P(r, "x1*x3"));
    CHECK(v.tpi_power == 2);
    CHECK(v.inv_factorial == 1);
    CHECK(v.inv_factorial_power == 2);
    CHECK(v.algebraic ==
          CycloScalar::of(r->field(), Rational(Integer(-1), Integer(27))));
    CHECK(v.str() == "(2*pi*i)^2/(1!)^2 * (-1/27)");
}

TEST_CASE("intersection numbers on the cubic surface") {
    HypersurfaceContext ctx = fermat_context(2, 3);
    CitCycle line = cubic_line(ctx);
    CHECK(intersection_number(ctx, line, line) == Rational(-1));

    // disjoint lines and lines meeting in a point, via the linear-cycle
    // constructors (m = -1 and m = 0)
    CitCycle base = linear_cycle(LinearCycleSpec{2, 3, {1, 1}});
    CitCycle disjoint = linear_cycle(LinearCycleSpec{2, 3, {3, 3}});
    CitCycle meeting = linear_cycle(LinearCycleSpec{2, 3, {3, 1}});
    CHECK(intersection_number(ctx, base, disjoint) == Rational(0));
    CHECK(intersection_number(ctx, base, meeting) == Rational(1));
}

TEST_CASE("intersection is bilinear over summands") {
    HypersurfaceContext ctx = fermat_context(2, 3);
    CitCycle a = linear_cycle(LinearCycleSpec{2, 3, {1, 1}});
    CitCycle b = linear_cycle(LinearCycleSpec{2, 3, {3, 1}});
    CitCycle c = linear_cycle(LinearCycleSpec{2, 3, {5, 3}});

    CitCycle combo; // 2a - 3b
    combo.summands = {a.summands[0], b.summands[0]};
    combo.summands[0].coeff = Integer(2);
    combo.summands[1].coeff = Integer(-3);

    Rational lhs = intersection_number(ctx, combo, c);
    Rational rhs = Rational(2) * intersection_number(ctx, a, c) -
                   Rational(3) * intersection_number(ctx, b, c);
    CHECK(lhs == rhs);
}

TEST_CASE("duality: period pairs with the cycle class cup product") {
    HypersurfaceContext ctx = fermat_context(2, 3);
    const RingPtr& r = ctx.ring();
    CitCycle line = cubic_line(ctx);
    Poly p_delta = associated_polynomial(ctx, line);
    for (const char* ptext : {"x0*x2", "x0*x3", "x1*x3", "x0*x1", "x2^2"}) {
        Poly P_ = P(r, ptext);
        PeriodValue per = period(ctx, line, P_);
        PeriodValue cup = cup_primitive(ctx, p_delta, P_);
        // algebraic parts satisfy period = -cup / d after unfolding the
        // factorial bookkeeping of both values
        CHECK(per.algebraic ==
              cup.algebraic * Rational(Integer(-1), Integer(ctx.d())));
    }
}

TEST_CASE("top form periods") {
    for (int nv : {3, 4, 5, 6}) {
        RingPtr r = PolyRing::get(nv, 1);
        std::vector<Poly> coords;
        for (int i = 0; i < nv; ++i)
            coords.push_back(Poly::variable(r, i));
        PeriodValue v = top_form_period(coords, P(r, "1"));
        CHECK(v.tpi_power == nv - 1);
        CHECK(v.inv_factorial == 0);
        long sign = binomial(static_cast<unsigned long>(nv), 2) % 2 == 0 ? 1 : -1;
        CHECK(v.algebraic == CycloScalar::of(r->field(), Rational(sign)));

        // Q = det Jac(f) gives c = 1
        for (int l : {2, 3}) {
            std::vector<Poly> powers;
            for (int i = 0; i < nv; ++i)
                powers.push_back(
                    Poly::term(r, Monomial::var(nv, i, l),
                               CycloScalar::one(r->field())));
            Poly dj = det(jacobian(powers));
            PeriodValue w = top_form_period(powers, dj);
            Rational expect(int_pow(Integer(l), static_cast<unsigned long>(nv)) *
                            sign);
            CHECK(w.algebraic == CycloScalar::of(r->field(), expect));
        }
    }

    // the 4-variable square tuple: c = 1/16 against x0 x1 x2 x3
    RingPtr r = PolyRing::get(4, 1);
    std::vector<Poly> squares{P(r, "x0^2"), P(r, "x1^2"), P(r, "x2^2"),
                              P(r, "x3^2")};
    PeriodValue v = top_form_period(squares, P(r, "x0*x1*x2*x3"));
    CHECK(v.tpi_power == 3);
    CHECK(v.algebraic == CycloScalar::of(r->field(), Rational(1)));

    // base locus: x0 misses the tuple entirely
    std::vector<Poly> degenerate{P(r, "x1^2"), P(r, "x1*x2"), P(r, "x2^2"),
                                 P(r, "x3^2")};
    CHECK_THROWS_AS(top_form_period(degenerate, P(r, "x0*x1*x2*x3")),
                    DomainError);
}
