#include <doctest.h>

#include "pcy/errors.hpp"
#include "pcy/config.hpp"
#include "pcy/matrix.hpp"
#include "pcy/parse.hpp"
#include "pcy/poly.hpp"
#include "testutil.hpp"

using namespace pcy;

namespace {

Poly P(const RingPtr& ring, const char* text) { return parse_poly(text, ring); }

} // namespace

TEST_CASE("partial derivatives") {
    RingPtr r = PolyRing::get(2, 1);
    CHECK(P(r, "x0^3").partial(0) == P(r, "3*x0^2"));
    CHECK(P(r, "x0*x1^2").partial(1) == P(r, "2*x0*x1"));
    CHECK(P(r, "x0^3").partial(1).is_zero());
}

TEST_CASE("telescoping product matches the Fermat decomposition") {
    RingPtr r = PolyRing::get(2, 6);
    Poly lhs = P(r, "x0 - z*x1") * P(r, "x0^2 + z*x0*x1 + z^2*x1^2");
    CHECK(lhs == P(r, "x0^3 + x1^3"));
}

TEST_CASE("homogeneity bookkeeping") {
    RingPtr r = PolyRing::get(3, 1);
    CHECK(P(r, "x0^2 + x1*x2").degree() == 2);
    CHECK_THROWS_AS(P(r, "x0 + x1*x2").degree(), DomainError);
    CHECK(Poly::zero(r).is_homogeneous());
    CHECK_THROWS_AS(Poly::zero(r).degree(), DomainError);

    test::Rng rng(42);
    for (int rep = 0; rep < 30; ++rep) {
        int da = static_cast<int>(rng.int_in(1, 3));
        int db = static_cast<int>(rng.int_in(1, 3));
        Poly a = rng.homogeneous(r, da);
        Poly b = rng.homogeneous(r, db);
        Poly prod = a * b;
        if (!prod.is_zero())
            CHECK(prod.degree() == da + db);
    }
}

TEST_CASE("Euler identity on random homogeneous polynomials") {
    test::Rng rng(7);
    for (int nv : {2, 4}) {
        RingPtr r = PolyRing::get(nv, 6);
        for (int rep = 0; rep < 20; ++rep) {
            int e = static_cast<int>(rng.int_in(1, 4));
            Poly p = rng.homogeneous(r, e);
            Poly sum(r);
            for (int j = 0; j < nv; ++j)
                sum += Poly::variable(r, j) * p.partial(j);
            CHECK(sum == p * Rational(e));
        }
    }
}

TEST_CASE("jacobian and hessian shapes") {
    RingPtr r4 = PolyRing::get(4, 1);
    Poly fermat = P(r4, "x0^3 + x1^3 + x2^3 + x3^3");
    PolyMatrix h = hessian(fermat);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j)
                CHECK(h.at(i, j) == Poly::variable(r4, i) * Rational(6));
            else
                CHECK(h.at(i, j).is_zero());
        }

    RingPtr r2 = PolyRing::get(2, 1);
    PolyMatrix id = jacobian({P(r2, "x0"), P(r2, "x1")});
    CHECK(id.at(0, 0) == Poly::constant(r2, Rational(1)));
    CHECK(id.at(0, 1).is_zero());
    CHECK(det(id) == Poly::constant(r2, Rational(1)));

    PolyMatrix j2 = jacobian({P(r2, "x0 + x1"), P(r2, "x0^2 - x0*x1 + x1^2")});
    CHECK(j2.at(0, 0) == Poly::constant(r2, Rational(1)));
    CHECK(j2.at(0, 1) == Poly::constant(r2, Rational(1)));
    CHECK(j2.at(1, 0) == P(r2, "2*x0 - x1"));
    CHECK(j2.at(1, 1) == P(r2, "2*x1 - x0"));
    CHECK_THROWS_AS(jacobian({P(r2, "x0")}), DomainError);
}

TEST_CASE("determinants: Fermat hessian and block jacobians") {
    RingPtr r = PolyRing::get(4, 1);
    Poly fermat = P(r, "x0^3 + x1^3 + x2^3 + x3^3");
    CHECK(det(hessian(fermat)) == P(r, "1296*x0*x1*x2*x3"));

    Poly dj = det(jacobian({P(r, "x0 + x1"), P(r, "x0^2 - x0*x1 + x1^2"),
                            P(r, "x2 + x3"), P(r, "x2^2 - x2*x3 + x3^2")}));
    CHECK(dj == P(r, "9*(x0 - x1)*(x2 - x3)"));
}

TEST_CASE("determinant of block-diagonal matrices factors") {
    test::Rng rng(11);
    RingPtr r = PolyRing::get(4, 6);
    for (int rep = 0; rep < 10; ++rep) {
        PolyMatrix a(r, 2), b(r, 2), blockdiag(r, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                a.set(i, j, rng.homogeneous(r, 1, 2));
                b.set(i, j, rng.homogeneous(r, 2, 2));
                blockdiag.set(i, j, a.at(i, j));
                blockdiag.set(i + 2, j + 2, b.at(i, j));
            }
        CHECK(det(blockdiag) == det(a) * det(b));
    }
}

TEST_CASE("determinant dimension guardrail") {
    RingPtr r = PolyRing::get(2, 1);
    int save = config().det_dim_limit;
    config().det_dim_limit = 2;
    PolyMatrix m(r, 3);
    CHECK_THROWS_AS(det(m), ResourceError);
    config().det_dim_limit = save;
}

TEST_CASE("euler omega identity") {
    RingPtr r = PolyRing::get(4, 1);
    CHECK(euler_omega_check({P(r, "x0"), P(r, "x1"), P(r, "x2"), P(r, "x3")}));
    std::vector<Poly> squares{P(r, "x0^2"), P(r, "x1^2"), P(r, "x2^2"),
                              P(r, "x3^2")};
    CHECK(det(jacobian(squares)) == P(r, "16*x0*x1*x2*x3"));
    CHECK(euler_omega_check(squares));
    CHECK_THROWS_AS(
        euler_omega_check({P(r, "x0"), P(r, "x1^2"), P(r, "x2"), P(r, "x3")}),
        DomainError);
}

TEST_CASE("render and reparse round trips") {
    test::Rng rng(13);
    for (unsigned long n : {1ul, 6ul, 8ul}) {
        RingPtr r = PolyRing::get(3, n);
        for (int rep = 0; rep < 40; ++rep) {
            Poly p = rng.homogeneous(r, static_cast<int>(rng.int_in(0, 4)));
            CHECK(parse_poly(p.str(), r) == p);
        }
        CHECK(parse_poly(Poly::zero(r).str(), r).is_zero());
    }
}
