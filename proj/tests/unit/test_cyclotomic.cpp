#include <doctest.h>

#include "pcy/cyclotomic.hpp"
#include "pcy/errors.hpp"
#include "testutil.hpp"

using namespace pcy;

namespace {

QPoly qpoly(std::initializer_list<long> coeffs) {
    QPoly out;
    for (long c : coeffs)
        out.emplace_back(c);
    return out;
}

// multiply dense rational polynomials; oracle-side helper
QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

unsigned long totient(unsigned long n) {
    unsigned long out = 0;
    for (unsigned long k = 1; k <= n; ++k) {
        unsigned long a = k, b = n;
        while (b) {
            unsigned long t = a % b;
            a = b;
            b = t;
        }
        if (a == 1)
            ++out;
    }
    return out;
}

} // namespace

TEST_CASE("cyclotomic polynomials: known small values") {
    CHECK(cyclotomic_polynomial(1) == qpoly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == qpoly({1, 1}));
    CHECK(cyclotomic_polynomial(6) == qpoly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(8) == qpoly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == qpoly({1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic polynomials: defining factorization and degree") {
    for (unsigned long n = 1; n <= 30; ++n) {
        QPoly prod{Rational(1)};
        for (unsigned long m = 1; m <= n; ++m)
            if (n % m == 0)
                prod = qmul(prod, cyclotomic_polynomial(m));
        QPoly expect(n + 1, Rational(0));
        expect[0] = -1;
        expect[n] = 1;
        CHECK(prod == expect);
        CHECK(cyclotomic_polynomial(n).size() == totient(n) + 1);
    }
}

TEST_CASE("field arithmetic examples") {
    FieldPtr f6 = CycloField::get(6);
    CycloScalar z6 = CycloScalar::zeta(f6);
    CHECK(z6.pow(3) == CycloScalar::of(f6, Rational(-1)));
    // zeta_6^2 reduces to zeta_6 - 1 mod t^2 - t + 1
    CHECK(z6.pow(2) == z6 - CycloScalar::one(f6));

    FieldPtr f8 = CycloField::get(8);
    CycloScalar z8 = CycloScalar::zeta(f8);
    CHECK(z8 * z8.pow(7) == CycloScalar::one(f8));
}

TEST_CASE("powers of the primitive root") {
    for (unsigned long n : {2ul, 4ul, 6ul, 8ul, 10ul, 12ul, 14ul, 16ul}) {
        FieldPtr f = CycloField::get(n);
        CycloScalar z = CycloScalar::zeta(f);
        CHECK(z.pow(static_cast<long>(n)) == CycloScalar::one(f));
        CHECK(z.pow(static_cast<long>(n / 2)) ==
              CycloScalar::of(f, Rational(-1)));
    }
}

TEST_CASE("field axioms under random values") {
    test::Rng rng(20240517);
    for (unsigned long n : {2ul, 4ul, 6ul, 8ul, 10ul}) {
        FieldPtr f = CycloField::get(n);
        for (int rep = 0; rep < 40; ++rep) {
            CycloScalar a = rng.scalar(f);
            CycloScalar b = rng.scalar(f);
            if (a.is_zero())
                continue;
            CHECK((a * b) / a == b);
            CHECK(a * a.inverse() == CycloScalar::one(f));
            CHECK((a + b) - b == a);
        }
    }
}

TEST_CASE("division by zero and mismatched fields error out") {
    FieldPtr f6 = CycloField::get(6);
    FieldPtr f8 = CycloField::get(8);
    CycloScalar one6 = CycloScalar::one(f6);
    CHECK_THROWS_AS(one6 / CycloScalar::zero(f6), DomainError);
    CHECK_THROWS_AS(one6 + CycloScalar::one(f8), DomainError);
}

TEST_CASE("rational fast path: N = 1 behaves as Q") {
    FieldPtr f1 = CycloField::get(1);
    CycloScalar a = CycloScalar::of(f1, Rational(Integer(2), Integer(3)));
    CycloScalar b = CycloScalar::of(f1, Rational(Integer(-5), Integer(4)));
    CHECK((a * b).rational_value() == Rational(Integer(-5), Integer(6)));
    CHECK((a / b).rational_value() == Rational(Integer(-8), Integer(15)));
    CHECK(CycloScalar::zeta(f1).is_one());
}

TEST_CASE("numeric smoke: reduced representatives of zero evaluate to zero") {
    test::Rng rng(987123);
    for (unsigned long n : {6ul, 8ul, 10ul, 12ul}) {
        FieldPtr f = CycloField::get(n);
        CycloScalar z = CycloScalar::zeta(f);
        for (int rep = 0; rep < 10; ++rep) {
            long i = rng.int_in(0, static_cast<long>(2 * n));
            long j = rng.int_in(0, static_cast<long>(2 * n));
            CycloScalar zero = z.pow(i) * z.pow(j) - z.pow(i + j);
            CHECK(zero.is_zero());
            for (unsigned long k = 1; k < n; ++k) {
                unsigned long a = k, b = n;
                while (b) {
                    unsigned long t = a % b;
                    a = b;
                    b = t;
                }
                if (a != 1)
                    continue;
                CHECK(std::abs(zero.approx(k)) < 1e-9);
            }
        }
    }
}

TEST_CASE("scalar rendering") {
    FieldPtr f6 = CycloField::get(6);
    CycloScalar z = CycloScalar::zeta(f6);
    CHECK((z.pow(2)).str() == "z - 1");
    CHECK(CycloScalar::of(f6, Rational(Integer(-1), Integer(3))).str() == "-1/3");
    CHECK(CycloScalar::zero(f6).str() == "0");
    CHECK((z * Rational(2) + CycloScalar::of(f6, Rational(Integer(1), Integer(2))))
              .str() == "2*z + 1/2");
}
