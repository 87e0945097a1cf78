#ifndef PCY_CYCLOTOMIC_HPP
#define PCY_CYCLOTOMIC_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "pcy/rational.hpp"

namespace pcy {

// Dense univariate polynomial over Q, coefficients in ascending degree.
using QPoly = std::vector<Rational>;

// N-th cyclotomic polynomial Phi_N, computed by exact division of t^N - 1
// by the product of Phi_m over the proper divisors m of N.
QPoly cyclotomic_polynomial(unsigned long n);

// The field Q(zeta_N) represented as Q[t]/Phi_N(t). Phi_N is irreducible
// over Q, so the quotient is a field and division is always defined.
// Instances are interned per N; use CycloField::get.
class CycloField {
public:
    static std::shared_ptr<const CycloField> get(unsigned long root_order);

    unsigned long root_order() const { return root_order_; }
    unsigned long degree() const { return degree_; } // phi(N)
    const QPoly& modulus() const { return modulus_; }

    // t^(degree + k) reduced mod Phi_N, for k = 0 .. degree - 2.
    const QPoly& power_reduction(unsigned long k) const { return reduction_[k]; }

private:
    explicit CycloField(unsigned long root_order);

    unsigned long root_order_;
    unsigned long degree_;
    QPoly modulus_;
    std::vector<QPoly> reduction_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

// Element of Q(zeta_N): the representative of degree < phi(N), reduced
// mod Phi_N. Immutable in spirit; all operations return new values.
class CycloScalar {
public:
    CycloScalar(); // zero of Q (N = 1)
    CycloScalar(FieldPtr field, QPoly coords);

    static CycloScalar zero(const FieldPtr& field);
    static CycloScalar one(const FieldPtr& field);
    static CycloScalar of(const FieldPtr& field, const Rational& r);
    static CycloScalar zeta(const FieldPtr& field); // the class of t

    const FieldPtr& field() const { return field_; }
    const QPoly& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    // True when all coordinates above the constant one vanish.
    bool is_rational() const;
    // The constant coordinate; requires is_rational().
    const Rational& rational_value() const;

    CycloScalar operator-() const;
    CycloScalar operator+(const CycloScalar& o) const;
    CycloScalar operator-(const CycloScalar& o) const;
    CycloScalar operator*(const CycloScalar& o) const;
    CycloScalar operator/(const CycloScalar& o) const; // o != 0
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);

    CycloScalar operator*(const Rational& r) const;
    CycloScalar inverse() const;
    CycloScalar pow(long e) const; // negative e via inverse

    bool operator==(const CycloScalar& o) const;
    bool operator!=(const CycloScalar& o) const { return !(*this == o); }

    // Polynomial in z, descending powers: "z^2 - z + 1/3". Reparses
    // through the expression grammar.
    std::string str() const;

    // Numeric evaluation at the k-th primitive root exp(2*pi*i*k/N),
    // gcd(k, N) = 1. Display and smoke-test convenience only; never used
    // by the exact engine.
    std::complex<double> approx(unsigned long k = 1) const;

private:
    void require_same_field(const CycloScalar& o) const;

    FieldPtr field_;
    QPoly coords_; // size field_->degree()
};

} // namespace pcy

#endif
