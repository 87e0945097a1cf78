#ifndef PCY_POLY_HPP
#define PCY_POLY_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pcy/cyclotomic.hpp"
#include "pcy/monomial.hpp"

namespace pcy {

// The ambient ring Q(zeta_N)[x_0, ..., x_{v-1}]. Interned per (v, N).
class PolyRing {
public:
    static std::shared_ptr<const PolyRing> get(int num_vars,
                                               unsigned long root_order);

    int num_vars() const { return num_vars_; }
    const FieldPtr& field() const { return field_; }
    bool compatible(const PolyRing& o) const {
        return num_vars_ == o.num_vars_ &&
               field_->root_order() == o.field_->root_order();
    }

private:
    PolyRing(int num_vars, FieldPtr field);
    int num_vars_;
    FieldPtr field_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// Sparse multivariate polynomial. Terms are kept in descending graded-lex
// order and never store zero coefficients.
class Poly {
public:
    using TermMap = std::map<Monomial, CycloScalar, GrlexDescending>;

    explicit Poly(RingPtr ring); // zero
    static Poly zero(const RingPtr& ring);
    static Poly constant(const RingPtr& ring, const Rational& r);
    static Poly constant(const RingPtr& ring, const CycloScalar& c);
    static Poly variable(const RingPtr& ring, int i);
    static Poly term(const RingPtr& ring, const Monomial& m, const CycloScalar& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_homogeneous() const; // the zero polynomial counts as homogeneous
    int degree() const;          // errors on non-homogeneous or zero input
    CycloScalar coeff(const Monomial& m) const;
    const Monomial& leading_monomial() const; // largest in graded-lex

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const CycloScalar& c) const;
    Poly operator*(const Rational& r) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    // Product keeping only terms whose monomial satisfies keep(). Used to
    // reduce modulo a monomial ideal while multiplying.
    Poly mul_filtered(const Poly& o,
                      const std::function<bool(const Monomial&)>& keep) const;

    Poly partial(int var) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Canonical render; parse_poly(str()) reproduces the polynomial.
    std::string str() const;

    void add_term(const Monomial& m, const CycloScalar& c); // builder use

private:
    void require_same_ring(const Poly& o) const;

    RingPtr ring_;
    TermMap terms_;
};

} // namespace pcy

#endif
