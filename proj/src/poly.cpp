#include "pcy/poly.hpp"

#include <map>
#include <mutex>

#include "pcy/errors.hpp"

namespace pcy {

PolyRing::PolyRing(int num_vars, FieldPtr field)
    : num_vars_(num_vars), field_(std::move(field)) {}

RingPtr PolyRing::get(int num_vars, unsigned long root_order) {
    if (num_vars < 2)
        throw DomainError("polynomial ring needs at least 2 variables");
    static std::map<std::pair<int, unsigned long>, RingPtr> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(num_vars, root_order);
    auto it = registry.find(key);
    if (it != registry.end())
        return it->second;
    RingPtr ring(new PolyRing(num_vars, CycloField::get(root_order)));
    registry.emplace(key, ring);
    return ring;
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly Poly::zero(const RingPtr& ring) { return Poly(ring); }

Poly Poly::constant(const RingPtr& ring, const Rational& r) {
    return constant(ring, CycloScalar::of(ring->field(), r));
}

Poly Poly::constant(const RingPtr& ring, const CycloScalar& c) {
    Poly p(ring);
    p.add_term(Monomial::unit(ring->num_vars()), c);
    return p;
}

Poly Poly::variable(const RingPtr& ring, int i) {
    if (i < 0 || i >= ring->num_vars())
        throw DomainError("variable index out of range: x" + std::to_string(i));
    Poly p(ring);
    p.add_term(Monomial::var(ring->num_vars(), i), CycloScalar::one(ring->field()));
    return p;
}

Poly Poly::term(const RingPtr& ring, const Monomial& m, const CycloScalar& c) {
    if (m.nvars() != ring->num_vars())
        throw DomainError("monomial arity does not match ring");
    Poly p(ring);
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const CycloScalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool Poly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            return false;
    return true;
}

int Poly::degree() const {
    if (terms_.empty())
        throw DomainError("degree of the zero polynomial is undefined");
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            throw DomainError("degree of a non-homogeneous polynomial: " + str());
    return d;
}

CycloScalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end())
        return CycloScalar::zero(ring_->field());
    return it->second;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty())
        throw DomainError("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

void Poly::require_same_ring(const Poly& o) const {
    if (!ring_->compatible(*o.ring_))
        throw DomainError("polynomial ring mismatch");
}

Poly Poly::operator-() const {
    Poly out(ring_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(o);
    Poly out(ring_);
    const Poly& small = num_terms() <= o.num_terms() ? *this : o;
    const Poly& big = num_terms() <= o.num_terms() ? o : *this;
    for (const auto& [ma, ca] : small.terms_)
        for (const auto& [mb, cb] : big.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

Poly Poly::mul_filtered(const Poly& o,
                        const std::function<bool(const Monomial&)>& keep) const {
    require_same_ring(o);
    Poly out(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            if (keep(m))
                out.add_term(m, ca * cb);
        }
    return out;
}

Poly Poly::operator*(const CycloScalar& c) const {
    Poly out(ring_);
    if (c.is_zero())
        return out;
    for (const auto& [m, t] : terms_)
        out.add_term(m, t * c);
    return out;
}

Poly Poly::operator*(const Rational& r) const {
    return *this * CycloScalar::of(ring_->field(), r);
}

Poly Poly::partial(int var) const {
    if (var < 0 || var >= ring_->num_vars())
        throw DomainError("partial derivative: variable index out of range");
    Poly out(ring_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0)
            continue;
        std::vector<int> exps = m.exponents();
        exps[static_cast<std::size_t>(var)] = e - 1;
        out.add_term(Monomial(std::move(exps)), c * Rational(e));
    }
    return out;
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_->compatible(*o.ring_))
        return false;
    return terms_ == o.terms_;
}

std::string Poly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = false;
        std::string coeff_str;
        if (c.is_rational()) {
            Rational r = c.rational_value();
            negative = r < 0;
            Rational mag = negative ? Rational(-r) : r;
            if (m.degree() == 0)
                coeff_str = rational_str(mag);
            else if (mag != 1)
                coeff_str = rational_str(mag) + "*";
        } else {
            coeff_str = "(" + c.str() + ")";
            if (m.degree() > 0)
                coeff_str += "*";
        }
        if (first) {
            out += negative ? "-" : "";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff_str;
        if (m.degree() > 0)
            out += m.str();
    }
    return out;
}

} // namespace pcy
