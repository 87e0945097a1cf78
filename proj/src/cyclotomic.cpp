#include "pcy/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "pcy/errors.hpp"

namespace pcy {

namespace {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty())
        return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return out;
}

// Exact division; throws if the remainder is nonzero.
QPoly divexact(QPoly num, const QPoly& den) {
    trim(num);
    if (den.empty() || den.back() == 0)
        throw DomainError("polynomial division by zero");
    if (num.empty())
        return {};
    if (num.size() < den.size())
        throw DomainError("inexact polynomial division");
    QPoly q(num.size() - den.size() + 1, Rational(0));
    for (std::size_t i = num.size(); i-- >= den.size();) {
        Rational c = num[i] / den.back();
        if (c != 0) {
            q[i - den.size() + 1] = c;
            for (std::size_t j = 0; j < den.size(); ++j)
                num[i - den.size() + 1 + j] -= c * den[j];
        }
        if (i == den.size() - 1)
            break;
    }
    trim(num);
    if (!num.empty())
        throw DomainError("inexact polynomial division");
    return q;
}

} // namespace

QPoly cyclotomic_polynomial(unsigned long n) {
    if (n == 0)
        throw DomainError("cyclotomic polynomial needs n >= 1");
    static std::map<unsigned long, QPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
    }
    QPoly result;
    if (n == 1) {
        result = {Rational(-1), Rational(1)};
    } else {
        QPoly num(n + 1, Rational(0));
        num[0] = -1;
        num[n] = 1;
        QPoly den{Rational(1)};
        for (unsigned long m = 1; m < n; ++m)
            if (n % m == 0)
                den = mul(den, cyclotomic_polynomial(m));
        result = divexact(std::move(num), den);
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, result);
    return result;
}

CycloField::CycloField(unsigned long root_order) : root_order_(root_order) {
    modulus_ = cyclotomic_polynomial(root_order);
    degree_ = modulus_.size() - 1;
    // t^degree = -(lower part of Phi); higher powers fold through it.
    if (degree_ >= 1) {
        QPoly cur(degree_, Rational(0));
        for (unsigned long i = 0; i < degree_; ++i)
            cur[i] = -modulus_[i];
        reduction_.push_back(cur);
        for (unsigned long k = 1; k + 1 < degree_; ++k) {
            QPoly next(degree_, Rational(0));
            for (unsigned long i = 0; i + 1 < degree_; ++i)
                next[i + 1] = cur[i];
            if (cur[degree_ - 1] != 0)
                for (unsigned long i = 0; i < degree_; ++i)
                    next[i] += cur[degree_ - 1] * reduction_[0][i];
            reduction_.push_back(next);
            cur = std::move(next);
        }
    }
}

FieldPtr CycloField::get(unsigned long root_order) {
    if (root_order == 0)
        throw DomainError("root order must be >= 1");
    static std::map<unsigned long, FieldPtr> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find(root_order);
    if (it != registry.end())
        return it->second;
    FieldPtr field(new CycloField(root_order));
    registry.emplace(root_order, field);
    return field;
}

CycloScalar::CycloScalar() : field_(CycloField::get(1)), coords_(1, Rational(0)) {}

CycloScalar::CycloScalar(FieldPtr field, QPoly coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() != field_->degree())
        throw DomainError("cyclotomic coordinate vector has wrong length");
}

CycloScalar CycloScalar::zero(const FieldPtr& field) {
    return CycloScalar(field, QPoly(field->degree(), Rational(0)));
}

CycloScalar CycloScalar::one(const FieldPtr& field) {
    return of(field, Rational(1));
}

CycloScalar CycloScalar::of(const FieldPtr& field, const Rational& r) {
    QPoly c(field->degree(), Rational(0));
    c[0] = r;
    return CycloScalar(field, std::move(c));
}

CycloScalar CycloScalar::zeta(const FieldPtr& field) {
    if (field->degree() == 1) {
        // N = 1 gives zeta = 1, N = 2 gives zeta = -1.
        return of(field, Rational(field->root_order() == 1 ? 1 : -1));
    }
    QPoly c(field->degree(), Rational(0));
    c[1] = 1;
    return CycloScalar(field, std::move(c));
}

bool CycloScalar::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0)
            return false;
    return true;
}

bool CycloScalar::is_one() const {
    if (coords_[0] != 1)
        return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0)
            return false;
    return true;
}

bool CycloScalar::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0)
            return false;
    return true;
}

const Rational& CycloScalar::rational_value() const {
    if (!is_rational())
        throw DomainError("cyclotomic scalar is not rational: " + str());
    return coords_[0];
}

void CycloScalar::require_same_field(const CycloScalar& o) const {
    if (field_->root_order() != o.field_->root_order())
        throw DomainError("mismatched cyclotomic fields (root orders " +
                          std::to_string(field_->root_order()) + " and " +
                          std::to_string(o.field_->root_order()) + ")");
}

CycloScalar CycloScalar::operator-() const {
    QPoly c(coords_);
    for (auto& x : c)
        x = -x;
    return CycloScalar(field_, std::move(c));
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
    require_same_field(o);
    QPoly c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.coords_[i];
    return CycloScalar(field_, std::move(c));
}

CycloScalar CycloScalar::operator-(const CycloScalar& o) const {
    require_same_field(o);
    QPoly c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= o.coords_[i];
    return CycloScalar(field_, std::move(c));
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    require_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
    require_same_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
    require_same_field(o);
    const unsigned long deg = field_->degree();
    QPoly conv(2 * deg - 1, Rational(0));
    for (unsigned long i = 0; i < deg; ++i) {
        if (coords_[i] == 0)
            continue;
        for (unsigned long j = 0; j < deg; ++j)
            if (o.coords_[j] != 0)
                conv[i + j] += coords_[i] * o.coords_[j];
    }
    QPoly out(conv.begin(), conv.begin() + deg);
    for (unsigned long k = deg; k < conv.size(); ++k) {
        if (conv[k] == 0)
            continue;
        const QPoly& red = field_->power_reduction(k - deg);
        for (unsigned long i = 0; i < deg; ++i)
            out[i] += conv[k] * red[i];
    }
    return CycloScalar(field_, std::move(out));
}

CycloScalar CycloScalar::operator*(const Rational& r) const {
    QPoly c(coords_);
    for (auto& x : c)
        x *= r;
    return CycloScalar(field_, std::move(c));
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero())
        throw DomainError("division by zero in Q(zeta_" +
                          std::to_string(field_->root_order()) + ")");
    if (is_rational())
        return of(field_, Rational(1) / coords_[0]);
    // Extended Euclid in Q[t] against the (irreducible) modulus.
    QPoly r0 = field_->modulus();
    QPoly r1 = coords_;
    while (!r1.empty() && r1.back() == 0)
        r1.pop_back();
    QPoly s0{Rational(0)}, s1{Rational(1)};
    auto sub_scaled = [](QPoly& a, const QPoly& b, const Rational& c, std::size_t k) {
        if (a.size() < b.size() + k)
            a.resize(b.size() + k, Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + k] -= c * b[i];
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    };
    while (r1.size() > 1) {
        // divide r0 by r1, fold the quotient into s0
        QPoly rem = r0;
        std::vector<std::pair<std::size_t, Rational>> quo;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            std::size_t k = rem.size() - r1.size();
            quo.emplace_back(k, c);
            sub_scaled(rem, r1, c, k);
        }
        for (const auto& [k, c] : quo)
            sub_scaled(s0, s1, c, k);
        std::swap(r0, r1);
        std::swap(s0, s1);
        r1 = rem.empty() ? QPoly{} : rem;
        if (r1.empty())
            throw DomainError("modulus not coprime to element (internal)");
    }
    Rational lead = r1[0];
    QPoly out(field_->degree(), Rational(0));
    for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i)
        out[i] = s1[i] / lead;
    return CycloScalar(field_, std::move(out));
}

CycloScalar CycloScalar::operator/(const CycloScalar& o) const {
    require_same_field(o);
    return *this * o.inverse();
}

CycloScalar CycloScalar::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    CycloScalar acc = one(field_);
    CycloScalar base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool CycloScalar::operator==(const CycloScalar& o) const {
    if (field_->root_order() != o.field_->root_order())
        return false;
    return coords_ == o.coords_;
}

std::string CycloScalar::str() const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t idx = coords_.size(); idx-- > 0;) {
        const Rational& c = coords_[idx];
        if (c == 0)
            continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            out += (c < 0) ? "-" : "";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string var;
        if (idx == 1)
            var = "z";
        else if (idx > 1)
            var = "z^" + std::to_string(idx);
        if (var.empty())
            out += rational_str(mag);
        else if (mag == 1)
            out += var;
        else
            out += rational_str(mag) + "*" + var;
    }
    return out;
}

std::complex<double> CycloScalar::approx(unsigned long k) const {
    const double two_pi = 2.0 * std::numbers::pi;
    const double arg = two_pi * static_cast<double>(k) /
                       static_cast<double>(field_->root_order());
    std::complex<double> zeta(std::cos(arg), std::sin(arg));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = coords_.size(); i-- > 0;)
        acc = acc * zeta + coords_[i].get_d();
    return acc;
}

} // namespace pcy
