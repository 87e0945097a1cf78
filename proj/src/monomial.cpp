#include "pcy/monomial.hpp"

#include <numeric>

#include "pcy/errors.hpp"

namespace pcy {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
        if (e < 0)
            throw DomainError("negative exponent in monomial");
}

Monomial Monomial::unit(int nvars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::var(int nvars, int i, int power) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = power;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i])
            return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    std::vector<int> e(o.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= exps_[i];
        if (e[i] < 0)
            throw DomainError("monomial quotient is not a monomial");
    }
    return Monomial(std::move(e));
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] != b.exps_[i])
            return a.exps_[i] < b.exps_[i] ? -1 : 1;
    return 0;
}

std::string Monomial::str() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(i);
        if (exps_[i] > 1)
            out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

namespace {

void enumerate(int nvars, int e, const std::vector<int>* caps, int i,
               std::vector<int>& prefix, std::vector<Monomial>& out) {
    if (i == nvars - 1) {
        if (caps == nullptr || e <= (*caps)[static_cast<std::size_t>(i)]) {
            prefix.push_back(e);
            out.emplace_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    int hi = e;
    if (caps != nullptr)
        hi = std::min(hi, (*caps)[static_cast<std::size_t>(i)]);
    for (int v = hi; v >= 0; --v) {
        prefix.push_back(v);
        enumerate(nvars, e - v, caps, i + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int e) {
    std::vector<Monomial> out;
    std::vector<int> prefix;
    enumerate(nvars, e, nullptr, 0, prefix, out);
    return out;
}

std::vector<Monomial> monomials_of_degree_capped(int nvars, int e,
                                                 const std::vector<int>& caps) {
    std::vector<Monomial> out;
    std::vector<int> prefix;
    enumerate(nvars, e, &caps, 0, prefix, out);
    return out;
}

} // namespace pcy
