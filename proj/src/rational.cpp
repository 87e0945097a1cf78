#include "pcy/rational.hpp"

#include "pcy/errors.hpp"
#include "pcy/config.hpp"

namespace pcy {

Config& config() {
    static Config cfg;
    return cfg;
}

Rational rational_from_string(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw DomainError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw DomainError("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw DomainError("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_str_canonical(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

} // namespace pcy
