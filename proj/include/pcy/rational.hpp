#ifndef PCY_RATIONAL_HPP
#define PCY_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pcy {

// Exact rational scalar. GMP keeps the invariants we need: values are
// stored canonicalized in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a" or "a/b" (b > 0 after canonicalization).
Rational rational_from_string(std::string_view text);

// "a" when the denominator is 1, otherwise "a/b".
std::string rational_str(const Rational& r);

// Always "a/b", including "a/1". Used by the machine-readable format.
std::string rational_str_canonical(const Rational& r);

bool is_integer(const Rational& r);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer int_pow(const Integer& base, unsigned long e);

} // namespace pcy

#endif
