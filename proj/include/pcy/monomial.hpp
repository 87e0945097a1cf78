#ifndef PCY_MONOMIAL_HPP
#define PCY_MONOMIAL_HPP

#include <string>
#include <vector>

namespace pcy {

// Exponent vector of a power product x_0^{e_0} ... x_{v-1}^{e_{v-1}}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial unit(int nvars);
    static Monomial var(int nvars, int i, int power = 1);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    int degree() const;
    const std::vector<int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;       // this | o
    Monomial divide_into(const Monomial& o) const; // o / this, requires divides

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

    // Graded lexicographic comparison with x_0 > x_1 > ...:
    // negative when a < b, zero when equal, positive when a > b.
    static int cmp(const Monomial& a, const Monomial& b);

    std::string str() const; // "x0^2*x1", "1" for the unit

private:
    std::vector<int> exps_;
};

// Orders std::map keys so that iteration visits monomials in descending
// graded-lex order, the canonical term order of the library.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};

// All degree-e monomials in nvars variables, in descending graded-lex
// order (so (e,0,...,0) first). Optional per-variable exponent caps.
std::vector<Monomial> monomials_of_degree(int nvars, int e);
std::vector<Monomial> monomials_of_degree_capped(int nvars, int e,
                                                 const std::vector<int>& caps);

} // namespace pcy

#endif
