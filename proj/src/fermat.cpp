#include "pcy/fermat.hpp"

#include "pcy/errors.hpp"

namespace pcy {

void LinearCycleSpec::validate() const {
    if (n < 2 || n % 2 != 0)
        throw DomainError("linear cycle needs even n >= 2");
    if (d < 2)
        throw DomainError("linear cycle needs d >= 2");
    if (static_cast<int>(alphas.size()) != n / 2 + 1)
        throw DomainError("linear cycle needs " + std::to_string(n / 2 + 1) +
                          " exponents, got " + std::to_string(alphas.size()));
    for (int a : alphas)
        if (a < 1 || a > 2 * d - 1 || a % 2 == 0)
            throw DomainError("linear cycle exponents must be odd and in "
                              "{1, ..., 2d-1}; got " + std::to_string(a));
}

HypersurfaceContext fermat_context(int n, int d) {
    return HypersurfaceContext::fermat(n, d);
}

namespace {

RingPtr fermat_ring(int n, int d) {
    return PolyRing::get(n + 2, 2ul * static_cast<unsigned long>(d));
}

Poly binomial_form(const RingPtr& ring, int pair, int alpha) {
    // x_{2j-2} - zeta^alpha x_{2j-1}
    const FieldPtr& field = ring->field();
    Poly f(ring);
    f.add_term(Monomial::var(ring->num_vars(), 2 * pair),
               CycloScalar::one(field));
    f.add_term(Monomial::var(ring->num_vars(), 2 * pair + 1),
               -CycloScalar::zeta(field).pow(alpha));
    return f;
}

// sum_{l=0}^{top} zeta^{alpha l} x_{2j-2}^{top-l} x_{2j-1}^l
Poly telescoping_sum(const RingPtr& ring, int pair, int alpha, int top) {
    const FieldPtr& field = ring->field();
    Poly g(ring);
    for (int l = 0; l <= top; ++l) {
        std::vector<int> e(static_cast<std::size_t>(ring->num_vars()), 0);
        e[static_cast<std::size_t>(2 * pair)] = top - l;
        e[static_cast<std::size_t>(2 * pair + 1)] = l;
        g.add_term(Monomial(std::move(e)),
                   CycloScalar::zeta(field).pow(static_cast<long>(alpha) * l));
    }
    return g;
}

} // namespace

CitCycle linear_cycle(const LinearCycleSpec& spec) {
    spec.validate();
    RingPtr ring = fermat_ring(spec.n, spec.d);
    CitSummand s{.coeff = Integer(1)};
    for (int j = 0; j <= spec.n / 2; ++j) {
        int alpha = spec.alphas[static_cast<std::size_t>(j)];
        s.fs.push_back(binomial_form(ring, j, alpha));
        s.gs.push_back(telescoping_sum(ring, j, alpha, spec.d - 1));
    }
    return CitCycle{.summands = {std::move(s)}};
}

Poly associated_poly_closed(const LinearCycleSpec& spec) {
    spec.validate();
    RingPtr ring = fermat_ring(spec.n, spec.d);
    const FieldPtr& field = ring->field();
    long alpha_sum = 0;
    for (int a : spec.alphas)
        alpha_sum += a;
    CycloScalar lead =
        CycloScalar::zeta(field).pow(alpha_sum) *
        Rational(int_pow(Integer(spec.d),
                         static_cast<unsigned long>(spec.n / 2 + 1)));
    Poly acc = Poly::constant(ring, lead);
    for (int j = 0; j <= spec.n / 2; ++j)
        acc = acc * telescoping_sum(ring, j,
                                    spec.alphas[static_cast<std::size_t>(j)],
                                    spec.d - 2);
    return acc;
}

Rational linear_intersection_closed(const LinearCycleSpec& a,
                                    const LinearCycleSpec& b) {
    a.validate();
    b.validate();
    if (a.n != b.n || a.d != b.d)
        throw DomainError("linear cycles from different Fermat varieties");
    int m = -1;
    for (std::size_t j = 0; j < a.alphas.size(); ++j)
        if (a.alphas[j] == b.alphas[j])
            ++m;
    Integer one_minus_d(1 - a.d);
    Integer pow = int_pow(one_minus_d, static_cast<unsigned long>(m + 1));
    Rational out(Integer(1) - pow, Integer(a.d));
    out.canonicalize();
    if (!is_integer(out))
        throw DomainError("closed-form intersection is not an integer");
    return out;
}

PeriodValue linear_period_closed(int n, int d, const Monomial& i) {
    if (n < 2 || n % 2 != 0 || d < 2)
        throw DomainError("linear period needs even n >= 2 and d >= 2");
    if (i.nvars() != n + 2)
        throw DomainError("exponent vector must have n+2 entries");
    int sigma = (d - 2) * (n / 2 + 1);
    if (i.degree() != sigma)
        throw DomainError("exponent vector must have degree " +
                          std::to_string(sigma));
    for (int k = 0; k < i.nvars(); ++k)
        if (i[k] > d - 2)
            throw DomainError("exponent " + std::to_string(i[k]) +
                              " out of range 0..d-2");
    const FieldPtr& field = CycloField::get(2ul * static_cast<unsigned long>(d));
    PeriodValue out;
    out.tpi_power = n / 2;
    out.inv_factorial = n / 2;
    out.inv_factorial_power = 1;
    bool pairs_ok = true;
    for (int l = 0; l + 1 < i.nvars(); l += 2)
        if (i[l] + i[l + 1] != d - 2)
            pairs_ok = false;
    if (!pairs_ok) {
        out.algebraic = CycloScalar::zero(field);
        return out;
    }
    long even_sum = 0;
    for (int l = 0; l < i.nvars(); l += 2)
        even_sum += i[l];
    out.algebraic =
        CycloScalar::zeta(field).pow(n / 2 + 1 + even_sum) *
        Rational(Integer(1),
                 int_pow(Integer(d), static_cast<unsigned long>(n / 2 + 1)));
    return out;
}

Integer codim_formula(int n, int d, int m) {
    if (n < 2 || n % 2 != 0 || d < 2)
        throw DomainError("codim formula needs even n >= 2 and d >= 2");
    if (m < 0 || m > n / 2)
        throw DomainError("codim formula needs 0 <= m <= n/2");
    Integer out = 2 * binomial(static_cast<unsigned long>(n / 2 + d),
                               static_cast<unsigned long>(d)) -
                  2 * Integer((n / 2 + 1)) * Integer((n / 2 + 1)) -
                  binomial(static_cast<unsigned long>(m + d),
                           static_cast<unsigned long>(d)) +
                  Integer(m + 1) * Integer(m + 1);
    return out;
}

FermatVerdict fermat_verdict(int n, int d, int m, const std::vector<int>& alphas_b,
                             const Integer& a, const Integer& b) {
    if (d < 3)
        throw DomainError("the verdict needs d >= 3");
    if (n < 2 || n % 2 != 0)
        throw DomainError("the verdict needs even n >= 2");
    if (m < 0 || m > n / 2 - 1)
        throw DomainError("the verdict needs 0 <= m <= n/2 - 1 "
                          "(the two cycles must share exactly m+1 pairs)");
    if (a == 0 || b == 0)
        throw DomainError("the combination coefficients must be nonzero");

    LinearCycleSpec first{n, d, std::vector<int>(static_cast<std::size_t>(n / 2 + 1), 1)};
    LinearCycleSpec second{n, d, alphas_b};
    second.validate();
    for (int j = 0; j <= n / 2; ++j) {
        int alpha = alphas_b[static_cast<std::size_t>(j)];
        if (j < n / 2 - m) {
            if (alpha < 3)
                throw DomainError("the first n/2 - m exponents of the second "
                                  "cycle must lie in {3, ..., 2d-1}");
        } else if (alpha != 1) {
            throw DomainError("the last m+1 exponents of the second cycle "
                              "must equal 1");
        }
    }

    HypersurfaceContext ctx = fermat_context(n, d);
    Poly p1 = associated_poly_closed(first) * Rational(a);
    Poly p2 = associated_poly_closed(second) * Rational(b);

    SliceBasis t1 = colon_slice(ctx.jacobian_ideal(), p1, d);
    SliceBasis t2 = colon_slice(ctx.jacobian_ideal(), p2, d);
    SliceBasis meet = slice_meet(t1, t2);
    SliceBasis sum = colon_slice(ctx.jacobian_ideal(), p1 + p2, d);

    FermatVerdict v;
    v.n = n;
    v.d = d;
    v.m = m;
    v.a = a;
    v.b = b;
    v.ambient = t1.ambient_dim();
    v.dim_tangent_1 = t1.dim();
    v.dim_tangent_2 = t2.dim();
    v.dim_meet = meet.dim();
    v.dim_delta_tangent = sum.dim();

    bool contained = true;
    for (std::size_t i = 0; i < meet.rows.size() && contained; ++i)
        contained = subspace_contains(sum, meet.row_poly(ctx.ring(), i));
    v.equal = contained && v.dim_meet == v.dim_delta_tangent;
    // m < n/2 - d/(d-2), cleared of denominators: m (d-2) < (n/2)(d-2) - d
    v.expected_equal = m * (d - 2) < (n / 2) * (d - 2) - d;
    v.consistent = v.equal == v.expected_equal;
    v.codim_formula_value = codim_formula(n, d, m);
    v.codim_match = Integer(v.ambient - v.dim_meet) == v.codim_formula_value;
    return v;
}

} // namespace pcy
