#include "pcy/ideal.hpp"

#include <algorithm>
#include <mutex>

#include "pcy/errors.hpp"

namespace pcy {

// ---------------------------------------------------------------- RREF --

namespace {

// r -= c * pivot, merging sorted sparse rows. pivot has support >= its
// leading column, so entries left of the merge start are untouched.
SparseRow axpy(const SparseRow& r, const CycloScalar& c, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(r.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
            out.push_back(r[i]);
            ++i;
        } else if (i == r.size() || pivot[j].first < r[i].first) {
            CycloScalar v = -(c * pivot[j].second);
            if (!v.is_zero())
                out.emplace_back(pivot[j].first, std::move(v));
            ++j;
        } else {
            CycloScalar v = r[i].second - c * pivot[j].second;
            if (!v.is_zero())
                out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

SparseRow RrefBuilder::reduce(SparseRow r) const {
    std::size_t at = 0;
    while (at < r.size()) {
        auto it = rows_.find(r[at].first);
        if (it == rows_.end()) {
            ++at;
            continue;
        }
        // entries left of position `at` have no pivot; the subtraction
        // only touches columns >= the pivot column
        CycloScalar c = r[at].second;
        SparseRow tail(r.begin() + static_cast<long>(at), r.end());
        SparseRow reduced = axpy(tail, c, it->second);
        r.resize(at);
        r.insert(r.end(), reduced.begin(), reduced.end());
    }
    return r;
}

void RrefBuilder::add(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty())
        return;
    // normalize the leading coefficient to 1
    CycloScalar inv = r.front().second.inverse();
    for (auto& [col, v] : r)
        v = v * inv;
    int lead = r.front().first;
    // eliminate the new pivot column from every existing row; the new row
    // has zeros at all existing pivots, so their leading structure holds
    for (auto& [piv, row] : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), lead,
                                   [](const auto& e, int c) { return e.first < c; });
        if (it != row.end() && it->first == lead) {
            CycloScalar c = it->second;
            row = axpy(row, c, r);
        }
    }
    rows_.emplace(lead, std::move(r));
}

bool RrefBuilder::reduces_to_zero(SparseRow r) const {
    return reduce(std::move(r)).empty();
}

std::vector<SparseRow> RrefBuilder::sorted_rows() const {
    std::vector<SparseRow> out;
    out.reserve(rows_.size());
    for (const auto& [piv, row] : rows_)
        out.push_back(row);
    return out;
}

std::vector<int> RrefBuilder::pivot_columns() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [piv, row] : rows_)
        out.push_back(piv);
    return out;
}

std::vector<SparseRow> kernel_basis(const RrefBuilder& constraints, int width,
                                    const FieldPtr& field) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(width), false);
    for (int p : constraints.pivot_columns())
        is_pivot[static_cast<std::size_t>(p)] = true;
    RrefBuilder canon;
    for (int f = 0; f < width; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        SparseRow v;
        for (const auto& [piv, row] : constraints.rows()) {
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it != row.end() && it->first == f)
                v.emplace_back(piv, -it->second);
        }
        v.emplace_back(f, CycloScalar::one(field));
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        canon.add(std::move(v));
    }
    return canon.sorted_rows();
}

// ---------------------------------------------------------- GradedIdeal --

struct GradedIdeal::Impl {
    RingPtr ring;
    std::vector<Poly> generators;
    bool monomial = false;
    bool power = false;
    std::vector<int> caps; // per variable; e set at query time when unbounded
    std::vector<Monomial> gen_monomials;

    mutable std::mutex cache_mtx;
    mutable std::map<int, std::shared_ptr<const SliceBasis>> slice_cache;
};

GradedIdeal::GradedIdeal(RingPtr ring, std::vector<Poly> generators)
    : impl_(std::make_shared<Impl>()) {
    if (generators.empty())
        throw DomainError("graded ideal needs at least one generator");
    impl_->ring = std::move(ring);
    for (const Poly& g : generators) {
        if (!g.ring()->compatible(*impl_->ring))
            throw DomainError("ideal generator from a different ring");
        if (g.is_zero())
            throw DomainError("ideal generators must be nonzero");
        if (!g.is_homogeneous())
            throw DomainError("ideal generators must be homogeneous");
    }
    impl_->generators = std::move(generators);

    impl_->monomial = true;
    for (const Poly& g : impl_->generators) {
        if (g.num_terms() != 1) {
            impl_->monomial = false;
            break;
        }
    }
    if (impl_->monomial) {
        for (const Poly& g : impl_->generators)
            impl_->gen_monomials.push_back(g.leading_monomial());
        // pure powers of distinct variables?
        int nv = impl_->ring->num_vars();
        std::vector<int> caps(static_cast<std::size_t>(nv), -1); // -1: unbounded
        bool power = true;
        for (const Monomial& m : impl_->gen_monomials) {
            int var = -1;
            for (int i = 0; i < nv && power; ++i) {
                if (m[i] > 0) {
                    if (var >= 0)
                        power = false;
                    else
                        var = i;
                }
            }
            if (!power || var < 0) {
                power = false;
                break;
            }
            int cap = m[var] - 1;
            auto& slot = caps[static_cast<std::size_t>(var)];
            slot = (slot < 0) ? cap : std::min(slot, cap);
        }
        impl_->power = power;
        if (power)
            impl_->caps = std::move(caps);
    }
}

const RingPtr& GradedIdeal::ring() const { return impl_->ring; }
const std::vector<Poly>& GradedIdeal::generators() const { return impl_->generators; }
bool GradedIdeal::is_monomial() const { return impl_->monomial; }
bool GradedIdeal::is_power_ideal() const { return impl_->power; }
const std::vector<int>& GradedIdeal::power_caps() const { return impl_->caps; }

bool GradedIdeal::monomial_in_ideal(const Monomial& m) const {
    for (const Monomial& g : impl_->gen_monomials)
        if (g.divides(m))
            return true;
    return false;
}

struct IdealAccess {
    static std::shared_ptr<const SliceBasis> cached_slice(const GradedIdeal& I,
                                                          int e, SlicePath path);
};

// ------------------------------------------------------------- helpers --

Integer monomial_space_dim(int nvars, int e) {
    return binomial(static_cast<unsigned long>(e + nvars - 1),
                    static_cast<unsigned long>(nvars - 1));
}

namespace {

void check_slice_limit(int nvars, int e) {
    Integer dim = monomial_space_dim(nvars, e);
    if (dim > config().slice_monomial_limit)
        throw ResourceError(
            "degree-" + std::to_string(e) + " slice needs " + dim.get_str() +
            " monomial coordinates, above the configured limit " +
            std::to_string(config().slice_monomial_limit) +
            " (raise it with --max-dim)");
}

std::vector<int> effective_caps(const GradedIdeal& I, int e) {
    std::vector<int> caps = I.power_caps();
    for (int& c : caps)
        if (c < 0 || c > e)
            c = e;
    return caps;
}

std::map<Monomial, int, GrlexDescending>
index_of(const std::vector<Monomial>& monos) {
    std::map<Monomial, int, GrlexDescending> idx;
    int i = 0;
    for (const Monomial& m : monos)
        idx.emplace(m, i++);
    return idx;
}

SparseRow poly_to_row(const Poly& p,
                      const std::map<Monomial, int, GrlexDescending>& idx) {
    // term maps iterate in descending graded-lex = ascending column index
    SparseRow row;
    row.reserve(p.num_terms());
    for (const auto& [m, c] : p.terms()) {
        auto it = idx.find(m);
        if (it == idx.end())
            throw DomainError("monomial outside the slice coordinate space");
        row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

} // namespace

Poly SliceBasis::row_poly(const RingPtr& ring, std::size_t i) const {
    Poly p(ring);
    for (const auto& [col, c] : rows[i])
        p.add_term(monomials[static_cast<std::size_t>(col)], c);
    return p;
}

// --------------------------------------------------------------- slice --

std::shared_ptr<const SliceBasis> IdealAccess::cached_slice(const GradedIdeal& I,
                                                            int e, SlicePath path) {
    const auto& impl = I.impl_;
    bool cacheable = path == SlicePath::automatic;
    if (cacheable) {
        std::lock_guard<std::mutex> lock(impl->cache_mtx);
        auto it = impl->slice_cache.find(e);
        if (it != impl->slice_cache.end())
            return it->second;
    }

    const RingPtr& ring = I.ring();
    int nv = ring->num_vars();
    check_slice_limit(nv, e);

    auto basis = std::make_shared<SliceBasis>();
    basis->degree = e;
    basis->field = ring->field();
    basis->monomials = monomials_of_degree(nv, e);

    bool fast = I.is_monomial() && path == SlicePath::automatic;
    if (fast) {
        // I_e is spanned by the monomials divisible by a generator; the
        // RREF rows are unit vectors at those columns.
        const FieldPtr& field = ring->field();
        for (int col = 0; col < static_cast<int>(basis->monomials.size()); ++col) {
            if (I.monomial_in_ideal(basis->monomials[static_cast<std::size_t>(col)])) {
                basis->rows.push_back(SparseRow{{col, CycloScalar::one(field)}});
                basis->pivots.push_back(col);
            } else {
                basis->standard.push_back(col);
            }
        }
    } else {
        auto idx = index_of(basis->monomials);
        RrefBuilder rref;
        for (const Poly& g : I.generators()) {
            int dg = g.degree();
            if (dg > e)
                continue;
            for (const Monomial& m : monomials_of_degree(nv, e - dg)) {
                Poly prod = g * Poly::term(ring, m, CycloScalar::one(ring->field()));
                rref.add(poly_to_row(prod, idx));
            }
        }
        basis->rows = rref.sorted_rows();
        basis->pivots = rref.pivot_columns();
        std::vector<bool> is_pivot(basis->monomials.size(), false);
        for (int p : basis->pivots)
            is_pivot[static_cast<std::size_t>(p)] = true;
        for (int col = 0; col < static_cast<int>(basis->monomials.size()); ++col)
            if (!is_pivot[static_cast<std::size_t>(col)])
                basis->standard.push_back(col);
    }

    if (cacheable) {
        std::lock_guard<std::mutex> lock(impl->cache_mtx);
        impl->slice_cache.emplace(e, basis);
        return impl->slice_cache.at(e);
    }
    return basis;
}

SliceBasis slice(const GradedIdeal& I, int e, SlicePath path) {
    if (e < 0)
        throw DomainError("slice degree must be >= 0");
    return *IdealAccess::cached_slice(I, e, path);
}

long quotient_dim(const GradedIdeal& I, int e) {
    if (e < 0)
        return 0;
    if (I.is_power_ideal()) {
        // count exponent vectors with e_i <= cap_i summing to e
        std::vector<int> caps = effective_caps(I, e);
        std::vector<long> dp(static_cast<std::size_t>(e) + 1, 0);
        dp[0] = 1;
        for (int cap : caps) {
            std::vector<long> next(dp.size(), 0);
            for (int s = 0; s <= e; ++s) {
                if (dp[static_cast<std::size_t>(s)] == 0)
                    continue;
                for (int v = 0; v <= cap && s + v <= e; ++v)
                    next[static_cast<std::size_t>(s + v)] +=
                        dp[static_cast<std::size_t>(s)];
            }
            dp = std::move(next);
        }
        return dp[static_cast<std::size_t>(e)];
    }
    SliceBasis b = slice(I, e);
    return static_cast<long>(b.standard.size());
}

std::vector<Monomial> standard_monomials(const GradedIdeal& I, int e) {
    if (I.is_power_ideal())
        return monomials_of_degree_capped(I.ring()->num_vars(), e,
                                          effective_caps(I, e));
    if (I.is_monomial()) {
        check_slice_limit(I.ring()->num_vars(), e);
        std::vector<Monomial> out;
        for (const Monomial& m : monomials_of_degree(I.ring()->num_vars(), e))
            if (!I.monomial_in_ideal(m))
                out.push_back(m);
        return out;
    }
    SliceBasis b = slice(I, e);
    std::vector<Monomial> out;
    out.reserve(b.standard.size());
    for (int col : b.standard)
        out.push_back(b.monomials[static_cast<std::size_t>(col)]);
    return out;
}

// --------------------------------------------------------- normal form --

Poly normal_form(const Poly& p, const GradedIdeal& I) {
    if (!p.ring()->compatible(*I.ring()))
        throw DomainError("polynomial and ideal from different rings");
    if (p.is_zero())
        return p;
    if (!p.is_homogeneous())
        throw DomainError("normal form requires a homogeneous polynomial");
    if (I.is_monomial()) {
        Poly out(p.ring());
        for (const auto& [m, c] : p.terms())
            if (!I.monomial_in_ideal(m))
                out.add_term(m, c);
        return out;
    }
    int e = p.degree();
    auto basis = IdealAccess::cached_slice(I, e, SlicePath::automatic);
    auto idx = index_of(basis->monomials);
    // single reduction pass against the canonical rows (sorted by pivot)
    SparseRow row = poly_to_row(p, idx);
    for (const SparseRow& r : basis->rows) {
        int lead = r.front().first;
        auto it = std::lower_bound(row.begin(), row.end(), lead,
                                   [](const auto& a, int c) { return a.first < c; });
        if (it != row.end() && it->first == lead)
            row = axpy(row, it->second, r);
    }
    Poly out(p.ring());
    for (const auto& [col, c] : row)
        out.add_term(basis->monomials[static_cast<std::size_t>(col)], c);
    return out;
}

// ------------------------------------------------------------- hilbert --

HilbertProfile hilbert_function(const GradedIdeal& I, int e_max) {
    if (e_max < 0)
        throw DomainError("hilbert function needs e_max >= 0");
    HilbertProfile out;
    out.dims.reserve(static_cast<std::size_t>(e_max) + 1);
    for (int e = 0; e <= e_max; ++e)
        out.dims.push_back(quotient_dim(I, e));
    return out;
}

std::vector<Integer> ci_hilbert_coeffs(const std::vector<int>& degrees,
                                       int nvars, int emax) {
    // numerator prod (1 - t^{d_j})
    std::vector<Integer> num(1, Integer(1));
    for (int d : degrees) {
        std::vector<Integer> next(num.size() + static_cast<std::size_t>(d),
                                  Integer(0));
        for (std::size_t i = 0; i < num.size(); ++i) {
            next[i] += num[i];
            next[i + static_cast<std::size_t>(d)] -= num[i];
        }
        num = std::move(next);
    }
    // times the series of (1 - t)^{-nvars}
    std::vector<Integer> out(static_cast<std::size_t>(emax) + 1, Integer(0));
    for (int e = 0; e <= emax; ++e) {
        Integer acc(0);
        for (std::size_t i = 0; i < num.size() && static_cast<int>(i) <= e; ++i)
            if (num[i] != 0)
                acc += num[i] * monomial_space_dim(nvars, e - static_cast<int>(i));
        out[static_cast<std::size_t>(e)] = acc;
    }
    return out;
}

// ---------------------------------------------------------- gorenstein --

GorensteinReport gorenstein_check(const GradedIdeal& I, int sigma) {
    if (sigma < 0)
        throw DomainError("socle degree must be >= 0");
    GorensteinReport rep;
    rep.sigma = sigma;
    rep.socle_dim = quotient_dim(I, sigma);
    rep.above_dim = quotient_dim(I, sigma + 1);
    rep.socle_dim_ok = rep.socle_dim == 1;
    rep.vanishing_ok = rep.above_dim == 0;
    if (!rep.socle_dim_ok)
        return rep;

    std::vector<Monomial> socle = standard_monomials(I, sigma);
    const Monomial& socle_mono = socle.front();
    const FieldPtr& field = I.ring()->field();

    rep.pairing_ok = true;
    for (int i = 0; 2 * i <= sigma; ++i) {
        std::vector<Monomial> low = standard_monomials(I, i);
        std::vector<Monomial> high = standard_monomials(I, sigma - i);
        PairingRank pr;
        pr.split = i;
        pr.dim_low = static_cast<long>(low.size());
        pr.dim_high = static_cast<long>(high.size());

        auto high_idx = index_of(high);
        RrefBuilder rref;
        if (I.is_monomial()) {
            // the product of standard monomials reduces to itself or 0;
            // only the complement of m_a inside the socle monomial counts
            for (const Monomial& a : low) {
                if (!a.divides(socle_mono))
                    continue;
                Monomial b = a.divide_into(socle_mono);
                auto it = high_idx.find(b);
                if (it != high_idx.end())
                    rref.add(SparseRow{{it->second, CycloScalar::one(field)}});
            }
        } else {
            for (const Monomial& a : low) {
                SparseRow row;
                for (const auto& [col_m, col_i] : high_idx) {
                    Poly prod = Poly::term(I.ring(), a * col_m,
                                           CycloScalar::one(field));
                    Poly nf = normal_form(prod, I);
                    CycloScalar entry = nf.coeff(socle_mono);
                    if (!entry.is_zero())
                        row.emplace_back(col_i, entry);
                }
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                rref.add(std::move(row));
            }
        }
        pr.rank = rref.rank();
        if (!pr.perfect())
            rep.pairing_ok = false;
        rep.pairing_ranks.push_back(pr);
    }
    return rep;
}

// -------------------------------------------------------- scalar ratio --

CycloScalar scalar_ratio(const Poly& P, const Poly& Q, const GradedIdeal& I) {
    if (Q.is_zero())
        throw DomainError("scalar ratio against the zero polynomial");
    if (!P.is_zero() && P.degree() != Q.degree())
        throw DomainError("scalar ratio needs polynomials of equal degree");
    Poly nfQ = normal_form(Q, I);
    if (nfQ.is_zero())
        throw DomainError("scalar ratio undefined: denominator lies in the ideal");
    Poly nfP = P.is_zero() ? P : normal_form(P, I);
    if (nfP.is_zero())
        return CycloScalar::zero(I.ring()->field());
    const Monomial& lm = nfQ.leading_monomial();
    CycloScalar c = nfP.coeff(lm) / nfQ.coeff(lm);
    if (nfP != nfQ * c)
        throw DomainError("normal forms are not proportional modulo the ideal");
    return c;
}

// --------------------------------------------------------------- colon --

SliceBasis colon_slice(const GradedIdeal& I, const Poly& P, int e) {
    if (e < 0)
        throw DomainError("colon slice degree must be >= 0");
    if (!P.ring()->compatible(*I.ring()))
        throw DomainError("polynomial and ideal from different rings");
    if (!P.is_homogeneous())
        throw DomainError("colon slice needs a homogeneous polynomial");
    const RingPtr& ring = I.ring();
    int nv = ring->num_vars();
    check_slice_limit(nv, e);

    SliceBasis out;
    out.degree = e;
    out.field = ring->field();
    out.monomials = monomials_of_degree(nv, e);

    RrefBuilder constraints;
    if (!P.is_zero()) {
        int target = e + P.degree();
        std::vector<Monomial> std_monos;
        std::function<bool(const Monomial&)> keep;
        if (I.is_monomial()) {
            std_monos = standard_monomials(I, target);
            keep = [&I](const Monomial& m) { return !I.monomial_in_ideal(m); };
        } else {
            check_slice_limit(nv, target);
            std_monos = standard_monomials(I, target);
        }
        auto std_idx = index_of(std_monos);

        // rows of the multiplication map, indexed by standard monomials
        std::map<int, SparseRow> rows;
        for (int j = 0; j < static_cast<int>(out.monomials.size()); ++j) {
            Poly mu = Poly::term(ring, out.monomials[static_cast<std::size_t>(j)],
                                 CycloScalar::one(ring->field()));
            Poly image = I.is_monomial() ? mu.mul_filtered(P, keep)
                                         : normal_form(mu * P, I);
            for (const auto& [m, c] : image.terms()) {
                auto it = std_idx.find(m);
                if (it == std_idx.end())
                    continue; // filtered representative outside the basis
                rows[it->second].emplace_back(j, c);
            }
        }
        for (auto& [i, row] : rows) {
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            constraints.add(std::move(row));
        }
    }

    out.rows = kernel_basis(constraints, static_cast<int>(out.monomials.size()),
                            out.field);
    for (const SparseRow& r : out.rows)
        out.pivots.push_back(r.front().first);
    std::vector<bool> is_pivot(out.monomials.size(), false);
    for (int p : out.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    for (int col = 0; col < static_cast<int>(out.monomials.size()); ++col)
        if (!is_pivot[static_cast<std::size_t>(col)])
            out.standard.push_back(col);
    return out;
}

// ---------------------------------------------------------------- meet --

namespace {

// Rows testing membership in the subspace: one row per non-pivot column q,
// with 1 at q and -row_i[q] at each pivot p_i.
void complement_projection_rows(const SliceBasis& B, const FieldPtr& field,
                                RrefBuilder& out) {
    for (int q : B.standard) {
        SparseRow row;
        for (const SparseRow& r : B.rows) {
            auto it = std::lower_bound(r.begin(), r.end(), q,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it != r.end() && it->first == q)
                row.emplace_back(r.front().first, -it->second);
        }
        row.emplace_back(q, CycloScalar::one(field));
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.add(std::move(row));
    }
}

} // namespace

SliceBasis slice_meet(const SliceBasis& A, const SliceBasis& B) {
    if (A.degree != B.degree || A.monomials.size() != B.monomials.size())
        throw DomainError("slice meet needs bases of the same ambient space");
    if (!A.field || !B.field ||
        A.field->root_order() != B.field->root_order())
        throw DomainError("slice meet needs bases over one field");
    SliceBasis out;
    out.degree = A.degree;
    out.field = A.field;
    out.monomials = A.monomials;

    RrefBuilder constraints;
    complement_projection_rows(A, out.field, constraints);
    complement_projection_rows(B, out.field, constraints);
    out.rows = kernel_basis(constraints, static_cast<int>(out.monomials.size()),
                            out.field);
    for (const SparseRow& r : out.rows)
        out.pivots.push_back(r.front().first);
    std::vector<bool> is_pivot(out.monomials.size(), false);
    for (int p : out.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    for (int col = 0; col < static_cast<int>(out.monomials.size()); ++col)
        if (!is_pivot[static_cast<std::size_t>(col)])
            out.standard.push_back(col);
    return out;
}

bool subspace_contains(const SliceBasis& B, const Poly& p) {
    if (p.is_zero())
        return true;
    if (!p.is_homogeneous() || p.degree() != B.degree)
        return false;
    auto idx = index_of(B.monomials);
    SparseRow row = poly_to_row(p, idx);
    for (const SparseRow& r : B.rows) {
        int lead = r.front().first;
        auto it = std::lower_bound(row.begin(), row.end(), lead,
                                   [](const auto& a, int c) { return a.first < c; });
        if (it != row.end() && it->first == lead)
            row = axpy(row, it->second, r);
    }
    return row.empty();
}

} // namespace pcy
