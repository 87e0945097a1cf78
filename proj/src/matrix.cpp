#include "pcy/matrix.hpp"

#include "pcy/config.hpp"
#include "pcy/errors.hpp"

namespace pcy {

PolyMatrix::PolyMatrix(RingPtr ring, int dim) : ring_(std::move(ring)), dim_(dim) {
    if (dim < 1)
        throw DomainError("matrix dimension must be positive");
    entries_.assign(static_cast<std::size_t>(dim) * dim, Poly(ring_));
}

const Poly& PolyMatrix::at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
}

void PolyMatrix::set(int i, int j, Poly p) {
    if (!ring_->compatible(*p.ring()))
        throw DomainError("matrix entry from a different ring");
    entries_[static_cast<std::size_t>(i) * dim_ + j] = std::move(p);
}

PolyMatrix jacobian(const std::vector<Poly>& h) {
    if (h.empty())
        throw DomainError("jacobian of an empty tuple");
    const RingPtr& ring = h.front().ring();
    int nv = ring->num_vars();
    if (static_cast<int>(h.size()) != nv)
        throw DomainError("jacobian needs exactly " + std::to_string(nv) +
                          " polynomials, got " + std::to_string(h.size()));
    PolyMatrix out(ring, nv);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            out.set(i, j, h[static_cast<std::size_t>(i)].partial(j));
    return out;
}

PolyMatrix hessian(const Poly& f) {
    if (!f.is_homogeneous())
        throw DomainError("hessian requires a homogeneous polynomial");
    const RingPtr& ring = f.ring();
    int nv = ring->num_vars();
    PolyMatrix out(ring, nv);
    for (int i = 0; i < nv; ++i) {
        Poly fi = f.partial(i);
        for (int j = 0; j < nv; ++j)
            out.set(i, j, fi.partial(j));
    }
    return out;
}

namespace {

Poly det_rec(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    const RingPtr& ring = m.ring();
    std::size_t k = rows.size();
    if (k == 1)
        return m.at(rows[0], cols[0]);

    // pick the line (row or column) with the fewest nonzero entries
    int best_count = -1;
    bool best_is_row = true;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < k; ++i) {
        int cnt = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (!m.at(rows[i], cols[j]).is_zero())
                ++cnt;
        if (best_count < 0 || cnt < best_count) {
            best_count = cnt;
            best_is_row = true;
            best_idx = i;
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        int cnt = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (!m.at(rows[i], cols[j]).is_zero())
                ++cnt;
        if (cnt < best_count) {
            best_count = cnt;
            best_is_row = false;
            best_idx = j;
        }
    }
    if (best_count == 0)
        return Poly::zero(ring);

    Poly acc(ring);
    for (std::size_t t = 0; t < k; ++t) {
        const Poly& entry = best_is_row ? m.at(rows[best_idx], cols[t])
                                        : m.at(rows[t], cols[best_idx]);
        if (entry.is_zero())
            continue;
        std::vector<int> sub_rows, sub_cols;
        for (std::size_t i = 0; i < k; ++i) {
            if (best_is_row ? i != best_idx : i != t)
                sub_rows.push_back(rows[i]);
            if (best_is_row ? i != t : i != best_idx)
                sub_cols.push_back(cols[i]);
        }
        Poly minor = det_rec(m, std::move(sub_rows), std::move(sub_cols));
        Poly contrib = entry * minor;
        if ((best_idx + t) % 2 == 0)
            acc += contrib;
        else
            acc -= contrib;
    }
    return acc;
}

} // namespace

Poly det(const PolyMatrix& m) {
    if (m.dim() > config().det_dim_limit)
        throw ResourceError("determinant dimension " + std::to_string(m.dim()) +
                            " exceeds the configured limit " +
                            std::to_string(config().det_dim_limit));
    std::vector<int> idx(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        idx[static_cast<std::size_t>(i)] = i;
    return det_rec(m, idx, idx);
}

namespace {

// Determinant of Jac(f) with row `drop_row` and column `drop_col` removed.
Poly jac_minor(const PolyMatrix& jac, int drop_row, int drop_col) {
    std::vector<int> rows, cols;
    for (int i = 0; i < jac.dim(); ++i) {
        if (i != drop_row)
            rows.push_back(i);
        if (i != drop_col)
            cols.push_back(i);
    }
    PolyMatrix sub(jac.ring(), jac.dim() - 1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub.set(static_cast<int>(i), static_cast<int>(j),
                    jac.at(rows[i], cols[j]));
    return det(sub);
}

} // namespace

bool euler_omega_check(const std::vector<Poly>& f) {
    if (f.empty())
        throw DomainError("empty tuple");
    const RingPtr& ring = f.front().ring();
    int nv = ring->num_vars();
    if (static_cast<int>(f.size()) != nv)
        throw DomainError("expected " + std::to_string(nv) + " polynomials");
    int l = f.front().degree();
    for (const Poly& fi : f)
        if (fi.degree() != l)
            throw DomainError("degree mismatch in the tuple");
    if (l < 1)
        throw DomainError("common degree must be >= 1");

    // Euler identity per component.
    for (int i = 0; i < nv; ++i) {
        Poly lhs(ring);
        for (int j = 0; j < nv; ++j)
            lhs += Poly::variable(ring, j) * f[static_cast<std::size_t>(i)].partial(j);
        if (lhs != f[static_cast<std::size_t>(i)] * Rational(l))
            return false;
    }

    // Coefficient on each basis (n+1)-form dx_0^...^(omit dx_j)^...:
    //   sum_i (-1)^i f_i det(Jac minus row i, col j)   versus
    //   l^{-1} det(Jac) (-1)^j x_j.
    PolyMatrix jac = jacobian(f);
    Poly jac_det = det(jac);
    for (int j = 0; j < nv; ++j) {
        Poly lhs(ring);
        for (int i = 0; i < nv; ++i) {
            Poly contrib = f[static_cast<std::size_t>(i)] * jac_minor(jac, i, j);
            if (i % 2 == 0)
                lhs += contrib;
            else
                lhs -= contrib;
        }
        Poly rhs = Poly::variable(ring, j) * jac_det;
        if (j % 2 == 1)
            rhs = -rhs;
        if (lhs * Rational(l) != rhs)
            return false;
    }
    return true;
}

} // namespace pcy
