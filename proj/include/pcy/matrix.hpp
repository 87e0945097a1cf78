#ifndef PCY_MATRIX_HPP
#define PCY_MATRIX_HPP

#include <vector>

#include "pcy/poly.hpp"

namespace pcy {

// Square matrix of polynomials over a single ring.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, int dim);

    int dim() const { return dim_; }
    const RingPtr& ring() const { return ring_; }
    const Poly& at(int i, int j) const;
    void set(int i, int j, Poly p);

private:
    RingPtr ring_;
    int dim_;
    std::vector<Poly> entries_;
};

// Jac(h)[i][j] = dh_i/dx_j. Requires exactly num_vars entries.
PolyMatrix jacobian(const std::vector<Poly>& h);

// Hess(f)[i][j] = d^2 f / dx_i dx_j. Requires f homogeneous.
PolyMatrix hessian(const Poly& f);

// Exact determinant by cofactor expansion along the sparsest row or
// column. Refuses matrices larger than config().det_dim_limit.
Poly det(const PolyMatrix& m);

// Verifies, at the coefficient level, the identity
//   sum_i (-1)^i f_i d f_0 ^ ... ^ (omit d f_i) ^ ... = l^{-1} det(Jac(f)) Omega
// for a tuple of num_vars homogeneous polynomials of common degree l,
// together with the Euler identity sum_j x_j df_i/dx_j = l f_i. Throws on
// a degree mismatch among the f_i.
bool euler_omega_check(const std::vector<Poly>& f);

} // namespace pcy

#endif
