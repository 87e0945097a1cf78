#ifndef PCY_IDEAL_HPP
#define PCY_IDEAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "pcy/config.hpp"
#include "pcy/poly.hpp"

namespace pcy {

// Sparse vector in a monomial coordinate space: (column, coefficient)
// pairs sorted by column, no zero coefficients.
using SparseRow = std::vector<std::pair<int, CycloScalar>>;

// Incremental reduced row echelon form over Q(zeta_N). Rows are kept
// fully reduced (leading ones, zeros above and below every pivot), so the
// final basis is the canonical RREF of the row space regardless of
// insertion order.
class RrefBuilder {
public:
    // Reduces r against the current pivots; inserts it when nonzero.
    void add(SparseRow r);
    // Reduces r without inserting; true when r lies in the row space.
    bool reduces_to_zero(SparseRow r) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseRow>& rows() const { return rows_; } // by pivot

    std::vector<SparseRow> sorted_rows() const;
    std::vector<int> pivot_columns() const;

private:
    SparseRow reduce(SparseRow r) const;
    std::map<int, SparseRow> rows_;
};

// Canonical RREF basis of the kernel of the row space spanned by
// `constraints` inside a coordinate space of the given width, over the
// given coefficient field.
std::vector<SparseRow> kernel_basis(const RrefBuilder& constraints, int width,
                                    const FieldPtr& field);

// Homogeneous ideal given by generators. Value type; copies share the
// underlying (immutable) data and slice cache.
class GradedIdeal {
public:
    GradedIdeal(RingPtr ring, std::vector<Poly> generators);

    const RingPtr& ring() const;
    const std::vector<Poly>& generators() const;

    // Every generator is a single term.
    bool is_monomial() const;
    // Every generator is c * x_i^k with distinct i covering a subset of
    // the variables; enables slice-free counting and enumeration.
    bool is_power_ideal() const;
    // Maximal standard exponent per variable for power ideals
    // (k_i - 1 for a generator c x_i^{k_i}, otherwise unbounded).
    const std::vector<int>& power_caps() const;

    bool monomial_in_ideal(const Monomial& m) const; // monomial ideals only

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    friend struct IdealAccess;
};

// Exact basis data for one graded piece inside the degree-e monomial
// coordinate space. `rows` is the canonical RREF of the subspace;
// `standard` lists the non-pivot columns (for an ideal slice these index
// the standard-monomial basis of the quotient).
struct SliceBasis {
    int degree = 0;
    FieldPtr field; // coefficient field of the rows
    std::vector<Monomial> monomials; // descending graded-lex
    std::vector<SparseRow> rows;
    std::vector<int> pivots;
    std::vector<int> standard;

    long ambient_dim() const { return static_cast<long>(monomials.size()); }
    long dim() const { return static_cast<long>(rows.size()); }
    Poly row_poly(const RingPtr& ring, std::size_t i) const;
};

enum class SlicePath { automatic, dense };

// Basis of I_e. The monomial fast path reads pivots off directly; the
// dense path eliminates the products (monomial) x (generator).
SliceBasis slice(const GradedIdeal& I, int e,
                 SlicePath path = SlicePath::automatic);

// dim of (ring_e / I_e) without materializing a basis when possible.
long quotient_dim(const GradedIdeal& I, int e);

// Standard monomial basis of the degree-e quotient piece.
std::vector<Monomial> standard_monomials(const GradedIdeal& I, int e);

// Unique representative of p + I_{deg p} supported on standard monomials.
Poly normal_form(const Poly& p, const GradedIdeal& I);

struct HilbertProfile {
    std::vector<long> dims; // dims[e] = dim (R/I)_e, e = 0 .. e_max
};

HilbertProfile hilbert_function(const GradedIdeal& I, int e_max);

struct PairingRank {
    int split = 0;       // i
    long dim_low = 0;    // dim R_i
    long dim_high = 0;   // dim R_{sigma-i}
    long rank = 0;       // rank of R_i x R_{sigma-i} -> R_sigma
    bool perfect() const { return rank == dim_low && rank == dim_high; }
};

struct GorensteinReport {
    int sigma = 0;
    long socle_dim = 0;
    long above_dim = 0;
    bool socle_dim_ok = false; // dim R_sigma == 1
    bool vanishing_ok = false; // dim R_{sigma+1} == 0
    std::vector<PairingRank> pairing_ranks;
    bool pairing_ok = false;
    bool ok() const { return socle_dim_ok && vanishing_ok && pairing_ok; }
};

GorensteinReport gorenstein_check(const GradedIdeal& I, int sigma);

// The unique c with normal_form(P) = c * normal_form(Q), when the normal
// forms are proportional. Errors when Q lies in I or when the normal
// forms are not proportional.
CycloScalar scalar_ratio(const Poly& P, const Poly& Q, const GradedIdeal& I);

// Basis of (I : P)_e = { Q of degree e : QP in I }, the kernel of the
// multiplication-by-P map into the degree-(e + deg P) quotient.
SliceBasis colon_slice(const GradedIdeal& I, const Poly& P, int e);

// Intersection of two subspaces of the same coordinate space, computed as
// the kernel of the stacked complement projections.
SliceBasis slice_meet(const SliceBasis& A, const SliceBasis& B);

// True when p (homogeneous of the basis degree) lies in the subspace.
bool subspace_contains(const SliceBasis& B, const Poly& p);

// Coefficients of prod_j (1 - t^{d_j}) / (1 - t)^nvars up to degree emax:
// the Hilbert series of a complete intersection with generator degrees d_j.
std::vector<Integer> ci_hilbert_coeffs(const std::vector<int>& degrees,
                                       int nvars, int emax);

// Number of degree-e monomials in nvars variables.
Integer monomial_space_dim(int nvars, int e);

} // namespace pcy

#endif
