#pragma once

#include <vector>

#include "celltrees/ints.hpp"

namespace celltrees {

Int binomial(int n, int k);

/// rank H^{k-2} of the no-k-equal complement, as the closed binomial sum
/// sum_{i=k}^{n} C(n,i) C(i-1,k-1). Requires 3 <= k <= n.
Int bw_betti(int n, int k);

/// Number of facets of a k-dimensional spanning tree of the k-skeleton of
/// the n-cube: the same binomial sum, valid for 1 <= k <= n (and extended to
/// k = 0, where every 0-tree has one vertex).
Int tree_size_closed_form(int n, int k);

/// The four equinumerous tree quantities for the cube/cross pair, computed
/// constructively on the actual complexes (not from the closed forms):
///   q1  size of a k-tree of the k-skeleton of Cube_n
///   q2  size of an (n-k)-tree of the (n-k)-skeleton of the Cross_n boundary
///   q3  complement of a (k-1)-tree inside the (k-1)-cells of Cube_n
///   q4  complement of an (n-k-1)-tree inside the (n-k-1)-cells of Cross_n
struct EquinumerousReport {
    int n = 0;
    int k = 0;
    Int q1, q2, q3, q4;
    bool all_equal = false;
    // q1 == C(n,k-1) * 2^(n-k+1) - (size of the (k-1)-tree), checked exactly.
    bool cube_relation_holds = false;
};

/// Requires 1 <= k < n.
EquinumerousReport equinumerous_quantities(int n, int k);

/// Both sides of the pile Euler-characteristic identity
///   chi(P_{k-1}) = prod_j (N_j+1) * sum_{l=0}^{k-1} (-1)^l sum_{|I|=l}
///                  prod_{i in I} N_i/(N_i+1)
/// with the right side evaluated in exact rational arithmetic and certified
/// integral (a non-integral value throws: it would be an implementation bug,
/// not a valid outcome). beta solves lhs = 1 + (-1)^(k-1) beta; reading beta
/// as the Betti number of the arrangement complement applies for k >= 3
/// only, which `complement_interpretation` records.
struct PileChiReport {
    long long lhs = 0;
    Int rhs;
    Int beta;
    bool complement_interpretation = false;
};

/// Requires 1 <= k <= n and all N_j >= 1.
PileChiReport pile_chi_identity(const std::vector<int>& sizes, int k);

/// Dimension count n - l(k-1) + (l-1) for the cells glued over l-fold
/// self-intersection preimages in the simplicial resolution, reported
/// verbatim together with both candidate bounds (see the fields). The
/// multiplicity of any preimage is at most floor(n/k); l beyond that is
/// flagged vacuous. Requires l >= 2, k >= 3, n >= k.
struct ResolutionCellDim {
    int dim = 0;                 // n - l(k-1) + (l-1)
    int multiplicity_bound = 0;  // floor(n/k)
    bool vacuous = false;        // l > multiplicity_bound
    bool paper_bound_holds = false;      // dim <= n-k-2
    int hyperplane_dim = 0;              // n-1 - l(k-1) + (l-1)
    bool hyperplane_bound_holds = false;  // hyperplane_dim <= n-k-1
};

ResolutionCellDim resolution_added_cell_dim(int n, int k, int l);

}  // namespace celltrees
