#pragma once

#include <map>
#include <vector>

#include "celltrees/chain_complex.hpp"

namespace celltrees {

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ..., entries nonnegative, zeros last. The exact integer
/// inverses of the transforms ride along: U * U_inverse = I is a complete
/// unimodularity certificate that costs one multiplication to check,
/// where a determinant would grind through Hadamard-sized minors.
struct SNFResult {
    SparseIntMatrix U;
    SparseIntMatrix D;
    SparseIntMatrix V;
    SparseIntMatrix U_inverse;
    SparseIntMatrix V_inverse;

    std::vector<Int> diagonal() const;
};

/// Integer-preserving elimination with minimal-absolute-value pivoting.
/// Exact for any input; entry growth is a performance concern only.
SNFResult smith_normal_form(const SparseIntMatrix& A);

/// Diagonal of the Smith form without accumulating U and V. Much cheaper;
/// used for torsion queries where the transforms are not needed.
std::vector<Int> smith_invariant_factors(const SparseIntMatrix& A);

/// Incrementally maintained column echelon form over Q, kept fraction-free:
/// reduced columns stay integral via cross-multiplication and content-gcd
/// normalization. Feeding columns one at a time answers "is this column
/// independent of everything accepted so far?" in one pass, which is what
/// greedy tree construction needs.
class IncrementalRank {
public:
    explicit IncrementalRank(int rows) : rows_(rows) {}

    /// Reduces the column against the current echelon basis. Returns true
    /// (and absorbs the column as a new pivot) iff it is Q-independent of
    /// the columns accepted so far.
    bool add_column(std::map<int, Int> col);

    int rank() const { return static_cast<int>(pivots_.size()); }
    int rows() const { return rows_; }

private:
    int rows_;
    std::vector<std::pair<int, std::map<int, Int>>> pivots_;  // (pivot row, column)
};

/// Rank over Q by fraction-free elimination.
int rank_over_q(const SparseIntMatrix& A);

/// Betti number plus torsion coefficients (invariant factors > 1) for one
/// dimension.
struct HomologyResult {
    int dim = 0;
    long long betti = 0;
    std::vector<Int> torsion;
};

// Reduced homology is realized by augmentation: degree 0 is computed against
// the all-ones row to the empty face, never by storing a (-1)-cell. The
// helpers below expose that augmented boundary uniformly:
//   i == 0      -> 1 x f_0 all-ones row,
//   1 <= i <= d -> boundary(i),
//   i == d + 1  -> zero matrix with f_d columns... (rows f_d, cols 0).
SparseIntMatrix augmented_boundary(const ChainComplex& c, int i);

/// Reduced Betti number, exact, via Q-rank. Valid for 0 <= i <= top_dim.
long long reduced_betti(const ChainComplex& c, int i);

/// H_i(c; Z): Betti via Q-rank and torsion via the Smith form of
/// boundary(i+1). With `reduced`, dimension 0 is computed against the
/// augmentation so a connected complex has reduced betti_0 = 0 (torsion is
/// unaffected). Throws on i outside [0, top_dim].
HomologyResult homology(const ChainComplex& c, int i, bool reduced = false);

/// Unreduced homology in every dimension 0 .. top_dim.
std::vector<HomologyResult> betti_vector(const ChainComplex& c);

}  // namespace celltrees
