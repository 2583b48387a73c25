#pragma once

#include <string>
#include <vector>

#include "celltrees/chain_complex.hpp"

namespace celltrees {

/// Face of the n-cube: a word over {0, 1, *}. Dimension = number of *s.
struct CubeFace {
    std::string word;

    int dim() const;
    bool is_top_cell() const;  // the all-star word
};

/// Face of the boundary of the n-dimensional cross-polytope: a nonzero word
/// over {+, -, 0}. Dimension = (number of nonzero symbols) - 1. One symbol
/// per axis, so a face never pairs antipodal vertices.
struct CrossFace {
    std::string word;

    int dim() const;
};

/// Cell of a pile of cubes: per axis either the vertex {v} (0 <= v <= N_j)
/// or the interval [v, v+1] (0 <= v < N_j). Dimension = number of intervals.
/// Label encoding: comma-separated per-axis tokens, "v2" / "i1".
struct PileCell {
    struct Axis {
        bool interval = false;
        int v = 0;
    };
    std::vector<Axis> axes;

    int dim() const;
    std::string label() const;
    static PileCell parse(const std::string& label);
};

/// Containment in the cube face order: inner <= outer iff per position
/// inner_i <= outer_i under 0 < *, 1 < * (0 and 1 incomparable).
bool cube_face_contains(const CubeFace& outer, const CubeFace& inner);

/// Containment for cross faces: every nonzero symbol of inner appears in
/// outer with the same sign.
bool cross_face_contains(const CrossFace& outer, const CrossFace& inner);

// Sign convention, fixed once for all three builders: the stars (or interval
// axes) of a face, read left to right, orient it. The j-th star contributes
// (-1)^(j-1) * (face with that star set to 1) - (-1)^(j-1) * (star set to 0),
// and the pile rule is the same with interval -> upper/lower vertex. Cross
// faces carry the induced simplex orientation in word order of their nonzero
// positions. Any consistent choice satisfies dd = 0; this one is pinned for
// reproducibility.

/// Solid n-cube as a cell complex: all {0,1,*}^n words including the top
/// cell. Throws on n < 1.
ChainComplex hypercube(int n);

/// Boundary complex of the n-dimensional cross-polytope: all nonzero
/// {+,-,0}^n words. Homology of S^(n-1). Throws on n < 1.
ChainComplex cross_polytope(int n);

/// The box [0,N_1] x ... x [0,N_n] stratified by the integer grid.
/// pile_of_cubes({1,...,1}) is cell-for-cell isomorphic to hypercube(n)
/// under Vertex(0) -> 0, Vertex(1) -> 1, Interval(0) -> *, with equal
/// boundary matrices. Throws when any N_j < 1.
ChainComplex pile_of_cubes(const std::vector<int>& sizes);

/// Inclusion-reversing bijection between proper cube faces and cross faces:
/// per position * -> 0, 1 -> +, 0 -> -. Dimension k maps to n-1-k. Throws on
/// the top cell, which has no proper dual.
CrossFace dual_cell(const CubeFace& f);
CubeFace dual_cell_inverse(const CrossFace& g);

}  // namespace celltrees
