#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "celltrees/ints.hpp"

namespace celltrees {

/// One cell of a finite regular CW complex. `id` is unique within a complex;
/// `label` is the shape-specific combinatorial encoding (e.g. "0*1" for a cube
/// face) and fixes the cell order within each dimension.
struct Cell {
    std::string id;
    int dim = 0;
    std::string label;
};

/// Sparse matrix over the integers; only nonzero entries are stored, keyed
/// (row, col) in row-major order.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Entry at (r, c); zero when absent.
    Int get(int r, int c) const;
    /// Stores v at (r, c), erasing the entry when v == 0.
    void set(int r, int c, Int v);
    void add(int r, int c, const Int& v);

    bool is_zero_matrix() const { return entries_.empty(); }
    std::size_t nonzero_count() const { return entries_.size(); }

    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

    /// Buckets all entries by column in one pass.
    std::vector<std::map<int, Int>> columns() const;
    std::map<int, Int> column(int c) const;

    /// Column restriction A[:, cols], preserving the given column order.
    SparseIntMatrix select_columns(const std::vector<int>& cols) const;
    SparseIntMatrix transpose() const;

    bool operator==(const SparseIntMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Int> entries_;
};

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// Input record for ChainComplex construction. Boundary references cells one
/// dimension lower by id. An empty `id` defaults to the label.
struct CellSpec {
    int dim = 0;
    std::string label;
    std::vector<std::pair<std::string, Int>> boundary;
    std::string id;
};

/// Cell counts per dimension, f_0 .. f_d.
struct FVector {
    std::vector<long long> counts;

    long long operator[](std::size_t i) const { return counts[i]; }
    std::size_t size() const { return counts.size(); }
    bool operator==(const FVector&) const = default;
};

/// A finite regular CW complex as an integer chain complex: per-dimension
/// cell lists (sorted lexicographically by label) and boundary matrices
/// boundary(i): C_i -> C_{i-1} with rows indexed by (i-1)-cells and columns
/// by i-cells. Immutable after construction; skeleton/subcomplex operations
/// return new values, so complexes are safe to share across threads.
class ChainComplex {
public:
    /// Builds the complex from cell records. Throws std::invalid_argument on
    /// structural defects (duplicate ids, boundary reference to a missing
    /// cell or to a cell of the wrong dimension, dim out of range). Algebraic
    /// invariants such as boundary-of-boundary = 0 are checked separately by
    /// validate_complex, so deliberately broken complexes can be represented.
    ChainComplex(int top_dim, const std::vector<CellSpec>& specs);

    int top_dim() const { return top_dim_; }
    const std::vector<Cell>& cells(int dim) const { return cells_.at(dim); }
    long long cell_count(int dim) const;
    long long total_cell_count() const;

    /// Boundary matrix for 1 <= i <= top_dim.
    const SparseIntMatrix& boundary(int i) const;

    bool has_cell(const std::string& id) const { return index_.count(id) > 0; }
    const Cell& cell(const std::string& id) const;
    /// (dimension, position within that dimension) for a cell id.
    std::pair<int, int> locate(const std::string& id) const;

    bool operator==(const ChainComplex& other) const;

private:
    ChainComplex() = default;
    void rebuild_index();

    int top_dim_ = 0;
    std::vector<std::vector<Cell>> cells_;       // [dim] -> label-sorted cells
    std::vector<SparseIntMatrix> boundary_;      // [i] valid for 1 <= i <= top_dim
    std::map<std::string, std::pair<int, int>> index_;

    friend ChainComplex skeleton(const ChainComplex&, int);
    friend ChainComplex facet_subcomplex(const ChainComplex&, const std::set<std::string>&);
};

struct Violation {
    std::string kind;
    int degree = -1;  // offending dimension, -1 when not dimension-specific
    std::string message;
};

/// Empty report means the complex satisfies all chain complex axioms.
struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks the algebraic cell complex axioms: matrix shapes against cell
/// counts, in-bounds nonzero entries, label-sorted cell order, and the exact
/// integer identity boundary(i) * boundary(i+1) = 0 at every degree.
ValidationReport validate_complex(const ChainComplex& c);

FVector f_vector(const ChainComplex& c);

/// Alternating sum of the f-vector, exact.
long long euler_characteristic(const ChainComplex& c);

/// Subcomplex of all cells of dimension <= k. Throws on k out of [0, top_dim].
ChainComplex skeleton(const ChainComplex& c, int k);

/// Full (d-1)-skeleton of c plus exactly the named top-dimensional cells;
/// the top boundary matrix is the column restriction of boundary(d). Passing
/// every facet returns c itself; passing none returns the (d-1)-skeleton.
/// Throws when an id is unknown or not top-dimensional.
ChainComplex facet_subcomplex(const ChainComplex& c, const std::set<std::string>& facet_ids);

// JSON interchange format: {"top_dim": d, "cells": [{"id", "dim", "label",
// "boundary": [[id, coeff], ...]}, ...]}. Coefficients are JSON numbers, or
// decimal strings when |coeff| exceeds 2^53. Round-trip is the identity.
nlohmann::ordered_json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const nlohmann::json& j);
void complex_to_file(const ChainComplex& c, const std::string& path);
ChainComplex complex_from_file(const std::string& path);

}  // namespace celltrees
