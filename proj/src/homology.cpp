#include "celltrees/homology.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace celltrees {

std::vector<Int> SNFResult::diagonal() const {
    int k = std::min(D.rows(), D.cols());
    std::vector<Int> diag(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) diag[static_cast<std::size_t>(i)] = D.get(i, i);
    return diag;
}

namespace {

// Elimination workspace: row-major maps plus per-column occupancy sets so
// row and column operations are both cheap. Transform accumulation (U as
// rows, V as columns) is optional.
class SnfWorkspace {
public:
    SnfWorkspace(const SparseIntMatrix& A, bool transforms)
        : m_(A.rows()),
          n_(A.cols()),
          rows_(static_cast<std::size_t>(A.rows())),
          col_rows_(static_cast<std::size_t>(A.cols())),
          transforms_(transforms) {
        for (const auto& [rc, v] : A.entries()) {
            rows_[static_cast<std::size_t>(rc.first)][rc.second] = v;
            col_rows_[static_cast<std::size_t>(rc.second)].insert(rc.first);
        }
        if (transforms_) {
            u_rows_.resize(static_cast<std::size_t>(m_));
            uinv_cols_.resize(static_cast<std::size_t>(m_));
            for (int i = 0; i < m_; ++i) {
                u_rows_[static_cast<std::size_t>(i)][i] = 1;
                uinv_cols_[static_cast<std::size_t>(i)][i] = 1;
            }
            v_cols_.resize(static_cast<std::size_t>(n_));
            vinv_rows_.resize(static_cast<std::size_t>(n_));
            for (int j = 0; j < n_; ++j) {
                v_cols_[static_cast<std::size_t>(j)][j] = 1;
                vinv_rows_[static_cast<std::size_t>(j)][j] = 1;
            }
        }
    }

    void run() {
        const int limit = std::min(m_, n_);
        int t = 0;
        while (t < limit) {
            if (!select_pivot(t)) break;
            reduce_pivot(t);
            if (get(t, t) < 0) negate_row(t);
            ++t;
        }
        rank_ = t;
        enforce_divisibility();
    }

    Int get(int i, int j) const {
        const auto& row = rows_[static_cast<std::size_t>(i)];
        auto it = row.find(j);
        return it == row.end() ? Int(0) : it->second;
    }

    int rank() const { return rank_; }

    SparseIntMatrix diagonal_matrix() const {
        SparseIntMatrix D(m_, n_);
        for (int i = 0; i < rank_; ++i) D.set(i, i, get(i, i));
        return D;
    }

    SparseIntMatrix u_matrix() const { return from_rows(u_rows_, m_, m_); }
    SparseIntMatrix u_inverse_matrix() const { return from_cols(uinv_cols_, m_, m_); }
    SparseIntMatrix v_matrix() const { return from_cols(v_cols_, n_, n_); }
    SparseIntMatrix v_inverse_matrix() const { return from_rows(vinv_rows_, n_, n_); }

private:
    static SparseIntMatrix from_rows(const std::vector<std::map<int, Int>>& rows, int m, int n) {
        SparseIntMatrix M(m, n);
        for (int i = 0; i < m; ++i)
            for (const auto& [j, v] : rows[static_cast<std::size_t>(i)]) M.set(i, j, v);
        return M;
    }

    static SparseIntMatrix from_cols(const std::vector<std::map<int, Int>>& cols, int m, int n) {
        SparseIntMatrix M(m, n);
        for (int j = 0; j < n; ++j)
            for (const auto& [r, v] : cols[static_cast<std::size_t>(j)]) M.set(r, j, v);
        return M;
    }

    void put(int i, int j, Int v) {
        auto& row = rows_[static_cast<std::size_t>(i)];
        auto& col = col_rows_[static_cast<std::size_t>(j)];
        if (v == 0) {
            row.erase(j);
            col.erase(i);
        } else {
            row[j] = std::move(v);
            col.insert(i);
        }
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        std::set<int> touched;
        for (const auto& [j, v] : rows_[static_cast<std::size_t>(a)]) touched.insert(j);
        for (const auto& [j, v] : rows_[static_cast<std::size_t>(b)]) touched.insert(j);
        rows_[static_cast<std::size_t>(a)].swap(rows_[static_cast<std::size_t>(b)]);
        for (int j : touched) {
            auto& col = col_rows_[static_cast<std::size_t>(j)];
            bool in_a = rows_[static_cast<std::size_t>(a)].count(j) > 0;
            bool in_b = rows_[static_cast<std::size_t>(b)].count(j) > 0;
            if (in_a) col.insert(a); else col.erase(a);
            if (in_b) col.insert(b); else col.erase(b);
        }
        if (transforms_) {
            u_rows_[static_cast<std::size_t>(a)].swap(u_rows_[static_cast<std::size_t>(b)]);
            uinv_cols_[static_cast<std::size_t>(a)].swap(uinv_cols_[static_cast<std::size_t>(b)]);
        }
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        std::set<int> touched;
        for (int r : col_rows_[static_cast<std::size_t>(a)]) touched.insert(r);
        for (int r : col_rows_[static_cast<std::size_t>(b)]) touched.insert(r);
        for (int r : touched) {
            auto& row = rows_[static_cast<std::size_t>(r)];
            auto ia = row.find(a);
            auto ib = row.find(b);
            Int va = ia == row.end() ? Int(0) : ia->second;
            Int vb = ib == row.end() ? Int(0) : ib->second;
            if (ia != row.end()) row.erase(ia);
            if ((ib = row.find(b)) != row.end()) row.erase(ib);
            if (vb != 0) row[a] = vb;
            if (va != 0) row[b] = va;
        }
        std::swap(col_rows_[static_cast<std::size_t>(a)], col_rows_[static_cast<std::size_t>(b)]);
        if (transforms_) {
            v_cols_[static_cast<std::size_t>(a)].swap(v_cols_[static_cast<std::size_t>(b)]);
            vinv_rows_[static_cast<std::size_t>(a)].swap(vinv_rows_[static_cast<std::size_t>(b)]);
        }
    }

    // row_i -= q * row_t; inverse witness gets col_t += q * col_i
    void row_axpy(int i, int t, const Int& q) {
        for (const auto& [j, v] : rows_[static_cast<std::size_t>(t)]) {
            Int next = get(i, j) - q * v;
            put(i, j, std::move(next));
        }
        if (transforms_) {
            axpy_map(u_rows_[static_cast<std::size_t>(i)], u_rows_[static_cast<std::size_t>(t)], q);
            axpy_map(uinv_cols_[static_cast<std::size_t>(t)], uinv_cols_[static_cast<std::size_t>(i)], -q);
        }
    }

    // col_j -= q * col_t; inverse witness gets row_t += q * row_j
    void col_axpy(int j, int t, const Int& q) {
        std::vector<int> rows_of_t(col_rows_[static_cast<std::size_t>(t)].begin(),
                                   col_rows_[static_cast<std::size_t>(t)].end());
        for (int r : rows_of_t) {
            Int next = get(r, j) - q * get(r, t);
            put(r, j, std::move(next));
        }
        if (transforms_) {
            axpy_map(v_cols_[static_cast<std::size_t>(j)], v_cols_[static_cast<std::size_t>(t)], q);
            axpy_map(vinv_rows_[static_cast<std::size_t>(t)], vinv_rows_[static_cast<std::size_t>(j)], -q);
        }
    }

    static void axpy_map(std::map<int, Int>& target, const std::map<int, Int>& source, const Int& q) {
        for (const auto& [k, v] : source) {
            auto it = target.find(k);
            if (it == target.end()) {
                target[k] = -q * v;
                if (target[k] == 0) target.erase(k);
            } else {
                it->second -= q * v;
                if (it->second == 0) target.erase(it);
            }
        }
    }

    // g = x*a + y*b with g = gcd(a, b) > 0.
    static Int xgcd(Int a, Int b, Int& x, Int& y) {
        Int old_r = std::move(a), r = std::move(b);
        Int old_x = 1, cur_x = 0, old_y = 0, cur_y = 1;
        while (r != 0) {
            Int q = old_r / r;
            Int tmp = old_r - q * r; old_r = std::move(r); r = std::move(tmp);
            tmp = old_x - q * cur_x; old_x = std::move(cur_x); cur_x = std::move(tmp);
            tmp = old_y - q * cur_y; old_y = std::move(cur_y); cur_y = std::move(tmp);
        }
        if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
        x = std::move(old_x);
        y = std::move(old_y);
        return old_r;
    }

    static std::map<int, Int> combine_maps(const Int& c1, const std::map<int, Int>& m1,
                                           const Int& c2, const std::map<int, Int>& m2) {
        std::map<int, Int> out;
        for (const auto& [k, v] : m1) {
            Int w = c1 * v;
            if (w != 0) out[k] = std::move(w);
        }
        for (const auto& [k, v] : m2) {
            auto it = out.find(k);
            if (it == out.end()) {
                Int w = c2 * v;
                if (w != 0) out[k] = std::move(w);
            } else {
                it->second += c2 * v;
                if (it->second == 0) out.erase(it);
            }
        }
        return out;
    }

    // Unimodular 2x2 transform on columns (t, j): replaces the pivot with
    // gcd(pivot, a(t,j)) and zeroes a(t,j) in one step. Used only in the
    // diagonal divisibility fixup, where the block is otherwise empty.
    void col_gcd_combine(int t, int j) {
        const Int p = get(t, t);
        const Int a = get(t, j);
        Int x, y;
        Int g = xgcd(p, a, x, y);
        Int p_div = p / g, a_div = a / g;
        std::map<int, Int> col_t_map, col_j_map;
        for (int r : col_rows_[static_cast<std::size_t>(t)]) col_t_map[r] = get(r, t);
        for (int r : col_rows_[static_cast<std::size_t>(j)]) col_j_map[r] = get(r, j);
        std::map<int, Int> new_t = combine_maps(x, col_t_map, y, col_j_map);
        std::map<int, Int> new_j = combine_maps(-a_div, col_t_map, p_div, col_j_map);
        assign_col(t, col_t_map, col_j_map, new_t);
        assign_col(j, col_t_map, col_j_map, new_j);
        if (transforms_) {
            auto& vt = v_cols_[static_cast<std::size_t>(t)];
            auto& vj = v_cols_[static_cast<std::size_t>(j)];
            std::map<int, Int> nvt = combine_maps(x, vt, y, vj);
            std::map<int, Int> nvj = combine_maps(-a_div, vt, p_div, vj);
            vt = std::move(nvt);
            vj = std::move(nvj);
            // inverse block is [[p_div, a_div], [-y, x]] acting on the rows
            auto& zt = vinv_rows_[static_cast<std::size_t>(t)];
            auto& zj = vinv_rows_[static_cast<std::size_t>(j)];
            std::map<int, Int> nzt = combine_maps(p_div, zt, a_div, zj);
            std::map<int, Int> nzj = combine_maps(-y, zt, x, zj);
            zt = std::move(nzt);
            zj = std::move(nzj);
        }
    }

    void assign_row(int i, std::map<int, Int> row) {
        auto& old = rows_[static_cast<std::size_t>(i)];
        for (const auto& [j, v] : old) col_rows_[static_cast<std::size_t>(j)].erase(i);
        old = std::move(row);
        for (const auto& [j, v] : old) col_rows_[static_cast<std::size_t>(j)].insert(i);
    }

    void assign_col(int j, const std::map<int, Int>& old_t, const std::map<int, Int>& old_j,
                    const std::map<int, Int>& next) {
        for (const auto& [r, v] : old_t) {
            rows_[static_cast<std::size_t>(r)].erase(j);
            col_rows_[static_cast<std::size_t>(j)].erase(r);
        }
        for (const auto& [r, v] : old_j) {
            rows_[static_cast<std::size_t>(r)].erase(j);
            col_rows_[static_cast<std::size_t>(j)].erase(r);
        }
        for (const auto& [r, v] : next) {
            rows_[static_cast<std::size_t>(r)][j] = v;
            col_rows_[static_cast<std::size_t>(j)].insert(r);
        }
    }

    void negate_row(int i) {
        for (auto& [j, v] : rows_[static_cast<std::size_t>(i)]) v = -v;
        if (transforms_) {
            for (auto& [j, v] : u_rows_[static_cast<std::size_t>(i)]) v = -v;
            for (auto& [j, v] : uinv_cols_[static_cast<std::size_t>(i)]) v = -v;
        }
    }

    // Pivot choice: smallest |value| first (keeps quotients small), then
    // smallest Markowitz fill count, then (row, col) for determinism. Moves
    // the pivot to (t, t). False when the active region is zero.
    bool select_pivot(int t) {
        int best_i = -1, best_j = -1;
        Int best_abs = 0;
        long long best_fill = 0;
        for (int i = t; i < m_; ++i) {
            const auto& row = rows_[static_cast<std::size_t>(i)];
            long long row_nnz = static_cast<long long>(row.size());
            for (const auto& [j, v] : row) {
                Int a = abs_int(v);
                long long fill =
                    (row_nnz - 1) *
                    (static_cast<long long>(col_rows_[static_cast<std::size_t>(j)].size()) - 1);
                if (best_i < 0 || a < best_abs || (a == best_abs && fill < best_fill)) {
                    best_i = i;
                    best_j = j;
                    best_abs = a;
                    best_fill = fill;
                }
            }
        }
        if (best_i < 0) return false;
        swap_rows(t, best_i);
        swap_cols(t, best_j);
        return true;
    }

    // Exact-quotient clearing of column t; requires the pivot to divide the
    // column. With row t already cleared this touches nothing outside
    // column t, so it causes no fill.
    void clear_column(int t) {
        std::vector<int> below;
        for (int r : col_rows_[static_cast<std::size_t>(t)])
            if (r > t) below.push_back(r);
        for (int i : below) {
            Int a = get(i, t);
            if (a != 0) row_axpy(i, t, a / get(t, t));
        }
    }

    // Diagonalizes position t by Euclidean ping-pong: clear with symmetric
    // quotients (remainders at most half the pivot), and when a remainder
    // survives, swap it into the pivot slot and go again. The pivot at
    // least halves per bounce, and plain axpy steps keep the transform
    // entries far tamer than 2x2 gcd combines, which inflate the whole
    // pivot row before anything is cleared.
    void reduce_pivot(int t) {
        while (true) {
            const Int p = get(t, t);
            bool restart = false;
            std::vector<int> below;
            for (int r : col_rows_[static_cast<std::size_t>(t)])
                if (r > t) below.push_back(r);
            for (int i : below) {
                Int a = get(i, t);
                if (a == 0) continue;
                Int q = symmetric_quotient(a, p);
                if (q != 0) row_axpy(i, t, q);
                if (get(i, t) != 0) {
                    swap_rows(t, i);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;

            std::vector<int> right;
            for (const auto& [j, v] : rows_[static_cast<std::size_t>(t)])
                if (j > t) right.push_back(j);
            for (int j : right) {
                Int a = get(t, j);
                if (a == 0) continue;
                Int q = symmetric_quotient(a, p);
                if (q != 0) col_axpy(j, t, q);
                if (get(t, j) != 0) {
                    swap_cols(t, j);
                    restart = true;
                    break;
                }
            }
            if (!restart) return;
        }
    }

    // diag(a, b) -> diag(gcd(a, b), lcm(a, b)) on rows/cols (i, j) by
    // unimodular 2x2 work confined to that block.
    void fix_divisibility_pair(int i, int j) {
        row_axpy(i, j, Int(-1));  // a(i, j) := b
        col_gcd_combine(i, j);    // pivot gcd, refills a(j, i) with a multiple
        clear_column(i);
        if (get(i, i) < 0) negate_row(i);
        if (get(j, j) < 0) negate_row(j);
    }

    // The diagonal after elimination need not satisfy d_1 | d_2 | ...; sort
    // the prime-power content with adjacent gcd/lcm passes, bubble style.
    void enforce_divisibility() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < rank_; ++i) {
                if (get(i + 1, i + 1) % get(i, i) != 0) {
                    fix_divisibility_pair(i, i + 1);
                    changed = true;
                }
            }
        }
    }

    int m_;
    int n_;
    std::vector<std::map<int, Int>> rows_;
    std::vector<std::set<int>> col_rows_;
    bool transforms_;
    std::vector<std::map<int, Int>> u_rows_;
    std::vector<std::map<int, Int>> uinv_cols_;
    std::vector<std::map<int, Int>> v_cols_;
    std::vector<std::map<int, Int>> vinv_rows_;
    int rank_ = 0;
};

}  // namespace

SNFResult smith_normal_form(const SparseIntMatrix& A) {
    SnfWorkspace ws(A, /*transforms=*/true);
    ws.run();
    SNFResult result;
    result.U = ws.u_matrix();
    result.D = ws.diagonal_matrix();
    result.V = ws.v_matrix();
    result.U_inverse = ws.u_inverse_matrix();
    result.V_inverse = ws.v_inverse_matrix();
    return result;
}

std::vector<Int> smith_invariant_factors(const SparseIntMatrix& A) {
    SnfWorkspace ws(A, /*transforms=*/false);
    ws.run();
    int k = std::min(A.rows(), A.cols());
    std::vector<Int> diag(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < ws.rank(); ++i) diag[static_cast<std::size_t>(i)] = ws.get(i, i);
    return diag;
}

bool IncrementalRank::add_column(std::map<int, Int> col) {
    for (auto it = col.begin(); it != col.end();)
        it = (it->second == 0) ? col.erase(it) : std::next(it);
    for (const auto& [prow, pcol] : pivots_) {
        auto it = col.find(prow);
        if (it == col.end()) continue;
        const Int c = it->second;
        const Int pv = pcol.at(prow);
        for (auto& [r, v] : col) v *= pv;
        for (const auto& [r, v] : pcol) {
            auto jt = col.find(r);
            if (jt == col.end())
                col[r] = -c * v;
            else
                jt->second -= c * v;
        }
        Int g = 0;
        for (auto it2 = col.begin(); it2 != col.end();) {
            if (it2->second == 0) {
                it2 = col.erase(it2);
            } else {
                g = gcd_int(g, it2->second);
                ++it2;
            }
        }
        if (g > 1)
            for (auto& [r, v] : col) v /= g;
    }
    if (col.empty()) return false;
    int pivot_row = col.begin()->first;
    pivots_.emplace_back(pivot_row, std::move(col));
    return true;
}

int rank_over_q(const SparseIntMatrix& A) {
    IncrementalRank state(A.rows());
    for (auto& col : A.columns()) state.add_column(std::move(col));
    return state.rank();
}

SparseIntMatrix augmented_boundary(const ChainComplex& c, int i) {
    if (i < 0 || i > c.top_dim() + 1)
        throw std::out_of_range("augmented_boundary: degree out of range");
    if (i == 0) {
        // Augmentation to the empty face: the all-ones row.
        SparseIntMatrix aug(1, static_cast<int>(c.cell_count(0)));
        for (int j = 0; j < aug.cols(); ++j) aug.set(0, j, 1);
        return aug;
    }
    if (i == c.top_dim() + 1) return SparseIntMatrix(static_cast<int>(c.cell_count(c.top_dim())), 0);
    return c.boundary(i);
}

long long reduced_betti(const ChainComplex& c, int i) {
    if (i < 0 || i > c.top_dim()) throw std::out_of_range("reduced_betti: dimension out of range");
    long long nullity = c.cell_count(i) - rank_over_q(augmented_boundary(c, i));
    return nullity - rank_over_q(augmented_boundary(c, i + 1));
}

HomologyResult homology(const ChainComplex& c, int i, bool reduced) {
    if (i < 0 || i > c.top_dim())
        throw std::out_of_range("homology: dimension " + std::to_string(i) + " outside [0, " +
                                std::to_string(c.top_dim()) + "]");
    HomologyResult result;
    result.dim = i;
    long long rank_in = (i == 0 && !reduced) ? 0 : rank_over_q(augmented_boundary(c, i));
    long long rank_out = rank_over_q(augmented_boundary(c, i + 1));
    result.betti = (c.cell_count(i) - rank_in) - rank_out;
    if (i + 1 <= c.top_dim())
        for (const auto& d : smith_invariant_factors(c.boundary(i + 1)))
            if (abs_int(d) > 1) result.torsion.push_back(d);
    return result;
}

std::vector<HomologyResult> betti_vector(const ChainComplex& c) {
    std::vector<HomologyResult> results;
    for (int i = 0; i <= c.top_dim(); ++i) results.push_back(homology(c, i, false));
    return results;
}

}  // namespace celltrees
