#include "celltrees/chain_complex.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace celltrees {

Int SparseIntMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Int(0) : it->second;
}

void SparseIntMatrix::set(int r, int c, Int v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseIntMatrix::set: index out of bounds");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void SparseIntMatrix::add(int r, int c, const Int& v) {
    if (v == 0) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        set(r, c, v);
    } else {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

std::vector<std::map<int, Int>> SparseIntMatrix::columns() const {
    std::vector<std::map<int, Int>> cols(static_cast<std::size_t>(cols_));
    for (const auto& [rc, v] : entries_) cols[static_cast<std::size_t>(rc.second)][rc.first] = v;
    return cols;
}

std::map<int, Int> SparseIntMatrix::column(int c) const {
    std::map<int, Int> col;
    for (const auto& [rc, v] : entries_)
        if (rc.second == c) col[rc.first] = v;
    return col;
}

SparseIntMatrix SparseIntMatrix::select_columns(const std::vector<int>& cols) const {
    SparseIntMatrix out(rows_, static_cast<int>(cols.size()));
    auto by_col = columns();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int src = cols[j];
        if (src < 0 || src >= cols_)
            throw std::out_of_range("select_columns: column index out of bounds");
        for (const auto& [r, v] : by_col[static_cast<std::size_t>(src)])
            out.set(r, static_cast<int>(j), v);
    }
    return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix out(cols_, rows_);
    for (const auto& [rc, v] : entries_) out.set(rc.second, rc.first, v);
    return out;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: shape mismatch");
    SparseIntMatrix out(a.rows(), b.cols());
    auto b_rows = b.transpose().columns();  // b_rows[r] = row r of b
    for (const auto& [rc, v] : a.entries()) {
        const auto& row = b_rows[static_cast<std::size_t>(rc.second)];
        for (const auto& [c, w] : row) out.add(rc.first, c, v * w);
    }
    return out;
}

ChainComplex::ChainComplex(int top_dim, const std::vector<CellSpec>& specs) : top_dim_(top_dim) {
    if (top_dim < 0) throw std::invalid_argument("ChainComplex: negative top dimension");
    cells_.resize(static_cast<std::size_t>(top_dim) + 1);
    for (const auto& s : specs) {
        if (s.dim < 0 || s.dim > top_dim)
            throw std::invalid_argument("ChainComplex: cell '" + s.label + "' has dimension " +
                                        std::to_string(s.dim) + " outside [0, " +
                                        std::to_string(top_dim) + "]");
        Cell cell;
        cell.dim = s.dim;
        cell.label = s.label;
        cell.id = s.id.empty() ? s.label : s.id;
        cells_[static_cast<std::size_t>(s.dim)].push_back(std::move(cell));
    }
    for (auto& layer : cells_)
        std::sort(layer.begin(), layer.end(), [](const Cell& a, const Cell& b) {
            return std::tie(a.label, a.id) < std::tie(b.label, b.id);
        });
    rebuild_index();
    if (index_.size() != specs.size())
        throw std::invalid_argument("ChainComplex: duplicate cell ids");

    boundary_.resize(static_cast<std::size_t>(top_dim) + 1);
    for (int i = 1; i <= top_dim; ++i)
        boundary_[static_cast<std::size_t>(i)] =
            SparseIntMatrix(static_cast<int>(cells_[static_cast<std::size_t>(i - 1)].size()),
                            static_cast<int>(cells_[static_cast<std::size_t>(i)].size()));
    for (const auto& s : specs) {
        const std::string& id = s.id.empty() ? s.label : s.id;
        auto [dim, col] = index_.at(id);
        if (dim == 0) {
            if (!s.boundary.empty())
                throw std::invalid_argument("ChainComplex: 0-cell '" + id + "' has a boundary");
            continue;
        }
        for (const auto& [face_id, coeff] : s.boundary) {
            auto it = index_.find(face_id);
            if (it == index_.end())
                throw std::invalid_argument("ChainComplex: boundary of '" + id +
                                            "' references unknown cell '" + face_id + "'");
            auto [fdim, row] = it->second;
            if (fdim != dim - 1)
                throw std::invalid_argument("ChainComplex: boundary of '" + id + "' references '" +
                                            face_id + "' of dimension " + std::to_string(fdim) +
                                            ", expected " + std::to_string(dim - 1));
            boundary_[static_cast<std::size_t>(dim)].add(row, col, coeff);
        }
    }
}

void ChainComplex::rebuild_index() {
    index_.clear();
    for (int d = 0; d <= top_dim_; ++d) {
        const auto& layer = cells_[static_cast<std::size_t>(d)];
        for (std::size_t i = 0; i < layer.size(); ++i)
            index_[layer[i].id] = {d, static_cast<int>(i)};
    }
}

long long ChainComplex::cell_count(int dim) const {
    if (dim < 0 || dim > top_dim_) return 0;
    return static_cast<long long>(cells_[static_cast<std::size_t>(dim)].size());
}

long long ChainComplex::total_cell_count() const {
    long long total = 0;
    for (int d = 0; d <= top_dim_; ++d) total += cell_count(d);
    return total;
}

const SparseIntMatrix& ChainComplex::boundary(int i) const {
    if (i < 1 || i > top_dim_)
        throw std::out_of_range("ChainComplex::boundary: degree " + std::to_string(i) +
                                " outside [1, " + std::to_string(top_dim_) + "]");
    return boundary_[static_cast<std::size_t>(i)];
}

const Cell& ChainComplex::cell(const std::string& id) const {
    auto [dim, pos] = locate(id);
    return cells_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(pos)];
}

std::pair<int, int> ChainComplex::locate(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::invalid_argument("ChainComplex: no cell with id '" + id + "'");
    return it->second;
}

bool ChainComplex::operator==(const ChainComplex& other) const {
    if (top_dim_ != other.top_dim_) return false;
    for (int d = 0; d <= top_dim_; ++d) {
        const auto& a = cells_[static_cast<std::size_t>(d)];
        const auto& b = other.cells_[static_cast<std::size_t>(d)];
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].id != b[i].id || a[i].label != b[i].label) return false;
    }
    for (int i = 1; i <= top_dim_; ++i)
        if (boundary_[static_cast<std::size_t>(i)] != other.boundary_[static_cast<std::size_t>(i)])
            return false;
    return true;
}

ValidationReport validate_complex(const ChainComplex& c) {
    ValidationReport report;
    for (int d = 0; d <= c.top_dim(); ++d) {
        const auto& layer = c.cells(d);
        for (const auto& cell : layer)
            if (cell.dim != d)
                report.violations.push_back(
                    {"dim-mismatch", d, "cell '" + cell.id + "' stored under wrong dimension"});
        for (std::size_t i = 1; i < layer.size(); ++i)
            if (std::tie(layer[i - 1].label, layer[i - 1].id) >
                std::tie(layer[i].label, layer[i].id))
                report.violations.push_back(
                    {"cell-order", d, "cells not in lexicographic label order"});
    }
    for (int i = 1; i <= c.top_dim(); ++i) {
        const auto& m = c.boundary(i);
        if (m.rows() != c.cell_count(i - 1) || m.cols() != c.cell_count(i)) {
            std::ostringstream msg;
            msg << "boundary(" << i << ") is " << m.rows() << "x" << m.cols() << ", expected "
                << c.cell_count(i - 1) << "x" << c.cell_count(i);
            report.violations.push_back({"shape", i, msg.str()});
        }
        for (const auto& [rc, v] : m.entries()) {
            if (v == 0)
                report.violations.push_back({"stored-zero", i, "explicit zero entry stored"});
            if (rc.first < 0 || rc.first >= m.rows() || rc.second < 0 || rc.second >= m.cols())
                report.violations.push_back({"index-bounds", i, "entry outside matrix bounds"});
        }
    }
    for (int i = 2; i <= c.top_dim(); ++i) {
        SparseIntMatrix prod = c.boundary(i - 1) * c.boundary(i);
        if (!prod.is_zero_matrix()) {
            std::ostringstream msg;
            msg << "boundary(" << i - 1 << ") * boundary(" << i << ") has "
                << prod.nonzero_count() << " nonzero entries";
            report.violations.push_back({"dd-nonzero", i, msg.str()});
        }
    }
    return report;
}

FVector f_vector(const ChainComplex& c) {
    FVector f;
    for (int d = 0; d <= c.top_dim(); ++d) f.counts.push_back(c.cell_count(d));
    return f;
}

long long euler_characteristic(const ChainComplex& c) {
    long long chi = 0;
    int sign = 1;
    for (int d = 0; d <= c.top_dim(); ++d, sign = -sign) chi += sign * c.cell_count(d);
    return chi;
}

ChainComplex skeleton(const ChainComplex& c, int k) {
    if (k < 0 || k > c.top_dim())
        throw std::out_of_range("skeleton: k = " + std::to_string(k) + " outside [0, " +
                                std::to_string(c.top_dim()) + "]");
    ChainComplex out;
    out.top_dim_ = k;
    out.cells_.assign(c.cells_.begin(), c.cells_.begin() + k + 1);
    out.boundary_.assign(c.boundary_.begin(), c.boundary_.begin() + k + 1);
    out.rebuild_index();
    return out;
}

ChainComplex facet_subcomplex(const ChainComplex& c, const std::set<std::string>& facet_ids) {
    int d = c.top_dim();
    std::vector<int> keep;
    for (const auto& id : facet_ids) {
        auto [dim, pos] = c.locate(id);  // throws on unknown id
        if (dim != d)
            throw std::invalid_argument("facet_subcomplex: '" + id + "' has dimension " +
                                        std::to_string(dim) + ", not " + std::to_string(d));
        keep.push_back(pos);
    }
    if (keep.empty()) return d == 0 ? ChainComplex(0, {}) : skeleton(c, d - 1);
    std::sort(keep.begin(), keep.end());

    ChainComplex out;
    out.top_dim_ = d;
    out.cells_.assign(c.cells_.begin(), c.cells_.begin() + d);
    out.boundary_.assign(c.boundary_.begin(), c.boundary_.begin() + d);
    std::vector<Cell> top;
    for (int pos : keep) top.push_back(c.cells(d)[static_cast<std::size_t>(pos)]);
    out.cells_.push_back(std::move(top));
    if (d >= 1)
        out.boundary_.push_back(c.boundary(d).select_columns(keep));
    else
        out.boundary_.emplace_back();
    out.rebuild_index();
    return out;
}

namespace {

// 2^53: the largest magnitude serialized as a plain JSON number.
const Int kJsonNumberLimit = Int(1) << 53;

nlohmann::ordered_json coeff_to_json(const Int& v) {
    if (abs_int(v) <= kJsonNumberLimit) return static_cast<std::int64_t>(v);
    return v.str();
}

Int coeff_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("complex_from_json: coefficient must be integer or decimal string");
}

}  // namespace

nlohmann::ordered_json complex_to_json(const ChainComplex& c) {
    nlohmann::ordered_json j;
    j["top_dim"] = c.top_dim();
    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    for (int d = 0; d <= c.top_dim(); ++d) {
        const auto& layer = c.cells(d);
        for (std::size_t i = 0; i < layer.size(); ++i) {
            nlohmann::ordered_json jc;
            jc["id"] = layer[i].id;
            jc["dim"] = d;
            jc["label"] = layer[i].label;
            auto& bnd = jc["boundary"] = nlohmann::ordered_json::array();
            if (d >= 1) {
                auto col = c.boundary(d).column(static_cast<int>(i));
                for (const auto& [row, v] : col) {
                    const Cell& face = c.cells(d - 1)[static_cast<std::size_t>(row)];
                    bnd.push_back({face.id, coeff_to_json(v)});
                }
            }
            cells.push_back(std::move(jc));
        }
    }
    return j;
}

ChainComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("top_dim") || !j.contains("cells"))
        throw std::invalid_argument("complex_from_json: expected object with top_dim and cells");
    int top_dim = j.at("top_dim").get<int>();
    std::vector<CellSpec> specs;
    for (const auto& jc : j.at("cells")) {
        CellSpec s;
        s.id = jc.at("id").get<std::string>();
        s.dim = jc.at("dim").get<int>();
        s.label = jc.at("label").get<std::string>();
        for (const auto& pair : jc.at("boundary")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument(
                    "complex_from_json: boundary entries must be [id, coeff] pairs (cell '" +
                    s.id + "')");
            s.boundary.emplace_back(pair[0].get<std::string>(), coeff_from_json(pair[1]));
        }
        specs.push_back(std::move(s));
    }
    return ChainComplex(top_dim, specs);
}

void complex_to_file(const ChainComplex& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("complex_to_file: cannot open '" + path + "'");
    out << complex_to_json(c).dump(2) << "\n";
}

ChainComplex complex_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("complex_from_file: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("complex_from_file: " + path + ": " + e.what());
    }
    return complex_from_json(j);
}

}  // namespace celltrees
