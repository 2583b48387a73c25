#include "celltrees/builders.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace celltrees {

int CubeFace::dim() const {
    return static_cast<int>(std::count(word.begin(), word.end(), '*'));
}

bool CubeFace::is_top_cell() const {
    return !word.empty() && dim() == static_cast<int>(word.size());
}

int CrossFace::dim() const {
    return static_cast<int>(word.size() - std::count(word.begin(), word.end(), '0')) - 1;
}

int PileCell::dim() const {
    int d = 0;
    for (const auto& a : axes) d += a.interval ? 1 : 0;
    return d;
}

std::string PileCell::label() const {
    std::string s;
    for (std::size_t j = 0; j < axes.size(); ++j) {
        if (j) s += ',';
        s += axes[j].interval ? 'i' : 'v';
        s += std::to_string(axes[j].v);
    }
    return s;
}

PileCell PileCell::parse(const std::string& label) {
    PileCell cell;
    std::stringstream ss(label);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.size() < 2 || (tok[0] != 'v' && tok[0] != 'i'))
            throw std::invalid_argument("PileCell::parse: bad token '" + tok + "'");
        Axis a;
        a.interval = tok[0] == 'i';
        a.v = std::stoi(tok.substr(1));
        cell.axes.push_back(a);
    }
    if (cell.axes.empty()) throw std::invalid_argument("PileCell::parse: empty label");
    return cell;
}

bool cube_face_contains(const CubeFace& outer, const CubeFace& inner) {
    if (outer.word.size() != inner.word.size()) return false;
    for (std::size_t i = 0; i < outer.word.size(); ++i) {
        char o = outer.word[i], in = inner.word[i];
        if (o == '*') continue;      // anything fits under a star
        if (in != o) return false;   // fixed coordinates must agree
    }
    return true;
}

bool cross_face_contains(const CrossFace& outer, const CrossFace& inner) {
    if (outer.word.size() != inner.word.size()) return false;
    for (std::size_t i = 0; i < outer.word.size(); ++i) {
        char in = inner.word[i];
        if (in == '0') continue;
        if (outer.word[i] != in) return false;
    }
    return true;
}

namespace {

// Boundary of a cube-style word: for the j-th free position (1-indexed, left
// to right), emit sign (-1)^(j-1) on the upper closure and the opposite sign
// on the lower one.
template <typename SetLower, typename SetUpper>
std::vector<std::pair<std::string, Int>> cubical_boundary(const std::string& word,
                                                          const std::vector<std::size_t>& free_pos,
                                                          SetLower lower, SetUpper upper) {
    std::vector<std::pair<std::string, Int>> bnd;
    Int sign = 1;
    for (std::size_t p : free_pos) {
        bnd.emplace_back(upper(word, p), sign);
        bnd.emplace_back(lower(word, p), -sign);
        sign = -sign;
    }
    return bnd;
}

}  // namespace

ChainComplex hypercube(int n) {
    if (n < 1) throw std::invalid_argument("hypercube: n must be >= 1");
    std::vector<CellSpec> specs;
    std::string word(static_cast<std::size_t>(n), '0');
    // Enumerate {0,1,*}^n by odometer.
    const char symbols[3] = {'0', '1', '*'};
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
        for (int i = 0; i < n; ++i)
            word[static_cast<std::size_t>(i)] = symbols[digits[static_cast<std::size_t>(i)]];
        CellSpec s;
        s.label = word;
        std::vector<std::size_t> stars;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i] == '*') stars.push_back(i);
        s.dim = static_cast<int>(stars.size());
        s.boundary = cubical_boundary(
            word, stars,
            [](std::string w, std::size_t p) { w[p] = '0'; return w; },
            [](std::string w, std::size_t p) { w[p] = '1'; return w; });
        specs.push_back(std::move(s));

        int i = 0;
        while (i < n && digits[static_cast<std::size_t>(i)] == 2) digits[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
        ++digits[static_cast<std::size_t>(i)];
    }
    return ChainComplex(n, specs);
}

ChainComplex cross_polytope(int n) {
    if (n < 1) throw std::invalid_argument("cross_polytope: n must be >= 1");
    std::vector<CellSpec> specs;
    const char symbols[3] = {'0', '+', '-'};
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    std::string word(static_cast<std::size_t>(n), '0');
    while (true) {
        int i = 0;
        while (i < n && digits[static_cast<std::size_t>(i)] == 2) digits[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
        ++digits[static_cast<std::size_t>(i)];

        for (int j = 0; j < n; ++j)
            word[static_cast<std::size_t>(j)] = symbols[digits[static_cast<std::size_t>(j)]];
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < word.size(); ++j)
            if (word[j] != '0') support.push_back(j);
        CellSpec s;
        s.label = word;
        s.dim = static_cast<int>(support.size()) - 1;
        // Simplicial boundary on the nonzero positions in word order.
        if (s.dim >= 1) {
            Int sign = 1;
            for (std::size_t j : support) {
                std::string face = word;
                face[j] = '0';
                s.boundary.emplace_back(std::move(face), sign);
                sign = -sign;
            }
        }
        specs.push_back(std::move(s));
    }
    return ChainComplex(n - 1, specs);
}

ChainComplex pile_of_cubes(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("pile_of_cubes: no axes");
    for (int N : sizes)
        if (N < 1) throw std::invalid_argument("pile_of_cubes: sizes must be >= 1");
    int n = static_cast<int>(sizes.size());

    // Per axis, the strata are v0, i0, v1, i1, ..., v{N}: 2N+1 of them.
    std::vector<CellSpec> specs;
    std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0..2N_j per axis
    PileCell cell;
    cell.axes.resize(static_cast<std::size_t>(n));
    while (true) {
        std::vector<std::size_t> intervals;
        for (int j = 0; j < n; ++j) {
            int s = state[static_cast<std::size_t>(j)];
            cell.axes[static_cast<std::size_t>(j)].interval = (s % 2 == 1);
            cell.axes[static_cast<std::size_t>(j)].v = s / 2;
            if (s % 2 == 1) intervals.push_back(static_cast<std::size_t>(j));
        }
        CellSpec s;
        s.label = cell.label();
        s.dim = static_cast<int>(intervals.size());
        Int sign = 1;
        for (std::size_t j : intervals) {
            PileCell upper = cell, lower = cell;
            upper.axes[j].interval = false;
            upper.axes[j].v += 1;
            lower.axes[j].interval = false;
            s.boundary.emplace_back(upper.label(), sign);
            s.boundary.emplace_back(lower.label(), -sign);
            sign = -sign;
        }
        specs.push_back(std::move(s));

        int j = 0;
        while (j < n && state[static_cast<std::size_t>(j)] == 2 * sizes[static_cast<std::size_t>(j)])
            state[static_cast<std::size_t>(j++)] = 0;
        if (j == n) break;
        ++state[static_cast<std::size_t>(j)];
    }
    return ChainComplex(n, specs);
}

CrossFace dual_cell(const CubeFace& f) {
    if (f.is_top_cell())
        throw std::invalid_argument("dual_cell: the top cell has no proper dual");
    CrossFace g;
    g.word = f.word;
    for (auto& c : g.word) {
        switch (c) {
            case '*': c = '0'; break;
            case '1': c = '+'; break;
            case '0': c = '-'; break;
            default: throw std::invalid_argument("dual_cell: bad cube word");
        }
    }
    return g;
}

CubeFace dual_cell_inverse(const CrossFace& g) {
    CubeFace f;
    f.word = g.word;
    bool any_nonzero = false;
    for (auto& c : f.word) {
        switch (c) {
            case '0': c = '*'; break;
            case '+': c = '1'; any_nonzero = true; break;
            case '-': c = '0'; any_nonzero = true; break;
            default: throw std::invalid_argument("dual_cell_inverse: bad cross word");
        }
    }
    if (!any_nonzero) throw std::invalid_argument("dual_cell_inverse: zero word is not a face");
    return f;
}

}  // namespace celltrees
