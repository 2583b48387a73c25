#include "celltrees/formulas.hpp"

#include <stdexcept>

#include "celltrees/builders.hpp"
#include "celltrees/spanning_trees.hpp"

namespace celltrees {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Int bw_betti(int n, int k) {
    if (k < 3 || k > n) throw std::invalid_argument("bw_betti: requires 3 <= k <= n");
    Int sum = 0;
    for (int i = k; i <= n; ++i) sum += binomial(n, i) * binomial(i - 1, k - 1);
    return sum;
}

Int tree_size_closed_form(int n, int k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("tree_size_closed_form: requires 0 <= k <= n");
    if (k == 0) return 1;
    Int sum = 0;
    for (int i = k; i <= n; ++i) sum += binomial(n, i) * binomial(i - 1, k - 1);
    return sum;
}

EquinumerousReport equinumerous_quantities(int n, int k) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("equinumerous_quantities: requires 1 <= k < n");
    EquinumerousReport report;
    report.n = n;
    report.k = k;

    ChainComplex cube = hypercube(n);
    ChainComplex cross = cross_polytope(n);

    Int cube_tree_k = Int(build_tree(skeleton(cube, k)).size());
    Int cube_tree_km1 = Int(build_tree(skeleton(cube, k - 1)).size());
    Int cross_tree_nmk = Int(build_tree(skeleton(cross, n - k)).size());
    Int cross_tree_low = Int(build_tree(skeleton(cross, n - k - 1)).size());

    report.q1 = cube_tree_k;
    report.q2 = cross_tree_nmk;
    report.q3 = Int(cube.cell_count(k - 1)) - cube_tree_km1;
    report.q4 = Int(cross.cell_count(n - k - 1)) - cross_tree_low;
    report.all_equal =
        report.q1 == report.q2 && report.q2 == report.q3 && report.q3 == report.q4;

    Int lower_cells = binomial(n, k - 1) * (Int(1) << (n - k + 1));
    report.cube_relation_holds = report.q1 == lower_cells - cube_tree_km1;
    return report;
}

PileChiReport pile_chi_identity(const std::vector<int>& sizes, int k) {
    int n = static_cast<int>(sizes.size());
    if (k < 1 || k > n) throw std::invalid_argument("pile_chi_identity: requires 1 <= k <= n");
    for (int N : sizes)
        if (N < 1) throw std::invalid_argument("pile_chi_identity: sizes must be >= 1");

    PileChiReport report;
    report.lhs = euler_characteristic(skeleton(pile_of_cubes(sizes), k - 1));

    // sum over |I| = l of prod_{i in I} N_i/(N_i+1), accumulated as the
    // coefficient sequence of prod_j (1 + x * N_j/(N_j+1)).
    std::vector<Rat> elementary{Rat(1)};
    for (int N : sizes) {
        Rat w(N, N + 1);
        elementary.push_back(Rat(0));
        for (std::size_t l = elementary.size() - 1; l >= 1; --l)
            elementary[l] += elementary[l - 1] * w;
    }
    Rat inner = 0;
    Rat sign = 1;
    for (int l = 0; l <= k - 1; ++l, sign = -sign) inner += sign * elementary[static_cast<std::size_t>(l)];
    Rat rhs = inner;
    for (int N : sizes) rhs *= N + 1;
    if (denominator(rhs) != 1)
        throw std::logic_error("pile_chi_identity: right-hand side is not an integer");
    report.rhs = numerator(rhs);

    // lhs = 1 + (-1)^(k-1) beta
    Int beta = Int(report.lhs) - 1;
    if (k % 2 == 0) beta = -beta;
    report.beta = beta;
    report.complement_interpretation = k >= 3;
    return report;
}

ResolutionCellDim resolution_added_cell_dim(int n, int k, int l) {
    if (l < 2 || k < 3 || n < k)
        throw std::invalid_argument("resolution_added_cell_dim: requires l >= 2, k >= 3, n >= k");
    ResolutionCellDim out;
    out.dim = n - l * (k - 1) + (l - 1);
    out.multiplicity_bound = n / k;
    out.vacuous = l > out.multiplicity_bound;
    out.paper_bound_holds = out.dim <= n - k - 2;
    out.hyperplane_dim = (n - 1) - l * (k - 1) + (l - 1);
    out.hyperplane_bound_holds = out.hyperplane_dim <= n - k - 1;
    return out;
}

}  // namespace celltrees
