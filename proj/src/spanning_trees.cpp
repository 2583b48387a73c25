#include "celltrees/spanning_trees.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "celltrees/builders.hpp"

namespace celltrees {

namespace {

// The top boundary seen by the tree conditions: boundary(d) for d >= 1, the
// augmentation row for d = 0 (a 0-tree of a point cloud is a single vertex).
SparseIntMatrix top_boundary(const ChainComplex& c) {
    return augmented_boundary(c, c.top_dim() == 0 ? 0 : c.top_dim());
}

long long ambient_lower_reduced_betti(const ChainComplex& c) {
    int d = c.top_dim();
    if (d == 0)
        // reduced beta_{-1} vanishes iff the complex is nonempty
        return c.cell_count(0) > 0 ? 0 : 1;
    return reduced_betti(c, d - 1);
}

// nullity of the augmented boundary one degree below the top; the "cycles"
// side of condition (b). For d = 0 the augmented chain group C_{-1} = Z and
// the map below it is zero, so the nullity is 1.
long long lower_cycle_rank(const ChainComplex& c) {
    int d = c.top_dim();
    if (d == 0) return 1;
    return c.cell_count(d - 1) - rank_over_q(augmented_boundary(c, d - 1));
}

}  // namespace

TreeCertificate check_tree(const ChainComplex& ambient, const std::set<std::string>& facets) {
    const int d = ambient.top_dim();
    std::vector<int> positions;
    for (const auto& id : facets) {
        auto [dim, pos] = ambient.locate(id);  // throws on unknown id
        if (dim != d)
            throw std::invalid_argument("check_tree: '" + id + "' is not a top-dimensional cell");
        positions.push_back(pos);
    }
    std::sort(positions.begin(), positions.end());

    TreeCertificate cert;
    cert.dim = d;
    cert.ambient_f = f_vector(ambient);
    cert.facets = facets;

    SparseIntMatrix full = top_boundary(ambient);
    SparseIntMatrix restricted = full.select_columns(positions);

    // Spanning: the facet subcomplex shares the whole (d-1)-skeleton by
    // construction; the verdict records that the facet ids were admissible.
    cert.checks.spanning = true;

    long long restricted_rank = rank_over_q(restricted);
    cert.checks.acyclic = restricted_rank == static_cast<long long>(facets.size());

    long long cycles = lower_cycle_rank(ambient);
    cert.checks.connected = (cycles - restricted_rank) == 0;
    for (const auto& v : smith_invariant_factors(restricted))
        if (abs_int(v) > 1) cert.checks.torsion.push_back(v);

    cert.checks.facet_count = static_cast<long long>(facets.size());
    cert.checks.ambient_facets = ambient.cell_count(d);
    long long full_rank = rank_over_q(full);
    cert.checks.ambient_top_betti = ambient.cell_count(d) - full_rank;
    cert.checks.count =
        cert.checks.facet_count == cert.checks.ambient_facets - cert.checks.ambient_top_betti;

    cert.checks.ambient_lower_betti = ambient_lower_reduced_betti(ambient);
    cert.checks.ambient_ok = cert.checks.ambient_lower_betti == 0;
    return cert;
}

namespace {

std::set<std::string> build_tree_impl(const ChainComplex& ambient,
                                      const std::vector<int>& order) {
    const int d = ambient.top_dim();
    long long lower_betti = ambient_lower_reduced_betti(ambient);
    if (lower_betti != 0) {
        std::ostringstream msg;
        msg << "build_tree: ambient reduced beta_" << d - 1 << " = " << lower_betti
            << ", spanning trees require 0";
        throw std::invalid_argument(msg.str());
    }

    SparseIntMatrix full = top_boundary(ambient);
    auto cols = full.columns();
    IncrementalRank state(full.rows());
    std::set<std::string> tree;
    for (int j : order)
        if (state.add_column(cols[static_cast<std::size_t>(j)]))
            tree.insert(ambient.cells(d)[static_cast<std::size_t>(j)].id);
    return tree;
}

}  // namespace

std::set<std::string> build_tree(const ChainComplex& ambient) {
    std::vector<int> order(static_cast<std::size_t>(ambient.cell_count(ambient.top_dim())));
    std::iota(order.begin(), order.end(), 0);  // cells are already label-sorted
    return build_tree_impl(ambient, order);
}

std::set<std::string> build_tree(const ChainComplex& ambient, std::uint64_t seed) {
    std::vector<int> order(static_cast<std::size_t>(ambient.cell_count(ambient.top_dim())));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return build_tree_impl(ambient, order);
}

std::set<std::string> dual_tree(int n, int i, const std::set<std::string>& cube_tree) {
    if (n < 2 || i < 0 || i > n - 1)
        throw std::invalid_argument("dual_tree: need n >= 2 and 0 <= i <= n-1");
    ChainComplex cube_skel = skeleton(hypercube(n), i);
    TreeCertificate input_cert = check_tree(cube_skel, cube_tree);
    if (!input_cert.valid())
        throw std::invalid_argument("dual_tree: input is not an i-tree of the cube skeleton");

    std::set<std::string> duals;
    for (const auto& cell : cube_skel.cells(i))
        if (!cube_tree.count(cell.id)) duals.insert(dual_cell(CubeFace{cell.label}).word);

    ChainComplex cross_skel = skeleton(cross_polytope(n), n - 1 - i);
    TreeCertificate out_cert = check_tree(cross_skel, duals);
    if (!out_cert.valid())
        throw std::logic_error("dual_tree: dual complement failed certification");
    return duals;
}

nlohmann::ordered_json certificate_to_json(const TreeCertificate& cert) {
    nlohmann::ordered_json j;
    j["dim"] = cert.dim;
    j["ambient_f_vector"] = cert.ambient_f.counts;
    j["facets"] = tree_to_json(cert.facets);
    nlohmann::ordered_json checks;
    checks["spanning"] = cert.checks.spanning;
    checks["acyclic"] = cert.checks.acyclic;
    checks["connected_up_to_torsion"] = cert.checks.connected;
    nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
    for (const auto& t : cert.checks.torsion) torsion.push_back(t.str());
    checks["torsion"] = torsion;
    checks["count"] = cert.checks.count;
    checks["facet_count"] = cert.checks.facet_count;
    checks["ambient_facets"] = cert.checks.ambient_facets;
    checks["ambient_top_betti"] = cert.checks.ambient_top_betti;
    checks["ambient_precondition_ok"] = cert.checks.ambient_ok;
    checks["ambient_lower_betti"] = cert.checks.ambient_lower_betti;
    j["checks"] = checks;
    j["valid"] = cert.valid();
    return j;
}

nlohmann::ordered_json tree_to_json(const std::set<std::string>& facets) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : facets) arr.push_back(f);
    return arr;
}

}  // namespace celltrees
