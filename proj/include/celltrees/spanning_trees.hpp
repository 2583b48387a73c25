#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "celltrees/chain_complex.hpp"
#include "celltrees/homology.hpp"

namespace celltrees {

// A d-spanning tree of a d-complex with reduced beta_{d-1} = 0 is a facet
// set T whose subcomplex (full (d-1)-skeleton plus T) satisfies
//   (a) H_d(T; Z) = 0,
//   (b) |H_{d-1}(T; Z)| < infinity, and
//   (c) f_d(T) = f_d - beta_d.
// Homology is reduced throughout (augmentation in degree 0), which is what
// makes d = 1 connectivity and single-vertex 0-trees come out right.

/// Evidence for each tree condition, evaluated exactly and all of them even
/// after one fails.
struct TreeChecks {
    bool spanning = false;   // T contains the full (d-1)-skeleton
    bool acyclic = false;    // condition (a), via Q-rank of the restricted columns
    bool connected = false;  // condition (b), reduced beta_{d-1}(T) = 0
    std::vector<Int> torsion;  // invariant factors > 1 of H_{d-1}(T)
    bool count = false;        // condition (c)
    long long facet_count = 0;        // f_d(T)
    long long ambient_facets = 0;     // f_d(ambient)
    long long ambient_top_betti = 0;  // beta_d(ambient)
    bool ambient_ok = false;          // precondition beta_{d-1}(ambient) = 0
    long long ambient_lower_betti = 0;
};

struct TreeCertificate {
    int dim = 0;
    FVector ambient_f;
    std::set<std::string> facets;
    TreeChecks checks;

    bool valid() const {
        return checks.spanning && checks.acyclic && checks.connected && checks.count &&
               checks.ambient_ok;
    }
};

/// Evaluates the full certificate for the given facet set. Throws when an id
/// is not a top-dimensional cell. An ambient precondition failure is a
/// recorded verdict, never silently ignored.
TreeCertificate check_tree(const ChainComplex& ambient, const std::set<std::string>& facets);

/// Greedy tree construction: scans facets (lexicographic label order, or a
/// seed-determined shuffle) and keeps each one whose boundary column is
/// Q-independent of those already kept. The result always has exactly
/// f_d - beta_d facets and passes conditions (a) and (c) by construction;
/// (b) holds too but is a theorem, not a construction invariant, so callers
/// wanting evidence should run check_tree. Throws when the ambient
/// precondition beta_{d-1} = 0 fails.
std::set<std::string> build_tree(const ChainComplex& ambient);
std::set<std::string> build_tree(const ChainComplex& ambient, std::uint64_t seed);

/// Alexander duality for trees on the cube/cross pair: given an i-tree of
/// the boundary complex of hypercube(n), returns the duals of the i-cells
/// NOT in the tree, certified as an (n-1-i)-tree of the cross-polytope
/// boundary. Throws when the input fails check_tree or the certified
/// postcondition fails.
std::set<std::string> dual_tree(int n, int i, const std::set<std::string>& cube_tree);

nlohmann::ordered_json certificate_to_json(const TreeCertificate& cert);
nlohmann::ordered_json tree_to_json(const std::set<std::string>& facets);

}  // namespace celltrees
