#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "celltrees/ints.hpp"

namespace celltrees {

/// Finite offset sets A_1..A_n of exact rationals defining a comb no-k-equal
/// arrangement. Only the cardinalities reach the topology (via the pile of
/// cubes); the values matter solely for the genericity hypothesis.
struct CombConfig {
    std::vector<std::vector<Rat>> sets;
    int k = 3;

    /// Throws unless every A_j is nonempty with distinct elements and
    /// n >= k >= 3.
    void validate() const;
    int axes() const { return static_cast<int>(sets.size()); }
};

/// One pair per axis with a common difference: x - x_prime = d on k
/// pairwise-distinct axes.
struct DependenceWitness {
    Rat difference;
    struct Pair {
        int axis = 0;  // 0-based
        Rat x;
        Rat x_prime;
    };
    std::vector<Pair> pairs;
};

/// Re-validates a witness against the config: pairs drawn from the named
/// sets, axes pairwise distinct, all differences equal and nonzero, and k of
/// them.
bool witness_validates(const CombConfig& cfg, const DependenceWitness& w);

/// Finds a nonzero rational realized as an in-set difference on at least k
/// distinct axes, by counting axes per canonical (positive) difference.
/// Pairs are unordered, so orienting them positive loses nothing.
std::optional<DependenceWitness> detect_k_dependence(const CombConfig& cfg);

/// Rejection-samples integer-valued offset sets of the given cardinalities
/// until detect_k_dependence finds nothing. Deterministic per seed; an
/// iteration cap guards the (near-impossible) nonterminating case.
CombConfig random_generic_comb(const std::vector<int>& sizes, int k, std::uint64_t seed);

/// Pile sizes N_j = |A_j| per axis. All-singleton configs give (1,...,1),
/// the hypercube.
std::vector<int> comb_to_pile(const CombConfig& cfg);

/// Thrown by verify_comb_theorem when the genericity hypothesis fails; the
/// offending witness rides along.
class KDependenceError : public std::runtime_error {
public:
    KDependenceError(std::string msg, DependenceWitness w)
        : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
    DependenceWitness witness;
};

/// The verification chain for a generic comb: the three routes to the rank
/// of H_{k-2} of the complement, each computed independently on the pile of
/// cubes.
struct CombTheoremReport {
    std::vector<int> sizes;
    int k = 0;
    Int tree_size;       // facets of a greedy k-tree of the k-skeleton
    Int skeleton_betti;  // beta_{k-1} of the (k-1)-skeleton, by homology
    Int chi_beta;        // beta solved from the Euler-characteristic identity
    bool all_equal = false;
    Int common_value;  // the asserted rank of H_{k-2} of the complement
};

/// Throws KDependenceError when the config has a k-dependence.
CombTheoremReport verify_comb_theorem(const CombConfig& cfg);

// CLI set syntax: semicolon-separated axes, comma-separated rationals,
// e.g. "0,1;0,1/2;3".
CombConfig parse_comb_sets(const std::string& text, int k);
nlohmann::ordered_json witness_to_json(const DependenceWitness& w);
nlohmann::ordered_json comb_report_to_json(const CombTheoremReport& r);

std::string rat_to_string(const Rat& r);

}  // namespace celltrees
