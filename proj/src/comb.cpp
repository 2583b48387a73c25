#include "celltrees/comb.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "celltrees/builders.hpp"
#include "celltrees/formulas.hpp"
#include "celltrees/homology.hpp"
#include "celltrees/spanning_trees.hpp"

namespace celltrees {

void CombConfig::validate() const {
    // k >= 2 suffices for dependence detection; the theorem chain checks
    // its own k >= 3 hypothesis.
    if (k < 2) throw std::invalid_argument("CombConfig: k must be >= 2");
    if (axes() < k)
        throw std::invalid_argument("CombConfig: needs at least k = " + std::to_string(k) +
                                    " axes, got " + std::to_string(axes()));
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (sets[j].empty())
            throw std::invalid_argument("CombConfig: A_" + std::to_string(j + 1) + " is empty");
        std::set<Rat> distinct(sets[j].begin(), sets[j].end());
        if (distinct.size() != sets[j].size())
            throw std::invalid_argument("CombConfig: A_" + std::to_string(j + 1) +
                                        " has repeated elements");
    }
}

bool witness_validates(const CombConfig& cfg, const DependenceWitness& w) {
    if (static_cast<int>(w.pairs.size()) != cfg.k) return false;
    if (w.difference == 0) return false;
    std::set<int> axes;
    for (const auto& p : w.pairs) {
        if (p.axis < 0 || p.axis >= cfg.axes()) return false;
        if (!axes.insert(p.axis).second) return false;  // axes must be distinct
        const auto& set = cfg.sets[static_cast<std::size_t>(p.axis)];
        if (std::find(set.begin(), set.end(), p.x) == set.end()) return false;
        if (std::find(set.begin(), set.end(), p.x_prime) == set.end()) return false;
        if (p.x - p.x_prime != w.difference) return false;
    }
    return true;
}

std::optional<DependenceWitness> detect_k_dependence(const CombConfig& cfg) {
    cfg.validate();
    // Canonical positive differences per axis; a difference d and its
    // negation -d name the same unordered pair, so one orientation suffices.
    std::map<Rat, std::vector<DependenceWitness::Pair>> first_pair_by_axis;
    std::map<Rat, std::set<int>> axes_by_diff;
    for (int j = 0; j < cfg.axes(); ++j) {
        const auto& set = cfg.sets[static_cast<std::size_t>(j)];
        for (std::size_t a = 0; a < set.size(); ++a) {
            for (std::size_t b = 0; b < set.size(); ++b) {
                if (a == b) continue;
                Rat d = set[a] - set[b];
                if (d <= 0) continue;
                if (axes_by_diff[d].insert(j).second)
                    first_pair_by_axis[d].push_back({j, set[a], set[b]});
            }
        }
    }
    for (const auto& [d, axes] : axes_by_diff) {
        if (static_cast<int>(axes.size()) < cfg.k) continue;
        DependenceWitness w;
        w.difference = d;
        const auto& pairs = first_pair_by_axis[d];
        w.pairs.assign(pairs.begin(), pairs.begin() + cfg.k);
        return w;
    }
    return std::nullopt;
}

CombConfig random_generic_comb(const std::vector<int>& sizes, int k, std::uint64_t seed) {
    if (static_cast<int>(sizes.size()) < k)
        throw std::invalid_argument("random_generic_comb: needs at least k axes");
    std::mt19937_64 rng(seed);
    // Large integer range: collisions of differences across k axes are
    // vanishingly rare, so rejection terminates almost immediately.
    std::uniform_int_distribution<long long> draw(0, (1LL << 40) - 1);
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        CombConfig cfg;
        cfg.k = k;
        for (int n : sizes) {
            std::set<long long> values;
            while (static_cast<int>(values.size()) < n) values.insert(draw(rng));
            std::vector<Rat> axis;
            for (long long v : values) axis.emplace_back(v);
            cfg.sets.push_back(std::move(axis));
        }
        if (!detect_k_dependence(cfg)) return cfg;
    }
    throw std::runtime_error("random_generic_comb: iteration cap reached without a generic draw");
}

std::vector<int> comb_to_pile(const CombConfig& cfg) {
    cfg.validate();
    std::vector<int> sizes;
    for (const auto& set : cfg.sets) sizes.push_back(static_cast<int>(set.size()));
    return sizes;
}

CombTheoremReport verify_comb_theorem(const CombConfig& cfg) {
    cfg.validate();
    if (cfg.k < 3) throw std::invalid_argument("verify_comb_theorem: requires k >= 3");
    if (auto witness = detect_k_dependence(cfg))
        throw KDependenceError("verify_comb_theorem: config has a k-dependence", *witness);

    CombTheoremReport report;
    report.sizes = comb_to_pile(cfg);
    report.k = cfg.k;

    ChainComplex pile = pile_of_cubes(report.sizes);
    report.tree_size = Int(build_tree(skeleton(pile, cfg.k)).size());
    report.skeleton_betti = Int(reduced_betti(skeleton(pile, cfg.k - 1), cfg.k - 1));
    report.chi_beta = pile_chi_identity(report.sizes, cfg.k).beta;
    report.all_equal =
        report.tree_size == report.skeleton_betti && report.skeleton_betti == report.chi_beta;
    report.common_value = report.tree_size;
    return report;
}

CombConfig parse_comb_sets(const std::string& text, int k) {
    CombConfig cfg;
    cfg.k = k;
    std::stringstream axes(text);
    std::string axis;
    while (std::getline(axes, axis, ';')) {
        std::vector<Rat> values;
        std::stringstream items(axis);
        std::string item;
        while (std::getline(items, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
            if (item.empty()) throw std::invalid_argument("parse_comb_sets: empty entry");
            auto slash = item.find('/');
            try {
                if (slash == std::string::npos) {
                    values.emplace_back(Int(item));
                } else {
                    Int num(item.substr(0, slash));
                    Int den(item.substr(slash + 1));
                    if (den == 0) throw std::invalid_argument("zero denominator");
                    values.emplace_back(num, den);
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_comb_sets: bad rational '" + item + "'");
            }
        }
        if (values.empty()) throw std::invalid_argument("parse_comb_sets: empty axis");
        cfg.sets.push_back(std::move(values));
    }
    cfg.validate();
    return cfg;
}

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

nlohmann::ordered_json witness_to_json(const DependenceWitness& w) {
    nlohmann::ordered_json j;
    j["difference"] = rat_to_string(w.difference);
    auto& pairs = j["pairs"] = nlohmann::ordered_json::array();
    for (const auto& p : w.pairs)
        pairs.push_back({{"axis", p.axis + 1},
                         {"x", rat_to_string(p.x)},
                         {"x_prime", rat_to_string(p.x_prime)}});
    return j;
}

nlohmann::ordered_json comb_report_to_json(const CombTheoremReport& r) {
    nlohmann::ordered_json j;
    j["sizes"] = r.sizes;
    j["k"] = r.k;
    j["tree_size"] = r.tree_size.str();
    j["skeleton_betti"] = r.skeleton_betti.str();
    j["chi_beta"] = r.chi_beta.str();
    j["all_equal"] = r.all_equal;
    j["complement_homology_rank"] = r.common_value.str();
    return j;
}

}  // namespace celltrees
