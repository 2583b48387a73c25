#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "celltrees/ints.hpp"

namespace celltrees {

/// Resource caps for a verification cell. Exceeding a cap produces an
/// explicit "skipped" row with whatever quantities were already computed,
/// never a silent omission.
struct VerifyOptions {
    long long cell_cap = 200000;                       // max cells per complex
    std::chrono::milliseconds time_cap{10 * 60 * 1000};  // wall clock per cell
    int workers = 0;  // sweep parallelism; 0 = CELLTREE_WORKERS env or hardware
};

/// The five independently computed routes to the same integer, for one
/// (n, k):
///   tree_size       greedy k-tree of the k-skeleton of the n-cube
///   closed_form     the binomial sum
///   skeleton_betti  beta_{k-1} of the (k-1)-skeleton of the cube
///   dual_betti      beta_{n-k-1} of the (n-k-1)-skeleton of the cross
///                   polytope boundary (absent when k = n)
///   bw              the Bjorner-Welker value
/// Missing optionals on a skipped row mean "not computed", recorded in
/// `status`.
struct Theorem1Report {
    int n = 0;
    int k = 0;
    std::optional<Int> tree_size;
    std::optional<Int> closed_form;
    std::optional<Int> skeleton_betti;
    std::optional<Int> dual_betti;
    std::optional<Int> bw;
    bool all_equal = false;  // over the quantities present
    std::string status = "ok";
    double elapsed_ms = 0.0;
};

/// Requires 3 <= k <= n.
Theorem1Report verify_theorem1(int n, int k, const VerifyOptions& opts = {});

/// One report per 3 <= k_min <= k <= n <= n_max, ordered by (n, k). Cells
/// run concurrently up to the worker count; ordering is deterministic
/// regardless of completion order.
std::vector<Theorem1Report> sweep(int n_max, int k_min = 3, const VerifyOptions& opts = {});

bool sweep_all_equal(const std::vector<Theorem1Report>& reports);

// Serialization. Timing is opt-in so that identical invocations produce
// byte-identical output; the CSV header is stable either way:
//   n,k,tree_size,closed_form,skeleton_betti,dual_betti,bw,all_equal,status,elapsed_ms
nlohmann::ordered_json report_to_json(const Theorem1Report& r, bool include_timing = false);
std::string reports_to_csv(const std::vector<Theorem1Report>& reports, bool include_timing = false);

}  // namespace celltrees
