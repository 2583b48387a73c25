#include "celltrees/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "celltrees/builders.hpp"
#include "celltrees/formulas.hpp"
#include "celltrees/homology.hpp"
#include "celltrees/spanning_trees.hpp"

namespace celltrees {

namespace {

long long pow3(int n) {
    long long p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

using Clock = std::chrono::steady_clock;

bool over_deadline(Clock::time_point start, const VerifyOptions& opts) {
    return Clock::now() - start >= opts.time_cap;
}

int resolve_workers(const VerifyOptions& opts) {
    if (opts.workers > 0) return opts.workers;
    if (const char* env = std::getenv("CELLTREE_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

Theorem1Report verify_theorem1(int n, int k, const VerifyOptions& opts) {
    if (k < 3 || k > n) throw std::invalid_argument("verify_theorem1: requires 3 <= k <= n");
    Theorem1Report report;
    report.n = n;
    report.k = k;
    auto start = Clock::now();

    report.closed_form = tree_size_closed_form(n, k);
    report.bw = bw_betti(n, k);

    // The cube and cross complexes have 3^n and 3^n - 1 cells.
    if (pow3(n) > opts.cell_cap) {
        report.status = "skipped: cell cap";
    } else {
        ChainComplex cube = hypercube(n);
        report.tree_size = Int(build_tree(skeleton(cube, k)).size());
        if (over_deadline(start, opts)) {
            report.status = "skipped: time cap";
        } else {
            report.skeleton_betti = Int(reduced_betti(skeleton(cube, k - 1), k - 1));
            if (over_deadline(start, opts)) {
                report.status = "skipped: time cap";
            } else if (k < n) {
                ChainComplex cross_skel = skeleton(cross_polytope(n), n - k - 1);
                report.dual_betti = Int(reduced_betti(cross_skel, n - k - 1));
            }
        }
    }

    bool equal = true;
    const Int& reference = *report.closed_form;
    for (const auto* q : {&report.tree_size, &report.skeleton_betti, &report.dual_betti, &report.bw})
        if (q->has_value() && **q != reference) equal = false;
    report.all_equal = equal;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
}

std::vector<Theorem1Report> sweep(int n_max, int k_min, const VerifyOptions& opts) {
    if (n_max < 3) throw std::invalid_argument("sweep: requires n_max >= 3");
    if (k_min < 3) throw std::invalid_argument("sweep: requires k_min >= 3");
    std::vector<std::pair<int, int>> cells;
    for (int n = k_min; n <= n_max; ++n)
        for (int k = k_min; k <= n; ++k) cells.emplace_back(n, k);

    std::vector<Theorem1Report> reports(cells.size());
    std::atomic<std::size_t> next{0};
    int workers = std::min<int>(resolve_workers(opts), static_cast<int>(cells.size()));
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
            reports[i] = verify_theorem1(cells[i].first, cells[i].second, opts);
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

bool sweep_all_equal(const std::vector<Theorem1Report>& reports) {
    for (const auto& r : reports)
        if (!r.all_equal) return false;
    return true;
}

namespace {

nlohmann::ordered_json opt_to_json(const std::optional<Int>& v) {
    if (!v) return nullptr;
    return v->str();
}

std::string opt_to_csv(const std::optional<Int>& v) { return v ? v->str() : ""; }

}  // namespace

nlohmann::ordered_json report_to_json(const Theorem1Report& r, bool include_timing) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["tree_size"] = opt_to_json(r.tree_size);
    j["closed_form"] = opt_to_json(r.closed_form);
    j["skeleton_betti"] = opt_to_json(r.skeleton_betti);
    j["dual_betti"] = opt_to_json(r.dual_betti);
    j["bw"] = opt_to_json(r.bw);
    j["all_equal"] = r.all_equal;
    j["status"] = r.status;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string reports_to_csv(const std::vector<Theorem1Report>& reports, bool include_timing) {
    std::ostringstream out;
    out << "n,k,tree_size,closed_form,skeleton_betti,dual_betti,bw,all_equal,status,elapsed_ms\n";
    for (const auto& r : reports) {
        out << r.n << ',' << r.k << ',' << opt_to_csv(r.tree_size) << ','
            << opt_to_csv(r.closed_form) << ',' << opt_to_csv(r.skeleton_betti) << ','
            << opt_to_csv(r.dual_betti) << ',' << opt_to_csv(r.bw) << ','
            << (r.all_equal ? "true" : "false") << ',' << r.status << ',';
        if (include_timing) out << r.elapsed_ms;
        out << '\n';
    }
    return out.str();
}

}  // namespace celltrees
