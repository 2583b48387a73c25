// Command-line surface for the celltrees library: build complexes, run
// homology and spanning-tree computations, evaluate the closed forms, and
// execute the full verification sweeps.
//
// Exit codes: 0 success, 1 an identity or certificate check failed,
// 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "celltrees/builders.hpp"
#include "celltrees/chain_complex.hpp"
#include "celltrees/comb.hpp"
#include "celltrees/formulas.hpp"
#include "celltrees/homology.hpp"
#include "celltrees/spanning_trees.hpp"
#include "celltrees/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace celltrees;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void write_output(const OutputOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + opts.out_path + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

// Generic object output: JSON as-is, CSV as key,value rows.
void emit_object(const OutputOptions& opts, const ordered_json& j) {
    if (opts.format == "json") {
        write_output(opts, j.dump(2));
        return;
    }
    std::ostringstream csv;
    csv << "key,value\n";
    for (const auto& [key, value] : j.items())
        csv << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    write_output(opts, csv.str());
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    if (sizes.empty()) throw CLI::ValidationError("--sizes", "expected comma-separated sizes");
    return sizes;
}

// Flags shared by every command that needs an input complex: either a file
// or a named shape, optionally truncated to a skeleton.
struct ComplexSource {
    std::string file;
    std::string shape;
    int n = 0;
    std::string sizes;
    int skeleton_dim = -1;

    void add_flags(CLI::App* cmd) {
        auto* file_opt = cmd->add_option("--complex", file, "Complex file (JSON format)");
        auto* shape_opt =
            cmd->add_option("--shape", shape, "Built-in shape: hypercube | cross | pile")
                ->check(CLI::IsMember({"hypercube", "cross", "pile"}));
        cmd->add_option("--n", n, "Dimension parameter for hypercube/cross");
        cmd->add_option("--sizes", sizes, "Pile sizes, e.g. 2,2,3");
        cmd->add_option("--skeleton", skeleton_dim, "Truncate to the k-skeleton");
        file_opt->excludes(shape_opt);
    }

    ChainComplex build() const {
        std::optional<ChainComplex> c;
        if (!file.empty()) {
            c = complex_from_file(file);
        } else if (shape == "hypercube") {
            c = hypercube(n);
        } else if (shape == "cross") {
            c = cross_polytope(n);
        } else if (shape == "pile") {
            c = pile_of_cubes(parse_sizes(sizes));
        } else {
            throw CLI::ValidationError("complex", "need --complex FILE or --shape");
        }
        if (skeleton_dim >= 0) return skeleton(*c, skeleton_dim);
        return std::move(*c);
    }
};

std::set<std::string> collect_facets(const std::vector<std::string>& facet_flags,
                                     const std::string& facets_csv,
                                     const std::string& facets_file) {
    std::set<std::string> facets(facet_flags.begin(), facet_flags.end());
    if (!facets_csv.empty()) {
        std::stringstream ss(facets_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) facets.insert(tok);
    }
    if (!facets_file.empty()) {
        std::ifstream in(facets_file);
        if (!in) throw std::runtime_error("cannot open facets file '" + facets_file + "'");
        nlohmann::json arr = nlohmann::json::parse(in);
        for (const auto& f : arr) facets.insert(f.get<std::string>());
    }
    if (facets.empty())
        throw CLI::ValidationError("facets", "no facets given (--facet/--facets/--facets-file)");
    return facets;
}

ordered_json homology_result_to_json(const HomologyResult& h) {
    ordered_json j;
    j["dim"] = h.dim;
    j["betti"] = h.betti;
    ordered_json torsion = ordered_json::array();
    for (const auto& t : h.torsion) torsion.push_back(t.str());
    j["torsion"] = torsion;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cellular homology, higher-dimensional spanning trees, and "
                 "identity verification for cube-like complexes"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // ---- build ----
    auto* build_cmd = app.add_subcommand("build", "Construct a complex and write it as JSON");
    ComplexSource build_src;
    build_src.add_flags(build_cmd);
    OutputOptions build_out;
    add_output_flags(build_cmd, build_out);
    build_cmd->callback([&]() {
        ChainComplex c = build_src.build();
        if (build_out.format == "csv") {
            std::ostringstream csv;
            csv << "dim,count\n";
            FVector f = f_vector(c);
            for (std::size_t d = 0; d < f.size(); ++d) csv << d << ',' << f[d] << '\n';
            write_output(build_out, csv.str());
        } else {
            write_output(build_out, complex_to_json(c).dump(2));
        }
    });

    // ---- homology ----
    auto* hom_cmd = app.add_subcommand("homology", "Betti numbers and torsion coefficients");
    ComplexSource hom_src;
    hom_src.add_flags(hom_cmd);
    int hom_dim = -1;
    bool hom_reduced = false;
    hom_cmd->add_option("--dim", hom_dim, "Single dimension (default: all)");
    hom_cmd->add_flag("--reduced", hom_reduced, "Reduced homology (augmented degree 0)");
    OutputOptions hom_out;
    add_output_flags(hom_cmd, hom_out);
    hom_cmd->callback([&]() {
        ChainComplex c = hom_src.build();
        std::vector<HomologyResult> results;
        if (hom_dim >= 0) {
            results.push_back(homology(c, hom_dim, hom_reduced));
        } else {
            for (int i = 0; i <= c.top_dim(); ++i) results.push_back(homology(c, i, hom_reduced));
        }
        if (hom_out.format == "csv") {
            std::ostringstream csv;
            csv << "dim,betti,torsion\n";
            for (const auto& h : results) {
                csv << h.dim << ',' << h.betti << ',';
                for (std::size_t i = 0; i < h.torsion.size(); ++i)
                    csv << (i ? " " : "") << h.torsion[i].str();
                csv << '\n';
            }
            write_output(hom_out, csv.str());
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& h : results) arr.push_back(homology_result_to_json(h));
            write_output(hom_out, arr.dump(2));
        }
    });

    // ---- tree ----
    auto* tree_cmd = app.add_subcommand("tree", "Spanning-tree operations");
    tree_cmd->require_subcommand(1);

    auto* tree_build = tree_cmd->add_subcommand("build", "Greedy spanning tree of a complex");
    ComplexSource tree_build_src;
    tree_build_src.add_flags(tree_build);
    std::optional<std::uint64_t> tree_seed;
    tree_build->add_option("--seed", tree_seed,
                           "Seeded-random facet order (default: lexicographic)");
    OutputOptions tree_build_out;
    add_output_flags(tree_build, tree_build_out);
    tree_build->callback([&]() {
        ChainComplex c = tree_build_src.build();
        auto tree = tree_seed ? build_tree(c, *tree_seed) : build_tree(c);
        TreeCertificate cert = check_tree(c, tree);
        ordered_json j;
        j["facets"] = tree_to_json(tree);
        j["certificate"] = certificate_to_json(cert);
        emit_object(tree_build_out, j);
        if (!cert.valid()) exit_code = kExitVerificationFailure;
    });

    auto* tree_check = tree_cmd->add_subcommand("check", "Certify a facet set as a spanning tree");
    ComplexSource tree_check_src;
    tree_check_src.add_flags(tree_check);
    std::vector<std::string> check_facet_flags;
    std::string check_facets_csv, check_facets_file;
    tree_check->add_option("--facet", check_facet_flags, "One facet id (repeatable)");
    tree_check->add_option("--facets", check_facets_csv, "Comma-separated facet ids");
    tree_check->add_option("--facets-file", check_facets_file, "JSON array of facet ids");
    OutputOptions tree_check_out;
    add_output_flags(tree_check, tree_check_out);
    tree_check->callback([&]() {
        ChainComplex c = tree_check_src.build();
        auto facets = collect_facets(check_facet_flags, check_facets_csv, check_facets_file);
        TreeCertificate cert = check_tree(c, facets);
        emit_object(tree_check_out, certificate_to_json(cert));
        if (!cert.valid()) exit_code = kExitVerificationFailure;
    });

    auto* tree_dual = tree_cmd->add_subcommand(
        "dual", "Alexander-dual tree on the cross-polytope side of the n-cube");
    int dual_n = 0, dual_i = 0;
    std::vector<std::string> dual_facet_flags;
    std::string dual_facets_csv, dual_facets_file;
    tree_dual->add_option("--n", dual_n, "Cube dimension")->required();
    tree_dual->add_option("--i", dual_i, "Tree dimension")->required();
    tree_dual->add_option("--facet", dual_facet_flags, "One cube facet (repeatable)");
    tree_dual->add_option("--facets", dual_facets_csv, "Comma-separated cube facets");
    tree_dual->add_option("--facets-file", dual_facets_file, "JSON array of cube facets");
    OutputOptions tree_dual_out;
    add_output_flags(tree_dual, tree_dual_out);
    tree_dual->callback([&]() {
        auto cube_tree = collect_facets(dual_facet_flags, dual_facets_csv, dual_facets_file);
        auto duals = dual_tree(dual_n, dual_i, cube_tree);
        TreeCertificate cert =
            check_tree(skeleton(cross_polytope(dual_n), dual_n - 1 - dual_i), duals);
        ordered_json j;
        j["facets"] = tree_to_json(duals);
        j["certificate"] = certificate_to_json(cert);
        emit_object(tree_dual_out, j);
    });

    // ---- formula ----
    auto* formula_cmd = app.add_subcommand("formula", "Closed-form quantities");
    formula_cmd->require_subcommand(1);
    int f_n = 0, f_k = 0, f_l = 0;
    std::string f_sizes;
    OutputOptions formula_out;

    auto* f_bw = formula_cmd->add_subcommand("bw", "Bjorner-Welker Betti value");
    f_bw->add_option("--n", f_n)->required();
    f_bw->add_option("--k", f_k)->required();
    add_output_flags(f_bw, formula_out);
    f_bw->callback([&]() {
        ordered_json j;
        j["n"] = f_n;
        j["k"] = f_k;
        j["value"] = bw_betti(f_n, f_k).str();
        emit_object(formula_out, j);
    });

    auto* f_tree = formula_cmd->add_subcommand("tree-size", "Closed-form spanning tree size");
    f_tree->add_option("--n", f_n)->required();
    f_tree->add_option("--k", f_k)->required();
    add_output_flags(f_tree, formula_out);
    f_tree->callback([&]() {
        ordered_json j;
        j["n"] = f_n;
        j["k"] = f_k;
        j["value"] = tree_size_closed_form(f_n, f_k).str();
        emit_object(formula_out, j);
    });

    auto* f_equi = formula_cmd->add_subcommand("equinumerous",
                                               "The four equinumerous tree quantities");
    f_equi->add_option("--n", f_n)->required();
    f_equi->add_option("--k", f_k)->required();
    add_output_flags(f_equi, formula_out);
    f_equi->callback([&]() {
        EquinumerousReport r = equinumerous_quantities(f_n, f_k);
        ordered_json j;
        j["n"] = r.n;
        j["k"] = r.k;
        j["q1_cube_tree"] = r.q1.str();
        j["q2_cross_tree"] = r.q2.str();
        j["q3_cube_complement"] = r.q3.str();
        j["q4_cross_complement"] = r.q4.str();
        j["all_equal"] = r.all_equal;
        j["cube_relation_holds"] = r.cube_relation_holds;
        emit_object(formula_out, j);
        if (!r.all_equal || !r.cube_relation_holds) exit_code = kExitVerificationFailure;
    });

    auto* f_chi = formula_cmd->add_subcommand("pile-chi", "Pile Euler-characteristic identity");
    f_chi->add_option("--sizes", f_sizes)->required();
    f_chi->add_option("--k", f_k)->required();
    add_output_flags(f_chi, formula_out);
    f_chi->callback([&]() {
        PileChiReport r = pile_chi_identity(parse_sizes(f_sizes), f_k);
        ordered_json j;
        j["sizes"] = parse_sizes(f_sizes);
        j["k"] = f_k;
        j["lhs_chi"] = r.lhs;
        j["rhs"] = r.rhs.str();
        j["beta"] = r.beta.str();
        j["complement_interpretation"] = r.complement_interpretation;
        emit_object(formula_out, j);
        if (Int(r.lhs) != r.rhs) exit_code = kExitVerificationFailure;
    });

    auto* f_res = formula_cmd->add_subcommand("resolution",
                                              "Added-cell dimension in the simplicial resolution");
    f_res->add_option("--n", f_n)->required();
    f_res->add_option("--k", f_k)->required();
    f_res->add_option("--l", f_l)->required();
    add_output_flags(f_res, formula_out);
    f_res->callback([&]() {
        ResolutionCellDim r = resolution_added_cell_dim(f_n, f_k, f_l);
        ordered_json j;
        j["n"] = f_n;
        j["k"] = f_k;
        j["l"] = f_l;
        j["dim"] = r.dim;
        j["multiplicity_bound"] = r.multiplicity_bound;
        j["vacuous"] = r.vacuous;
        j["paper_bound_holds"] = r.paper_bound_holds;
        j["hyperplane_dim"] = r.hyperplane_dim;
        j["hyperplane_bound_holds"] = r.hyperplane_bound_holds;
        emit_object(formula_out, j);
    });

    // ---- comb ----
    auto* comb_cmd = app.add_subcommand("comb", "Comb arrangement operations");
    comb_cmd->require_subcommand(1);
    std::string comb_sets;
    int comb_k = 3;

    auto* comb_check = comb_cmd->add_subcommand("check", "Detect a k-dependence");
    comb_check->add_option("--sets", comb_sets, "Axes as 'a,b;c,d;...'")->required();
    comb_check->add_option("--k", comb_k)->required();
    OutputOptions comb_check_out;
    add_output_flags(comb_check, comb_check_out);
    comb_check->callback([&]() {
        CombConfig cfg = parse_comb_sets(comb_sets, comb_k);
        auto witness = detect_k_dependence(cfg);
        ordered_json j;
        j["k"] = comb_k;
        j["dependent"] = witness.has_value();
        j["witness"] = witness ? witness_to_json(*witness) : ordered_json(nullptr);
        emit_object(comb_check_out, j);
    });

    auto* comb_verify = comb_cmd->add_subcommand("verify", "Run the comb verification chain");
    comb_verify->add_option("--sets", comb_sets, "Axes as 'a,b;c,d;...'")->required();
    comb_verify->add_option("--k", comb_k)->required();
    OutputOptions comb_verify_out;
    add_output_flags(comb_verify, comb_verify_out);
    comb_verify->callback([&]() {
        CombConfig cfg = parse_comb_sets(comb_sets, comb_k);
        CombTheoremReport report = verify_comb_theorem(cfg);  // throws on dependence
        emit_object(comb_verify_out, comb_report_to_json(report));
        if (!report.all_equal) exit_code = kExitVerificationFailure;
    });

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Theorem verification sweeps");
    verify_cmd->require_subcommand(1);
    VerifyOptions vopts;
    bool timing = false;
    long long time_cap_s = 600;

    auto* v_t1 = verify_cmd->add_subcommand("theorem1", "Verify one (n, k) cell");
    int v_n = 0, v_k = 0;
    v_t1->add_option("--n", v_n)->required();
    v_t1->add_option("--k", v_k)->required();
    v_t1->add_flag("--timing", timing, "Include elapsed_ms in the output");
    v_t1->add_option("--cell-cap", vopts.cell_cap, "Skip cells above this complex size");
    v_t1->add_option("--time-cap-s", time_cap_s, "Wall-clock cap per cell, seconds");
    OutputOptions v_t1_out;
    add_output_flags(v_t1, v_t1_out);
    v_t1->callback([&]() {
        vopts.time_cap = std::chrono::seconds(time_cap_s);
        Theorem1Report report = verify_theorem1(v_n, v_k, vopts);
        if (v_t1_out.format == "csv")
            write_output(v_t1_out, reports_to_csv({report}, timing));
        else
            write_output(v_t1_out, report_to_json(report, timing).dump(2));
        if (!report.all_equal) exit_code = kExitVerificationFailure;
    });

    auto* v_sweep = verify_cmd->add_subcommand("sweep", "Verify all 3 <= k <= n <= n-max");
    int v_n_max = 0, v_k_min = 3;
    v_sweep->add_option("--n-max", v_n_max)->required();
    v_sweep->add_option("--k-min", v_k_min)->capture_default_str();
    v_sweep->add_flag("--timing", timing, "Include elapsed_ms in the output");
    v_sweep->add_option("--cell-cap", vopts.cell_cap, "Skip cells above this complex size");
    v_sweep->add_option("--time-cap-s", time_cap_s, "Wall-clock cap per cell, seconds");
    v_sweep->add_option("--workers", vopts.workers,
                        "Concurrent cells (default: CELLTREE_WORKERS or hardware)");
    OutputOptions v_sweep_out;
    add_output_flags(v_sweep, v_sweep_out);
    v_sweep->callback([&]() {
        vopts.time_cap = std::chrono::seconds(time_cap_s);
        auto reports = sweep(v_n_max, v_k_min, vopts);
        if (v_sweep_out.format == "csv") {
            write_output(v_sweep_out, reports_to_csv(reports, timing));
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r, timing));
            write_output(v_sweep_out, arr.dump(2));
        }
        if (!sweep_all_equal(reports)) exit_code = kExitVerificationFailure;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    } catch (const KDependenceError& e) {
        ordered_json j;
        j["error"] = e.what();
        j["witness"] = witness_to_json(e.witness);
        std::cerr << j.dump(2) << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return exit_code;
}
