#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "celltrees/builders.hpp"
#include "celltrees/chain_complex.hpp"
#include "support.hpp"

using namespace celltrees;

TEST_CASE("constructors emit valid complexes") {
    CHECK(validate_complex(hypercube(3)).valid());
    CHECK(validate_complex(cross_polytope(4)).valid());
    CHECK(validate_complex(pile_of_cubes({2, 2})).valid());
}

TEST_CASE("validate reports dd != 0 with the offending degree") {
    // Two vertices, an edge with boundary a + b (not a - b), and a 2-cell on
    // top of it: the composite boundary cannot vanish.
    std::vector<CellSpec> specs = {
        {0, "a", {}},
        {0, "b", {}},
        {1, "e", {{"a", 1}, {"b", 1}}},
        {2, "F", {{"e", 1}}},
    };
    ChainComplex c(2, specs);
    ValidationReport report = validate_complex(c);
    REQUIRE_FALSE(report.valid());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.kind == "dd-nonzero" && v.degree == 2) found = true;
    CHECK(found);
}

TEST_CASE("rp2 fixture loads, validates, and has the known f-vector") {
    ChainComplex rp2 = complex_from_file(testsupport::fixture_path("rp2.json"));
    CHECK(validate_complex(rp2).valid());
    CHECK(f_vector(rp2) == FVector{{6, 15, 10}});

    // Hand-check of one boundary column: d(123) = 23 - 13 + 12.
    auto [dim, col] = rp2.locate("123");
    REQUIRE(dim == 2);
    const SparseIntMatrix& d2 = rp2.boundary(2);
    CHECK(d2.get(rp2.locate("23").second, col) == 1);
    CHECK(d2.get(rp2.locate("13").second, col) == -1);
    CHECK(d2.get(rp2.locate("12").second, col) == 1);
    CHECK(d2.column(col).size() == 3);
}

TEST_CASE("f-vectors of the three builders") {
    CHECK(f_vector(hypercube(3)) == FVector{{8, 12, 6, 1}});
    CHECK(f_vector(cross_polytope(3)) == FVector{{6, 12, 8}});
    CHECK(f_vector(pile_of_cubes({2, 2})) == FVector{{9, 12, 4}});
    // Grid-count oracle across a few piles.
    for (const auto& sizes : std::vector<std::vector<int>>{{2, 1}, {3, 2}, {2, 2, 2}, {4}}) {
        FVector f = f_vector(pile_of_cubes(sizes));
        for (std::size_t l = 0; l < f.size(); ++l)
            CHECK(f[l] == testsupport::pile_cell_count(sizes, static_cast<int>(l)));
    }
}

TEST_CASE("euler characteristic") {
    for (int n = 1; n <= 4; ++n) CHECK(euler_characteristic(hypercube(n)) == 1);
    CHECK(euler_characteristic(skeleton(hypercube(3), 2)) == 2);  // the 2-sphere
    CHECK(euler_characteristic(skeleton(pile_of_cubes({2, 2}), 1)) == 9 - 12);
}

TEST_CASE("skeleton") {
    CHECK(f_vector(skeleton(hypercube(4), 2)) == FVector{{16, 32, 24}});
    ChainComplex c = cross_polytope(3);
    CHECK(skeleton(c, c.top_dim()) == c);
    ChainComplex verts = skeleton(c, 0);
    CHECK(verts.top_dim() == 0);
    CHECK(verts.cell_count(0) == 6);
    CHECK_THROWS_AS(skeleton(c, 3), std::out_of_range);
    CHECK_THROWS_AS(skeleton(c, -1), std::out_of_range);

    // f_vector(skeleton(c, k)) is a prefix of f_vector(c).
    ChainComplex cube = hypercube(4);
    FVector full = f_vector(cube);
    for (int k = 0; k <= 4; ++k) {
        FVector fk = f_vector(skeleton(cube, k));
        REQUIRE(fk.size() == static_cast<std::size_t>(k) + 1);
        for (std::size_t i = 0; i < fk.size(); ++i) CHECK(fk[i] == full[i]);
    }
}

TEST_CASE("facet subcomplex") {
    ChainComplex oct = cross_polytope(3);
    std::set<std::string> all;
    for (const auto& cell : oct.cells(2)) all.insert(cell.id);
    REQUIRE(all.size() == 8);
    CHECK(facet_subcomplex(oct, all) == oct);

    std::set<std::string> seven = all;
    seven.erase(*seven.begin());
    CHECK(f_vector(facet_subcomplex(oct, seven)) == FVector{{6, 12, 7}});
    CHECK(validate_complex(facet_subcomplex(oct, seven)).valid());

    CHECK(facet_subcomplex(oct, {}) == skeleton(oct, 1));

    CHECK_THROWS_AS(facet_subcomplex(oct, {"no-such-cell"}), std::invalid_argument);
    CHECK_THROWS_AS(facet_subcomplex(oct, {"+00"}), std::invalid_argument);  // a vertex
}

TEST_CASE("file round trip") {
    std::string path = "roundtrip_square.json";
    ChainComplex square = hypercube(2);
    complex_to_file(square, path);
    ChainComplex back = complex_from_file(path);
    CHECK(back == square);

    // Writing the loaded complex again is byte-identical.
    std::string path2 = "roundtrip_square2.json";
    complex_to_file(back, path2);
    std::ifstream f1(path), f2(path2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("coefficients beyond 2^53 round-trip as decimal strings") {
    Int big = (Int(1) << 80) + 7;
    std::vector<CellSpec> specs = {{0, "a", {}}, {1, "e", {{"a", big}}}};
    ChainComplex c(1, specs);
    nlohmann::ordered_json j = complex_to_json(c);
    CHECK(j["cells"][1]["boundary"][0][1].is_string());
    CHECK(complex_from_json(j).boundary(1).get(0, 0) == big);

    // Small coefficients remain plain JSON numbers.
    nlohmann::ordered_json j2 = complex_to_json(hypercube(1));
    for (const auto& cell : j2["cells"])
        for (const auto& pair : cell["boundary"]) CHECK(pair[1].is_number_integer());
}

TEST_CASE("malformed input is rejected with diagnostics") {
    nlohmann::json j = {{"top_dim", 1},
                        {"cells", {{{"id", "e"}, {"dim", 1}, {"label", "e"},
                                    {"boundary", nlohmann::json::array(
                                                     {nlohmann::json::array({"ghost", 1})})}}}}};
    CHECK_THROWS_WITH_AS(complex_from_json(j),
                         "ChainComplex: boundary of 'e' references unknown cell 'ghost'",
                         std::invalid_argument);

    nlohmann::json dup = {{"top_dim", 0},
                          {"cells", {{{"id", "a"}, {"dim", 0}, {"label", "a"}, {"boundary", nlohmann::json::array()}},
                                     {{"id", "a"}, {"dim", 0}, {"label", "a"}, {"boundary", nlohmann::json::array()}}}}};
    CHECK_THROWS_AS(complex_from_json(dup), std::invalid_argument);

    std::string bad_path = "not_json.json";
    {
        std::ofstream out(bad_path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(complex_from_file(bad_path), std::invalid_argument);
    std::remove(bad_path.c_str());
}

TEST_CASE("builder argument checks") {
    CHECK_THROWS_AS(hypercube(0), std::invalid_argument);
    CHECK_THROWS_AS(cross_polytope(0), std::invalid_argument);
    CHECK_THROWS_AS(pile_of_cubes({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(pile_of_cubes({}), std::invalid_argument);
}
