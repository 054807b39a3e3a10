#include <catch_amalgamated.hpp>

#include <set>

#include "trisch/paths.hpp"

using namespace trisch;

TEST_CASE("enumerate_subpaths") {
    CHECK(enumerate_subpaths(TriangularTriple(4, 3, 11)).size() == 5);
    CHECK(enumerate_subpaths(TriangularTriple(8, 5, 26)).size() == 9);

    auto ps = enumerate_subpaths(TriangularTriple(2, 3, 5));
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].lambda == Partition{});
    CHECK(ps[1].lambda == Partition{1});

    // deterministic ascending lexicographic order
    auto ps9 = enumerate_subpaths(TriangularTriple(8, 5, 26));
    std::vector<Partition> expect = {Partition{},     Partition{1},    Partition{1, 1},
                                     Partition{2},    Partition{2, 1}, Partition{2, 2},
                                     Partition{3},    Partition{3, 1}, Partition{3, 2}};
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(ps9[i].lambda == expect[i]);
}

TEST_CASE("path statistics") {
    TriangularTriple t(4, 3, 11);
    CHECK(path_statistics({t, Partition{2, 1}}).area == 0);
    CHECK(path_statistics({t, Partition{2, 1}}).dinv == 3);
    CHECK(path_statistics({t, Partition{}}).area == 3);
    CHECK(path_statistics({t, Partition{}}).dinv == 0);
    CHECK(path_statistics({t, Partition{1}}).area == 2);
    CHECK(path_statistics({t, Partition{1}}).dinv == 1);

    // Figure values for the full (4,3) triangle: (area,dinv) multiset.
    std::multiset<std::pair<long, long>> pairs;
    for (const DyckPath& p : enumerate_subpaths(t)) {
        PathStats s = path_statistics(p);
        pairs.insert({s.area, s.dinv});
    }
    std::multiset<std::pair<long, long>> expect{{0, 3}, {1, 2}, {1, 1}, {2, 1}, {3, 0}};
    CHECK(pairs == expect);
}

TEST_CASE("area bounds") {
    for (auto mn : std::vector<std::array<long, 3>>{{4, 3, 11}, {8, 5, 26}, {5, 4, 18}}) {
        TriangularTriple t(mn[0], mn[1], mn[2]);
        long size = t.tau().size();
        for (const DyckPath& p : enumerate_subpaths(t)) {
            PathStats s = path_statistics(p);
            CHECK(s.area >= 0);
            CHECK(s.area <= size);
        }
        CHECK(path_statistics({t, Partition{}}).area == size);
        CHECK(path_statistics({t, t.tau()}).area == 0);
    }
}

TEST_CASE("full-triangle dinv endpoints") {
    // For l = mn-1 the full path carries dinv = |tau| and the empty path 0.
    for (long m = 2; m <= 6; ++m)
        for (long n = 2; m * n <= 30; ++n) {
            if (std::gcd(m, n) != 1) continue;
            TriangularTriple t(m, n, m * n - 1);
            CHECK(path_statistics({t, t.tau()}).dinv == t.tau().size());
            CHECK(path_statistics({t, Partition{}}).dinv == 0);
        }
}

TEST_CASE("boundary data") {
    TriangularTriple t(4, 3, 11);
    BoundaryData b = boundary_data({t, Partition{2, 1}});
    CHECK(b.addable == std::vector<Box>{{3, 1}, {2, 2}, {1, 3}});
    CHECK(std::multiset<long>(b.xi.begin(), b.xi.end()) == std::multiset<long>{0, 1, 2});

    TriangularTriple t235(2, 3, 5);
    BoundaryData b2 = boundary_data({t235, Partition{}});
    CHECK(b2.addable == std::vector<Box>{{1, 1}});
    CHECK(b2.xi == std::vector<long>{0});
    std::multiset<long> east_labels;
    for (const Box& e : b2.east) east_labels.insert(t235.gamma(e));
    CHECK(east_labels == std::multiset<long>{4, 2, 0});

    TriangularTriple t85(8, 5, 26);
    BoundaryData b3 = boundary_data({t85, Partition{3, 2}});
    CHECK(std::multiset<long>(b3.xi.begin(), b3.xi.end()) == std::multiset<long>{0, 1, 2});
}

TEST_CASE("east boundary has n boxes with distinct labels") {
    for (auto mn : std::vector<std::array<long, 3>>{{4, 3, 11}, {8, 5, 26}, {7, 4, 20}}) {
        TriangularTriple t(mn[0], mn[1], mn[2]);
        for (const DyckPath& p : enumerate_subpaths(t)) {
            BoundaryData b = boundary_data(p);
            CHECK(static_cast<long>(b.east.size()) == t.n());
            std::set<long> labels;
            for (const Box& e : b.east) labels.insert(t.gamma(e));
            CHECK(labels.size() == b.east.size());
        }
    }
}

TEST_CASE("addable boxes have nonnegative shifted labels") {
    for (auto mn : std::vector<std::array<long, 3>>{{4, 3, 11}, {8, 5, 26}, {5, 4, 18}, {3, 4, 11}}) {
        TriangularTriple t(mn[0], mn[1], mn[2]);
        for (const DyckPath& p : enumerate_subpaths(t))
            for (const Box& box : boundary_data(p).addable)
                CHECK(t.gamma_hat(box) >= 0);
    }
}
