#include <doctest.h>

#include <set>

#include "orbcat/geom.hpp"

using namespace orbcat;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("diagonal counts") {
    CHECK(diagonals(1).size() == 2);
    CHECK(diagonals(2).size() == 5);
    CHECK(diagonals(3).size() == 9);
    CHECK(diagonals(5).size() == 20);
    CHECK_THROWS_AS(diagonals(0), std::invalid_argument);
    for (const auto& d : diagonals(4)) {
        CHECK(d.j - d.i >= 2);
        CHECK_FALSE((d.i == 0 && d.j == 6));
    }
}

TEST_CASE("crossing predicate") {
    auto sq = diagonals(1);
    REQUIRE(sq.size() == 2);
    CHECK(crossing(sq[0], sq[1]));

    Diagonal a{2, 0, 2}, b{2, 2, 4};
    CHECK_FALSE(crossing(a, b));  // shared endpoint

    auto pent = diagonals(2);
    for (const auto& x : pent)
        for (const auto& y : pent) CHECK(crossing(x, y) == crossing(y, x));

    CHECK_THROWS_AS(crossing(Diagonal{1, 0, 2}, Diagonal{2, 0, 2}), std::invalid_argument);
}

TEST_CASE("triangulation counts are Catalan numbers") {
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(catalan(4) == 14);
    CHECK(catalan(5) == 42);
    for (int n = 1; n <= 4; ++n) {
        auto tris = triangulations(n);
        CHECK((long long)tris.size() == catalan(n + 1));
        for (const auto& t : tris) CHECK((int)t.size() == n);
    }
}

TEST_CASE("bijection with orbit indecomposables preserves the crossing structure") {
    for (int n = 1; n <= 3; ++n) {
        OrbitHandle h = OrbitHandle::cluster_category(Quiver::linear_a(n), Q);
        auto ds = diagonals(n);
        auto ext = orbit_ext_graph(h);
        auto bij = geom_bijection(h);
        REQUIRE(bij.size() == ds.size());
        std::set<int> image(bij.begin(), bij.end());
        CHECK(image.size() == bij.size());
        for (size_t i = 0; i < ds.size(); ++i)
            for (size_t j = 0; j < ds.size(); ++j)
                if (i != j) CHECK(crossing(ds[i], ds[j]) == ext[bij[i]][bij[j]]);
    }
}

TEST_CASE("counts and the bijection persist at rank five") {
    OrbitHandle h = OrbitHandle::cluster_category(Quiver::linear_a(5), Q);
    CHECK(h.orbit_indecomposables().size() == 20);
    CHECK(diagonals(5).size() == 20);
    CHECK(geom_bijection(h).size() == 20);
    CHECK((long long)cluster_tilting_objects(h).size() == catalan(6));
    CHECK((long long)triangulations(5).size() == catalan(6));
}

TEST_CASE("tilting sets are the triangulations") {
    for (int n = 1; n <= 3; ++n) {
        OrbitHandle h = OrbitHandle::cluster_category(Quiver::linear_a(n), Q);
        auto tilts = cluster_tilting_objects(h);
        auto tris = triangulations(n);
        CHECK(tilts.size() == tris.size());
        // maximality: no tilting set extends by another rigid object
        auto ext = orbit_ext_graph(h);
        for (const auto& s : tilts) {
            for (size_t c = 0; c < ext.size(); ++c) {
                bool inside = std::find(s.begin(), s.end(), (int)c) != s.end();
                if (inside) continue;
                bool compatible = true;
                for (int p : s) compatible = compatible && !ext[p][c];
                CHECK_FALSE(compatible);
            }
        }
        auto bij = geom_bijection(h);
        std::set<std::vector<int>> mapped, tilt_sets;
        for (const auto& t : tris) {
            std::vector<int> im;
            for (int d : t) im.push_back(bij[d]);
            std::sort(im.begin(), im.end());
            mapped.insert(im);
        }
        for (auto s : tilts) {
            std::sort(s.begin(), s.end());
            tilt_sets.insert(s);
        }
        CHECK(mapped == tilt_sets);
    }
    OrbitHandle big = OrbitHandle::cluster_category(Quiver::linear_a(6), Q);
    CHECK_THROWS_AS(cluster_tilting_objects(big), std::invalid_argument);
}
