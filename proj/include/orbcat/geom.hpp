#pragma once

#include "orbcat/orbit.hpp"

namespace orbcat {

// Diagonal of a convex (n+3)-gon with vertices 0..n+2.
struct Diagonal {
    int n = 1;  // polygon parameter
    int i = 0, j = 0;
    bool operator==(const Diagonal& o) const = default;
};

std::vector<Diagonal> diagonals(int n);
bool crossing(const Diagonal& a, const Diagonal& b);

// All triangulations as sorted index lists into diagonals(n);
// |triangulations(n)| = Catalan(n+1).
std::vector<std::vector<int>> triangulations(int n);
long long catalan(int k);

// Adjacency of the Ext^1-nonvanishing relation on orbit indecomposables.
std::vector<std::vector<bool>> orbit_ext_graph(const OrbitHandle& h);

// Bijection diagonals -> orbit indecomposables matching crossings with
// nonvanishing orbit Ext^1; found by isomorphism search on the two graphs.
std::vector<int> geom_bijection(const OrbitHandle& h);

// Maximal pairwise Ext^1-rigid sets of orbit indecomposables (size = rank).
std::vector<std::vector<int>> cluster_tilting_objects(const OrbitHandle& h);

}  // namespace orbcat
