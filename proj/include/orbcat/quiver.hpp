#pragma once

#include <string>
#include <utility>
#include <vector>

namespace orbcat {

// Finite quiver with vertices 1..n. Arrows are ordered (source, target).
struct Quiver {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> arrows;

    bool operator==(const Quiver& o) const = default;

    static Quiver linear_a(int n);  // 1 -> 2 -> ... -> n
};

enum class DynkinType { A, D, E };

struct DynkinClass {
    DynkinType type;
    int rank;
    std::string name() const;
};

// Classifies the underlying diagram, rejecting oriented cycles and
// non-Dynkin shapes.
DynkinClass validate_quiver(const Quiver& q);

bool is_type_a(const Quiver& q);

// For a type-A quiver: vertex labels along the underlying path, starting at
// the smaller-labeled endpoint. Interval modules are indexed by positions in
// this order.
std::vector<int> path_order(const Quiver& q);

// Vertices reachable from v (inclusive) along arrows / vertices that reach v.
std::vector<int> reachable_set(const Quiver& q, int v);
std::vector<int> coreachable_set(const Quiver& q, int v);

}  // namespace orbcat
