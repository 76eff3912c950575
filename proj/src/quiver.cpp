#include "orbcat/quiver.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace orbcat {

Quiver Quiver::linear_a(int n) {
    Quiver q;
    q.vertex_count = n;
    for (int i = 1; i < n; ++i) q.arrows.emplace_back(i, i + 1);
    return q;
}

std::string DynkinClass::name() const {
    switch (type) {
        case DynkinType::A: return "A" + std::to_string(rank);
        case DynkinType::D: return "D" + std::to_string(rank);
        case DynkinType::E: return "E" + std::to_string(rank);
    }
    return "?";
}

namespace {

void check_vertices(const Quiver& q) {
    if (q.vertex_count < 1) throw std::invalid_argument("quiver needs at least one vertex");
    for (auto [s, t] : q.arrows) {
        if (s < 1 || s > q.vertex_count || t < 1 || t > q.vertex_count)
            throw std::invalid_argument("arrow endpoint out of range");
        if (s == t) throw std::invalid_argument("oriented cycle detected (loop at vertex " + std::to_string(s) + ")");
    }
}

void check_acyclic(const Quiver& q) {
    int n = q.vertex_count;
    std::vector<int> indeg(n + 1, 0);
    std::vector<std::vector<int>> out(n + 1);
    for (auto [s, t] : q.arrows) {
        out[s].push_back(t);
        ++indeg[t];
    }
    std::queue<int> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) ready.push(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (seen != n) throw std::invalid_argument("oriented cycle detected");
}

}  // namespace

DynkinClass validate_quiver(const Quiver& q) {
    check_vertices(q);
    check_acyclic(q);

    int n = q.vertex_count;
    // underlying graph: must be a tree with simple edges
    std::vector<std::vector<int>> adj(n + 1);
    std::vector<std::vector<bool>> seen_edge(n + 1, std::vector<bool>(n + 1, false));
    for (auto [s, t] : q.arrows) {
        if (seen_edge[s][t]) throw std::invalid_argument("not a Dynkin diagram: parallel edge " +
                                                         std::to_string(s) + "-" + std::to_string(t));
        seen_edge[s][t] = seen_edge[t][s] = true;
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    if ((int)q.arrows.size() != n - 1)
        throw std::invalid_argument("not a Dynkin diagram: underlying graph is not a tree");
    std::vector<bool> visited(n + 1, false);
    std::queue<int> bfs;
    bfs.push(1);
    visited[1] = true;
    int reached = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        ++reached;
        for (int w : adj[v])
            if (!visited[w]) {
                visited[w] = true;
                bfs.push(w);
            }
    }
    if (reached != n) throw std::invalid_argument("not a Dynkin diagram: underlying graph is disconnected");

    std::vector<int> branch;
    for (int v = 1; v <= n; ++v) {
        if ((int)adj[v].size() > 3) throw std::invalid_argument("not a Dynkin diagram: vertex of degree > 3");
        if ((int)adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.empty()) return {DynkinType::A, n};
    if (branch.size() > 1) throw std::invalid_argument("not a Dynkin diagram: more than one branch vertex");

    // arm lengths from the unique branch vertex
    int b = branch[0];
    std::vector<int> arms;
    for (int start : adj[b]) {
        int len = 1, prev = b, cur = start;
        while ((int)adj[cur].size() == 2) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {DynkinType::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {DynkinType::E, n};
    throw std::invalid_argument("not a Dynkin diagram: arm lengths (" + std::to_string(arms[0]) + "," +
                                std::to_string(arms[1]) + "," + std::to_string(arms[2]) + ")");
}

bool is_type_a(const Quiver& q) {
    try {
        return validate_quiver(q).type == DynkinType::A;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<int> path_order(const Quiver& q) {
    DynkinClass cls = validate_quiver(q);
    if (cls.type != DynkinType::A) throw std::invalid_argument("type A only");
    int n = q.vertex_count;
    if (n == 1) return {1};
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [s, t] : q.arrows) {
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    int start = 0;
    for (int v = 1; v <= n; ++v)
        if (adj[v].size() == 1) {
            start = v;
            break;
        }
    std::vector<int> order{start};
    int prev = 0, cur = start;
    while ((int)order.size() < n) {
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    return order;
}

namespace {

std::vector<int> closure(const Quiver& q, int v, bool forward) {
    if (v < 1 || v > q.vertex_count) throw std::invalid_argument("invalid vertex " + std::to_string(v));
    std::vector<bool> in(q.vertex_count + 1, false);
    in[v] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [s, t] : q.arrows) {
            int from = forward ? s : t;
            int to = forward ? t : s;
            if (in[from] && !in[to]) {
                in[to] = true;
                grew = true;
            }
        }
    }
    std::vector<int> out;
    for (int w = 1; w <= q.vertex_count; ++w)
        if (in[w]) out.push_back(w);
    return out;
}

}  // namespace

std::vector<int> reachable_set(const Quiver& q, int v) { return closure(q, v, true); }
std::vector<int> coreachable_set(const Quiver& q, int v) { return closure(q, v, false); }

}  // namespace orbcat
