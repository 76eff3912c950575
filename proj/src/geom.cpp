#include "orbcat/geom.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace orbcat {

std::vector<Diagonal> diagonals(int n) {
    if (n < 1) throw std::invalid_argument("polygon parameter must be at least 1");
    int verts = n + 3;
    std::vector<Diagonal> out;
    for (int i = 0; i < verts; ++i)
        for (int j = i + 2; j < verts; ++j) {
            if (i == 0 && j == verts - 1) continue;  // boundary edge
            out.push_back({n, i, j});
        }
    return out;
}

bool crossing(const Diagonal& a, const Diagonal& b) {
    if (a.n != b.n) throw std::invalid_argument("crossing: polygon mismatch");
    return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

long long catalan(int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

namespace {

void tri_backtrack(const std::vector<Diagonal>& ds, const std::vector<std::vector<bool>>& cross,
                   std::vector<int>& chosen, size_t next, int want,
                   std::vector<std::vector<int>>& out) {
    if ((int)chosen.size() == want) {
        out.push_back(chosen);
        return;
    }
    if (ds.size() - next < want - chosen.size()) return;
    for (size_t c = next; c < ds.size(); ++c) {
        bool ok = true;
        for (int p : chosen)
            if (cross[p][c]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back((int)c);
        tri_backtrack(ds, cross, chosen, c + 1, want, out);
        chosen.pop_back();
    }
}

std::vector<std::vector<bool>> crossing_table(const std::vector<Diagonal>& ds) {
    std::vector<std::vector<bool>> t(ds.size(), std::vector<bool>(ds.size(), false));
    for (size_t i = 0; i < ds.size(); ++i)
        for (size_t j = 0; j < ds.size(); ++j)
            if (i != j) t[i][j] = crossing(ds[i], ds[j]);
    return t;
}

}  // namespace

std::vector<std::vector<int>> triangulations(int n) {
    auto ds = diagonals(n);
    auto cross = crossing_table(ds);
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    tri_backtrack(ds, cross, chosen, 0, n, out);
    return out;
}

std::vector<std::vector<bool>> orbit_ext_graph(const OrbitHandle& h) {
    auto inds = h.orbit_indecomposables();
    size_t m = inds.size();
    std::vector<std::vector<bool>> g(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            int e = h.orbit_hom_dim(inds[i].rep, DerivedModel::suspend(inds[j].rep, 1)).total;
            g[i][j] = e != 0;
        }
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (g[i][j] != g[j][i]) throw std::logic_error("orbit Ext^1 relation is not symmetric");
    return g;
}

namespace {

bool iso_backtrack(const std::vector<std::vector<bool>>& a, const std::vector<std::vector<bool>>& b,
                   std::vector<int>& map, std::vector<bool>& used, size_t v) {
    if (v == a.size()) return true;
    for (size_t w = 0; w < b.size(); ++w) {
        if (used[w]) continue;
        bool ok = true;
        for (size_t u = 0; u < v; ++u)
            if (a[v][u] != b[w][map[u]] || a[u][v] != b[map[u]][w]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[(int)v] = (int)w;
        used[w] = true;
        if (iso_backtrack(a, b, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

std::vector<int> geom_bijection(const OrbitHandle& h) {
    int n = h.model().quiver().vertex_count;
    auto ds = diagonals(n);
    auto cross = crossing_table(ds);
    auto ext = orbit_ext_graph(h);
    if (ds.size() != ext.size())
        throw std::logic_error("diagonal and orbit indecomposable counts differ");
    // quick degree-sequence screen before the search
    auto degs = [](const std::vector<std::vector<bool>>& g) {
        std::vector<int> d;
        for (const auto& row : g) d.push_back((int)std::count(row.begin(), row.end(), true));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(cross) != degs(ext)) throw std::logic_error("crossing and Ext^1 graphs are not isomorphic");
    std::vector<int> map(ds.size(), -1);
    std::vector<bool> used(ds.size(), false);
    if (!iso_backtrack(cross, ext, map, used, 0))
        throw std::logic_error("no bijection between diagonals and orbit indecomposables");
    return map;
}

std::vector<std::vector<int>> cluster_tilting_objects(const OrbitHandle& h) {
    int n = h.model().quiver().vertex_count;
    if (n > 5) throw std::invalid_argument("cluster tilting enumeration supports rank up to 5");
    auto ext = orbit_ext_graph(h);
    size_t m = ext.size();
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    // maximal rigid sets have exactly n members; enumerate cliques of the
    // rigidity (non-Ext) graph
    std::function<void(size_t)> bt = [&](size_t next) {
        if ((int)chosen.size() == n) {
            out.push_back(chosen);
            return;
        }
        for (size_t c = next; c < m; ++c) {
            bool ok = true;
            for (int p : chosen)
                if (ext[p][c]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back((int)c);
            bt(c + 1);
            chosen.pop_back();
        }
    };
    bt(0);
    return out;
}

}  // namespace orbcat
