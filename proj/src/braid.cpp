#include "orbcat/braid.hpp"

#include <cstdlib>
#include <stdexcept>

#include "orbcat/rep.hpp"

namespace orbcat {

IMat imat_identity(int m) {
    IMat a(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) a[i][i] = 1;
    return a;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    if (!a.empty() && a[0].size() != k) throw std::invalid_argument("imat_mul shape mismatch");
    IMat out(r, std::vector<long long>(c, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t m = 0; m < k; ++m) {
            if (a[i][m] == 0) continue;
            for (size_t j = 0; j < c; ++j) out[i][j] += a[i][m] * b[m][j];
        }
    return out;
}

IMat imat_transpose(const IMat& a) {
    size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
    IMat out(c, std::vector<long long>(r, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) out[j][i] = a[i][j];
    return out;
}

IMat imat_sub(const IMat& a, const IMat& b) {
    IMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

IMat imat_neg(const IMat& a) {
    IMat out = a;
    for (auto& row : out)
        for (auto& x : row) x = -x;
    return out;
}

bool imat_eq(const IMat& a, const IMat& b) { return a == b; }

long long imat_det(IMat a) {
    int n = (int)a.size();
    if (n == 0) return 1;
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

void require_type_a(const Quiver& q) {
    DynkinClass cls = validate_quiver(q);
    if (cls.type != DynkinType::A) throw std::invalid_argument("type A only, got " + cls.name());
}

IMat to_imat(const Matrix& m) {
    IMat out(m.rows(), std::vector<long long>(m.cols(), 0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            const auto& v = m.at(i, j).value();
            if (denominator(v) != 1) throw std::logic_error("matrix entry is not an integer");
            out[i][j] = numerator(v).convert_to<long long>();
        }
    return out;
}

}  // namespace

IMat euler_matrix(const Quiver& q) {
    require_type_a(q);
    int m = q.vertex_count;
    IMat e = imat_identity(m);
    for (auto [s, t] : q.arrows) e[s - 1][t - 1] -= 1;
    return e;
}

IMat skew_form(const Quiver& q) {
    IMat e = euler_matrix(q);
    return imat_sub(e, imat_transpose(e));
}

IMat braid_generator(const Quiver& q, int i) {
    int m = q.vertex_count;
    if (i < 1 || i > m) throw std::invalid_argument("braid generator index out of range");
    IMat s = skew_form(q);
    IMat t = imat_identity(m);
    for (int r = 0; r < m; ++r) t[r][i - 1] -= s[r][i - 1];
    return t;
}

bool verify_braid_relations(const Quiver& q) {
    int m = q.vertex_count;
    if (m < 2) throw std::invalid_argument("braid relations need at least two strands");
    std::vector<IMat> t;
    for (int i = 1; i <= m; ++i) t.push_back(braid_generator(q, i));
    for (int i = 0; i + 1 < m; ++i) {
        IMat lhs = imat_mul(t[i], imat_mul(t[i + 1], t[i]));
        IMat rhs = imat_mul(t[i + 1], imat_mul(t[i], t[i + 1]));
        if (!imat_eq(lhs, rhs)) return false;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            if (!imat_eq(imat_mul(t[i], t[j]), imat_mul(t[j], t[i]))) return false;
    return true;
}

bool preserves_form(const Quiver& q, const IMat& t) {
    IMat s = skew_form(q);
    return imat_eq(imat_mul(t, imat_mul(s, imat_transpose(t))), s);
}

IMat k0_class_of_orbit_functor(const Quiver& q) {
    require_type_a(q);
    // Sigma acts by -1 and tau by the (transposed) Coxeter matrix; the
    // cluster functor tau^{-1} Sigma therefore acts by -Phi^{-1}.
    Matrix phi = coxeter_matrix(q).transpose();
    auto inv = phi.inverse();
    if (!inv) throw std::logic_error("Coxeter matrix is singular");
    return to_imat(-(*inv));
}

namespace {

struct IntReduction {
    IMat d;     // reduced matrix (diagonal)
    IMat e;     // accumulated row transform: e * m * (col ops) = d
    IMat einv;  // inverse of e
};

// Diagonalize by elementary integer row and column operations, keeping the
// row transform and its inverse.
IntReduction reduce_integer(IMat m) {
    int n = (int)m.size();
    IntReduction r{m, imat_identity(n), imat_identity(n)};
    auto row_add = [&](int dst, int src, long long c) {  // row dst += c * row src
        for (int j = 0; j < n; ++j) r.d[dst][j] += c * r.d[src][j];
        for (int j = 0; j < n; ++j) r.e[dst][j] += c * r.e[src][j];
        for (int i = 0; i < n; ++i) r.einv[i][src] -= c * r.einv[i][dst];
    };
    auto row_swap = [&](int a, int b) {
        std::swap(r.d[a], r.d[b]);
        std::swap(r.e[a], r.e[b]);
        for (int i = 0; i < n; ++i) std::swap(r.einv[i][a], r.einv[i][b]);
    };
    auto col_add = [&](int dst, int src, long long c) {
        for (int i = 0; i < n; ++i) r.d[i][dst] += c * r.d[i][src];
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < n; ++i) std::swap(r.d[i][a], r.d[i][b]);
    };

    for (int k = 0; k < n; ++k) {
        for (;;) {
            int pi = -1, pj = -1;
            long long best = 0;
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (r.d[i][j] != 0 && (best == 0 || std::llabs(r.d[i][j]) < best)) {
                        best = std::llabs(r.d[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;  // all zero
            if (pi != k) row_swap(pi, k);
            if (pj != k) col_swap(pj, k);
            bool clean = true;
            for (int i = k + 1; i < n; ++i)
                if (r.d[i][k] != 0) {
                    row_add(i, k, -(r.d[i][k] / r.d[k][k]));
                    if (r.d[i][k] != 0) clean = false;
                }
            for (int j = k + 1; j < n; ++j)
                if (r.d[k][j] != 0) {
                    col_add(j, k, -(r.d[k][j] / r.d[k][k]));
                    if (r.d[k][j] != 0) clean = false;
                }
            bool zeroed = true;
            for (int i = k + 1; i < n; ++i) zeroed = zeroed && r.d[i][k] == 0;
            for (int j = k + 1; j < n; ++j) zeroed = zeroed && r.d[k][j] == 0;
            if (clean && zeroed) break;
        }
    }
    return r;
}

}  // namespace

QuotientAction orbit_quotient_action(const Quiver& q) {
    require_type_a(q);
    int m = q.vertex_count;
    IMat f = k0_class_of_orbit_functor(q);
    IMat one_minus = imat_sub(imat_identity(m), f);
    IntReduction red = reduce_integer(one_minus);

    QuotientAction out;
    for (int i = 0; i < m; ++i) out.invariants.push_back(std::llabs(red.d[i][i]));

    // membership of z in im(1 - [F]): rows of E z against the diagonal
    auto in_image = [&](const IMat& g) {
        // check column by column that (E g E^{-1} - ...) lands in D Z^m
        for (int c = 0; c < m; ++c)
            for (int r = 0; r < m; ++r) {
                long long v = g[r][c];
                long long d = red.d[r][r];
                if (d == 0 ? v != 0 : v % d != 0) return false;
            }
        return true;
    };

    out.trivial = true;
    for (int i = 1; i <= m; ++i) {
        IMat t = braid_generator(q, i);
        IMat g = imat_mul(red.e, imat_mul(t, red.einv));  // action in the reduced basis
        // well-definedness: g must preserve the image lattice D Z^m
        IMat gd = g;
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) gd[r][c] = g[r][c] * red.d[c][c];
        if (!in_image(gd))
            throw std::logic_error("braid generator does not preserve the orbit quotient lattice");
        if (!in_image(imat_sub(g, imat_identity(m)))) out.trivial = false;
        // report entries reduced mod the row invariant
        IMat img = g;
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                long long d = red.d[r][r];
                if (d != 0) {
                    img[r][c] %= std::llabs(d);
                    if (img[r][c] < 0) img[r][c] += std::llabs(d);
                }
            }
        out.images.push_back(std::move(img));
    }
    return out;
}

}  // namespace orbcat
