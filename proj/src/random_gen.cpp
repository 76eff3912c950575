#include "orbcat/random_gen.hpp"

namespace orbcat {

int RandomGen::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(g_);
}

Scalar RandomGen::small_scalar(const Field& f, int bound) {
    return Scalar(f, uniform(-bound, bound));
}

Rep RandomGen::random_rep(const Quiver& q, const Field& f, int max_dim) {
    Rep r{q, f, {}, {}};
    for (int v = 0; v < q.vertex_count; ++v) r.dims.push_back(uniform(0, max_dim));
    for (auto [s, t] : q.arrows) {
        Matrix m(f, r.dims[t - 1], r.dims[s - 1]);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = small_scalar(f);
        r.maps.push_back(std::move(m));
    }
    return r;
}

Complex RandomGen::random_complex(const Quiver& q, const Field& f, int deg_lo, int deg_hi,
                                  int max_dim) {
    std::map<int, Rep> terms;
    for (int n = deg_lo; n <= deg_hi; ++n) {
        Rep r = random_rep(q, f, max_dim);
        if (!r.is_zero()) terms.emplace(n, std::move(r));
    }
    Complex plain{q, f, terms, {}};
    // choose differentials top down inside the subspace killing the previous one
    std::map<int, RepMap> diffs;
    bool have_prev = false;
    RepMap prev;
    for (int n = deg_hi; n > deg_lo; --n) {
        Rep src = plain.term(n), dst = plain.term(n - 1);
        HomSpace hs = hom_space(src, dst);
        if (hs.dimension == 0) {
            have_prev = false;
            continue;
        }
        std::vector<RepMap> pool;
        if (!have_prev) {
            pool = hs.basis;
        } else {
            // basis of { phi : phi . prev = 0 }
            Vector probe = repmap_flatten(compose(hs.basis[0], prev), f);
            Matrix sys(f, probe.size(), hs.dimension);
            for (int j = 0; j < hs.dimension; ++j) {
                Vector c = repmap_flatten(compose(hs.basis[j], prev), f);
                for (size_t i = 0; i < c.size(); ++i) sys.at(i, j) = c[i];
            }
            for (const Vector& k : sys.kernel_basis()) {
                RepMap acc = RepMap::zero(src, dst);
                for (int j = 0; j < hs.dimension; ++j)
                    if (!k[j].is_zero()) acc = acc + hs.basis[j].scaled(k[j]);
                pool.push_back(std::move(acc));
            }
        }
        RepMap d = RepMap::zero(src, dst);
        for (const auto& b : pool) d = d + b.scaled(Scalar(f, uniform(-1, 1)));
        if (d.is_zero()) {
            have_prev = false;
            continue;
        }
        prev = d;
        have_prev = true;
        diffs.emplace(n, std::move(d));
    }
    return make_complex(q, f, std::move(terms), std::move(diffs));
}

ChainMap RandomGen::random_chain_map(const Complex& x, const Complex& y) {
    ChainMap f = chain_zero(x, y);
    for (const ChainMap& c : cycle_homs(x, y)) f = f + c.scaled(Scalar(x.f, uniform(-1, 1)));
    return f;
}

ChainMap RandomGen::random_cofibration(const Quiver& q, const Field& f, int max_dim) {
    Complex x = random_complex(q, f, -1, 1, max_dim);
    Complex w = random_complex(q, f, -1, 1, max_dim);
    ChainMap g = random_chain_map(w, x);
    return cone(g).from_target;  // X -> cone(g), degreewise split mono
}

}  // namespace orbcat
