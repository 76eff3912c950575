#include "orbcat/orbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orbcat {

namespace {
constexpr int kWalkSlack = 8;
}

OrbitHandle::OrbitHandle(std::shared_ptr<const DerivedModel> model, AutoEquivalence f)
    : model_(std::move(model)), F_(f) {
    h_ = model_->quiver().vertex_count + 1;  // Coxeter number of A_n
    // tau^h = Sigma^{-2} on labels, so F^h = Sigma^{s h - 2 p}
    drift_ = F_.sigma_pow * h_ - 2 * F_.tau_pow;
}

OrbitHandle OrbitHandle::cluster_category(const Quiver& q, const Field& f) {
    return OrbitHandle(std::make_shared<DerivedModel>(q, f), AutoEquivalence{-1, 1});
}

DbIndec OrbitHandle::apply_F(DbIndec x, int n) const {
    long long tp = (long long)F_.tau_pow * n;
    DbIndec y = x;
    for (long long i = 0; i < std::abs(tp); ++i)
        y = tp > 0 ? model_->translate(y) : model_->translate_inv(y);
    y.shift += F_.sigma_pow * n;
    return y;
}

OrbitObj OrbitHandle::canonicalize(DbIndec x) const {
    std::vector<DbIndec> members;
    if (drift_ == 0) {
        // F^h is the identity; the orbit is finite
        DbIndec y = x;
        for (int i = 0; i < h_; ++i) {
            members.push_back(y);
            y = apply_F(y, 1);
        }
    } else {
        int keep_hi = std::abs(F_.sigma_pow) + std::abs(F_.tau_pow);
        int cap = h_ * (std::abs(x.shift) + keep_hi + kWalkSlack) + kWalkSlack * h_;
        for (int dir : {1, -1}) {
            DbIndec y = x;
            int out_streak = 0;
            for (int step = 0; step <= cap; ++step) {
                if (dir == 1 || step > 0) {
                    if (y.shift >= 0 && y.shift <= keep_hi) members.push_back(y);
                }
                bool out = drift_ > 0 ? (dir == 1 ? y.shift > keep_hi : y.shift < 0)
                                      : (dir == 1 ? y.shift < 0 : y.shift > keep_hi);
                out_streak = out ? out_streak + 1 : 0;
                if (out_streak >= h_) break;
                if (step == cap) throw std::logic_error("orbit walk did not terminate");
                y = apply_F(y, dir);
            }
        }
    }
    std::vector<DbIndec> nonneg;
    for (const DbIndec& m : members)
        if (m.shift >= 0) nonneg.push_back(m);
    const std::vector<DbIndec>& pool = nonneg.empty() ? members : nonneg;
    if (pool.empty()) throw std::logic_error("empty orbit walk");
    return OrbitObj{*std::min_element(pool.begin(), pool.end())};
}

std::vector<OrbitObj> OrbitHandle::orbit_indecomposables() const {
    int keep_hi = std::max(1, std::abs(F_.sigma_pow) + std::abs(F_.tau_pow));
    std::set<OrbitObj> seen;
    for (int i = 0; i < model_->module_count(); ++i)
        for (int a = 0; a <= keep_hi; ++a) seen.insert(canonicalize({i, a}));
    return {seen.begin(), seen.end()};
}

OrbitHom OrbitHandle::orbit_hom_dim(DbIndec x, DbIndec y) const {
    if (drift_ == 0)
        throw std::domain_error("orbit hom is not finitely supported: F^" + std::to_string(h_) +
                                " is the identity");
    OrbitHom out;
    int cap = h_ * (std::abs(x.shift - y.shift) + kWalkSlack) + kWalkSlack * h_;
    for (int dir : {1, -1}) {
        int out_streak = 0;
        for (int n = dir == 1 ? 0 : -1;; n += dir) {
            if (std::abs(n) > cap) throw std::logic_error("orbit hom support walk did not terminate");
            DbIndec z = apply_F(y, n);
            int d = model_->db_hom_dim(x, z);
            if (d != 0) {
                out.support[n] = d;
                out.total += d;
                out_streak = 0;
            } else {
                bool beyond = dir * drift_ > 0 ? z.shift > x.shift + 1 : z.shift < x.shift;
                out_streak = beyond ? out_streak + 1 : 0;
            }
            if (out_streak >= h_) break;
        }
    }
    if (!out.support.empty()) {
        int lo = out.support.begin()->first, hi = out.support.rbegin()->first;
        for (int n : {lo - 2, lo - 1, hi + 1, hi + 2})
            if (model_->db_hom_dim(x, apply_F(y, n)) != 0)
                throw std::logic_error("nonzero orbit hom at padded window edge");
    }
    return out;
}

bool OrbitHandle::verify_2cy(DbIndec x, DbIndec y) const {
    return orbit_hom_dim(x, y).total == orbit_hom_dim(y, DerivedModel::suspend(x, 2)).total;
}

OrbitHandle::DgOrbitHom OrbitHandle::dg_orbit_hom(DbIndec x, DbIndec y, int deg_lo, int deg_hi) const {
    if (drift_ == 0) throw std::domain_error("dg orbit hom does not stabilize: F^h is the identity");
    if (deg_lo > deg_hi) throw std::invalid_argument("empty degree window");

    auto stage_dims = [&](int p) {
        std::map<int, int> acc;
        for (int d = deg_lo; d <= deg_hi; ++d) acc[d] = 0;
        Complex rp = realization(apply_F(y, p));
        int out_streak = 0;
        for (int n = 0;; ++n) {
            if (n > 64 * (std::abs(p) + std::abs(x.shift) + std::abs(y.shift) + kWalkSlack) + 64 * h_)
                throw std::logic_error("dg orbit stage walk did not terminate");
            Complex an = realization(apply_F(x, n));
            int top = rp.hi() - an.lo(), bottom = rp.lo() - an.hi();
            // escaped: the hom-complex window has passed the degree window on
            // the side it drifts towards, which is monotone per tau-period
            bool escaped = drift_ > 0 ? top < deg_lo : bottom > deg_hi;
            if (escaped) {
                if (++out_streak >= h_) break;
                continue;
            }
            out_streak = 0;
            if (top < deg_lo || bottom > deg_hi) continue;
            auto hd = homology_dims(hom_complex(an, rp).total);
            for (const auto& [deg, dv] : hd)
                if (deg >= deg_lo && deg <= deg_hi) acc[deg] += dv[0];
        }
        return acc;
    };

    // no stage beyond p_escape contributes inside the degree window
    int p_escape = 0;
    {
        int streak = 0, p = 0;
        int cap = h_ * (std::abs(x.shift - y.shift) + std::abs(deg_lo) + std::abs(deg_hi) + kWalkSlack) +
                  kWalkSlack * h_;
        while (streak < h_) {
            if (p > cap) throw std::logic_error("dg orbit stabilization walk did not terminate");
            int s = apply_F(y, p).shift;
            bool outside = drift_ > 0 ? s > x.shift + deg_hi + 1 : s < x.shift + deg_lo;
            streak = outside ? streak + 1 : 0;
            ++p;
        }
        p_escape = p - 1;
    }

    DgOrbitHom out;
    out.dims = stage_dims(p_escape);
    out.stabilized_at = p_escape;
    for (int p = 0; p < p_escape; ++p)
        if (stage_dims(p) == out.dims) {
            out.stabilized_at = p;
            break;
        }
    return out;
}

Complex OrbitHandle::realization(DbIndec x) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = realizations_.find(x);
    if (it == realizations_.end()) it = realizations_.emplace(x, model_->realize(x)).first;
    return it->second;
}

const OrbitHandle::NuShift& OrbitHandle::nu_shift(DbIndec a) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = nu_shifts_.find(a);
        if (it != nu_shifts_.end()) return it->second;
    }
    Complex r = realization(a);
    NuShift ns;
    std::map<int, Rep> terms;
    std::map<int, RepMap> diffs;
    for (const auto& [k, t] : r.terms) ns.nu_terms.emplace(k, nakayama(t));
    for (const auto& [k, t] : ns.nu_terms)
        if (!t.rep.is_zero()) terms.emplace(k - 2, t.rep);
    for (const auto& [k, d] : r.diffs) {
        RepMap nd = nakayama_map(r.term(k), r.term(k - 1), ns.nu_terms.at(k), ns.nu_terms.at(k - 1), d);
        diffs.emplace(k - 2, std::move(nd));
    }
    ns.w = make_complex(r.q, r.f, std::move(terms), std::move(diffs));
    std::lock_guard<std::mutex> lock(mu_);
    return nu_shifts_.emplace(a, std::move(ns)).first->second;
}

const HomBasisData& OrbitHandle::pair_data(DbIndec src, DbIndec tgt) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = pair_data_.find({src, tgt});
        if (it != pair_data_.end()) return it->second;
    }
    HomBasisData d = hom_basis_data(realization(src), realization(tgt));
    std::lock_guard<std::mutex> lock(mu_);
    return pair_data_.emplace(std::make_pair(src, tgt), std::move(d)).first->second;
}

const OrbitHandle::Equivalence& OrbitHandle::equivalence(DbIndec a) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = equivalences_.find(a);
        if (it != equivalences_.end()) return it->second;
    }
    // Hom classes out of the projective realization compute derived homs, so
    // this space is a line and its generator is a quasi-isomorphism.
    DbIndec b = apply_F(a, -1);
    Complex rb = realization(b);
    const NuShift& ns = nu_shift(a);
    HomBasisData to = hom_basis_data(rb, ns.w);
    if (to.dimension() != 1) throw std::logic_error("equivalence search: hom space is not a line");
    ChainMap u = to.reps[0];
    if (!is_weak_equivalence(u)) throw std::logic_error("equivalence candidate is not a quasi-isomorphism");
    Equivalence e{std::move(u)};
    std::lock_guard<std::mutex> lock(mu_);
    return equivalences_.emplace(a, std::move(e)).first->second;
}

ChainMap OrbitHandle::transport_down(const ChainMap& f, DbIndec src, DbIndec tgt) const {
    const NuShift& na = nu_shift(src);
    const NuShift& nb = nu_shift(tgt);
    // Sigma^{-2} nu f on the cached term data
    ChainMap nf{na.w, nb.w, {}};
    for (const auto& [k, c] : f.comp) {
        RepMap nc = nakayama_map(f.source.term(k), f.target.term(k), na.nu_terms.at(k),
                                 nb.nu_terms.at(k), c);
        if (!nc.is_zero()) nf.comp.emplace(k - 2, std::move(nc));
    }
    // Lift through the projective realizations: the unique class g with
    // u_tgt . g homotopic to (Sigma^{-2} nu f) . u_src.
    DbIndec dsrc = apply_F(src, -1), dtgt = apply_F(tgt, -1);
    ChainMap target = chain_compose(nf, equivalence(src).to_w);
    HomBasisData mixed = hom_basis_data(realization(dsrc), nb.w);
    const HomBasisData& down = pair_data(dsrc, dtgt);
    const ChainMap& utgt = equivalence(tgt).to_w;
    const Field& fld = model_->field();
    int dim = down.dimension();
    if (mixed.dimension() != dim) throw std::logic_error("lift: hom class spaces differ in dimension");
    if (dim == 0) return chain_zero(realization(dsrc), realization(dtgt));
    Matrix m(fld, dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vector c = mixed.class_coords(chain_compose(utgt, down.reps[j]));
        for (int i = 0; i < dim; ++i) m.at(i, j) = c[i];
    }
    auto sol = m.solve(mixed.class_coords(target));
    if (!sol) throw std::logic_error("lift through quasi-isomorphism failed");
    ChainMap out = chain_zero(realization(dsrc), realization(dtgt));
    for (int j = 0; j < dim; ++j)
        if (!(*sol)[j].is_zero()) out = out + down.reps[j].scaled((*sol)[j]);
    return out;
}

ChainMap OrbitHandle::transport_up(const ChainMap& f, DbIndec src, DbIndec tgt) const {
    DbIndec usrc = apply_F(src, 1), utgt = apply_F(tgt, 1);
    const HomBasisData& up = pair_data(usrc, utgt);
    const HomBasisData& down = pair_data(src, tgt);
    if (up.dimension() != down.dimension()) throw std::logic_error("transport spaces differ in dimension");
    const Field& fld = model_->field();
    int dim = up.dimension();
    if (dim == 0) return chain_zero(realization(usrc), realization(utgt));
    Matrix m(fld, dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vector c = down.class_coords(transport_down(up.reps[j], usrc, utgt));
        for (int i = 0; i < dim; ++i) m.at(i, j) = c[i];
    }
    auto minv = m.inverse();
    if (!minv) throw std::logic_error("transport matrix is singular");
    Vector target = (*minv).apply(down.class_coords(f));
    ChainMap out = chain_zero(realization(usrc), realization(utgt));
    for (int j = 0; j < dim; ++j)
        if (!target[j].is_zero()) out = out + up.reps[j].scaled(target[j]);
    return out;
}

ChainMap OrbitHandle::transport(const ChainMap& f, DbIndec src, DbIndec tgt, int n) const {
    ChainMap cur = f;
    DbIndec s = src, t = tgt;
    for (int i = 0; i < std::abs(n); ++i) {
        if (n > 0) {
            cur = transport_up(cur, s, t);
            s = apply_F(s, 1);
            t = apply_F(t, 1);
        } else {
            cur = transport_down(cur, s, t);
            s = apply_F(s, -1);
            t = apply_F(t, -1);
        }
    }
    return cur;
}

Vector OrbitHandle::class_coords(DbIndec src, DbIndec tgt, const ChainMap& f) const {
    return pair_data(src, tgt).class_coords(f);
}

int OrbitHandle::class_space_dim(DbIndec src, DbIndec tgt) const {
    return pair_data(src, tgt).dimension();
}

ChainMap OrbitHandle::class_rep(DbIndec src, DbIndec tgt, const Vector& coords) const {
    const HomBasisData& d = pair_data(src, tgt);
    ChainMap out = chain_zero(realization(src), realization(tgt));
    for (int j = 0; j < d.dimension(); ++j)
        if (!coords[j].is_zero()) out = out + d.reps[j].scaled(coords[j]);
    return out;
}

OrbitMorphism OrbitHandle::orbit_identity(DbIndec x) const {
    OrbitMorphism m{x, x, {}};
    m.comp.emplace(0, chain_identity(realization(x)));
    return m;
}

OrbitMorphism OrbitHandle::orbit_zero(DbIndec x, DbIndec y) const { return OrbitMorphism{x, y, {}}; }

OrbitMorphism OrbitHandle::orbit_compose(const OrbitMorphism& g, const OrbitMorphism& f) const {
    if (!(f.target == g.source)) throw std::invalid_argument("orbit compose: target/source mismatch");
    OrbitMorphism out{f.source, g.target, {}};
    for (const auto& [n, fn] : f.comp) {
        for (const auto& [p, gp] : g.comp) {
            // (F^n g_p) . f_n lands in component n + p
            ChainMap moved = transport(gp, g.source, apply_F(g.target, p), n);
            ChainMap term = chain_compose(moved, fn);
            auto it = out.comp.find(n + p);
            if (it == out.comp.end())
                out.comp.emplace(n + p, std::move(term));
            else
                it->second = it->second + term;
        }
    }
    for (auto it = out.comp.begin(); it != out.comp.end();)
        it = it->second.is_zero_map() ? out.comp.erase(it) : std::next(it);
    return out;
}

bool OrbitHandle::orbit_morphism_equal(const OrbitMorphism& a, const OrbitMorphism& b) const {
    if (!(a.source == b.source) || !(a.target == b.target)) return false;
    std::set<int> keys;
    for (const auto& [n, c] : a.comp) keys.insert(n);
    for (const auto& [n, c] : b.comp) keys.insert(n);
    for (int n : keys) {
        DbIndec t = apply_F(a.target, n);
        Complex rs = realization(a.source), rt = realization(t);
        auto pick = [&](const OrbitMorphism& m) {
            auto it = m.comp.find(n);
            return it == m.comp.end() ? chain_zero(rs, rt) : it->second;
        };
        if (!is_chain_homotopic(pick(a), pick(b))) return false;
    }
    return true;
}

}  // namespace orbcat
