#include "orbcat/rep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbcat {

int Rep::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

Rep Rep::zero(const Quiver& q, const Field& f) {
    Rep r{q, f, DimVector(q.vertex_count, 0), {}};
    for (auto [s, t] : q.arrows) {
        (void)s;
        (void)t;
        r.maps.push_back(Matrix::zero(f, 0, 0));
    }
    return r;
}

void Rep::validate() const {
    if ((int)dims.size() != q.vertex_count) throw std::invalid_argument("rep: dims length mismatch");
    if (maps.size() != q.arrows.size()) throw std::invalid_argument("rep: maps length mismatch");
    for (size_t a = 0; a < maps.size(); ++a) {
        auto [s, t] = q.arrows[a];
        if ((int)maps[a].rows() != dims[t - 1] || (int)maps[a].cols() != dims[s - 1])
            throw std::invalid_argument("rep: map shape mismatch at arrow " + std::to_string(a));
        check_same_field(f, maps[a].field());
    }
    for (int d : dims)
        if (d < 0) throw std::invalid_argument("rep: negative dimension");
}

RepMap RepMap::zero(const Rep& from, const Rep& to) {
    RepMap m;
    for (int v = 1; v <= from.q.vertex_count; ++v)
        m.comp.push_back(Matrix::zero(from.f, to.dim(v), from.dim(v)));
    return m;
}

RepMap RepMap::identity(const Rep& m) {
    RepMap r;
    for (int v = 1; v <= m.q.vertex_count; ++v) r.comp.push_back(Matrix::identity(m.f, m.dim(v)));
    return r;
}

RepMap RepMap::operator+(const RepMap& o) const {
    RepMap r;
    for (size_t i = 0; i < comp.size(); ++i) r.comp.push_back(comp[i] + o.comp[i]);
    return r;
}

RepMap RepMap::operator-() const {
    RepMap r;
    for (const auto& c : comp) r.comp.push_back(-c);
    return r;
}

RepMap RepMap::scaled(const Scalar& c) const {
    RepMap r;
    for (const auto& m : comp) r.comp.push_back(m.scaled(c));
    return r;
}

bool RepMap::is_zero() const {
    for (const auto& c : comp)
        if (!c.is_zero()) return false;
    return true;
}

RepMap compose(const RepMap& g, const RepMap& f) {
    RepMap r;
    for (size_t v = 0; v < f.comp.size(); ++v) r.comp.push_back(g.comp[v] * f.comp[v]);
    return r;
}

bool is_intertwiner(const Rep& from, const Rep& to, const RepMap& phi) {
    for (size_t a = 0; a < from.q.arrows.size(); ++a) {
        auto [s, t] = from.q.arrows[a];
        if (!(phi.comp[t - 1] * from.maps[a] == to.maps[a] * phi.comp[s - 1])) return false;
    }
    return true;
}

namespace {

std::vector<int> position_of(const Quiver& q) {
    auto order = path_order(q);
    std::vector<int> pos(q.vertex_count + 1, -1);
    for (int i = 0; i < (int)order.size(); ++i) pos[order[i]] = i;
    return pos;
}

Interval positions_to_interval(const Quiver& q, const std::vector<int>& vertices) {
    auto pos = position_of(q);
    int lo = q.vertex_count, hi = -1;
    for (int v : vertices) {
        lo = std::min(lo, pos[v]);
        hi = std::max(hi, pos[v]);
    }
    if (hi - lo + 1 != (int)vertices.size())
        throw std::logic_error("closure is not an interval; quiver is not type A");
    return {lo, hi};
}

// Arrow index between adjacent path positions, with its direction.
struct PathArrows {
    std::vector<int> order;
    std::vector<int> pos;
    std::map<std::pair<int, int>, int> arrow_at;  // (source,target) -> arrow index

    explicit PathArrows(const Quiver& q) : order(path_order(q)), pos(position_of(q)) {
        for (size_t a = 0; a < q.arrows.size(); ++a) arrow_at[q.arrows[a]] = (int)a;
    }
};

}  // namespace

Rep interval_rep(const Quiver& q, const Field& f, Interval iv) {
    auto order = path_order(q);
    if (iv.a < 0 || iv.b >= (int)order.size() || iv.a > iv.b)
        throw std::invalid_argument("bad interval");
    Rep r{q, f, DimVector(q.vertex_count, 0), {}};
    for (int p = iv.a; p <= iv.b; ++p) r.dims[order[p] - 1] = 1;
    for (auto [s, t] : q.arrows) {
        if (r.dims[s - 1] == 1 && r.dims[t - 1] == 1)
            r.maps.push_back(Matrix::identity(f, 1));
        else
            r.maps.push_back(Matrix::zero(f, r.dims[t - 1], r.dims[s - 1]));
    }
    return r;
}

std::vector<Interval> interval_list(const Quiver& q) {
    int n = (int)path_order(q).size();
    std::vector<Interval> ivs;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) ivs.push_back({a, b});
    return ivs;
}

std::vector<Rep> indecomposables(const Quiver& q, const Field& f) {
    std::vector<Rep> out;
    for (Interval iv : interval_list(q)) out.push_back(interval_rep(q, f, iv));
    return out;
}

namespace {

// Coefficient matrix of the intertwiner system: unknowns are the entries of
// all phi_v (row-major, vertices in order), one equation row per entry of
// phi_t M_a - N_a phi_s for every arrow a.
Matrix hom_system(const Rep& m, const Rep& n) {
    if (!(m.q == n.q)) throw std::invalid_argument("hom_space: quiver mismatch");
    check_same_field(m.f, n.f);
    const Field f = m.f;
    int V = m.q.vertex_count;
    std::vector<int> offset(V + 1, 0);
    for (int v = 0; v < V; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    int unknowns = offset[V];
    int equations = 0;
    for (size_t a = 0; a < m.q.arrows.size(); ++a) {
        auto [s, t] = m.q.arrows[a];
        equations += n.dims[t - 1] * m.dims[s - 1];
    }
    Matrix sys(f, equations, unknowns);
    int row = 0;
    for (size_t a = 0; a < m.q.arrows.size(); ++a) {
        auto [s, t] = m.q.arrows[a];
        int ds = m.dims[s - 1], dt = m.dims[t - 1];
        int es = n.dims[s - 1], et = n.dims[t - 1];
        const Matrix& Ma = m.maps[a];
        const Matrix& Na = n.maps[a];
        for (int r = 0; r < et; ++r)
            for (int c = 0; c < ds; ++c) {
                // (phi_t M_a)[r,c] = sum_k phi_t[r,k] Ma[k,c]
                for (int k = 0; k < dt; ++k)
                    sys.at(row, offset[t - 1] + r * dt + k) =
                        sys.at(row, offset[t - 1] + r * dt + k) + Ma.at(k, c);
                // (N_a phi_s)[r,c] = sum_k Na[r,k] phi_s[k,c]
                for (int k = 0; k < es; ++k)
                    sys.at(row, offset[s - 1] + k * ds + c) =
                        sys.at(row, offset[s - 1] + k * ds + c) - Na.at(r, k);
                ++row;
            }
    }
    return sys;
}

RepMap unpack_solution(const Rep& m, const Rep& n, const Vector& x) {
    RepMap phi;
    int off = 0;
    for (int v = 0; v < m.q.vertex_count; ++v) {
        int r = n.dims[v], c = m.dims[v];
        Matrix mv(m.f, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) mv.at(i, j) = x[off + i * c + j];
        off += r * c;
        phi.comp.push_back(std::move(mv));
    }
    return phi;
}

}  // namespace

HomSpace hom_space(const Rep& m, const Rep& n) {
    Matrix sys = hom_system(m, n);
    HomSpace hs;
    for (const Vector& x : sys.kernel_basis()) hs.basis.push_back(unpack_solution(m, n, x));
    hs.dimension = (int)hs.basis.size();
    return hs;
}

int hom_dim(const Rep& m, const Rep& n) {
    Matrix sys = hom_system(m, n);
    return (int)(sys.cols() - sys.rank());
}

Interval projective_interval(const Quiver& q, int vertex) {
    return positions_to_interval(q, reachable_set(q, vertex));
}

Interval injective_interval(const Quiver& q, int vertex) {
    return positions_to_interval(q, coreachable_set(q, vertex));
}

Rep projective(const Quiver& q, const Field& f, int vertex) {
    return interval_rep(q, f, projective_interval(q, vertex));
}

Rep injective(const Quiver& q, const Field& f, int vertex) {
    return interval_rep(q, f, injective_interval(q, vertex));
}

Rep direct_sum(const Rep& a, const Rep& b) {
    check_same_field(a.f, b.f);
    Rep r{a.q, a.f, DimVector(a.q.vertex_count), {}};
    for (int v = 0; v < a.q.vertex_count; ++v) r.dims[v] = a.dims[v] + b.dims[v];
    for (size_t i = 0; i < a.q.arrows.size(); ++i) {
        auto [s, t] = a.q.arrows[i];
        Matrix top = a.maps[i].hstack(Matrix::zero(a.f, a.dims[t - 1], b.dims[s - 1]));
        Matrix bot = Matrix::zero(a.f, b.dims[t - 1], a.dims[s - 1]).hstack(b.maps[i]);
        r.maps.push_back(top.vstack(bot));
    }
    return r;
}

namespace {

// Multiply along the path from vertex `from` to vertex `to` (inside
// reach(from)), applied to a start vector at `from`.
Vector push_along_path(const Rep& m, const PathArrows& pa, int from, int to, const Vector& start) {
    Vector w = start;
    int cur = pa.pos[from], goal = pa.pos[to];
    int step = goal >= cur ? 1 : -1;
    while (cur != goal) {
        int next = cur + step;
        int sv = pa.order[cur], tv = pa.order[next];
        auto it = pa.arrow_at.find({sv, tv});
        if (it == pa.arrow_at.end()) throw std::logic_error("vertex not reachable along arrows");
        w = m.maps[it->second].apply(w);
        cur = next;
    }
    return w;
}

}  // namespace

Presentation minimal_presentation(const Rep& m) {
    m.validate();
    const Field f = m.f;
    const Quiver& q = m.q;
    PathArrows pa(q);

    Presentation pres;
    pres.p0 = Rep::zero(q, f);
    pres.cover = RepMap::zero(pres.p0, m);

    // projective cover: one P(v) per chosen generator of top(M) at v
    for (int v = 1; v <= q.vertex_count; ++v) {
        // radical at v = sum of images of incoming arrow maps
        Matrix rad(f, m.dim(v), 0);
        for (size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].second == v) rad = rad.cols() ? rad.hstack(m.maps[a]) : m.maps[a];
        if (rad.cols() == 0) rad = Matrix::zero(f, m.dim(v), 0);
        auto gens = extend_column_basis(rad, Matrix::identity(f, m.dim(v)));
        for (size_t g : gens) {
            Rep pv = projective(q, f, v);
            Vector gen(f, m.dim(v));
            gen[g] = Scalar::one(f);
            // component P(v) -> M: at vertex j, the image of the generator
            // pushed along the unique path v -> j
            RepMap col;
            for (int j = 1; j <= q.vertex_count; ++j) {
                if (pv.dim(j) == 0) {
                    col.comp.push_back(Matrix::zero(f, m.dim(j), 0));
                    continue;
                }
                Vector w = push_along_path(m, pa, v, j, gen);
                Matrix cm(f, m.dim(j), 1);
                for (int i = 0; i < m.dim(j); ++i) cm.at(i, 0) = w[i];
                col.comp.push_back(std::move(cm));
            }
            Rep bigger = direct_sum(pres.p0, pv);
            RepMap cover;
            for (int j = 0; j < q.vertex_count; ++j)
                cover.comp.push_back(pres.cover.comp[j].hstack(col.comp[j]));
            pres.p0 = std::move(bigger);
            pres.cover = std::move(cover);
        }
    }
    if (!is_intertwiner(pres.p0, m, pres.cover)) throw std::logic_error("projective cover is not a morphism");

    SubRep k = kernel_rep(pres.p0, m, pres.cover);
    pres.p1 = k.rep;
    pres.incl = k.incl;
    return pres;
}

int ext1_dim(const Rep& m, const Rep& n) {
    if (!(m.q == n.q)) throw std::invalid_argument("ext1_dim: quiver mismatch");
    check_same_field(m.f, n.f);
    Presentation pres = minimal_presentation(m);
    HomSpace h1 = hom_space(pres.p1, n);
    if (h1.dimension == 0) return 0;
    HomSpace h0 = hom_space(pres.p0, n);
    // induced map Hom(P0,N) -> Hom(P1,N): phi -> phi . incl, measured by the
    // rank of the image inside the ambient coordinate space
    int ambient = 0;
    for (int v = 0; v < m.q.vertex_count; ++v) ambient += n.dims[v] * pres.p1.dims[v];
    Matrix image(m.f, ambient, h0.dimension);
    for (int j = 0; j < h0.dimension; ++j) {
        RepMap comp = compose(h0.basis[j], pres.incl);
        int off = 0;
        for (int v = 0; v < m.q.vertex_count; ++v) {
            const Matrix& cv = comp.comp[v];
            for (size_t i = 0; i < cv.rows(); ++i)
                for (size_t c = 0; c < cv.cols(); ++c) image.at(off + i * cv.cols() + c, j) = cv.at(i, c);
            off += (int)(cv.rows() * cv.cols());
        }
    }
    return h1.dimension - (int)image.rank();
}

SubRep kernel_rep(const Rep& from, const Rep& to, const RepMap& phi) {
    check_same_field(from.f, to.f);
    for (int v = 0; v < from.q.vertex_count; ++v)
        if ((int)phi.comp[v].rows() != to.dims[v] || (int)phi.comp[v].cols() != from.dims[v])
            throw std::invalid_argument("kernel_rep: component shape mismatch");
    const Field f = from.f;
    SubRep k;
    k.rep.q = from.q;
    k.rep.f = f;
    std::vector<Matrix> bases;
    for (int v = 0; v < from.q.vertex_count; ++v) {
        auto kb = phi.comp[v].kernel_basis();
        Matrix b = Matrix::from_columns(f, from.dims[v], kb);
        k.rep.dims.push_back((int)kb.size());
        bases.push_back(std::move(b));
    }
    for (size_t a = 0; a < from.q.arrows.size(); ++a) {
        auto [s, t] = from.q.arrows[a];
        Matrix image = from.maps[a] * bases[s - 1];
        auto sol = bases[t - 1].solve_matrix(image);
        if (!sol) throw std::logic_error("kernel is not a subrepresentation");
        k.rep.maps.push_back(std::move(*sol));
    }
    k.incl.comp = bases;
    k.rep.validate();
    return k;
}

Vector repmap_flatten(const RepMap& phi, const Field& f) {
    std::vector<Scalar> entries;
    for (const auto& c : phi.comp)
        for (size_t i = 0; i < c.rows(); ++i)
            for (size_t j = 0; j < c.cols(); ++j) entries.push_back(c.at(i, j));
    if (entries.empty()) return Vector(f, 0);
    return Vector(std::move(entries));
}

Vector coords_in_hom_basis(const HomSpace& hs, const RepMap& phi, const Field& f) {
    Vector amb = repmap_flatten(phi, f);
    Matrix b(f, amb.size(), hs.dimension);
    for (int j = 0; j < hs.dimension; ++j) {
        Vector v = repmap_flatten(hs.basis[j], f);
        for (size_t i = 0; i < amb.size(); ++i) b.at(i, j) = v[i];
    }
    auto x = b.solve(amb);
    if (!x) throw std::logic_error("element outside hom space");
    return *x;
}

namespace {

Vector coords_in(const HomSpace& hs, const RepMap& phi, const Field& f) {
    return coords_in_hom_basis(hs, phi, f);
}

RepMap canonical_inclusion(const Quiver& q, const Field& f, const Rep& sub, const Rep& big) {
    // interval inclusion with identity components on the common support
    RepMap inc;
    for (int v = 1; v <= q.vertex_count; ++v) {
        Matrix c(f, big.dim(v), sub.dim(v));
        if (big.dim(v) == 1 && sub.dim(v) == 1) c.at(0, 0) = Scalar::one(f);
        inc.comp.push_back(std::move(c));
    }
    if (!is_intertwiner(sub, big, inc)) throw std::logic_error("interval inclusion failed");
    return inc;
}

}  // namespace

NuRep nakayama(const Rep& x) {
    const Quiver& q = x.q;
    const Field f = x.f;
    NuRep nu;
    nu.rep.q = q;
    nu.rep.f = f;
    std::vector<Rep> projs;
    for (int v = 1; v <= q.vertex_count; ++v) {
        projs.push_back(projective(q, f, v));
        nu.hom_to_proj.push_back(hom_space(x, projs.back()));
        nu.rep.dims.push_back(nu.hom_to_proj.back().dimension);
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        // W: Hom(X,P(t)) -> Hom(X,P(s)) via the inclusion P(t) -> P(s);
        // the arrow map of nu(X) is its transpose
        RepMap iota = canonical_inclusion(q, f, projs[t - 1], projs[s - 1]);
        const HomSpace& ht = nu.hom_to_proj[t - 1];
        const HomSpace& hsrc = nu.hom_to_proj[s - 1];
        Matrix w(f, hsrc.dimension, ht.dimension);
        for (int j = 0; j < ht.dimension; ++j) {
            Vector c = coords_in(hsrc, compose(iota, ht.basis[j]), f);
            for (int i = 0; i < hsrc.dimension; ++i) w.at(i, j) = c[i];
        }
        nu.rep.maps.push_back(w.transpose());
    }
    nu.rep.validate();
    return nu;
}

RepMap nakayama_map(const Rep& x, const Rep& y, const NuRep& nx, const NuRep& ny, const RepMap& phi) {
    (void)x;
    const Field f = y.f;
    RepMap out;
    for (size_t v = 0; v < ny.hom_to_proj.size(); ++v) {
        const HomSpace& hy = ny.hom_to_proj[v];
        const HomSpace& hx = nx.hom_to_proj[v];
        Matrix c(f, hx.dimension, hy.dimension);
        for (int j = 0; j < hy.dimension; ++j) {
            Vector co = coords_in(hx, compose(hy.basis[j], phi), f);
            for (int i = 0; i < hx.dimension; ++i) c.at(i, j) = co[i];
        }
        out.comp.push_back(c.transpose());
    }
    return out;
}

std::optional<Rep> ar_translate(const Rep& m) {
    m.validate();
    // indecomposables of a type-A quiver are interval modules
    PathArrows pa(m.q);
    int support = 0, lo = m.q.vertex_count, hi = -1;
    for (int v = 1; v <= m.q.vertex_count; ++v) {
        if (m.dim(v) == 0) continue;
        if (m.dim(v) != 1) throw std::invalid_argument("ar_translate: decomposable input (dimension > 1)");
        ++support;
        lo = std::min(lo, pa.pos[v]);
        hi = std::max(hi, pa.pos[v]);
    }
    if (support == 0 || hi - lo + 1 != support)
        throw std::invalid_argument("ar_translate: decomposable or zero input");
    for (size_t a = 0; a < m.q.arrows.size(); ++a) {
        auto [s, t] = m.q.arrows[a];
        if (m.dim(s) == 1 && m.dim(t) == 1 && m.maps[a].at(0, 0).is_zero())
            throw std::invalid_argument("ar_translate: decomposable input (broken interval)");
    }

    Presentation pres = minimal_presentation(m);
    if (pres.p1.is_zero()) return std::nullopt;  // projective
    NuRep n1 = nakayama(pres.p1);
    NuRep n0 = nakayama(pres.p0);
    RepMap nphi = nakayama_map(pres.p1, pres.p0, n1, n0, pres.incl);
    if (!is_intertwiner(n1.rep, n0.rep, nphi)) throw std::logic_error("nakayama image is not a morphism");
    return kernel_rep(n1.rep, n0.rep, nphi).rep;
}

Matrix cartan_matrix(const Quiver& q) {
    validate_quiver(q);
    const Field f = Field::rationals();
    int n = q.vertex_count;
    Matrix c(f, n, n);
    for (int i = 1; i <= n; ++i)
        for (int v : reachable_set(q, i)) c.at(v - 1, i - 1) = Scalar::one(f);
    return c;
}

Matrix coxeter_matrix(const Quiver& q) {
    Matrix c = cartan_matrix(q);
    auto cinv = c.inverse();
    if (!cinv) throw std::logic_error("singular Cartan matrix");
    return -(c.transpose() * (*cinv));
}

}  // namespace orbcat
