#include "orbcat/complex.hpp"

#include <stdexcept>

namespace orbcat {

namespace {

const Quiver& point_quiver() {
    static const Quiver q{1, {}};
    return q;
}

Rep plain_space(const Field& f, int dim) {
    return Rep{point_quiver(), f, {dim}, {}};
}

Scalar sign_of(const Field& f, int n) {
    return Scalar(f, (n % 2 == 0) ? 1 : -1);
}

}  // namespace

Rep Complex::term(int n) const {
    auto it = terms.find(n);
    if (it != terms.end()) return it->second;
    return Rep::zero(q, f);
}

RepMap Complex::diff(int n) const {
    auto it = diffs.find(n);
    if (it != diffs.end()) return it->second;
    return RepMap::zero(term(n), term(n - 1));
}

int Complex::lo() const { return terms.empty() ? 0 : terms.begin()->first; }
int Complex::hi() const { return terms.empty() ? 0 : terms.rbegin()->first; }

void Complex::validate() const {
    for (const auto& [n, t] : terms) {
        (void)n;
        if (!(t.q == q)) throw std::invalid_argument("complex: term over wrong quiver");
        check_same_field(f, t.f);
        t.validate();
        if (t.is_zero()) throw std::logic_error("complex: zero term stored");
    }
    for (const auto& [n, d] : diffs) {
        Rep src = term(n), dst = term(n - 1);
        for (int v = 0; v < q.vertex_count; ++v)
            if ((int)d.comp[v].rows() != dst.dims[v] || (int)d.comp[v].cols() != src.dims[v])
                throw std::invalid_argument("complex: differential shape mismatch at degree " + std::to_string(n));
        if (!is_intertwiner(src, dst, d))
            throw std::invalid_argument("complex: differential is not a morphism at degree " + std::to_string(n));
        if (d.is_zero()) throw std::logic_error("complex: zero differential stored");
    }
    for (const auto& [n, d] : diffs) {
        auto up = diffs.find(n + 1);
        if (up == diffs.end()) continue;
        if (!compose(d, up->second).is_zero())
            throw std::invalid_argument("complex: d.d != 0 at degree " + std::to_string(n + 1));
    }
}

Complex make_complex(const Quiver& q, const Field& f, std::map<int, Rep> terms,
                     std::map<int, RepMap> diffs) {
    Complex c{q, f, {}, {}};
    for (auto& [n, t] : terms)
        if (!t.is_zero()) c.terms.emplace(n, std::move(t));
    for (auto& [n, d] : diffs)
        if (!d.is_zero() && c.terms.count(n) && c.terms.count(n - 1)) c.diffs.emplace(n, std::move(d));
    c.validate();
    return c;
}

Complex stalk_complex(const Rep& m, int degree) {
    std::map<int, Rep> terms;
    terms.emplace(degree, m);
    return make_complex(m.q, m.f, std::move(terms), {});
}

Complex zero_complex(const Quiver& q, const Field& f) { return Complex{q, f, {}, {}}; }

Complex complex_direct_sum(const Complex& a, const Complex& b) {
    if (!(a.q == b.q)) throw std::invalid_argument("complex sum: quiver mismatch");
    check_same_field(a.f, b.f);
    std::map<int, Rep> terms;
    std::map<int, RepMap> diffs;
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    for (int n = lo; n <= hi; ++n) {
        Rep t = direct_sum(a.term(n), b.term(n));
        if (!t.is_zero()) terms.emplace(n, std::move(t));
    }
    for (int n = lo; n <= hi + 1; ++n) {
        RepMap da = a.diff(n), db = b.diff(n);
        RepMap d;
        for (int v = 0; v < a.q.vertex_count; ++v) {
            Matrix top = da.comp[v].hstack(
                Matrix::zero(a.f, da.comp[v].rows(), db.comp[v].cols()));
            Matrix bot =
                Matrix::zero(a.f, db.comp[v].rows(), da.comp[v].cols()).hstack(db.comp[v]);
            d.comp.push_back(top.vstack(bot));
        }
        diffs.emplace(n, std::move(d));
    }
    return make_complex(a.q, a.f, std::move(terms), std::move(diffs));
}

Complex shift_complex(const Complex& x, int n) {
    std::map<int, Rep> terms;
    std::map<int, RepMap> diffs;
    Scalar s = sign_of(x.f, n);
    for (const auto& [k, t] : x.terms) terms.emplace(k + n, t);
    for (const auto& [k, d] : x.diffs) diffs.emplace(k + n, d.scaled(s));
    return make_complex(x.q, x.f, std::move(terms), std::move(diffs));
}

RepMap GradedMap::component(int k) const {
    auto it = comp.find(k);
    if (it != comp.end()) return it->second;
    return RepMap::zero(source.term(k), target.term(k + degree));
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    if (degree != o.degree) throw std::invalid_argument("graded map sum: degree mismatch");
    GradedMap r = *this;
    for (const auto& [k, c] : o.comp) {
        auto it = r.comp.find(k);
        if (it == r.comp.end())
            r.comp.emplace(k, c);
        else
            it->second = it->second + c;
    }
    r.prune();
    return r;
}

GradedMap GradedMap::operator-() const { return scaled(Scalar(source.f, -1)); }

GradedMap GradedMap::scaled(const Scalar& c) const {
    GradedMap r = *this;
    for (auto& [k, m] : r.comp) {
        (void)k;
        m = m.scaled(c);
    }
    r.prune();
    return r;
}

void GradedMap::prune() {
    for (auto it = comp.begin(); it != comp.end();)
        it = it->second.is_zero() ? comp.erase(it) : std::next(it);
}

GradedMap graded_zero(const Complex& x, const Complex& y, int degree) {
    return GradedMap{x, y, degree, {}};
}

GradedMap gm_compose(const GradedMap& g, const GradedMap& f) {
    if (!(g.source == f.target)) throw std::invalid_argument("gm_compose: source/target mismatch");
    GradedMap r{f.source, g.target, f.degree + g.degree, {}};
    for (const auto& [k, fk] : f.comp) {
        auto it = g.comp.find(k + f.degree);
        if (it == g.comp.end()) continue;
        RepMap c = compose(it->second, fk);
        if (!c.is_zero()) r.comp.emplace(k, std::move(c));
    }
    return r;
}

GradedMap hom_differential(const GradedMap& f) {
    GradedMap r{f.source, f.target, f.degree - 1, {}};
    if (f.comp.empty()) return r;
    int klo = f.comp.begin()->first, khi = f.comp.rbegin()->first;
    Scalar s = sign_of(f.source.f, f.degree);
    for (int k = klo; k <= khi + 1; ++k) {
        // (df)_k = d_Y f_k - (-1)^n f_{k-1} d_X
        RepMap a = compose(f.target.diff(k + f.degree), f.component(k));
        RepMap b = compose(f.component(k - 1), f.source.diff(k)).scaled(s);
        RepMap c = a + (-b);
        if (!c.is_zero()) r.comp.emplace(k, std::move(c));
    }
    return r;
}

RepMap ChainMap::component(int k) const {
    auto it = comp.find(k);
    if (it != comp.end()) return it->second;
    return RepMap::zero(source.term(k), target.term(k));
}

GradedMap ChainMap::as_graded() const { return GradedMap{source, target, 0, comp}; }

ChainMap ChainMap::operator+(const ChainMap& o) const {
    GradedMap s = as_graded() + o.as_graded();
    return ChainMap{source, target, std::move(s.comp)};
}

ChainMap ChainMap::operator-() const { return scaled(Scalar(source.f, -1)); }

ChainMap ChainMap::scaled(const Scalar& c) const {
    GradedMap s = as_graded().scaled(c);
    return ChainMap{source, target, std::move(s.comp)};
}

void ChainMap::validate() const {
    for (const auto& [k, c] : comp) {
        Rep src = source.term(k), dst = target.term(k);
        for (int v = 0; v < source.q.vertex_count; ++v)
            if ((int)c.comp[v].rows() != dst.dims[v] || (int)c.comp[v].cols() != src.dims[v])
                throw std::invalid_argument("chain map: component shape mismatch at degree " + std::to_string(k));
        if (!is_intertwiner(src, dst, c))
            throw std::invalid_argument("chain map: component is not a morphism at degree " + std::to_string(k));
    }
    if (!hom_differential(as_graded()).is_zero_map())
        throw std::invalid_argument("chain map: does not commute with the differentials");
}

ChainMap chain_identity(const Complex& x) {
    ChainMap f{x, x, {}};
    for (const auto& [k, t] : x.terms) f.comp.emplace(k, RepMap::identity(t));
    return f;
}

ChainMap chain_zero(const Complex& x, const Complex& y) { return ChainMap{x, y, {}}; }

ChainMap chain_from_graded(const GradedMap& g) {
    if (g.degree != 0) throw std::invalid_argument("chain map must have degree 0");
    ChainMap f{g.source, g.target, g.comp};
    f.validate();
    return f;
}

ChainMap chain_compose(const ChainMap& g, const ChainMap& f) {
    GradedMap c = gm_compose(g.as_graded(), f.as_graded());
    return ChainMap{f.source, g.target, std::move(c.comp)};
}

ChainMap shift_map(const ChainMap& f, int n) {
    ChainMap r{shift_complex(f.source, n), shift_complex(f.target, n), {}};
    for (const auto& [k, c] : f.comp) r.comp.emplace(k + n, c);
    return r;
}

namespace {

ConeData cone_with_sign(const ChainMap& f, int fsign) {
    f.validate();
    const Complex& x = f.source;
    const Complex& y = f.target;
    const Field& fld = x.f;
    const Quiver& q = x.q;
    if (!(q == y.q)) throw std::invalid_argument("cone: quiver mismatch");

    std::map<int, Rep> terms;
    std::map<int, RepMap> diffs;
    int lo = std::min(y.lo(), x.lo() + 1) - 1, hi = std::max(y.hi(), x.hi() + 1) + 1;
    for (int k = lo; k <= hi; ++k) {
        Rep t = direct_sum(y.term(k), x.term(k - 1));
        if (!t.is_zero()) terms.emplace(k, std::move(t));
    }
    Scalar fs(fld, fsign);
    for (int k = lo; k <= hi; ++k) {
        // D(y, x) = (dy + fx, -dx)
        RepMap dy = y.diff(k), dxm = x.diff(k - 1), fk = f.component(k - 1);
        RepMap d;
        for (int v = 0; v < q.vertex_count; ++v) {
            Matrix top = dy.comp[v].hstack(fk.comp[v].scaled(fs));
            Matrix bot = Matrix::zero(fld, dxm.comp[v].rows(), dy.comp[v].cols())
                             .hstack(dxm.comp[v].scaled(Scalar(fld, -1)));
            d.comp.push_back(top.vstack(bot));
        }
        diffs.emplace(k, std::move(d));
    }
    ConeData out;
    out.cone = make_complex(q, fld, std::move(terms), std::move(diffs));

    out.from_target = ChainMap{y, out.cone, {}};
    for (const auto& [k, t] : y.terms) {
        RepMap inc;
        for (int v = 1; v <= q.vertex_count; ++v) {
            Matrix m = Matrix::identity(fld, t.dim(v))
                           .vstack(Matrix::zero(fld, x.term(k - 1).dim(v), t.dim(v)));
            inc.comp.push_back(std::move(m));
        }
        out.from_target.comp.emplace(k, std::move(inc));
    }
    out.from_target.validate();

    Complex sx = shift_complex(x, 1);
    out.to_shift_source = ChainMap{out.cone, sx, {}};
    for (const auto& [k, t] : out.cone.terms) {
        (void)t;
        if (x.term(k - 1).is_zero()) continue;
        RepMap pr;
        for (int v = 1; v <= q.vertex_count; ++v) {
            Matrix m = Matrix::zero(fld, x.term(k - 1).dim(v), y.term(k).dim(v))
                           .hstack(Matrix::identity(fld, x.term(k - 1).dim(v)));
            pr.comp.push_back(std::move(m));
        }
        out.to_shift_source.comp.emplace(k, std::move(pr));
    }
    if (fsign == 1) out.to_shift_source.validate();

    out.universal = GradedMap{x, out.cone, 1, {}};
    for (const auto& [k, t] : x.terms) {
        RepMap inc;
        for (int v = 1; v <= q.vertex_count; ++v) {
            Matrix m = Matrix::zero(fld, y.term(k + 1).dim(v), t.dim(v))
                           .vstack(Matrix::identity(fld, t.dim(v)));
            inc.comp.push_back(std::move(m));
        }
        out.universal.comp.emplace(k, std::move(inc));
    }
    return out;
}

}  // namespace

ConeData cone(const ChainMap& f) { return cone_with_sign(f, 1); }

Complex cone_complex(const ChainMap& f) { return cone(f).cone; }

HomComplex hom_complex(const Complex& x, const Complex& y) {
    if (!(x.q == y.q)) throw std::invalid_argument("hom_complex: quiver mismatch");
    check_same_field(x.f, y.f);
    const Field& f = x.f;
    HomComplex hc;
    hc.x = x;
    hc.y = y;
    if (x.is_zero() || y.is_zero()) {
        hc.total = zero_complex(point_quiver(), f);
        return hc;
    }
    int nlo = y.lo() - x.hi(), nhi = y.hi() - x.lo();
    std::map<int, Rep> terms;
    for (int n = nlo; n <= nhi; ++n) {
        std::vector<HomComplex::Block> blocks;
        int off = 0;
        for (int k = x.lo(); k <= x.hi(); ++k) {
            if (!x.has_term(k) || !y.has_term(k + n)) continue;
            HomSpace hs = hom_space(x.term(k), y.term(k + n));
            if (hs.dimension == 0) continue;
            blocks.push_back({k, std::move(hs), off});
            off += blocks.back().basis.dimension;
        }
        if (off > 0) {
            hc.blocks.emplace(n, std::move(blocks));
            terms.emplace(n, plain_space(f, off));
        }
    }
    std::map<int, RepMap> diffs;
    for (int n = nlo; n <= nhi; ++n) {
        auto src = hc.blocks.find(n);
        auto dst = hc.blocks.find(n - 1);
        if (src == hc.blocks.end() || dst == hc.blocks.end()) continue;
        int rows = 0, cols = 0;
        for (const auto& b : dst->second) rows += b.basis.dimension;
        for (const auto& b : src->second) cols += b.basis.dimension;
        Matrix d(f, rows, cols);
        for (const auto& sb : src->second) {
            for (int j = 0; j < sb.basis.dimension; ++j) {
                GradedMap g{x, y, n, {}};
                g.comp.emplace(sb.k, sb.basis.basis[j]);
                GradedMap dg = hom_differential(g);
                for (const auto& db : dst->second) {
                    auto it = dg.comp.find(db.k);
                    if (it == dg.comp.end()) continue;
                    Vector c = coords_in_hom_basis(db.basis, it->second, f);
                    for (int i = 0; i < db.basis.dimension; ++i)
                        d.at(db.offset + i, sb.offset + j) = c[i];
                }
            }
        }
        if (!d.is_zero()) {
            RepMap dm;
            dm.comp.push_back(std::move(d));
            diffs.emplace(n, std::move(dm));
        }
    }
    hc.total = make_complex(point_quiver(), f, std::move(terms), std::move(diffs));
    return hc;
}

Vector HomComplex::coords(const GradedMap& g) const {
    const Field& f = x.f;
    auto it = blocks.find(g.degree);
    int total_dim = dim(g.degree);
    Vector v(f, total_dim);
    if (it == blocks.end()) {
        if (!g.comp.empty()) throw std::invalid_argument("graded map outside hom complex support");
        return v;
    }
    for (const auto& [k, c] : g.comp) {
        bool found = false;
        for (const auto& b : it->second) {
            if (b.k != k) continue;
            Vector co = coords_in_hom_basis(b.basis, c, f);
            for (int i = 0; i < b.basis.dimension; ++i) v[b.offset + i] = co[i];
            found = true;
            break;
        }
        if (!found && !c.is_zero())
            throw std::invalid_argument("graded map component outside hom complex blocks");
    }
    return v;
}

GradedMap HomComplex::from_coords(int degree, const Vector& v) const {
    GradedMap g{x, y, degree, {}};
    auto it = blocks.find(degree);
    if (it == blocks.end()) {
        if (v.size() != 0) throw std::invalid_argument("from_coords: no blocks at this degree");
        return g;
    }
    for (const auto& b : it->second) {
        RepMap acc = RepMap::zero(x.term(b.k), y.term(b.k + degree));
        bool nonzero = false;
        for (int i = 0; i < b.basis.dimension; ++i) {
            const Scalar& c = v[b.offset + i];
            if (c.is_zero()) continue;
            acc = acc + b.basis.basis[i].scaled(c);
            nonzero = true;
        }
        if (nonzero) g.comp.emplace(b.k, std::move(acc));
    }
    g.prune();
    return g;
}

Matrix HomComplex::diff_matrix(int degree) const {
    auto it = total.diffs.find(degree);
    if (it != total.diffs.end()) return it->second.comp[0];
    return Matrix::zero(x.f, dim(degree - 1), dim(degree));
}

std::vector<ChainMap> cycle_homs(const Complex& x, const Complex& y) {
    HomComplex hc = hom_complex(x, y);
    std::vector<ChainMap> out;
    for (const Vector& v : hc.diff_matrix(0).kernel_basis())
        out.push_back(chain_from_graded(hc.from_coords(0, v)));
    return out;
}

HomologyHoms homology_homs(const Complex& x, const Complex& y) {
    HomBasisData d = hom_basis_data(x, y);
    HomologyHoms out;
    out.dimension = d.dimension();
    for (const auto& r : d.reps) out.basis.push_back(HomotopyClass{r});
    return out;
}

HomBasisData hom_basis_data(const Complex& x, const Complex& y) {
    HomBasisData d{hom_complex(x, y), {}, Matrix(), Matrix()};
    const Field& f = x.f;
    Matrix d0 = d.hc.diff_matrix(0);
    auto cycles = d0.kernel_basis();
    Matrix cycle_cols = Matrix::from_columns(f, d.hc.dim(0), cycles);
    d.boundary_cols = d.hc.diff_matrix(1);
    auto accepted = extend_column_basis(d.boundary_cols, cycle_cols);
    d.rep_cols = Matrix(f, d.hc.dim(0), accepted.size());
    for (size_t j = 0; j < accepted.size(); ++j) {
        for (size_t i = 0; i < (size_t)d.hc.dim(0); ++i) d.rep_cols.at(i, j) = cycles[accepted[j]][i];
        d.reps.push_back(chain_from_graded(d.hc.from_coords(0, cycles[accepted[j]])));
    }
    return d;
}

Vector HomBasisData::class_coords(const ChainMap& f) const {
    const Field& fld = hc.x.f;
    Vector c = hc.coords(f.as_graded());
    Matrix sys = rep_cols.hstack(boundary_cols);
    auto sol = sys.solve(c);
    if (!sol) throw std::logic_error("cycle not in span of homology basis and boundaries");
    Vector out(fld, reps.size());
    for (size_t i = 0; i < reps.size(); ++i) out[i] = (*sol)[i];
    return out;
}

bool is_nullhomotopic(const ChainMap& f) {
    HomComplex hc = hom_complex(f.source, f.target);
    Vector c = hc.coords(f.as_graded());
    return hc.diff_matrix(1).solve(c).has_value();
}

bool is_chain_homotopic(const ChainMap& f, const ChainMap& g) { return is_nullhomotopic(f + (-g)); }

ComplexHomology homology(const Complex& c) {
    ComplexHomology h;
    if (c.is_zero()) return h;
    const Field& f = c.f;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        std::vector<ComplexHomology::Piece> per_vertex;
        RepMap dn = c.diff(n), dup = c.diff(n + 1);
        for (int v = 0; v < c.q.vertex_count; ++v) {
            auto cyc = dn.comp[v].kernel_basis();
            Matrix cycles = Matrix::from_columns(f, c.term(n).dims[v], cyc);
            Matrix bounds = dup.comp[v];
            auto accepted = extend_column_basis(bounds, cycles);
            Matrix reps(f, c.term(n).dims[v], accepted.size());
            for (size_t j = 0; j < accepted.size(); ++j)
                for (size_t i = 0; i < (size_t)c.term(n).dims[v]; ++i) reps.at(i, j) = cyc[accepted[j]][i];
            per_vertex.push_back({bounds, std::move(reps)});
        }
        h.pieces.emplace(n, std::move(per_vertex));
    }
    return h;
}

DimVector ComplexHomology::dims(int degree, int vertex_count) const {
    DimVector d(vertex_count, 0);
    auto it = pieces.find(degree);
    if (it == pieces.end()) return d;
    for (int v = 0; v < vertex_count; ++v) d[v] = (int)it->second[v].reps.cols();
    return d;
}

std::map<int, DimVector> homology_dims(const Complex& c) {
    std::map<int, DimVector> out;
    if (c.is_zero()) return out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        DimVector d(c.q.vertex_count, 0);
        RepMap dn = c.diff(n), dup = c.diff(n + 1);
        bool any = false;
        for (int v = 0; v < c.q.vertex_count; ++v) {
            int kerdim = (int)(dn.comp[v].cols() - dn.comp[v].rank());
            d[v] = kerdim - (int)dup.comp[v].rank();
            if (d[v] != 0) any = true;
        }
        if (any) out.emplace(n, std::move(d));
    }
    return out;
}

bool is_acyclic(const Complex& c) { return homology_dims(c).empty(); }

Matrix homology_induced(const ComplexHomology& hx, const ComplexHomology& hy, const ChainMap& f,
                        int degree, int vertex) {
    const Field& fld = f.source.f;
    auto px = hx.pieces.find(degree);
    auto py = hy.pieces.find(degree);
    int xdim = px == hx.pieces.end() ? 0 : (int)px->second[vertex].reps.cols();
    int ydim = py == hy.pieces.end() ? 0 : (int)py->second[vertex].reps.cols();
    Matrix out(fld, ydim, xdim);
    if (xdim == 0 || ydim == 0) return out;
    const auto& piece_y = py->second[vertex];
    Matrix sys = piece_y.reps.hstack(piece_y.boundaries);
    Matrix fx = f.component(degree).comp[vertex] * px->second[vertex].reps;
    for (int j = 0; j < xdim; ++j) {
        auto sol = sys.solve(fx.column_vector(j));
        if (!sol) throw std::logic_error("image of a cycle is not a cycle");
        for (int i = 0; i < ydim; ++i) out.at(i, j) = (*sol)[i];
    }
    return out;
}

bool is_cofibration(const ChainMap& f) {
    f.validate();
    int lo = std::min(f.source.lo(), f.target.lo());
    int hi = std::max(f.source.hi(), f.target.hi());
    for (int k = lo; k <= hi; ++k) {
        RepMap c = f.component(k);
        for (int v = 0; v < f.source.q.vertex_count; ++v)
            if (c.comp[v].rank() != c.comp[v].cols()) return false;
    }
    return true;
}

Complex quotient_complex(const ChainMap& f) {
    if (!is_cofibration(f)) throw std::invalid_argument("quotient_complex needs a cofibration");
    const Complex& y = f.target;
    const Field& fld = y.f;
    int V = y.q.vertex_count;

    // per degree/vertex: projection T and section S of Y_n(v) / im f_n(v)
    std::map<int, std::vector<std::pair<Matrix, Matrix>>> ts;
    for (int n = y.lo(); n <= y.hi(); ++n) {
        std::vector<std::pair<Matrix, Matrix>> row;
        RepMap fn = f.component(n);
        for (int v = 0; v < V; ++v) {
            Matrix b = fn.comp[v];
            int m = (int)b.rows();
            Matrix id = Matrix::identity(fld, m);
            auto chosen = extend_column_basis(b, id);
            Matrix s(fld, m, chosen.size());
            for (size_t j = 0; j < chosen.size(); ++j) s.at(chosen[j], j) = Scalar::one(fld);
            Matrix a = b.hstack(s);
            auto ainv = a.inverse();
            if (!ainv) throw std::logic_error("quotient: basis completion failed");
            Matrix t(fld, chosen.size(), m);
            for (size_t i = 0; i < chosen.size(); ++i)
                for (int j = 0; j < m; ++j) t.at(i, j) = ainv->at(b.cols() + i, j);
            row.emplace_back(std::move(t), std::move(s));
        }
        ts.emplace(n, std::move(row));
    }

    std::map<int, Rep> terms;
    std::map<int, RepMap> diffs;
    for (int n = y.lo(); n <= y.hi(); ++n) {
        Rep t{y.q, fld, DimVector(V, 0), {}};
        for (int v = 0; v < V; ++v) t.dims[v] = (int)ts[n][v].first.rows();
        Rep yt = y.term(n);
        for (size_t a = 0; a < y.q.arrows.size(); ++a) {
            auto [s, tt] = y.q.arrows[a];
            t.maps.push_back(ts[n][tt - 1].first * yt.maps[a] * ts[n][s - 1].second);
        }
        if (!t.is_zero()) terms.emplace(n, std::move(t));
    }
    for (int n = y.lo() + 1; n <= y.hi(); ++n) {
        RepMap dn = y.diff(n);
        RepMap d;
        for (int v = 0; v < V; ++v) d.comp.push_back(ts[n - 1][v].first * dn.comp[v] * ts[n][v].second);
        diffs.emplace(n, std::move(d));
    }
    return make_complex(y.q, fld, std::move(terms), std::move(diffs));
}

bool is_weak_equivalence(const ChainMap& f) { return is_acyclic(cone_complex(f)); }

bool verify_cone_representability(const ChainMap& f, const Complex& z, ConeCorruption corruption) {
    const Complex& x = f.source;
    const Complex& y = f.target;
    const Field& fld = x.f;
    ConeData cd = cone_with_sign(f, corruption == ConeCorruption::flipped_sign ? -1 : 1);

    HomComplex hcy = hom_complex(y, z);
    HomComplex hcx = hom_complex(x, z);
    HomComplex hcc = hom_complex(cd.cone, z);

    bool swapped = corruption == ConeCorruption::swapped_order;
    bool dropped = corruption == ConeCorruption::dropped_summand;

    auto mdim = [&](int k) -> int {
        if (dropped) return hcy.dim(k);
        if (swapped) return hcx.dim(k) + hcy.dim(k + 1);
        return hcy.dim(k) + hcx.dim(k + 1);
    };

    int klo = std::min(hcc.total.lo(), std::min(hcy.total.lo(), hcx.total.lo() - 1)) - 1;
    int khi = std::max(hcc.total.hi(), std::max(hcy.total.hi(), hcx.total.hi())) + 1;

    for (int k = klo; k <= khi; ++k)
        if (mdim(k) != hcc.dim(k)) return false;

    // precomposition with f: Hom(Y,Z)_k -> Hom(X,Z)_k
    auto precompose_f = [&](int k) {
        Matrix p(fld, hcx.dim(k), hcy.dim(k));
        auto it = hcy.blocks.find(k);
        if (it == hcy.blocks.end()) return p;
        for (const auto& b : it->second)
            for (int j = 0; j < b.basis.dimension; ++j) {
                GradedMap a{y, z, k, {}};
                a.comp.emplace(b.k, b.basis.basis[j]);
                Vector c = hcx.coords(gm_compose(a, f.as_graded()));
                for (size_t i = 0; i < c.size(); ++i) p.at(i, b.offset + j) = c[i];
            }
        return p;
    };

    // d_M at degree k as a block matrix, M_k = Hom(Y,Z)_k + Hom(X,Z)_{k+1},
    // d(a,b) = (da, af - db)
    auto m_diff = [&](int k) {
        if (dropped) return hcy.diff_matrix(k);
        Matrix dy = hcy.diff_matrix(k);
        Matrix dx = hcx.diff_matrix(k + 1).scaled(Scalar(fld, -1));
        Matrix pf = precompose_f(k);
        Matrix topL = dy, topR = Matrix::zero(fld, dy.rows(), dx.cols());
        Matrix botL = pf, botR = dx;
        if (swapped) {
            // permuted coordinates: (b, a) blocks
            Matrix top = botR.hstack(botL);
            Matrix bot = topR.hstack(topL);
            return top.vstack(bot);
        }
        return topL.hstack(topR).vstack(botL.hstack(botR));
    };

    // the map induced by the universal 0-cycle
    auto ustar = [&](int k) {
        Matrix u(fld, mdim(k), hcc.dim(k));
        auto it = hcc.blocks.find(k);
        if (it == hcc.blocks.end()) return u;
        Scalar sk = sign_of(fld, k);
        for (const auto& b : it->second)
            for (int j = 0; j < b.basis.dimension; ++j) {
                GradedMap psi{cd.cone, z, k, {}};
                psi.comp.emplace(b.k, b.basis.basis[j]);
                Vector a = hcy.coords(gm_compose(psi, cd.from_target.as_graded()));
                Vector bb = hcx.coords(gm_compose(psi, cd.universal).scaled(sk));
                for (size_t i = 0; i < a.size(); ++i) u.at(i, b.offset + j) = a[i];
                for (size_t i = 0; i < bb.size(); ++i) u.at(a.size() + i, b.offset + j) = bb[i];
            }
        return u;
    };

    std::map<int, Matrix> us;
    for (int k = klo - 1; k <= khi; ++k) us.emplace(k, ustar(k));
    for (int k = klo; k <= khi; ++k) {
        if (us[k].rank() != (size_t)hcc.dim(k)) return false;  // not bijective
        Matrix lhs = m_diff(k) * us[k];
        Matrix rhs = us[k - 1] * hcc.diff_matrix(k);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace orbcat
