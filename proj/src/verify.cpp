#include "orbcat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <set>
#include <sstream>

#include "orbcat/braid.hpp"
#include "orbcat/geom.hpp"
#include "orbcat/random_gen.hpp"

namespace orbcat {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

std::string ds(int a) { return std::to_string(a); }

}  // namespace

std::string report_to_json(const Report& r) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures) fails.push_back({{"where", f.where}, {"detail", f.detail}});
    return nlohmann::json{{"schema", 1},
                          {"suite", r.suite},
                          {"cases", r.cases},
                          {"failures", fails},
                          {"wall_ms", r.wall_ms}}
        .dump();
}

std::string report_to_table(const Report& r) {
    std::ostringstream out;
    out << (r.ok() ? "PASS" : "FAIL") << "  " << r.suite << "  cases=" << r.cases
        << "  failures=" << r.failures.size() << "  wall_ms=" << (long long)r.wall_ms << "\n";
    for (const auto& f : r.failures) out << "      " << f.where << ": " << f.detail << "\n";
    return out.str();
}

Report serre_suite(const SuiteParams& p) {
    Timer t;
    Report r{"serre-duality", 0, {}, 0};
    for (int n = 1; n <= p.serre_n; ++n) {
        DerivedModel model(Quiver::linear_a(n), p.field);
        std::vector<DbIndec> labels;
        for (int i = 0; i < model.module_count(); ++i)
            for (int a = -p.serre_window; a <= p.serre_window; ++a) labels.push_back({i, a});
        for (const DbIndec& x : labels)
            for (const DbIndec& y : labels) {
                ++r.cases;
                int lhs = model.db_hom_dim(x, y);
                int rhs = model.db_hom_dim(y, model.serre(x));
                if (lhs != rhs)
                    r.failures.push_back({"A" + ds(n) + " " + model.label_name(x) + " vs " +
                                              model.label_name(y),
                                          "hom(X,Y)=" + ds(lhs) + " hom(Y,vX)=" + ds(rhs)});
            }
    }
    r.wall_ms = t.ms();
    return r;
}

Report twocy_suite(const SuiteParams& p) {
    Timer t;
    Report r{"two-calabi-yau", 0, {}, 0};
    for (int n = 1; n <= p.twocy_n; ++n) {
        OrbitHandle h = OrbitHandle::cluster_category(Quiver::linear_a(n), p.field);
        auto inds = h.orbit_indecomposables();
        for (const auto& a : inds)
            for (const auto& b : inds) {
                ++r.cases;
                int lhs = h.orbit_hom_dim(a.rep, b.rep).total;
                int rhs = h.orbit_hom_dim(b.rep, DerivedModel::suspend(a.rep, 2)).total;
                int e1 = h.orbit_hom_dim(a.rep, DerivedModel::suspend(b.rep, 1)).total;
                int e2 = h.orbit_hom_dim(b.rep, DerivedModel::suspend(a.rep, 1)).total;
                if (lhs != rhs || e1 != e2)
                    r.failures.push_back({"A" + ds(n) + " " + h.model().label_name(a.rep) + " vs " +
                                              h.model().label_name(b.rep),
                                          "hom(X,Y)=" + ds(lhs) + " hom(Y,S2X)=" + ds(rhs) +
                                              " ext(X,Y)=" + ds(e1) + " ext(Y,X)=" + ds(e2)});
            }
    }
    r.wall_ms = t.ms();
    return r;
}

Report finiteness_suite(const SuiteParams& p) {
    Timer t;
    Report r{"orbit-hom-finiteness", 0, {}, 0};
    for (int n = 1; n <= p.finiteness_n; ++n) {
        OrbitHandle h = OrbitHandle::cluster_category(Quiver::linear_a(n), p.field);
        auto inds = h.orbit_indecomposables();
        for (const auto& a : inds)
            for (const auto& b : inds) {
                ++r.cases;
                try {
                    OrbitHom oh = h.orbit_hom_dim(a.rep, b.rep);
                    if (!oh.support.empty()) {
                        int lo = oh.support.begin()->first, hi = oh.support.rbegin()->first;
                        if (hi - lo + 1 > 3 || lo < -10 || hi > 10)
                            r.failures.push_back(
                                {"A" + ds(n) + " " + h.model().label_name(a.rep) + " vs " +
                                     h.model().label_name(b.rep),
                                 "support [" + ds(lo) + "," + ds(hi) + "] too wide"});
                    }
                } catch (const std::exception& e) {
                    r.failures.push_back({"A" + ds(n), e.what()});
                }
            }
    }
    r.wall_ms = t.ms();
    return r;
}

Report dg_compare_suite(const SuiteParams& p) {
    Timer t;
    Report r{"dg-orbit-compare", 0, {}, 0};
    for (int n = 1; n <= p.dg_n; ++n) {
        OrbitHandle h = OrbitHandle::cluster_category(Quiver::linear_a(n), p.field);
        auto inds = h.orbit_indecomposables();
        for (const auto& a : inds)
            for (const auto& b : inds) {
                ++r.cases;
                auto dg = h.dg_orbit_hom(a.rep, b.rep);
                int orbit = h.orbit_hom_dim(a.rep, b.rep).total;
                if (dg.dims.at(0) != orbit)
                    r.failures.push_back({"A" + ds(n) + " " + h.model().label_name(a.rep) + " vs " +
                                              h.model().label_name(b.rep),
                                          "dg degree-0 = " + ds(dg.dims.at(0)) +
                                              ", orbit total = " + ds(orbit)});
            }
    }
    r.wall_ms = t.ms();
    return r;
}

Report cone_suite(const SuiteParams& p) {
    Timer t;
    Report r{"cone-representability", 0, {}, 0};
    RandomGen rng(p.seed);
    Quiver q = Quiver::linear_a(2);
    int done = 0;
    bool corruption_checked = false;
    while (done < p.cone_cases) {
        Complex x = rng.random_complex(q, p.field, -2, 1, 2);
        Complex y = rng.random_complex(q, p.field, -2, 1, 2);
        Complex z = rng.random_complex(q, p.field, -1, 1, 2);
        ChainMap f = rng.random_chain_map(x, y);
        ++done;
        ++r.cases;
        if (!verify_cone_representability(f, z))
            r.failures.push_back({"random case " + ds(done), "representability check failed"});
        if (!corruption_checked && !f.is_zero_map() && !z.is_zero() && !x.is_zero()) {
            bool flip = verify_cone_representability(f, z, ConeCorruption::flipped_sign);
            bool drop = verify_cone_representability(f, z, ConeCorruption::dropped_summand);
            bool swap = verify_cone_representability(f, z, ConeCorruption::swapped_order);
            if (!flip && !drop && !swap) {
                corruption_checked = true;
                r.cases += 3;
            }
        }
    }
    if (!corruption_checked)
        r.failures.push_back({"corruption controls", "no instance rejected all three corruptions"});
    r.wall_ms = t.ms();
    return r;
}

int brute_homotopy_dimension(const Complex& x, const Complex& y) {
    const Field& f = x.f;
    if (x.is_zero() || y.is_zero()) return 0;
    int klo = std::min(x.lo(), y.lo()) - 1, khi = std::max(x.hi(), y.hi()) + 1;

    // chain maps from the defining equations d_Y f_k = f_{k-1} d_X
    struct DegreeBlock {
        int k;
        HomSpace basis;
        int offset;
    };
    std::vector<DegreeBlock> fblocks, hblocks;
    int funk = 0, hunk = 0;
    for (int k = klo; k <= khi; ++k) {
        HomSpace hs = hom_space(x.term(k), y.term(k));
        if (hs.dimension) {
            fblocks.push_back({k, hs, funk});
            funk += hs.dimension;
        }
        HomSpace hh = hom_space(x.term(k), y.term(k + 1));
        if (hh.dimension) {
            hblocks.push_back({k, hh, hunk});
            hunk += hh.dimension;
        }
    }

    // chain-map equations d_Y g_k - g_{k-1} d_X = 0, entries flattened degreewise
    int rows = 0;
    std::vector<int> row_offsets;
    for (int k = klo; k <= khi; ++k) {
        row_offsets.push_back(rows);
        int sz = 0;
        for (int v = 0; v < x.q.vertex_count; ++v) sz += y.term(k - 1).dims[v] * x.term(k).dims[v];
        rows += sz;
    }
    Matrix chain_sys(f, rows, funk);
    for (const auto& b : fblocks)
        for (int j = 0; j < b.basis.dimension; ++j) {
            const RepMap& g = b.basis.basis[j];
            Vector v1 = repmap_flatten(compose(y.diff(b.k), g), f);
            int row0 = row_offsets[b.k - klo];
            for (size_t i = 0; i < v1.size(); ++i)
                chain_sys.at(row0 + i, b.offset + j) = chain_sys.at(row0 + i, b.offset + j) + v1[i];
            if (b.k + 1 <= khi) {
                Vector v2 = repmap_flatten(compose(g, x.diff(b.k + 1)), f);
                int row1 = row_offsets[b.k + 1 - klo];
                Scalar s(f, -1);
                for (size_t i = 0; i < v2.size(); ++i)
                    chain_sys.at(row1 + i, b.offset + j) =
                        chain_sys.at(row1 + i, b.offset + j) + v2[i] * s;
            }
        }
    auto cycles = chain_sys.kernel_basis();

    // boundary image coordinates: for each homotopy basis element, the chain
    // map d_Y h + h d_X written in the same degreewise coordinates
    Matrix boundary(f, funk, hunk);
    for (const auto& hb : hblocks)
        for (int j = 0; j < hb.basis.dimension; ++j) {
            const RepMap& hmap = hb.basis.basis[j];
            // d_Y h at degree k, h d_X at degree k+1
            RepMap a1 = compose(y.diff(hb.k + 1), hmap);
            RepMap a2c = compose(hmap, x.diff(hb.k + 1));
            for (const auto& fb : fblocks) {
                if (fb.k == hb.k && !a1.is_zero()) {
                    Vector c = coords_in_hom_basis(fb.basis, a1, f);
                    for (int i = 0; i < fb.basis.dimension; ++i)
                        boundary.at(fb.offset + i, hb.offset + j) = c[i];
                }
                if (fb.k == hb.k + 1 && !a2c.is_zero()) {
                    Vector c = coords_in_hom_basis(fb.basis, a2c, f);
                    for (int i = 0; i < fb.basis.dimension; ++i)
                        boundary.at(fb.offset + i, hb.offset + j) =
                            boundary.at(fb.offset + i, hb.offset + j) + c[i];
                }
            }
        }

    Matrix cycle_cols = Matrix::from_columns(f, funk, cycles);
    auto accepted = extend_column_basis(boundary, cycle_cols);
    return (int)accepted.size();
}

Report homotopy_suite(const SuiteParams& p) {
    Timer t;
    Report r{"homotopy-category", 0, {}, 0};
    RandomGen rng(p.seed);
    Quiver q = Quiver::linear_a(2);
    for (int i = 0; i < p.homotopy_cases; ++i) {
        Complex x = rng.random_complex(q, p.field, -2, 2, 3);
        Complex y = rng.random_complex(q, p.field, -2, 2, 3);
        ++r.cases;
        int fast = homology_homs(x, y).dimension;
        int brute = brute_homotopy_dimension(x, y);
        if (fast != brute)
            r.failures.push_back(
                {"random pair " + ds(i), "homology_homs=" + ds(fast) + " brute=" + ds(brute)});
    }
    r.wall_ms = t.ms();
    return r;
}

Report counting_suite(const SuiteParams& p) {
    Timer t;
    Report r{"counting-identities", 0, {}, 0};
    for (int n = 1; n <= p.counting_n; ++n) {
        OrbitHandle h = OrbitHandle::cluster_category(Quiver::linear_a(n), p.field);
        auto inds = h.orbit_indecomposables();
        ++r.cases;
        if ((int)inds.size() != n * (n + 3) / 2)
            r.failures.push_back({"A" + ds(n) + " orbit count",
                                  ds((int)inds.size()) + " != " + ds(n * (n + 3) / 2)});
        ++r.cases;
        if ((int)diagonals(n).size() != n * (n + 3) / 2)
            r.failures.push_back({"A" + ds(n) + " diagonal count",
                                  ds((int)diagonals(n).size()) + " != " + ds(n * (n + 3) / 2)});
        auto tris = triangulations(n);
        ++r.cases;
        if ((long long)tris.size() != catalan(n + 1))
            r.failures.push_back({"A" + ds(n) + " triangulation count",
                                  ds((int)tris.size()) + " != " + ds((int)catalan(n + 1))});
        auto tilts = cluster_tilting_objects(h);
        ++r.cases;
        if (tilts.size() != tris.size())
            r.failures.push_back({"A" + ds(n) + " tilting count",
                                  ds((int)tilts.size()) + " != " + ds((int)tris.size())});
        ++r.cases;
        try {
            auto bij = geom_bijection(h);
            // transport triangulations through the bijection and compare as sets
            std::set<std::vector<int>> mapped, tilt_sets;
            for (const auto& tr : tris) {
                std::vector<int> im;
                for (int d : tr) im.push_back(bij[d]);
                std::sort(im.begin(), im.end());
                mapped.insert(im);
            }
            for (auto s : tilts) {
                std::sort(s.begin(), s.end());
                tilt_sets.insert(s);
            }
            if (mapped != tilt_sets)
                r.failures.push_back({"A" + ds(n) + " transport",
                                      "triangulations do not map onto tilting sets"});
        } catch (const std::exception& e) {
            r.failures.push_back({"A" + ds(n) + " bijection", e.what()});
        }
    }
    r.wall_ms = t.ms();
    return r;
}

Report braid_suite(const SuiteParams& p) {
    Timer t;
    Report r{"braid-relations", 0, {}, 0};
    for (int m = 2; m <= p.braid_m; ++m) {
        Quiver q = Quiver::linear_a(m);
        ++r.cases;
        if (!verify_braid_relations(q))
            r.failures.push_back({"A" + ds(m), "braid or far-commutation relation failed"});
        for (int i = 1; i <= m; ++i) {
            ++r.cases;
            IMat ti = braid_generator(q, i);
            if (!preserves_form(q, ti))
                r.failures.push_back({"A" + ds(m) + " T" + ds(i), "form not preserved"});
            if (imat_det(ti) != 1)
                r.failures.push_back({"A" + ds(m) + " T" + ds(i), "determinant != 1"});
        }
    }
    for (int m = 1; m <= p.quotient_m; ++m) {
        ++r.cases;
        try {
            QuotientAction qa = orbit_quotient_action(Quiver::linear_a(m));
            if (!qa.trivial)
                r.failures.push_back({"A" + ds(m) + " quotient", "induced action is not trivial"});
        } catch (const std::exception& e) {
            r.failures.push_back({"A" + ds(m) + " quotient", e.what()});
        }
    }
    r.wall_ms = t.ms();
    return r;
}

bool triangle_rank_exact(const ChainMap& f) {
    const Field& fld = f.source.f;
    ConeData cd = cone(f);
    const Complex &x = f.source, &y = f.target;
    Complex sx = shift_complex(x, 1);
    ComplexHomology hx = homology(x), hy = homology(y), hcone = homology(cd.cone),
                    hsx = homology(sx);
    int lo = std::min({x.lo(), y.lo(), cd.cone.lo()}) - 1;
    int hi = std::max({x.hi(), y.hi(), cd.cone.hi()}) + 1;
    for (int n = lo; n <= hi; ++n)
        for (int v = 0; v < x.q.vertex_count; ++v) {
            Matrix mf = homology_induced(hx, hy, f, n, v);
            Matrix mi = homology_induced(hy, hcone, cd.from_target, n, v);
            Matrix mp = homology_induced(hcone, hsx, cd.to_shift_source, n, v);
            Matrix mf_next = homology_induced(hx, hy, f, n - 1, v);
            // identify H_n(Sigma X) with H_{n-1}(X): rewrite the chosen
            // Sigma X representatives in the H_{n-1}(X) basis
            Matrix cb(fld, mf_next.cols(), mp.rows());
            {
                auto psx = hsx.pieces.find(n);
                auto px = hx.pieces.find(n - 1);
                if (psx != hsx.pieces.end() && px != hx.pieces.end()) {
                    const auto& piece_sx = psx->second[v];
                    const auto& piece_x = px->second[v];
                    Matrix sys = piece_x.reps.hstack(piece_x.boundaries);
                    for (size_t j = 0; j < piece_sx.reps.cols(); ++j) {
                        auto sol = sys.solve(piece_sx.reps.column_vector(j));
                        if (!sol) throw std::logic_error("shift identification failed");
                        for (size_t i = 0; i < piece_x.reps.cols(); ++i) cb.at(i, j) = (*sol)[i];
                    }
                }
            }
            Matrix conn = cb * mp;  // H_n(C) -> H_{n-1}(X)
            if (!(mi * mf).is_zero() || !(conn * mi).is_zero() || !(mf_next * conn).is_zero())
                return false;
            if (mi.rank() + mf.rank() != mi.cols()) return false;              // at H_n(Y)
            if (conn.rank() + mi.rank() != conn.cols()) return false;          // at H_n(C)
            if (mf_next.rank() + conn.rank() != mf_next.cols()) return false;  // at H_{n-1}(X)
        }
    return true;
}

Report cofibration_suite(const SuiteParams& p) {
    Timer t;
    Report r{"cofibration-structure", 0, {}, 0};
    RandomGen rng(p.seed);
    Quiver q = Quiver::linear_a(2);
    for (int i = 0; i < p.cofib_cases; ++i) {
        ChainMap inc = rng.random_cofibration(q, p.field, 2);
        ++r.cases;
        if (!is_cofibration(inc)) {
            r.failures.push_back({"case " + ds(i), "generator did not produce a cofibration"});
            continue;
        }
        auto hq = homology_dims(quotient_complex(inc));
        auto hc = homology_dims(cone_complex(inc));
        if (hq != hc) {
            r.failures.push_back({"case " + ds(i), "H(Y/X) and H(cone) differ"});
            continue;
        }
        ++r.cases;
        if (!triangle_rank_exact(inc))
            r.failures.push_back({"case " + ds(i), "long exact sequence rank check failed"});
    }
    r.wall_ms = t.ms();
    return r;
}

std::vector<Report> run_all_suites(const SuiteParams& p) {
    return {serre_suite(p),    twocy_suite(p), finiteness_suite(p),
            dg_compare_suite(p), cone_suite(p),  homotopy_suite(p),
            counting_suite(p), braid_suite(p), cofibration_suite(p)};
}

}  // namespace orbcat
