// Command-line surface for the orbit-category toolkit: derived-category hom
// tables, cluster-category checks, the polygon model, braid matrices on K_0,
// and the aggregated verification suites.
#include <CLI11.hpp>
#include <functional>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>

#include "orbcat/braid.hpp"
#include "orbcat/geom.hpp"
#include "orbcat/serialize.hpp"
#include "orbcat/verify.hpp"

using namespace orbcat;
using nlohmann::json;

namespace {

struct GlobalOpts {
    int n = 2;
    std::string file;
    std::string field_name = "q";
    uint32_t p = 32003;
    bool as_json = false;
    uint64_t seed = 0;
};

Field make_field(const GlobalOpts& g) {
    if (g.field_name == "q") return Field::rationals();
    if (g.field_name == "fp") return Field::prime(g.p);
    throw CLI::ValidationError("--field must be q or fp");
}

Quiver load_quiver(const GlobalOpts& g) {
    if (g.file.empty()) return Quiver::linear_a(g.n);
    if (g.file == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse_quiver_text(text);
    }
    std::ifstream in(g.file);
    if (!in) throw std::invalid_argument("cannot open quiver file " + g.file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_quiver_text(text);
}

json imat_json(const IMat& m) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

int emit_reports(const std::vector<Report>& reports, bool as_json) {
    bool ok = true;
    if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(json::parse(report_to_json(r)));
            ok = ok && r.ok();
        }
        std::cout << json{{"schema", 1}, {"reports", arr}, {"ok", ok}}.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << report_to_table(r);
            ok = ok && r.ok();
        }
        std::cout << (ok ? "ALL SUITES PASSED" : "SUITE FAILURES PRESENT") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbcat: orbit categories of type-A derived categories at desk scale"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--n", g.n, "rank of the linear quiver A_n (used when no --file)");
    app.add_option("--file", g.file, "quiver file ('vertices n' / 'arrow s t' lines, - for stdin)");
    app.add_option("--field", g.field_name, "ground field: q or fp")->check(CLI::IsMember({"q", "fp"}));
    app.add_option("--p", g.p, "prime for --field fp");
    app.add_flag("--json", g.as_json, "machine-readable JSON output");
    app.add_option("--seed", g.seed, "seed for randomized suites");

    auto* quiver_cmd = app.add_subcommand("quiver", "quiver input checks");
    auto* quiver_validate = quiver_cmd->add_subcommand("validate", "classify the Dynkin type");

    auto* db_cmd = app.add_subcommand("db", "derived-category model");
    int window = 2;
    auto* db_homs = db_cmd->add_subcommand("homs", "hom dimensions between shifted indecomposables");
    db_homs->add_option("--window", window, "shift window half-width");
    auto* db_serre = db_cmd->add_subcommand("serre-check", "Serre duality identity, exhaustive");
    db_serre->add_option("--window", window, "shift window half-width");

    auto* orbit_cmd = app.add_subcommand("orbit", "cluster category = orbit by the inverse Serre twist");
    auto* orbit_homs = orbit_cmd->add_subcommand("homs", "orbit hom totals and supports");
    auto* orbit_indecs = orbit_cmd->add_subcommand("indecs", "canonical orbit representatives");
    auto* orbit_cy = orbit_cmd->add_subcommand("cy-check", "2-Calabi-Yau symmetry, all pairs");
    int deg_window = 3;
    auto* orbit_dg = orbit_cmd->add_subcommand("dg-compare", "degree-0 dg orbit homs vs orbit totals");
    orbit_dg->add_option("--deg-window", deg_window, "degree window half-width (3 or wider)");
    int dot_lo = -1, dot_hi = 1;
    auto* orbit_dot = orbit_cmd->add_subcommand("dot", "DOT export of the labels in a shift window");
    orbit_dot->add_option("--lo", dot_lo, "lowest shift");
    orbit_dot->add_option("--hi", dot_hi, "highest shift");

    auto* geom_cmd = app.add_subcommand("geom", "polygon model");
    auto* geom_diag = geom_cmd->add_subcommand("diagonals", "diagonals of the (n+3)-gon");
    auto* geom_tilt = geom_cmd->add_subcommand("tilting-count", "number of cluster-tilting sets");
    bool bij_check = false;
    auto* geom_bij = geom_cmd->add_subcommand("bijection", "diagonal <-> indecomposable matching");
    geom_bij->add_flag("--check", bij_check, "also transport triangulations and compare");

    auto* braid_cmd = app.add_subcommand("braid", "braid matrices on the Grothendieck group");
    int braid_m = 3;
    auto* braid_check = braid_cmd->add_subcommand("check", "relations and form preservation");
    braid_check->add_option("--m", braid_m, "number of strands minus one (A_m)");
    auto* braid_quot = braid_cmd->add_subcommand("quotient", "induced action on coker(1 - [F])");
    braid_quot->add_option("--m", braid_m, "number of strands minus one (A_m)");

    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    int verify_n = 4;
    auto* verify_all = verify_cmd->add_subcommand("all", "run every suite");
    verify_all->add_option("--n", verify_n, "largest quiver rank to exercise");

    // allow the global options to appear after any subcommand
    std::function<void(CLI::App*)> allow_global = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands({})) allow_global(sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) allow_global(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // exit 2 on usage errors, 0 for --help
    }

    try {
        Field field = make_field(g);

        if (*quiver_validate) {
            Quiver q = load_quiver(g);
            DynkinClass cls = validate_quiver(q);
            if (g.as_json)
                std::cout << json{{"schema", 1}, {"class", cls.name()}, {"vertices", q.vertex_count}}.dump()
                          << "\n";
            else
                std::cout << "valid Dynkin quiver: " << cls.name() << "\n";
            return 0;
        }

        if (*db_homs || *db_serre) {
            DerivedModel model(load_quiver(g), field);
            std::vector<DbIndec> labels;
            for (int i = 0; i < model.module_count(); ++i)
                for (int a = -window; a <= window; ++a) labels.push_back({i, a});
            if (*db_homs) {
                json rows = json::array();
                for (const DbIndec& x : labels)
                    for (const DbIndec& y : labels) {
                        int d = model.db_hom_dim(x, y);
                        if (d == 0) continue;
                        if (g.as_json)
                            rows.push_back({{"from", model.label_name(x)},
                                            {"to", model.label_name(y)},
                                            {"dim", d}});
                        else
                            std::cout << model.label_name(x) << " -> " << model.label_name(y)
                                      << " : " << d << "\n";
                    }
                if (g.as_json) std::cout << json{{"schema", 1}, {"homs", rows}}.dump() << "\n";
                return 0;
            }
            int failures = 0, cases = 0;
            for (const DbIndec& x : labels)
                for (const DbIndec& y : labels) {
                    ++cases;
                    if (!model.verify_serre_duality(x, y)) ++failures;
                }
            if (g.as_json)
                std::cout << json{{"schema", 1}, {"cases", cases}, {"failures", failures}}.dump() << "\n";
            else
                std::cout << "serre-check: " << cases << " cases, " << failures << " failures\n";
            return failures == 0 ? 0 : 1;
        }

        if (*orbit_homs || *orbit_indecs || *orbit_cy || *orbit_dg || *orbit_dot) {
            OrbitHandle h = OrbitHandle::cluster_category(load_quiver(g), field);
            auto inds = h.orbit_indecomposables();
            if (*orbit_indecs) {
                json arr = json::array();
                for (const auto& o : inds) {
                    if (g.as_json)
                        arr.push_back(h.model().label_name(o.rep));
                    else
                        std::cout << h.model().label_name(o.rep) << "\n";
                }
                if (g.as_json)
                    std::cout << json{{"schema", 1}, {"count", inds.size()}, {"objects", arr}}.dump()
                              << "\n";
                return 0;
            }
            if (*orbit_homs) {
                json rows = json::array();
                for (const auto& a : inds)
                    for (const auto& b : inds) {
                        OrbitHom oh = h.orbit_hom_dim(a.rep, b.rep);
                        if (oh.total == 0) continue;
                        json supp = json::object();
                        for (auto [n, d] : oh.support) supp[std::to_string(n)] = d;
                        if (g.as_json)
                            rows.push_back({{"from", h.model().label_name(a.rep)},
                                            {"to", h.model().label_name(b.rep)},
                                            {"total", oh.total},
                                            {"support", supp}});
                        else
                            std::cout << h.model().label_name(a.rep) << " -> "
                                      << h.model().label_name(b.rep) << " : " << oh.total << "\n";
                    }
                if (g.as_json) std::cout << json{{"schema", 1}, {"homs", rows}}.dump() << "\n";
                return 0;
            }
            if (*orbit_cy) {
                int failures = 0, cases = 0;
                for (const auto& a : inds)
                    for (const auto& b : inds) {
                        ++cases;
                        if (!h.verify_2cy(a.rep, b.rep)) ++failures;
                    }
                if (g.as_json)
                    std::cout << json{{"schema", 1}, {"cases", cases}, {"failures", failures}}.dump()
                              << "\n";
                else
                    std::cout << "cy-check: " << cases << " cases, " << failures << " failures\n";
                return failures == 0 ? 0 : 1;
            }
            if (*orbit_dg) {
                if (deg_window < 3)
                    throw std::invalid_argument("--deg-window may only widen the default of 3");
                int failures = 0, cases = 0;
                json rows = json::array();
                for (const auto& a : inds)
                    for (const auto& b : inds) {
                        ++cases;
                        auto dg = h.dg_orbit_hom(a.rep, b.rep, -deg_window, deg_window);
                        int total = h.orbit_hom_dim(a.rep, b.rep).total;
                        bool ok = dg.dims.at(0) == total;
                        if (!ok) ++failures;
                        if (g.as_json)
                            rows.push_back({{"from", h.model().label_name(a.rep)},
                                            {"to", h.model().label_name(b.rep)},
                                            {"dg_degree0", dg.dims.at(0)},
                                            {"orbit_total", total},
                                            {"stabilized_at", dg.stabilized_at}});
                    }
                if (g.as_json)
                    std::cout << json{{"schema", 1}, {"cases", cases}, {"failures", failures}, {"rows", rows}}
                                     .dump()
                              << "\n";
                else
                    std::cout << "dg-compare: " << cases << " cases, " << failures << " failures\n";
                return failures == 0 ? 0 : 1;
            }
            std::cout << export_ar_quiver(h, dot_lo, dot_hi);
            return 0;
        }

        if (*geom_diag || *geom_tilt || *geom_bij) {
            if (*geom_diag) {
                auto ds = diagonals(g.n);
                if (g.as_json) {
                    json arr = json::array();
                    for (const auto& d : ds) arr.push_back({d.i, d.j});
                    std::cout << json{{"schema", 1}, {"count", ds.size()}, {"diagonals", arr}}.dump()
                              << "\n";
                } else {
                    for (const auto& d : ds) std::cout << "(" << d.i << "," << d.j << ")\n";
                    std::cout << "count: " << ds.size() << "\n";
                }
                return 0;
            }
            OrbitHandle h = OrbitHandle::cluster_category(Quiver::linear_a(g.n), field);
            if (*geom_tilt) {
                auto tilts = cluster_tilting_objects(h);
                if (g.as_json)
                    std::cout << json{{"schema", 1}, {"count", tilts.size()}}.dump() << "\n";
                else
                    std::cout << "count: " << tilts.size() << "\n";
                return 0;
            }
            auto bij = geom_bijection(h);
            auto ds = diagonals(g.n);
            auto inds = h.orbit_indecomposables();
            json arr = json::array();
            for (size_t i = 0; i < bij.size(); ++i) {
                if (g.as_json)
                    arr.push_back({{"diagonal", {ds[i].i, ds[i].j}},
                                   {"object", h.model().label_name(inds[bij[i]].rep)}});
                else
                    std::cout << "(" << ds[i].i << "," << ds[i].j << ") <-> "
                              << h.model().label_name(inds[bij[i]].rep) << "\n";
            }
            int rc = 0;
            if (bij_check) {
                auto tris = triangulations(g.n);
                auto tilts = cluster_tilting_objects(h);
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
                rc = mapped == tilt_sets ? 0 : 1;
                if (!g.as_json)
                    std::cout << (rc == 0 ? "transport check passed" : "transport check FAILED") << "\n";
            }
            if (g.as_json)
                std::cout << json{{"schema", 1}, {"pairs", arr}, {"transport_ok", rc == 0}}.dump()
                          << "\n";
            return rc;
        }

        if (*braid_check || *braid_quot) {
            Quiver q = Quiver::linear_a(braid_m);
            if (*braid_check) {
                bool rel = braid_m >= 2 ? verify_braid_relations(q) : true;
                bool form = true;
                json gens = json::array();
                for (int i = 1; i <= braid_m; ++i) {
                    IMat t = braid_generator(q, i);
                    form = form && preserves_form(q, t);
                    gens.push_back(imat_json(t));
                }
                if (g.as_json)
                    std::cout << json{{"schema", 1},
                                      {"relations_ok", rel},
                                      {"form_preserved", form},
                                      {"generators", gens}}
                                     .dump()
                              << "\n";
                else
                    std::cout << "relations: " << (rel ? "ok" : "FAILED")
                              << ", form preservation: " << (form ? "ok" : "FAILED") << "\n";
                return rel && form ? 0 : 1;
            }
            QuotientAction qa = orbit_quotient_action(q);
            json imgs = json::array();
            for (const auto& im : qa.images) imgs.push_back(imat_json(im));
            if (g.as_json)
                std::cout << json{{"schema", 1},
                                  {"invariants", qa.invariants},
                                  {"generator_images", imgs},
                                  {"trivial", qa.trivial}}
                                 .dump()
                          << "\n";
            else {
                std::cout << "invariants:";
                for (auto d : qa.invariants) std::cout << " " << d;
                std::cout << "\ntrivial: " << (qa.trivial ? "yes" : "no") << "\n";
            }
            return qa.trivial ? 0 : 1;
        }

        if (*verify_all) {
            SuiteParams p;
            p.field = field;
            p.seed = g.seed;
            p.serre_n = std::min(5, verify_n);
            p.twocy_n = std::min(4, verify_n);
            p.finiteness_n = std::min(5, verify_n);
            p.dg_n = std::min(3, verify_n);
            p.counting_n = std::min(4, verify_n);
            p.braid_m = std::max(2, std::min(6, verify_n));
            p.quotient_m = std::min(4, verify_n);
            return emit_reports(run_all_suites(p), g.as_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "error: no action selected\n";
    return 2;
}
