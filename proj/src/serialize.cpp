#include "orbcat/serialize.hpp"

#include <json.hpp>
#include <sstream>

namespace orbcat {

using nlohmann::json;

Quiver parse_quiver_text(const std::string& text) {
    Quiver q;
    bool have_vertices = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "vertices") {
            if (have_vertices) throw std::invalid_argument("duplicate vertices line");
            if (!(ls >> q.vertex_count)) throw std::invalid_argument("bad vertices line " + std::to_string(lineno));
            have_vertices = true;
        } else if (word == "arrow") {
            int s, t;
            if (!(ls >> s >> t)) throw std::invalid_argument("bad arrow line " + std::to_string(lineno));
            q.arrows.emplace_back(s, t);
        } else {
            throw std::invalid_argument("unknown directive '" + word + "' on line " + std::to_string(lineno));
        }
        std::string junk;
        if (ls >> junk) throw std::invalid_argument("trailing tokens on line " + std::to_string(lineno));
    }
    if (!have_vertices) throw std::invalid_argument("missing vertices line");
    return q;
}

std::string quiver_to_text(const Quiver& q) {
    std::ostringstream out;
    out << "vertices " << q.vertex_count << "\n";
    for (auto [s, t] : q.arrows) out << "arrow " << s << " " << t << "\n";
    return out.str();
}

namespace {

json quiver_json(const Quiver& q) {
    json arrows = json::array();
    for (auto [s, t] : q.arrows) arrows.push_back({s, t});
    return json{{"schema", 1}, {"vertices", q.vertex_count}, {"arrows", arrows}};
}

Quiver quiver_unjson(const json& j) {
    Quiver q;
    q.vertex_count = j.at("vertices").get<int>();
    for (const auto& a : j.at("arrows")) q.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    return q;
}

json matrix_json(const Matrix& m) {
    json entries = json::array();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j).str());
    return entries;
}

Matrix matrix_unjson(const Field& f, size_t rows, size_t cols, const json& j) {
    if (j.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
    Matrix m(f, rows, cols);
    size_t k = 0;
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = Scalar::parse(f, j.at(k++).get<std::string>());
    return m;
}

std::string field_name(const Field& f) { return f.name(); }

Field field_parse(const std::string& s) {
    if (s == "Q") return Field::rationals();
    if (s.size() > 1 && s[0] == 'F') return Field::prime((uint32_t)std::stoul(s.substr(1)));
    throw std::invalid_argument("unknown field '" + s + "'");
}

}  // namespace

std::string quiver_to_json(const Quiver& q) { return quiver_json(q).dump(); }

Quiver quiver_from_json(const std::string& s) { return quiver_unjson(json::parse(s)); }

std::string field_to_json(const Field& f) {
    return json{{"schema", 1}, {"field", field_name(f)}}.dump();
}

Field field_from_json(const std::string& s) {
    return field_parse(json::parse(s).at("field").get<std::string>());
}

std::string complex_to_json(const Complex& c) {
    json terms = json::object();
    for (const auto& [n, t] : c.terms) {
        json maps = json::array();
        for (const auto& m : t.maps) maps.push_back(matrix_json(m));
        terms[std::to_string(n)] = json{{"dims", t.dims}, {"maps", maps}};
    }
    json diffs = json::object();
    for (const auto& [n, d] : c.diffs) {
        json comps = json::array();
        for (const auto& m : d.comp) comps.push_back(matrix_json(m));
        diffs[std::to_string(n)] = comps;
    }
    return json{{"schema", 1},
                {"field", field_name(c.f)},
                {"quiver", quiver_json(c.q)},
                {"terms", terms},
                {"diffs", diffs}}
        .dump();
}

Complex complex_from_json(const std::string& s) {
    json j = json::parse(s);
    Field f = field_parse(j.at("field").get<std::string>());
    Quiver q = quiver_unjson(j.at("quiver"));
    std::map<int, Rep> terms;
    for (const auto& [key, val] : j.at("terms").items()) {
        Rep t{q, f, val.at("dims").get<DimVector>(), {}};
        const json& maps = val.at("maps");
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            auto [src, tgt] = q.arrows[a];
            t.maps.push_back(matrix_unjson(f, t.dims[tgt - 1], t.dims[src - 1], maps.at(a)));
        }
        terms.emplace(std::stoi(key), std::move(t));
    }
    Complex plain{q, f, terms, {}};
    std::map<int, RepMap> diffs;
    for (const auto& [key, val] : j.at("diffs").items()) {
        int n = std::stoi(key);
        Rep src = plain.term(n), dst = plain.term(n - 1);
        RepMap d;
        for (int v = 1; v <= q.vertex_count; ++v)
            d.comp.push_back(matrix_unjson(f, dst.dim(v), src.dim(v), val.at(v - 1)));
        diffs.emplace(n, std::move(d));
    }
    return make_complex(q, f, std::move(terms), std::move(diffs));
}

std::string db_object_to_json(const DerivedModel& model, const DbObject& x) {
    auto order = path_order(model.quiver());
    json summands = json::array();
    for (const auto& s : x.summands) {
        Interval iv = model.intervals().at(s.indec.module);
        summands.push_back(
            {{"module", {order[iv.a], order[iv.b]}}, {"shift", s.indec.shift}, {"mult", s.mult}});
    }
    return json{{"schema", 1}, {"summands", summands}}.dump();
}

DbObject db_object_from_json(const DerivedModel& model, const std::string& s) {
    json j = json::parse(s);
    auto order = path_order(model.quiver());
    std::vector<int> pos(model.quiver().vertex_count + 1, -1);
    for (int i = 0; i < (int)order.size(); ++i) pos[order[i]] = i;
    DbObject out;
    for (const auto& sm : j.at("summands")) {
        int u = sm.at("module").at(0).get<int>(), v = sm.at("module").at(1).get<int>();
        if (u < 1 || u > (int)order.size() || v < 1 || v > (int)order.size())
            throw std::invalid_argument("module endpoint out of range");
        Interval iv{std::min(pos[u], pos[v]), std::max(pos[u], pos[v])};
        int mult = sm.value("mult", 1);
        if (mult < 1) throw std::invalid_argument("multiplicity must be at least 1");
        out.summands.push_back({{model.interval_index(iv), sm.at("shift").get<int>()}, mult});
    }
    return out;
}

namespace {

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                          "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

// dim of the irreducible maps X -> Y: rad / rad^2 of the hom classes
int irreducible_dim(const OrbitHandle& h, DbIndec x, DbIndec y,
                    const std::vector<DbIndec>& all_modules_two_shifts) {
    if (x == y) return 0;  // End is a line, rad(X,X) = 0
    int homxy = h.class_space_dim(x, y);
    if (homxy == 0) return 0;
    const Field& f = h.model().field();
    std::vector<Vector> composite_coords;
    for (const DbIndec& z : all_modules_two_shifts) {
        if (z == x || z == y) continue;
        int a = h.class_space_dim(x, z), b = h.class_space_dim(z, y);
        if (a == 0 || b == 0) continue;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) {
                Vector ci(f, a), cj(f, b);
                ci[i] = Scalar::one(f);
                cj[j] = Scalar::one(f);
                ChainMap comp = chain_compose(h.class_rep(z, y, cj), h.class_rep(x, z, ci));
                composite_coords.push_back(h.class_coords(x, y, comp));
            }
    }
    Matrix rad2 = Matrix::from_columns(f, homxy, composite_coords);
    return homxy - (int)rad2.rank();
}

}  // namespace

std::string export_ar_quiver(const OrbitHandle& h, int shift_lo, int shift_hi) {
    if (shift_lo > shift_hi) throw std::invalid_argument("empty shift window");
    const DerivedModel& model = h.model();
    std::vector<DbIndec> nodes;
    for (int a = shift_lo; a <= shift_hi; ++a)
        for (int i = 0; i < model.module_count(); ++i) nodes.push_back({i, a});

    auto orbits = h.orbit_indecomposables();
    auto orbit_of = [&](DbIndec x) {
        OrbitObj c = h.canonicalize(x);
        for (size_t i = 0; i < orbits.size(); ++i)
            if (orbits[i] == c) return (int)i;
        return -1;
    };

    std::ostringstream out;
    out << "digraph ar_quiver {\n  rankdir=LR;\n  node [shape=box, style=filled];\n";
    for (const DbIndec& x : nodes) {
        int o = orbit_of(x);
        std::string color = o >= 0 ? kPalette[o % 12] : "#ffffff";
        out << "  \"" << model.label_name(x) << "\" [fillcolor=\"" << color << "\"];\n";
    }
    for (const DbIndec& x : nodes) {
        // candidate intermediates: every module at the two reachable shifts
        std::vector<DbIndec> mid;
        for (int i = 0; i < model.module_count(); ++i) {
            mid.push_back({i, x.shift});
            mid.push_back({i, x.shift + 1});
        }
        for (const DbIndec& y : nodes) {
            if (y.shift < x.shift || y.shift > x.shift + 1) continue;
            if (irreducible_dim(h, x, y, mid) > 0)
                out << "  \"" << model.label_name(x) << "\" -> \"" << model.label_name(y) << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace orbcat
