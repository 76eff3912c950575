#include <doctest.h>

#include <json.hpp>
#include <set>

#include "orbcat/random_gen.hpp"
#include "orbcat/serialize.hpp"
#include "orbcat/verify.hpp"

using namespace orbcat;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("quiver text grammar") {
    Quiver q = parse_quiver_text("# a comment\nvertices 3\narrow 1 2\narrow 2 3  # tail\n");
    CHECK(q.vertex_count == 3);
    CHECK(q.arrows == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(parse_quiver_text(quiver_to_text(q)) == q);

    CHECK_THROWS_AS(parse_quiver_text("arrow 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver_text("vertices 2\nedge 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver_text("vertices 2\narrow 1\n"), std::invalid_argument);
}

TEST_CASE("json round trips") {
    Quiver q = Quiver::linear_a(3);
    CHECK(quiver_from_json(quiver_to_json(q)) == q);
    CHECK(field_from_json(field_to_json(Q)) == Q);
    CHECK(field_from_json(field_to_json(Field::prime(32003))) == Field::prime(32003));

    RandomGen rng(14);
    for (int t = 0; t < 10; ++t) {
        Complex c = rng.random_complex(Quiver::linear_a(2), Q, -2, 2, 2);
        CHECK(complex_from_json(complex_to_json(c)) == c);
    }
    // rational differentials survive as "p/q" strings
    Rep s = interval_rep(Quiver::linear_a(1), Q, {0, 0});
    std::map<int, Rep> terms{{0, s}, {1, s}};
    RepMap d;
    d.comp.push_back(Matrix(Q, 1, 1));
    d.comp[0].at(0, 0) = Scalar::parse(Q, "3/7");
    Complex c = make_complex(Quiver::linear_a(1), Q, terms, {{1, d}});
    std::string js = complex_to_json(c);
    CHECK(js.find("\"3/7\"") != std::string::npos);
    CHECK(complex_from_json(js) == c);

    DerivedModel model(Quiver::linear_a(3), Q);
    DbObject x{{{{0, 0}, 2}, {{4, -1}, 1}}};
    DbObject back = db_object_from_json(model, db_object_to_json(model, x));
    REQUIRE(back.summands.size() == x.summands.size());
    for (size_t i = 0; i < x.summands.size(); ++i) {
        CHECK(back.summands[i].indec == x.summands[i].indec);
        CHECK(back.summands[i].mult == x.summands[i].mult);
    }
}

TEST_CASE("report json carries the schema and failure payloads") {
    Report r{"demo", 3, {{"case", "lhs=1 rhs=2"}}, 1.5};
    auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j.at("schema") == 1);
    CHECK(j.at("cases") == 3);
    CHECK(j.at("failures").size() == 1);
    CHECK_FALSE(r.ok());
}

TEST_CASE("dot export is deterministic and matches the orbit count") {
    OrbitHandle a1 = OrbitHandle::cluster_category(Quiver::linear_a(1), Q);
    std::string d1 = export_ar_quiver(a1, -1, 1);
    CHECK(d1 == export_ar_quiver(a1, -1, 1));
    // 3 nodes, no arrows between shifted copies of the simple
    size_t nodes = 0, pos = 0;
    while ((pos = d1.find("fillcolor", pos)) != std::string::npos) {
        ++nodes;
        ++pos;
    }
    CHECK(nodes == 3);
    CHECK(d1.find("->") == std::string::npos);

    OrbitHandle a2 = OrbitHandle::cluster_category(Quiver::linear_a(2), Q);
    std::string d2 = export_ar_quiver(a2, -1, 1);
    CHECK(d2 == export_ar_quiver(a2, -1, 1));
    std::set<std::string> colors;
    for (size_t at = 0; (at = d2.find("fillcolor=\"", at)) != std::string::npos;) {
        at += 11;
        colors.insert(d2.substr(at, d2.find('"', at) - at));
    }
    CHECK(colors.size() == 5);  // one color per F-orbit
    CHECK(d2.find("->") != std::string::npos);
}
