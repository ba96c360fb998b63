#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <sstream>

#include "schurpath/golden.hpp"
#include "schurpath/render.hpp"

using namespace schurpath;
namespace pt = boost::property_tree;

namespace {

pt::ptree parse(const std::string& svg) {
    std::istringstream in(svg);
    pt::ptree tree;
    pt::read_xml(in, tree);
    return tree;
}

const pt::ptree* group(const pt::ptree& svg, const std::string& cls, int nth = 0) {
    for (const auto& [tag, child] : svg) {
        if (tag == "g" && child.get<std::string>("<xmlattr>.class", "") == cls && nth-- == 0) return &child;
    }
    return nullptr;
}

int count(const pt::ptree& g, const std::string& tag) {
    int n = 0;
    for (const auto& [t, child] : g) n += t == tag;
    return n;
}

std::vector<int> vertex_counts(const pt::ptree& g) {
    std::vector<int> out;
    for (const auto& [t, child] : g) {
        if (t != "polyline") continue;
        std::istringstream pts(child.get<std::string>("<xmlattr>.points"));
        std::string v;
        int n = 0;
        while (pts >> v) ++n;
        out.push_back(n);
    }
    return out;
}

}  // namespace

TEST_CASE("overlay drawing") {
    const Overlay ov = golden::seven_row_overlay();
    const auto all = all_bicoloured(ov);
    const std::span<const BicolouredPath> two = std::span(all.paths).first(2);
    const pt::ptree doc = parse(render_overlay(ov, two));
    const pt::ptree& svg = doc.get_child("svg");

    REQUIRE(group(svg, "axes"));
    CHECK(count(*group(svg, "axes"), "line") == 2);
    REQUIRE(group(svg, "bicoloured"));
    CHECK(vertex_counts(*group(svg, "bicoloured")) ==
          std::vector<int>{static_cast<int>(two[0].arcs.size()) + 1, static_cast<int>(two[1].arcs.size()) + 1});

    for (Colour c : {Colour::White, Colour::Black}) {
        const pt::ptree* g = group(svg, c == Colour::White ? "white" : "black");
        REQUIRE(g);
        std::vector<int> expected;
        for (const LatticePath& p : ov.family(c).paths) expected.push_back(static_cast<int>(p.steps.size()) + 1);
        CHECK(vertex_counts(*g) == expected);
    }
    CHECK(group(svg, "white")->get<std::string>("<xmlattr>.stroke-dasharray", "") != "");
    CHECK(group(svg, "black")->get<std::string>("<xmlattr>.stroke-dasharray", "") == "");
    REQUIRE(group(svg, "doubled"));
    CHECK(count(*group(svg, "doubled"), "rect") == static_cast<int>(ov.doubled_points().size()));
    REQUIRE(group(svg, "coloured"));
    CHECK(count(*group(svg, "coloured"), "circle") == 16);
}

TEST_CASE("overlay without highlights") {
    const Overlay ov = golden::twelve_row_overlay();
    const pt::ptree doc = parse(render_overlay(ov));
    const pt::ptree& svg = doc.get_child("svg");
    CHECK(count(*group(svg, "bicoloured"), "polyline") == 0);
    CHECK(count(*group(svg, "white"), "polyline") == 12);
    CHECK(count(*group(svg, "black"), "polyline") == 12);
}

TEST_CASE("configuration drawing") {
    const CircularConfiguration c = golden::twelve_row_overlay().configuration();
    const Matching m = enumerate_admissible_matchings(c).front();
    const pt::ptree doc = parse(render_configuration(c, &m));
    const pt::ptree& svg = doc.get_child("svg");
    const pt::ptree* points = group(svg, "points");
    REQUIRE(points);
    CHECK(count(*points, "circle") == 10);
    CHECK(count(*points, "text") == 10);
    CHECK(count(*group(svg, "chords"), "line") == 5);
    const pt::ptree unmatched = parse(render_configuration(c));
    CHECK(count(*group(unmatched.get_child("svg"), "chords"), "line") == 0);
}

TEST_CASE("ferrers layers") {
    const std::vector<FerrersLayer> layers{{SkewShape({2, 1}), {}}, {SkewShape(), {}}};
    const pt::ptree doc = parse(render_ferrers(layers));
    const pt::ptree& svg = doc.get_child("svg");
    REQUIRE(group(svg, "ferrers", 0));
    REQUIRE(group(svg, "ferrers", 1));
    CHECK(count(*group(svg, "ferrers", 0), "rect") == 3);
    CHECK(count(*group(svg, "ferrers", 1), "rect") == 0);

    // outline of lambda with lambda/mu and P(lambda) drawn on top
    const Partition lambda{10, 7, 7, 6, 6, 4, 4, 3, 2, 2};
    const Partition mu{4, 3, 3, 1};
    const std::vector<FerrersLayer> stacked{{SkewShape(lambda), {"#dddddd", 1, false}},
                                            {SkewShape(lambda, mu), {"black", 1.5, false}},
                                            {SkewShape(peel_complete(lambda)), {"#555555", 1.5, true}}};
    const pt::ptree doc2 = parse(render_ferrers(stacked));
    CHECK(count(*group(doc2.get_child("svg"), "ferrers", 0), "rect") == lambda.size());
    CHECK(count(*group(doc2.get_child("svg"), "ferrers", 1), "rect") == lambda.size() - mu.size());
    CHECK(count(*group(doc2.get_child("svg"), "ferrers", 2), "rect") == peel_complete(lambda).size());
}
