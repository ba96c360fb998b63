// Structural properties of bicoloured paths over random overlays.

#include <doctest.h>

#include "generators.hpp"
#include "schurpath/lattice_path.hpp"
#include "schurpath/overlay.hpp"

using namespace schurpath;

namespace {

Monomial joint_weight(const Overlay& ov) { return family_weight(ov.white()) * family_weight(ov.black()); }

}  // namespace

TEST_CASE("bicoloured paths over random overlays") {
    std::mt19937_64 g(2024);
    for (int k = 0; k < 400; ++k) {
        const Overlay ov = gen::random_overlay(g, 9);
        const CircularConfiguration& c = ov.configuration();
        CHECK(c.admissible());
        for (const ColouredPoint& q : c.coloured) {
            const BicolouredPath p = trace_bicoloured(ov, q.where());
            CHECK(p.from == q);
            REQUIRE(c.find(p.to.where()) != nullptr);
            CHECK(p.to.orientation != p.from.orientation);
            CHECK((p.to.index - p.from.index) % 2 != 0);
            CHECK_FALSE(p.arcs.empty());
            // consecutive arcs share a lattice point
            for (std::size_t i = 1; i < p.arcs.size(); ++i) {
                const Arc& a = p.arcs[i - 1].first;
                const Arc& b = p.arcs[i].first;
                const bool joined = a.head() == b.tail || a.head() == b.head() || a.tail == b.tail || a.tail == b.head();
                CHECK(joined);
            }
            for (const auto& [arc, colour] : p.arcs) {
                CHECK(ov.is_coloured(arc));
                CHECK(ov.arcs(colour).count(arc) == 1);
            }
        }
        const BicolouredPaths all = all_bicoloured(ov);
        CHECK(is_noncrossing(all.matching));
        CHECK(all.matching.edges.size() * 2 == c.coloured.size());

        const Overlay r = recolour(ov, all.paths);
        CHECK(is_nonintersecting(r.white().paths));
        CHECK(is_nonintersecting(r.black().paths));
        CHECK(joint_weight(r) == joint_weight(ov));
        CHECK(r.white().shape.size() + r.black().shape.size() == ov.white().shape.size() + ov.black().shape.size());
    }
}
