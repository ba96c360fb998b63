// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "schurpath/golden.hpp"
#include "schurpath/identities.hpp"
#include "schurpath/json_io.hpp"
#include "schurpath/lattice_path.hpp"
#include "schurpath/schur.hpp"

using namespace schurpath;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string seq(const Partition& p, int rows) {
    std::ostringstream out;
    const auto v = golden::padded(p, rows);
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    return out.str();
}

Overlay load(const std::string& name) {
    std::ifstream in(std::string(SCHURPATH_TEST_DATA) + "/" + name);
    return overlay_from_json(Json::parse(in));
}

const Partition gps_lambda{10, 7, 7, 6, 6, 4, 4, 3, 2, 2};
const Partition gps_mu{4, 3, 3, 1};
const std::vector<StripSpec> gps_strips{{2, 2, 3}, {1, 6, 2}};

VerificationOptions multipoint20() {
    VerificationOptions o;
    o.method = VerificationMethod::Multipoint;
    o.points = 20;
    o.seed = 42;
    return o;
}

Outcome golden_recolouring() {
    const Overlay ov = load("twelve_row_overlay.json");
    const std::vector<BicolouredPath> chosen{trace_bicoloured(ov, {15, Side::Top}), trace_bicoloured(ov, {5, Side::Bottom})};
    Outcome o;
    o.pass = chosen[0].to.where() == BoundaryPoint{10, Side::Bottom} && chosen[1].to.where() == BoundaryPoint{-8, Side::Bottom};
    const Overlay r = recolour(ov, chosen);
    const int wr = r.white().rows(), br = r.black().rows();
    o.pass = o.pass && seq(r.white().shape.outer, wr) == "13, 13, 11, 11, 9, 9, 8, 8, 7, 5, 3" &&
             seq(r.white().shape.inner, wr) == "9, 9, 7, 7, 7, 6, 5, 5, 5, 4, 0" &&
             seq(r.black().shape.outer, br) == "15, 14, 14, 12, 12, 11, 11, 11, 9, 8, 7, 7, 5" &&
             seq(r.black().shape.inner, br) == "10, 10, 10, 7, 7, 6, 5, 5, 5, 4, 2, 2, 0" && r.white().shift == 1 &&
             r.black().shift == 1;
    o.detail = "white (" + seq(r.white().shape.outer, wr) + ")/(" + seq(r.white().shape.inner, wr) + ")";
    return o;
}

Outcome golden_example() {
    const Partition lambda{16, 15, 15, 13, 13, 11, 11, 10, 10, 9, 7, 5};
    const Partition sigma{14, 14, 12, 12, 11, 11, 11, 9, 8, 7, 7, 5};
    const Partition mu{5, 4, 2, 2, 2, 1, 1, 1};
    const std::vector<BoundaryPoint> s{{15, Side::Top}};
    const auto rhs = theorem_rhs(PlacedShape(SkewShape(lambda, mu), 0, 12), PlacedShape(SkewShape(sigma, mu), 0, 12), s);
    Outcome o;
    o.pass = rhs.size() == 2;
    const std::vector<std::pair<std::string, std::string>> printed{
        {"14, 14, 12, 12, 11, 11, 11, 10, 10, 9, 7, 5", "16, 15, 15, 13, 13, 11, 11, 9, 8, 7, 7, 5"},
        {"14, 14, 12, 12, 10, 10, 9, 9, 8, 7, 7, 5", "16, 15, 15, 13, 13, 12, 12, 12, 10, 9, 7, 5"}};
    for (std::size_t i = 0; o.pass && i < 2; ++i) {
        const Term& t = rhs[i];
        o.pass = !t.zero && seq(t.first.shape.outer, 12) == printed[i].first &&
                 seq(t.second.shape.outer, 12) == printed[i].second && t.first.shape.inner == mu &&
                 t.second.shape.inner == mu && t.first.shift == 0 && t.second.shift == 0;
    }
    o.detail = std::to_string(rhs.size()) + " terms";
    return o;
}

Outcome gps() {
    const Identity id = gps_identity(gps_lambda, gps_mu, gps_strips, 11);
    const Partition nu = build_nu(gps_lambda, gps_strips);
    Outcome o;
    o.pass = nu == Partition{10, 9, 8, 8, 6, 5, 5, 3, 2, 2} &&
             id.lhs[0].second.shape.outer == Partition{8, 7, 7, 5, 4, 4, 2, 1, 1};
    const auto skew = verify_identity(id, multipoint20());
    const auto straight = verify_identity(gps_identity(gps_lambda, {}, gps_strips, 11), multipoint20());
    o.pass = o.pass && skew.pass && straight.pass && skew.points_tested == 20 && straight.points_tested == 20;
    o.detail = "nu = (" + seq(nu, 10) + "), max |lhs| = " + skew.max_magnitude.str();
    return o;
}

Outcome theorem_suite() {
    std::mt19937_64 g(4);
    int configurations = 0, identities = 0, failures = 0;
    while (configurations < 200) {
        const int n = gen::uniform(g, 2, 4);
        const Overlay ov(gen::random_family(g, 6, n), gen::random_family(g, 6, n));
        const CircularConfiguration& c = ov.configuration();
        if (c.coloured.empty() || !c.alternating()) continue;
        ++configurations;
        const PlacedShape w(ov.white().shape, ov.white().shift, ov.white().rows());
        const PlacedShape b(ov.black().shape, ov.black().shift, ov.black().rows());
        std::vector<BoundaryPoint> inward;
        for (const auto& p : c.coloured) {
            if (p.orientation == Orientation::Inward) inward.push_back(p.where());
        }
        for (unsigned mask = 1; mask < (1u << inward.size()); ++mask) {
            std::vector<BoundaryPoint> s;
            for (std::size_t i = 0; i < inward.size(); ++i) {
                if (mask >> i & 1u) s.push_back(inward[i]);
            }
            VerificationOptions opt;
            opt.method = VerificationMethod::Full;
            failures += !verify_identity(theorem_identity(w, b, s, n), opt).pass;
            ++identities;
        }
    }
    return {failures == 0, std::to_string(configurations) + " configurations, " + std::to_string(identities) +
                               " identities, " + std::to_string(failures) + " failures"};
}

Outcome involution_suite() {
    std::mt19937_64 g(5);
    int failures = 0;
    const int overlays = 1000;
    for (int k = 0; k < overlays; ++k) {
        const Overlay ov = gen::random_overlay(g, 8);
        const CircularConfiguration& c = ov.configuration();
        bool ok = true;
        for (const ColouredPoint& q : c.coloured) {
            const BicolouredPath p = trace_bicoloured(ov, q.where());
            ok = ok && c.find(p.to.where()) != nullptr && p.to.orientation != q.orientation &&
                 (p.to.index - q.index) % 2 != 0;
        }
        const BicolouredPaths all = all_bicoloured(ov);
        ok = ok && is_noncrossing(all.matching);
        const Monomial before = family_weight(ov.white()) * family_weight(ov.black());
        for (const BicolouredPath& p : all.paths) {
            const std::vector<BicolouredPath> one{p};
            const Overlay r = recolour(ov, one);
            const Overlay back = recolour(r, std::vector<BicolouredPath>{trace_bicoloured(r, p.from.where())});
            ok = ok && back.arcs(Colour::White) == ov.arcs(Colour::White) &&
                 back.arcs(Colour::Black) == ov.arcs(Colour::Black) && back.configuration() == c &&
                 family_weight(r.white()) * family_weight(r.black()) == before;
        }
        failures += !ok;
    }
    return {failures == 0, std::to_string(overlays) + " overlays, " + std::to_string(failures) + " failures"};
}

Outcome bijection_suite() {
    long tableaux = 0, failures = 0;
    for (const SkewShape& s : oracle::skew_shapes(5)) {
        for (int n = 1; n <= 4; ++n) {
            for (const Tableau& t : enumerate_ssyt(s, n)) {
                const PathFamily f = tableau_to_paths(t, 0);
                failures += !(is_nonintersecting(f.paths) && paths_to_tableau(f) == t && family_weight(f) == weight(t));
                ++tableaux;
            }
        }
    }
    return {failures == 0, std::to_string(tableaux) + " tableaux, " + std::to_string(failures) + " failures"};
}

Outcome oracle_agreement() {
    long checks = 0, failures = 0;
    for (const SkewShape& s : oracle::skew_shapes(6)) {
        for (int n = 1; n <= 4; ++n) {
            const Polynomial p = skew_schur(s, n);
            for (const auto& pt : evaluation_points(n, 20, 42 + static_cast<std::uint64_t>(n), 4)) {
                const std::vector<Integer> x(pt.begin(), pt.end());
                failures += p.evaluate(x) != skew_schur_eval(s, x);
                ++checks;
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " comparisons, " + std::to_string(failures) + " failures"};
}

Outcome negative_control() {
    const Identity id = gps_identity(gps_lambda, gps_mu, gps_strips, 11);
    int caught = 0, corruptions = 0;
    for (std::size_t i = 0; i < id.rhs.size(); ++i) {
        Identity dropped = id;
        dropped.rhs[i] = Term::zero_term();
        Identity grown = id;
        std::vector<int> outer = grown.rhs[i].second.shape.outer.parts();
        ++outer[0];
        grown.rhs[i].second.shape.outer = Partition::from(outer);
        for (const Identity* bad : {&dropped, &grown}) {
            const auto r = verify_identity(*bad, multipoint20());
            ++corruptions;
            if (!r.pass && r.witness) {
                const std::vector<Integer> x(r.witness->begin(), r.witness->end());
                caught += side_value(bad->lhs, x) != side_value(bad->rhs, x);
            }
        }
    }
    return {caught == corruptions, std::to_string(caught) + "/" + std::to_string(corruptions) + " corruptions caught"};
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const std::vector<std::tuple<int, const char*, double, std::function<Outcome()>>> criteria{
        {1, "golden recolouring", 1, golden_recolouring},
        {2, "golden alternating example", 1, golden_example},
        {3, "border-strip identity", 60, gps},
        {4, "theorem property suite", 300, theorem_suite},
        {5, "involution suite", 0, involution_suite},
        {6, "bijection suite", 0, bijection_suite},
        {7, "oracle agreement", 0, oracle_agreement},
        {8, "negative control", 0, negative_control}};
    bool all = true;
    for (const auto& [number, name, limit, run] : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (limit > 0 && seconds >= limit) {
            o.pass = false;
            o.detail += " (over the time limit)";
        }
        all = all && o.pass;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds;
        std::cout << "criterion " << number << " " << (o.pass ? "PASS" : "FAIL") << " " << name << ": " << o.detail
                  << " [" << time.str() << " s]\n";
    }
    return all ? 0 : 1;
}
