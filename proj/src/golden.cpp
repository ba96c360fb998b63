#include "schurpath/golden.hpp"

#include <functional>

#include "schurpath/error.hpp"
#include "schurpath/identities.hpp"
#include "schurpath/lattice_path.hpp"
#include "schurpath/schur.hpp"
#include "schurpath/tableau.hpp"

namespace schurpath::golden {

std::vector<int> padded(const Partition& p, int rows) {
    std::vector<int> out(p.parts());
    out.resize(static_cast<std::size_t>(std::max(rows, p.length())), 0);
    return out;
}

namespace {

PathFamily family(Partition outer, Partition inner, std::vector<std::vector<int>> rows, int n, std::int64_t shift,
                  int count) {
    return tableau_to_paths(validate_tableau(SkewShape(std::move(outer), std::move(inner)), std::move(rows), n), shift,
                            count);
}

bool placed_as(const PathFamily& f, const std::vector<int>& outer, const std::vector<int>& inner,
               std::int64_t shift) {
    return f.shift == shift && padded(f.shape.outer, f.rows()) == outer && padded(f.shape.inner, f.rows()) == inner &&
           static_cast<int>(outer.size()) == f.rows();
}

bool pair_is(const Term& t, const std::vector<int>& a, const std::vector<int>& b) {
    return !t.zero && padded(t.first.shape.outer, t.first.rows) == a && padded(t.second.shape.outer, t.second.rows) == b;
}

const Partition gps_lambda{10, 7, 7, 6, 6, 4, 4, 3, 2, 2};
const Partition gps_mu{4, 3, 3, 1};
const std::vector<StripSpec> gps_strips{{2, 2, 3}, {1, 6, 2}};

Check recolour_twelve_rows() {
    const Overlay ov = twelve_row_overlay();
    const BicolouredPath a = trace_bicoloured(ov, {15, Side::Top});
    const BicolouredPath b = trace_bicoloured(ov, {5, Side::Bottom});
    const bool ends = a.to.where() == BoundaryPoint{10, Side::Bottom} && b.to.where() == BoundaryPoint{-8, Side::Bottom};
    const std::vector<BicolouredPath> chosen{a, b};
    const Overlay r = recolour(ov, chosen);
    const bool shapes = placed_as(r.white(), {13, 13, 11, 11, 9, 9, 8, 8, 7, 5, 3}, {9, 9, 7, 7, 7, 6, 5, 5, 5, 4, 0}, 1) &&
                        placed_as(r.black(), {15, 14, 14, 12, 12, 11, 11, 11, 9, 8, 7, 7, 5},
                                  {10, 10, 10, 7, 7, 6, 5, 5, 5, 4, 2, 2, 0}, 1);
    return {"recolour twelve-row overlay", ends && shapes,
            "white " + r.white().shape.to_string() + " shift " + std::to_string(r.white().shift) + ", black " +
                r.black().shape.to_string() + " shift " + std::to_string(r.black().shift)};
}

Check recolour_twelve_rows_by_configuration() {
    const CircularConfiguration c = circular_configuration(twelve_row_overlay());
    const int q = c.find({15, Side::Top})->index;
    const int q2 = c.find({10, Side::Bottom})->index;
    const int p = c.find({5, Side::Bottom})->index;
    const int p2 = c.find({-8, Side::Bottom})->index;
    const std::vector<std::pair<int, int>> edges{{std::min(q, q2), std::max(q, q2)}, {std::min(p, p2), std::max(p, p2)}};
    const auto shapes = configuration_to_shapes(reorient(c, edges));
    const bool ok = shapes && padded(shapes->white.shape.outer, shapes->white.rows) ==
                                  std::vector<int>{13, 13, 11, 11, 9, 9, 8, 8, 7, 5, 3} &&
                    padded(shapes->white.shape.inner, shapes->white.rows) ==
                        std::vector<int>{9, 9, 7, 7, 7, 6, 5, 5, 5, 4, 0} &&
                    padded(shapes->black.shape.outer, shapes->black.rows) ==
                        std::vector<int>{15, 14, 14, 12, 12, 11, 11, 11, 9, 8, 7, 7, 5} &&
                    padded(shapes->black.shape.inner, shapes->black.rows) ==
                        std::vector<int>{10, 10, 10, 7, 7, 6, 5, 5, 5, 4, 2, 2, 0} &&
                    shapes->white.shift == 1 && shapes->black.shift == 1;
    return {"reorient twelve-row configuration", ok, std::to_string(c.coloured.size()) + " coloured points"};
}

Check recolour_seven_rows() {
    const Overlay ov = seven_row_overlay();
    const std::vector<BoundaryPoint> at{{7, Side::Top}, {-1, Side::Bottom}};
    const Overlay r = recolour_at(ov, at);
    const bool ok = r.white().shape == SkewShape({5, 3, 3, 2, 2, 1, 1, 1}, {2, 1, 1, 1, 1}) &&
                    r.black().shape == SkewShape({9, 5, 5, 1, 1, 1}, {4, 3, 1}) && recolour_at(r, at) == ov;
    return {"recolour seven-row overlay", ok,
            "white " + r.white().shape.to_string() + ", black " + r.black().shape.to_string()};
}

Check alternating_example() {
    const Partition lambda{16, 15, 15, 13, 13, 11, 11, 10, 10, 9, 7, 5};
    const Partition sigma{14, 14, 12, 12, 11, 11, 11, 9, 8, 7, 7, 5};
    const Partition mu{5, 4, 2, 2, 2, 1, 1, 1};
    const std::vector<BoundaryPoint> s{{15, Side::Top}};
    const auto q = theorem_rhs(PlacedShape(SkewShape(lambda, mu), 0, 12), PlacedShape(SkewShape(sigma, mu), 0, 12), s);
    const bool ok = q.size() == 2 &&
                    pair_is(q[0], {14, 14, 12, 12, 11, 11, 11, 10, 10, 9, 7, 5}, {16, 15, 15, 13, 13, 11, 11, 9, 8, 7, 7, 5}) &&
                    pair_is(q[1], {14, 14, 12, 12, 10, 10, 9, 9, 8, 7, 7, 5}, {16, 15, 15, 13, 13, 12, 12, 12, 10, 9, 7, 5}) &&
                    gps_consistency(lambda, sigma, mu, 12);
    return {"alternating example", ok, std::to_string(q.size()) + " terms"};
}

Check gps_construction() {
    const Identity id = gps_identity(gps_lambda, gps_mu, gps_strips, 11);
    const Partition nu = build_nu(gps_lambda, gps_strips);
    const bool ok = nu == Partition{10, 9, 8, 8, 6, 5, 5, 3, 2, 2} &&
                    id.lhs.size() == 1 && id.lhs[0].second.shape.outer == Partition{8, 7, 7, 5, 4, 4, 2, 1, 1} &&
                    id.rhs.size() == 3 && pair_is(id.rhs[0], {6, 6, 5, 5, 3, 3, 2, 1, 1}, padded(nu, 10)) &&
                    pair_is(id.rhs[1], {8, 7, 7, 6, 6, 4, 4, 3, 2, 2}, {10, 7, 7, 5, 4, 4, 2, 1, 1}) &&
                    pair_is(id.rhs[2], {6, 6, 5, 5, 4, 4, 4, 3, 2, 2}, {10, 9, 8, 8, 6, 4, 2, 1, 1});
    return {"gps construction", ok, "nu = " + nu.to_string()};
}

Check gps_verification() {
    VerificationOptions options;
    options.method = VerificationMethod::Multipoint;
    options.points = 20;
    options.seed = 42;
    const auto skew = verify_identity(gps_identity(gps_lambda, gps_mu, gps_strips, 11), options);
    const auto straight = verify_identity(gps_identity(gps_lambda, {}, gps_strips, 11), options);
    return {"gps identity at 20 points", skew.pass && straight.pass && skew.points_tested == 20,
            "max |lhs| " + skew.max_magnitude.str()};
}

Check gps_routes_agree() {
    const bool ok = gps_consistency(gps_lambda, gps_mu, gps_strips) && gps_consistency(gps_lambda, {}, gps_strips);
    return {"gps border strips agree with recolouring", ok, ""};
}

Check small_values() {
    Polynomial expected(2);
    expected.add_term(Monomial({2, 1}), 1);
    expected.add_term(Monomial({1, 2}), 1);
    const std::vector<Integer> ones{1, 1};
    const bool ok = skew_schur(SkewShape({2, 1}), 2) == expected && skew_schur_eval(SkewShape({2, 1}), ones) == 2 &&
                    skew_schur(SkewShape({1, 1, 1}), 2).is_zero() && skew_schur_eval(SkewShape({1, 1, 1}), ones) == 0;
    return {"small Schur values", ok, ""};
}

Check bijection_on_fixtures() {
    bool ok = true;
    for (const Overlay& ov : {twelve_row_overlay(), seven_row_overlay()}) {
        for (Colour c : {Colour::White, Colour::Black}) {
            const PathFamily& f = ov.family(c);
            ok = ok && tableau_to_paths(paths_to_tableau(f), f.shift, f.rows()) == f;
        }
    }
    return {"tableau/path round trip on fixtures", ok, ""};
}

}  // namespace

Overlay twelve_row_overlay() {
    return Overlay(family({14, 13, 13, 11, 11, 9, 9, 8, 8, 7, 5, 3}, {9, 9, 9, 6, 6, 5, 4, 4, 4, 3, 1},
                          {{5, 7, 7, 7, 8},
                           {8, 8, 11, 12},
                           {11, 11, 12, 13},
                           {3, 7, 9, 12, 12},
                           {7, 9, 11, 13, 13},
                           {2, 9, 10, 12},
                           {2, 3, 10, 11, 13},
                           {5, 8, 11, 12},
                           {7, 11, 12, 13},
                           {8, 9, 12, 13},
                           {2, 8, 11, 11},
                           {7, 11, 11}},
                          13, 2, 12),
                   family({14, 14, 12, 12, 11, 11, 11, 9, 8, 7, 7, 5}, {10, 10, 8, 8, 8, 7, 6, 6, 6, 5, 2},
                          {{6, 10, 11, 11},
                           {7, 11, 12, 13},
                           {6, 7, 9, 12},
                           {9, 9, 10, 13},
                           {10, 10, 11},
                           {1, 11, 11, 12},
                           {6, 10, 12, 12, 13},
                           {8, 12, 13},
                           {11, 13},
                           {1, 12},
                           {9, 12, 12, 13, 13},
                           {9, 11, 13, 13, 13}},
                          13, 0, 12));
}

Overlay seven_row_overlay() {
    return Overlay(family({7, 4, 4, 3, 1, 1, 1}, {3, 2, 2, 1}, {{5, 8, 8, 8}, {1, 6}, {6, 8}, {3, 8}, {5}, {7}, {8}}, 8, 1, 7),
                   family({7, 4, 4, 3, 1, 1, 1}, {3, 2, 2, 1}, {{2, 7, 7, 8}, {6, 7}, {7, 8}, {3, 8}, {1}, {2}, {4}}, 8, 0, 7));
}

std::vector<Check> run_suite() {
    const std::vector<std::pair<const char*, std::function<Check()>>> checks{
        {"recolour twelve-row overlay", recolour_twelve_rows},
        {"reorient twelve-row configuration", recolour_twelve_rows_by_configuration},
        {"recolour seven-row overlay", recolour_seven_rows},
        {"alternating example", alternating_example},
        {"gps construction", gps_construction},
        {"gps identity at 20 points", gps_verification},
        {"gps border strips agree with recolouring", gps_routes_agree},
        {"small Schur values", small_values},
        {"tableau/path round trip on fixtures", bijection_on_fixtures}};
    std::vector<Check> out;
    for (const auto& [name, run] : checks) {
        try {
            out.push_back(run());
        } catch (const std::exception& e) {
            out.push_back({name, false, e.what()});
        }
    }
    return out;
}

}  // namespace schurpath::golden
