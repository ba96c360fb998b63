#include "schurpath/identities.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "schurpath/error.hpp"
#include "schurpath/schur.hpp"

namespace schurpath {

SkewShape normal_form(const PlacedShape& p) {
    const int offset = p.shape.inner[p.rows];
    if (offset == 0) return p.shape;
    std::vector<int> outer;
    std::vector<int> inner;
    for (int i = 1; i <= p.rows; ++i) {
        outer.push_back(p.shape.outer[i] - offset);
        inner.push_back(p.shape.inner[i] - offset);
    }
    return SkewShape(Partition::from(outer), Partition::from(inner));
}

namespace {

using NormalTerm = std::optional<std::pair<SkewShape, SkewShape>>;

std::vector<NormalTerm> normalised(std::span<const Term> terms) {
    std::vector<NormalTerm> out;
    for (const Term& t : terms) {
        if (t.zero) {
            out.emplace_back(std::nullopt);
        } else {
            out.emplace_back(std::make_pair(normal_form(t.first), normal_form(t.second)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Term for outer/mu placed at shift 0; zero when mu does not fit.
Term placed_term(const Partition& a, const Partition& b, const Partition& mu, int rows_a, int rows_b) {
    if (!a.contains(mu) || !b.contains(mu)) return Term::zero_term();
    return Term{PlacedShape(SkewShape(a, mu), 0, rows_a), PlacedShape(SkewShape(b, mu), 0, rows_b), false};
}

}  // namespace

bool same_terms(std::span<const Term> a, std::span<const Term> b) { return normalised(a) == normalised(b); }

int default_variables(const Identity& id) {
    int n = 1;
    for (const auto* side : {&id.lhs, &id.rhs}) {
        for (const Term& t : *side) {
            if (t.zero) continue;
            n = std::max({n, t.first.shape.max_column_height(), t.second.shape.max_column_height()});
        }
    }
    return n;
}

std::vector<RecolouredTerm> theorem_configurations(const PlacedShape& white, const PlacedShape& black,
                                                   std::span<const BoundaryPoint> s) {
    const CircularConfiguration c = circular_configuration(white, black);
    if (!c.alternating()) throw Error(ErrorCode::NotAlternating, "coloured points do not alternate in orientation");
    if (s.empty()) throw Error(ErrorCode::EmptyS, "S must contain at least one point");
    std::set<int> chosen;
    for (const BoundaryPoint& p : s) {
        const ColouredPoint* cp = c.find(p);
        if (cp == nullptr || cp->orientation != Orientation::Inward) {
            throw Error(ErrorCode::SNotInward, "(" + std::to_string(p.x) + (p.side == Side::Top ? ",N)" : ",1)") +
                                                   " is not an inward coloured point");
        }
        chosen.insert(cp->index);
    }
    std::vector<RecolouredTerm> out;
    std::set<std::vector<Orientation>> seen;
    for (const Matching& m : enumerate_admissible_matchings(c)) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : m.edges) {
            if (chosen.count(e.first) || chosen.count(e.second)) edges.push_back(e);
        }
        CircularConfiguration next = reorient(c, edges);
        std::vector<Orientation> key;
        for (const ColouredPoint& p : next.coloured) key.push_back(p.orientation);
        if (!seen.insert(key).second) continue;
        auto shapes = configuration_to_shapes(next);
        out.push_back(RecolouredTerm{std::move(next), std::move(shapes)});
    }
    return out;
}

std::vector<Term> theorem_rhs(const PlacedShape& white, const PlacedShape& black, std::span<const BoundaryPoint> s) {
    std::vector<Term> out;
    for (const RecolouredTerm& t : theorem_configurations(white, black, s)) {
        out.push_back(t.shapes ? Term{t.shapes->white, t.shapes->black, false} : Term::zero_term());
    }
    return out;
}

Identity theorem_identity(const PlacedShape& white, const PlacedShape& black, std::span<const BoundaryPoint> s,
                          int variables) {
    Identity id;
    id.lhs.push_back(Term{white, black, false});
    id.rhs = theorem_rhs(white, black, s);
    id.provenance = "theorem";
    id.variables = variables > 0 ? variables : default_variables(id);
    return id;
}

Identity gps_identity(const Partition& lambda, const Partition& mu, std::span<const StripSpec> strips,
                      int variables) {
    if (strips.empty()) throw Error(ErrorCode::ConstraintViolated, "at least one strip is required");
    if (!lambda.contains(mu)) {
        throw Error(ErrorCode::NotContained, "(" + mu.to_string() + ") not inside (" + lambda.to_string() + ")");
    }
    if (mu.length() >= lambda.length()) {
        throw Error(ErrorCode::ConstraintViolated, "inner partition must be shorter than lambda");
    }
    const int rows = lambda.length();
    const Partition nu = build_nu(lambda, strips);
    const Partition sigma = peel_complete(nu);
    if (!sigma.contains(mu)) {
        throw Error(ErrorCode::NotContained, "(" + mu.to_string() + ") not inside (" + sigma.to_string() + ")");
    }
    Identity id;
    id.lhs.push_back(placed_term(lambda, sigma, mu, rows, rows - 1));
    id.rhs.push_back(placed_term(peel_complete(lambda), nu, mu, rows - 1, rows));
    for (const StripSpec& s : strips) {
        id.rhs.push_back(placed_term(peel_up(lambda, s.row - 1, s.boxes), peel_down(nu, s.row), mu, rows, rows - 1));
    }
    id.provenance = "gps";
    id.variables = variables > 0 ? variables : default_variables(id);
    return id;
}

std::vector<Term> border_strip_rhs(const Partition& lambda, const Partition& sigma, const Partition& mu,
                                   int black_rows) {
    const int rows = lambda.length();
    if (black_rows != rows && black_rows != rows - 1) {
        throw Error(ErrorCode::ConstraintViolated, "black rows must be length(lambda) or length(lambda)-1");
    }
    if (lambda[1] <= sigma[1]) throw Error(ErrorCode::ConstraintViolated, "lambda_1 must exceed sigma_1");
    const PointSet white_ends = to_points(lambda, rows, 0);
    const PointSet black_ends = to_points(sigma, black_rows, 0);
    const PointSet nu_points = insert_point(black_ends, lambda[1] - 1);
    const Partition nu = from_points(nu_points);

    std::vector<Term> out;
    if (black_rows == rows - 1) out.push_back(placed_term(peel_complete(lambda), nu, mu, rows - 1, rows));
    const std::set<std::int64_t> white(white_ends.values.begin(), white_ends.values.end());
    for (std::int64_t q : black_ends.values) {
        if (white.count(q)) continue;
        int row = 1;
        while (row <= rows && !(q > std::int64_t{lambda[row + 1]} - (row + 1) && q < std::int64_t{lambda[row]} - row)) ++row;
        if (row > rows) throw Error(ErrorCode::ConstraintViolated, "black point outside the white gaps");
        const int box = static_cast<int>(q - (std::int64_t{lambda[row + 1]} - (row + 1)));
        const auto at = std::find(nu_points.values.begin(), nu_points.values.end(), q);
        const int nu_row = static_cast<int>(at - nu_points.values.begin()) + 1;
        out.push_back(placed_term(peel_up(lambda, row, box), peel_down(nu, nu_row), mu, rows, black_rows));
    }
    return out;
}

bool gps_consistency(const Partition& lambda, const Partition& sigma, const Partition& mu, int black_rows) {
    const std::vector<BoundaryPoint> s{{std::int64_t{lambda[1]} - 1, Side::Top}};
    const auto by_recolouring =
        theorem_rhs(PlacedShape(SkewShape(lambda, mu), 0, lambda.length()), PlacedShape(SkewShape(sigma, mu), 0, black_rows), s);
    return same_terms(border_strip_rhs(lambda, sigma, mu, black_rows), by_recolouring);
}

bool gps_consistency(const Partition& lambda, const Partition& mu, std::span<const StripSpec> strips) {
    const Identity id = gps_identity(lambda, mu, strips);
    const Partition sigma = peel_complete(build_nu(lambda, strips));
    const int black_rows = lambda.length() - 1;
    const std::vector<BoundaryPoint> s{{std::int64_t{lambda[1]} - 1, Side::Top}};
    const auto by_recolouring =
        theorem_rhs(PlacedShape(SkewShape(lambda, mu), 0, lambda.length()), PlacedShape(SkewShape(sigma, mu), 0, black_rows), s);
    return same_terms(id.rhs, by_recolouring) && same_terms(id.rhs, border_strip_rhs(lambda, sigma, mu, black_rows));
}

std::vector<std::vector<int>> evaluation_points(int variables, int count, std::uint64_t seed, int max_entry) {
    std::mt19937_64 gen(seed);
    const auto range = static_cast<std::uint64_t>(max_entry) + 1;
    std::vector<std::vector<int>> points(static_cast<std::size_t>(count));
    for (auto& p : points) {
        p.resize(static_cast<std::size_t>(variables));
        for (int& v : p) v = static_cast<int>(gen() % range);
    }
    return points;
}

Polynomial side_polynomial(std::span<const Term> terms, int variables) {
    Polynomial total(variables);
    for (const Term& t : terms) {
        if (t.zero) continue;
        total += skew_schur(t.first.shape, variables) * skew_schur(t.second.shape, variables);
    }
    return total;
}

Integer side_value(std::span<const Term> terms, std::span<const Integer> point) {
    Integer total = 0;
    for (const Term& t : terms) {
        if (t.zero) continue;
        total += skew_schur_eval(t.first.shape, point) * skew_schur_eval(t.second.shape, point);
    }
    return total;
}

namespace {

std::vector<Integer> as_integers(const std::vector<int>& p) { return {p.begin(), p.end()}; }

Integer magnitude(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

VerificationReport verify_identity(const Identity& id, const VerificationOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    VerificationReport report;
    report.variables = id.variables > 0 ? id.variables : default_variables(id);
    report.seed = options.seed;
    const int n = report.variables;

    VerificationMethod method = options.method;
    if (method == VerificationMethod::Auto) {
        Integer estimate = 0;
        for (const auto* side : {&id.lhs, &id.rhs}) {
            for (const Term& t : *side) {
                if (!t.zero) estimate += tableau_count(t.first.shape, n) + tableau_count(t.second.shape, n);
            }
        }
        method = estimate <= Integer(static_cast<long long>(options.budget)) ? VerificationMethod::Full
                                                                            : VerificationMethod::Multipoint;
    }
    report.method = method;

    if (method == VerificationMethod::Full) {
        const Polynomial lhs = side_polynomial(id.lhs, n);
        const Polynomial rhs = side_polynomial(id.rhs, n);
        for (const auto& [m, c] : lhs.terms()) report.max_magnitude = std::max(report.max_magnitude, magnitude(c));
        report.pass = lhs == rhs;
        if (!report.pass) {
            const Polynomial diff = lhs - rhs;
            report.witness_monomial = diff.terms().begin()->first.to_string();
            for (const auto& p : evaluation_points(n, 200, options.seed, options.max_entry)) {
                const auto point = as_integers(p);
                if (diff.evaluate(point) != 0) {
                    report.witness = p;
                    break;
                }
            }
        }
    } else {
        report.pass = true;
        for (const auto& p : evaluation_points(n, options.points, options.seed, options.max_entry)) {
            const auto point = as_integers(p);
            Integer lhs = side_value(id.lhs, point);
            Integer rhs = side_value(id.rhs, point);
            ++report.points_tested;
            report.max_magnitude = std::max(report.max_magnitude, magnitude(lhs));
            const bool equal = lhs == rhs;
            if (options.keep_values) report.values.push_back(PointValues{p, std::move(lhs), std::move(rhs)});
            if (!equal) {
                report.pass = false;
                report.witness = p;
                break;
            }
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace schurpath
