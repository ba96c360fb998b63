#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurpath/overlay.hpp"
#include "schurpath/partition.hpp"
#include "schurpath/polynomial.hpp"

namespace schurpath {

/// One product s_first * s_second.  A zero term stands for a configuration
/// that no pair of path families realises; it contributes 0.
struct Term {
    PlacedShape first;
    PlacedShape second;
    bool zero = false;

    static Term zero_term() { return Term{{}, {}, true}; }
};

/// Shape with its rows translated left so that the last inner row is zero.
/// Two placed shapes with equal normal forms have equal Schur functions.
SkewShape normal_form(const PlacedShape& p);

/// Order-insensitive comparison of term lists by normal form.
bool same_terms(std::span<const Term> a, std::span<const Term> b);

struct Identity {
    std::vector<Term> lhs;
    std::vector<Term> rhs;
    int variables = 0;
    std::string provenance;
};

/// Smallest N at which every term can be nonzero (largest column height).
int default_variables(const Identity& id);

struct RecolouredTerm {
    CircularConfiguration configuration;
    std::optional<ShapePair> shapes;
};

/// Configurations obtained by reorienting, in every admissible matching, the
/// edges incident with S; deduplicated, in order of first appearance.
std::vector<RecolouredTerm> theorem_configurations(const PlacedShape& white, const PlacedShape& black,
                                                   std::span<const BoundaryPoint> s);

/// Right-hand side shape pairs for an alternating configuration.
std::vector<Term> theorem_rhs(const PlacedShape& white, const PlacedShape& black,
                              std::span<const BoundaryPoint> s);

Identity theorem_identity(const PlacedShape& white, const PlacedShape& black, std::span<const BoundaryPoint> s,
                          int variables = 0);

/// The two-Schur expansion obtained from lambda, mu and a list of partial
/// border strips: s_lambda/mu * s_P(nu)/mu = s_P(lambda)/mu * s_nu/mu + sum ...
Identity gps_identity(const Partition& lambda, const Partition& mu, std::span<const StripSpec> strips,
                      int variables = 0);

/// Right-hand side for a pair (lambda/mu, sigma/mu) at shift 0 whose ending
/// points alternate, written with peel_up / peel_down / peel_complete.
/// `black_rows` is length(lambda) or length(lambda) - 1.
std::vector<Term> border_strip_rhs(const Partition& lambda, const Partition& sigma, const Partition& mu,
                                   int black_rows);

/// Border-strip construction agrees term for term with the recolouring
/// construction for S = {(lambda_1 - 1, N)}.
bool gps_consistency(const Partition& lambda, const Partition& mu, std::span<const StripSpec> strips);
bool gps_consistency(const Partition& lambda, const Partition& sigma, const Partition& mu, int black_rows);

enum class VerificationMethod { Auto, Full, Multipoint };

struct VerificationOptions {
    VerificationMethod method = VerificationMethod::Auto;
    int points = 20;
    std::uint64_t seed = 42;
    int max_entry = 4;
    double budget = 1e6;  ///< tableau count below which Auto expands fully
    bool keep_values = false;
};

struct PointValues {
    std::vector<int> point;
    Integer lhs;
    Integer rhs;
};

struct VerificationReport {
    VerificationMethod method = VerificationMethod::Full;
    int variables = 0;
    int points_tested = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    std::optional<std::vector<int>> witness;  ///< evaluation point where the sides differ
    std::string witness_monomial;             ///< first differing monomial (full expansion)
    Integer max_magnitude = 0;
    double elapsed_ms = 0;
    std::vector<PointValues> values;  ///< only with keep_values
};

/// Seeded evaluation points with entries in 0..max_entry.
std::vector<std::vector<int>> evaluation_points(int variables, int count, std::uint64_t seed, int max_entry);

Polynomial side_polynomial(std::span<const Term> terms, int variables);
Integer side_value(std::span<const Term> terms, std::span<const Integer> point);

VerificationReport verify_identity(const Identity& id, const VerificationOptions& options = {});

}  // namespace schurpath
