#pragma once

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schurpath {

using Integer = boost::multiprecision::cpp_int;

/// x_1^e_1 ... x_N^e_N
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(int variables) : exponents(static_cast<std::size_t>(variables), 0) {}
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    int variables() const noexcept { return static_cast<int>(exponents.size()); }
    int degree() const noexcept;

    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    std::string to_string() const;  ///< "x1^2*x3", "1" for the unit

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in x_1..x_N with exact integer coefficients.
/// Zero coefficients are never stored; terms iterate in descending
/// lexicographic order of exponent vectors.
class Polynomial {
public:
    using Terms = std::map<Monomial, Integer, std::greater<>>;

    explicit Polynomial(int variables = 0) : variables_(variables) {}

    static Polynomial constant(int variables, const Integer& c);
    static Polynomial monomial(const Monomial& m, const Integer& c = 1);

    int variables() const noexcept { return variables_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Monomial& m, const Integer& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Integer evaluate(std::span<const Integer> point) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&);

private:
    void check_variables(int other) const;

    int variables_;
    Terms terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
bool equals(const Polynomial& a, const Polynomial& b);

}  // namespace schurpath
