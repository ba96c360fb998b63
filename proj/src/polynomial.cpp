#include "schurpath/polynomial.hpp"

#include <numeric>

#include "schurpath/error.hpp"

namespace schurpath {

int Monomial::degree() const noexcept {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Monomial& Monomial::operator*=(const Monomial& other) {
    if (other.variables() != variables()) {
        throw Error(ErrorCode::VariableCountMismatch,
                    std::to_string(variables()) + " vs " + std::to_string(other.variables()));
    }
    for (std::size_t k = 0; k < exponents.size(); ++k) exponents[k] += other.exponents[k];
    return *this;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += "x" + std::to_string(k + 1);
        if (exponents[k] > 1) out += "^" + std::to_string(exponents[k]);
    }
    return out.empty() ? "1" : out;
}

Polynomial Polynomial::constant(int variables, const Integer& c) {
    Polynomial p(variables);
    p.add_term(Monomial(variables), c);
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
    Polynomial p(m.variables());
    p.add_term(m, c);
    return p;
}

void Polynomial::check_variables(int other) const {
    if (other != variables_) {
        throw Error(ErrorCode::VariableCountMismatch,
                    std::to_string(variables_) + " vs " + std::to_string(other));
    }
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
    check_variables(m.variables());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_variables(other.variables_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_variables(other.variables_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_variables(b.variables_);
    Polynomial out(a.variables_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    a.check_variables(b.variables_);
    return a.terms_ == b.terms_;
}

Integer Polynomial::evaluate(std::span<const Integer> point) const {
    check_variables(static_cast<int>(point.size()));
    Integer total = 0;
    for (const auto& [m, c] : terms_) {
        Integer term = c;
        for (std::size_t k = 0; k < m.exponents.size(); ++k) {
            if (m.exponents[k] > 0) term *= boost::multiprecision::pow(point[k], static_cast<unsigned>(m.exponents[k]));
        }
        total += term;
    }
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = m.to_string();
        if (mono == "1") {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str() + "*";
            out += mono;
        }
    }
    return out;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }
bool equals(const Polynomial& a, const Polynomial& b) { return a == b; }

}  // namespace schurpath
