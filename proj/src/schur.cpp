#include "schurpath/schur.hpp"

#include <utility>

#include "schurpath/tableau.hpp"

namespace schurpath {

Polynomial skew_schur(const SkewShape& shape, int variables) {
    Polynomial out(variables);
    Monomial m(variables);
    for_each_ssyt_word(shape, variables, [&](const std::vector<int>& word) {
        std::fill(m.exponents.begin(), m.exponents.end(), 0);
        for (int v : word) ++m.exponents[static_cast<std::size_t>(v - 1)];
        out.add_term(m, 1);
    });
    return out;
}

std::vector<Integer> complete_homogeneous(std::span<const Integer> values, int max_degree) {
    // h_d(x_1..x_n) = h_d(x_1..x_{n-1}) + x_n h_{d-1}(x_1..x_n)
    std::vector<Integer> h(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, 0);
    h[0] = 1;
    for (const Integer& x : values) {
        for (std::size_t d = 1; d < h.size(); ++d) h[d] += x * h[d - 1];
    }
    return h;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Integer skew_schur_eval(const SkewShape& shape, std::span<const Integer> values) {
    const int r = shape.outer.length();
    if (r == 0) return 1;
    const int max_degree = shape.outer[1] + r;
    const std::vector<Integer> h = complete_homogeneous(values, max_degree);
    std::vector<std::vector<Integer>> matrix(static_cast<std::size_t>(r),
                                             std::vector<Integer>(static_cast<std::size_t>(r), 0));
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            const int d = shape.outer[i] - shape.inner[j] - i + j;
            if (d >= 0) matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = h[static_cast<std::size_t>(d)];
        }
    }
    return bareiss_determinant(std::move(matrix));
}

Integer tableau_count(const SkewShape& shape, int variables) {
    const std::vector<Integer> ones(static_cast<std::size_t>(variables), Integer(1));
    return skew_schur_eval(shape, ones);
}

}  // namespace schurpath
