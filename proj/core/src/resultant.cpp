#include "slfactor/resultant.hpp"

namespace slf {

Poly bareiss_det(std::vector<std::vector<Poly>> m, const RingPtr& ring) {
    std::size_t n = m.size();
    if (n == 0) return Poly::one(ring);
    bool negate = false;
    Poly prev = Poly::one(ring);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { swap_row = i; break; }
            if (swap_row == n) return Poly::zero(ring);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly::zero(ring);
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

std::vector<std::vector<Poly>> sylvester_matrix(const Poly& f1, const Poly& f2, std::size_t var) {
    const RingPtr& R = f1.ring();
    long d1 = f1.degree_in(var);
    long d2 = f2.degree_in(var);
    if (d1 <= 0 && d2 <= 0)
        throw domain_error("sylvester_matrix: both inputs constant in the given variable");
    if (d1 < 0 || d2 < 0)
        throw domain_error("sylvester_matrix: zero input polynomial");
    auto a = f1.coeffs_in(var);
    auto b = f2.coeffs_in(var);
    std::size_t N = static_cast<std::size_t>(d1 + d2);
    std::vector<std::vector<Poly>> m(N, std::vector<Poly>(N, Poly::zero(R)));
    // Ascending powers in columns; the f1 shift block comes first.
    for (long i = 0; i < d2; ++i)
        for (long k = 0; k <= d1; ++k)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = a[static_cast<std::size_t>(k)];
    for (long j = 0; j < d1; ++j)
        for (long k = 0; k <= d2; ++k)
            m[static_cast<std::size_t>(d2 + j)][static_cast<std::size_t>(j + k)] = b[static_cast<std::size_t>(k)];
    return m;
}

Poly resultant(const Poly& f1, const Poly& f2, std::size_t var) {
    const RingPtr& R = f1.ring();
    if (f1.is_zero() || f2.is_zero()) return Poly::zero(R);
    long d1 = f1.degree_in(var);
    long d2 = f2.degree_in(var);
    if (d1 <= 0 && d2 <= 0)
        throw domain_error("resultant: both inputs constant in the given variable");
    return bareiss_det(sylvester_matrix(f1, f2, var), R);
}

BezoutCofactors bezout_cofactors(const Poly& f1, const Poly& f2, std::size_t var) {
    const RingPtr& R = f1.ring();
    Poly r = resultant(f1, f2, var);
    if (r.is_zero()) throw domain_error("bezout_cofactors: zero resultant");

    long d1 = f1.degree_in(var);
    long d2 = f2.degree_in(var);
    std::size_t N = static_cast<std::size_t>(d1 + d2);
    auto syl = sylvester_matrix(f1, f2, var);
    // The coefficient system is the transpose of the Sylvester matrix; by
    // Cramer, the solution of M z = r*e_0 is the first column of adj(M),
    // i.e. signed minors along row 0 of M^t = columns of the Sylvester form.
    Poly x = Poly::variable(R, var);
    Poly g1 = Poly::zero(R), g2 = Poly::zero(R);
    for (std::size_t c = 0; c < N; ++c) {
        // Minor of M (= syl transposed) deleting row 0 and column c equals the
        // minor of syl deleting column 0 and row c.
        std::vector<std::vector<Poly>> sub;
        sub.reserve(N - 1);
        for (std::size_t i = 0; i < N; ++i) {
            if (i == c) continue;
            std::vector<Poly> row;
            row.reserve(N - 1);
            for (std::size_t j = 1; j < N; ++j) row.push_back(syl[i][j]);
            sub.push_back(std::move(row));
        }
        Poly minor = bareiss_det(std::move(sub), R);
        if (c % 2 == 1) minor = -minor;
        if (minor.is_zero()) continue;
        if (c < static_cast<std::size_t>(d2))
            g1 = g1 + minor * x.pow(c);
        else
            g2 = g2 + minor * x.pow(c - static_cast<std::size_t>(d2));
    }
    if (!(f1 * g1 + f2 * g2 == r))
        throw domain_error("bezout_cofactors: internal identity check failed");
    return BezoutCofactors{g1, g2, r};
}

} // namespace slf
