#pragma once

#include <vector>

#include "slfactor/ideals.hpp"
#include "slfactor/linalg.hpp"

namespace slf {

/// Element of R[X] localized at a maximal ideal M of R: num / den with den
/// free of X and outside M. Constructed unreduced; a cheap normalization
/// clears constant denominators.
struct LocalPoly {
    Poly num, den;

    static LocalPoly of(const Poly& p);
    static LocalPoly frac(const Poly& num, const Poly& den);

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num == den; }

    LocalPoly operator+(const LocalPoly& o) const;
    LocalPoly operator-(const LocalPoly& o) const;
    LocalPoly operator*(const LocalPoly& o) const;
    LocalPoly operator-() const;
    bool operator==(const LocalPoly& o) const;

    long degree_in(std::size_t var) const { return num.degree_in(var); }
    LocalPoly eval_zero(std::size_t var) const; // X -> 0
};

/// Elementary factor over the localization (1-based indices).
struct LocalFactor {
    std::size_t i = 1, j = 2;
    LocalPoly a;
};

/// n x n matrix over the localization, used for exact verification.
class LocalMatrix {
public:
    LocalMatrix(std::size_t n, const RingPtr& ring);
    static LocalMatrix identity(std::size_t n, const RingPtr& ring);

    std::size_t n() const { return n_; }
    LocalPoly& at(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
    const LocalPoly& at(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

    LocalMatrix operator*(const LocalMatrix& o) const;
    bool operator==(const LocalMatrix& o) const;

private:
    std::size_t n_ = 0;
    std::vector<LocalPoly> e_;
};

LocalMatrix product_of_local(const std::vector<LocalFactor>& fs, std::size_t n,
                             const RingPtr& ring);

/// Factorization of the special matrix [[p, q, 0], [r, s, 0], [0, 0, 1]] into
/// elementary matrices over R[X] localized at M, where p is monic in `var`
/// and ps - qr = 1. The product of the returned factors (left to right)
/// equals the input matrix exactly; the identity is re-checked internally.
/// When split_depth is non-null it receives the deepest nesting of
/// pivot-degree splits, which never exceeds deg_var(p).
std::vector<LocalFactor> murthy_realize(const Poly& p, const Poly& q, const Poly& r,
                                        const Poly& s, std::size_t var,
                                        const MaximalIdealPtr& M,
                                        int* split_depth = nullptr);

} // namespace slf
