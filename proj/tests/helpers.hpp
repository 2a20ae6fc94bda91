#pragma once

#include <random>
#include <string>
#include <vector>

#include "slfactor/linalg.hpp"
#include "slfactor/parse.hpp"

namespace slf::testing {

inline RingPtr qring(std::vector<std::string> vars) {
    return make_ring(Field::rationals(), std::move(vars));
}

inline RingPtr gfring(std::uint64_t p, std::vector<std::string> vars) {
    return make_ring(Field::gf(p), std::move(vars));
}

inline Poly P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }

inline std::vector<Poly> apply_matrix(const PolyMatrix& m, const std::vector<Poly>& v) {
    std::vector<Poly> out(m.n(), Poly::zero(m.ring()));
    for (std::size_t r = 0; r < m.n(); ++r)
        for (std::size_t c = 0; c < m.n(); ++c) out[r] = out[r] + m.at(r, c) * v[c];
    return out;
}

} // namespace slf::testing
