#include "slfactor/steinberg.hpp"

#include <random>

namespace slf {

namespace {

bool commute(const ElemFactor& a, const ElemFactor& b) {
    return a.j != b.i && a.i != b.j;
}

bool merge_pass(std::vector<ElemFactor>& fs) {
    bool changed = false;

    for (std::size_t k = 0; k < fs.size();) {
        if (fs[k].a.is_zero()) {
            fs.erase(fs.begin() + static_cast<long>(k));
            changed = true;
            continue;
        }
        bool merged = false;
        for (std::size_t m = k + 1; m < fs.size(); ++m) {
            if (fs[m].i == fs[k].i && fs[m].j == fs[k].j) {
                fs[k].a = fs[k].a + fs[m].a;
                fs.erase(fs.begin() + static_cast<long>(m));
                if (fs[k].a.is_zero()) fs.erase(fs.begin() + static_cast<long>(k));
                changed = true;
                merged = true;
                break;
            }
            if (!commute(fs[k], fs[m])) break;
        }
        if (!merged) ++k;
    }

    // Four-factor commutator contractions.
    for (std::size_t k = 0; k + 3 < fs.size(); ++k) {
        const ElemFactor &a = fs[k], &b = fs[k + 1], &c = fs[k + 2], &d = fs[k + 3];
        if (a.i != c.i || a.j != c.j || b.i != d.i || b.j != d.j) continue;
        if (!(c.a == -a.a) || !(d.a == -b.a)) continue;
        ElemFactor repl;
        if (b.i == a.j && b.j != a.i) {
            repl = ElemFactor{a.i, b.j, a.a * b.a};
        } else if (b.j == a.i && b.i != a.j) {
            repl = ElemFactor{b.i, a.j, -(a.a * b.a)};
        } else {
            continue;
        }
        fs.erase(fs.begin() + static_cast<long>(k), fs.begin() + static_cast<long>(k) + 4);
        if (!repl.a.is_zero()) fs.insert(fs.begin() + static_cast<long>(k), repl);
        changed = true;
        if (k > 0) --k;
    }
    return changed;
}

} // namespace

Factorization simplify(const Factorization& f) {
    Factorization out = f;
    std::size_t cap = 10 * std::max<std::size_t>(1, out.factors.size());
    for (std::size_t pass = 0; pass < cap; ++pass)
        if (!merge_pass(out.factors)) break;
    return out;
}

RelationReport check_relations(const RingPtr& ring, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    RelationReport rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        if (rep.detail.empty()) rep.detail = what;
    };
    auto mat = [&](std::size_t n, std::size_t i, std::size_t j, const Poly& a) {
        return ElemFactor{i, j, a}.to_matrix(n, ring);
    };

    for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
        std::uniform_int_distribution<std::size_t> idx(1, n);
        auto distinct = [&](std::size_t count) {
            std::vector<std::size_t> v;
            while (v.size() < count) {
                std::size_t c = idx(rng);
                bool seen = false;
                for (std::size_t x : v) seen = seen || x == c;
                if (!seen) v.push_back(c);
            }
            return v;
        };
        for (int s = 0; s < samples; ++s) {
            Poly a = random_poly(rng, ring, 2, 2);
            Poly b = random_poly(rng, ring, 2, 2);
            PolyMatrix I = PolyMatrix::identity(n, ring);

            { // 1: E_ij(a) E_ij(b) = E_ij(a+b)
                auto v = distinct(2);
                if (mat(n, v[0], v[1], a) * mat(n, v[0], v[1], b) != mat(n, v[0], v[1], a + b))
                    fail("relation 1");
            }
            { // 2: E_ij(0) = I
                auto v = distinct(2);
                if (mat(n, v[0], v[1], Poly::zero(ring)) != I) fail("relation 2");
            }
            { // 3: E_ij(a) E_jl(b) E_ij(-a) E_jl(-b) = E_il(ab)
                auto v = distinct(3);
                std::size_t i = v[0], j = v[1], l = v[2];
                PolyMatrix lhs = mat(n, i, j, a) * mat(n, j, l, b) * mat(n, i, j, -a) *
                                 mat(n, j, l, -b);
                if (lhs != mat(n, i, l, a * b)) fail("relation 3");
            }
            { // 4: E_ij(a) E_li(b) E_ij(-a) E_li(-b) = E_lj(-ab)
                auto v = distinct(3);
                std::size_t i = v[0], j = v[1], l = v[2];
                PolyMatrix lhs = mat(n, i, j, a) * mat(n, l, i, b) * mat(n, i, j, -a) *
                                 mat(n, l, i, -b);
                if (lhs != mat(n, l, j, -(a * b))) fail("relation 4");
            }
            if (n >= 4) { // 5: commuting positions
                auto v = distinct(4);
                std::size_t i = v[0], j = v[1], l = v[2], p = v[3];
                PolyMatrix lhs = mat(n, i, j, a) * mat(n, l, p, b) * mat(n, i, j, -a) *
                                 mat(n, l, p, -b);
                if (lhs != I) fail("relation 5");
            } else { // n = 3: pick (i,j), (l,p) with j != l, i != p
                auto v = distinct(3);
                std::size_t i = v[0], j = v[1], l = v[2];
                // (i,j) and (l,j) share the column: j != l and i != j hold
                PolyMatrix lhs = mat(n, i, j, a) * mat(n, l, j, b) * mat(n, i, j, -a) *
                                 mat(n, l, j, -b);
                if (lhs != I) fail("relation 5");
            }
        }
    }
    return rep;
}

} // namespace slf
