#include "slfactor/realize.hpp"

#include <queue>
#include <set>
#include <string>
#include <vector>

#include "slfactor/basecase.hpp"
#include "slfactor/cohn.hpp"
#include "slfactor/colreduce.hpp"
#include "slfactor/quillen.hpp"
#include "slfactor/steinberg.hpp"
#include "slfactor/trace.hpp"

namespace slf {

namespace {

std::vector<std::size_t> used_vars(const PolyMatrix& A) {
    std::vector<std::size_t> used;
    for (std::size_t var = 0; var < A.ring()->nvars(); ++var)
        for (std::size_t r = 0; r < A.n(); ++r) {
            bool found = false;
            for (std::size_t c = 0; c < A.n(); ++c)
                if (A.at(r, c).degree_in(var) > 0) {
                    used.push_back(var);
                    found = true;
                    break;
                }
            if (found) break;
        }
    return used;
}

std::size_t entry_weight(const Poly& p) {
    if (p.is_zero()) return 0;
    return p.terms().size() + static_cast<std::size_t>(p.total_degree());
}

std::size_t matrix_weight(const PolyMatrix& A) {
    std::size_t w = 0;
    for (std::size_t r = 0; r < A.n(); ++r)
        for (std::size_t c = 0; c < A.n(); ++c) w += entry_weight(A.at(r, c));
    return w;
}

struct PeelResult {
    std::vector<ElemFactor> left;  // row operations applied, in order
    std::vector<ElemFactor> right; // column operations applied, in order
    PolyMatrix reduced;            // left_k ... left_1 * A * right_1 ... right_m
};

struct PeelMove {
    bool is_col = false;
    std::size_t i = 0, j = 0; // 0-based source/target
    Poly a;
};

std::string matrix_key(const PolyMatrix& M) {
    std::string key;
    for (std::size_t r = 0; r < M.n(); ++r)
        for (std::size_t c = 0; c < M.n(); ++c) {
            key += M.at(r, c).str();
            key += ';';
        }
    return key;
}

/// Candidate undo moves: row or column operations whose coefficient is the
/// leading-monomial division quotient of one entry by another in its line.
std::vector<PeelMove> peel_moves(const PolyMatrix& M) {
    std::size_t n = M.n();
    std::vector<PeelMove> moves;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::size_t r = 0; r < n; ++r) {
                // Column op: col j += a * col i reduces M[r][j] against M[r][i].
                const Poly& csrc = M.at(r, i);
                const Poly& cdst = M.at(r, j);
                if (!csrc.is_zero() && !cdst.is_zero()) {
                    Poly q = lm_quotient(cdst, csrc);
                    if (!q.is_zero()) moves.push_back(PeelMove{true, i, j, -q});
                }
                // Row op: row i += a * row j reduces M[i][r] against M[j][r].
                const Poly& rsrc = M.at(j, r);
                const Poly& rdst = M.at(i, r);
                if (!rsrc.is_zero() && !rdst.is_zero()) {
                    Poly q = lm_quotient(rdst, rsrc);
                    if (!q.is_zero()) moves.push_back(PeelMove{false, i, j, -q});
                }
            }
        }
    return moves;
}

PolyMatrix apply_move(const PolyMatrix& M, const PeelMove& mv) {
    PolyMatrix out = M;
    std::size_t n = M.n();
    if (mv.is_col) {
        for (std::size_t r = 0; r < n; ++r)
            out.at(r, mv.j) = out.at(r, mv.j) + mv.a * out.at(r, mv.i);
    } else {
        for (std::size_t c = 0; c < n; ++c)
            out.at(mv.i, c) = out.at(mv.i, c) + mv.a * out.at(mv.j, c);
    }
    return out;
}

/// Peels elementary factors off A by a best-first search over row and column
/// operations that shrink the matrix. Products of a few elementary matrices -
/// the common case - unwind completely; anything left over goes to the
/// general algorithm.
PeelResult greedy_peel(const PolyMatrix& A) {
    struct State {
        std::size_t weight;
        PolyMatrix M;
        std::vector<PeelMove> applied;
    };
    auto heavier = [](const State& a, const State& b) { return a.weight > b.weight; };
    std::priority_queue<State, std::vector<State>, decltype(heavier)> frontier(heavier);
    std::set<std::string> seen;

    frontier.push(State{matrix_weight(A), A, {}});
    seen.insert(matrix_key(A));
    State best = frontier.top();

    for (int expanded = 0; !frontier.empty() && expanded < 400; ++expanded) {
        State cur = frontier.top();
        frontier.pop();
        if (cur.weight < best.weight) best = cur;
        if (cur.M.is_identity()) break;
        if (cur.applied.size() > 64) continue;
        for (const PeelMove& mv : peel_moves(cur.M)) {
            PolyMatrix next = apply_move(cur.M, mv);
            std::string key = matrix_key(next);
            if (!seen.insert(key).second) continue;
            std::size_t w = matrix_weight(next);
            if (w > cur.weight + 4) continue; // keep the search shrinking
            State st{w, std::move(next), cur.applied};
            st.applied.push_back(mv);
            frontier.push(std::move(st));
        }
    }

    PeelResult out{{}, {}, best.M};
    for (const PeelMove& mv : best.applied) {
        if (mv.is_col)
            out.right.push_back(ElemFactor{mv.i + 1, mv.j + 1, mv.a});
        else
            out.left.push_back(ElemFactor{mv.i + 1, mv.j + 1, mv.a});
    }
    return out;
}

/// Factors the special matrix [[p, q, 0], [r, s, 0], [0, 0, 1]] with det 1.
Factorization realize_special3(const PolyMatrix& A) {
    const RingPtr& ring = A.ring();
    std::vector<std::size_t> used = used_vars(A);
    if (used.size() <= 1) return used.empty() ? factor_over_field(A) : factor_univariate(A);

    Poly p = A.at(0, 0), q = A.at(0, 1), r = A.at(1, 0), s = A.at(1, 1);
    Poly one = Poly::one(ring);

    if (p.is_zero()) {
        // Row 1 += row 2 makes the pivot r, nonzero since det = 1.
        PolyMatrix B = A;
        for (std::size_t c = 0; c < 3; ++c) B.at(0, c) = B.at(0, c) + B.at(1, c);
        Factorization out{3, ring, {}};
        out.push(1, 2, -one);
        out.append(realize_special3(B));
        return out;
    }

    if (p.is_constant()) {
        // [[u, q], [r, s]] = E21(r/u) diag(u, 1/u) E12(q/u) with u a constant.
        Poly u_inv = Poly::constant(ring, p.constant_value().inv());
        Factorization out{3, ring, {}};
        out.push(2, 1, r * u_inv);
        push_scale_pair(out, 1, 2, p, u_inv);
        out.push(1, 2, q * u_inv);
        return out;
    }

    std::size_t var = used.back();
    Substitution sigma = monicize({p, q, r, s}, var);
    PolyMatrix B = A.map_entries([&](const Poly& e) { return sigma.apply(e); }, ring);

    Factorization head{3, ring, {}}; // factors to the left of the patched part
    Poly lead = B.at(0, 0).leading_coeff_in(var);
    if (!lead.is_constant() || lead.is_zero())
        throw domain_error("realize: substitution failed to monicize the pivot");
    if (!lead.is_one()) {
        Poly u = lead;
        Poly u_inv = Poly::constant(ring, lead.constant_value().inv());
        // A~ = diag(u, 1/u) * (diag(1/u, u) A~): peel the diagonal off first.
        push_scale_pair(head, 1, 2, u, u_inv);
        for (std::size_t c = 0; c < 3; ++c) {
            B.at(0, c) = B.at(0, c) * u_inv;
            B.at(1, c) = B.at(1, c) * u;
        }
    }

    TraceScope trq_("quillen_realize_special");
    Factorization patched =
        quillen_realize_special(B, var, [](const PolyMatrix& fiber) { return realize(fiber); });

    Factorization out{3, ring, {}};
    head.append(patched);
    for (const ElemFactor& e : head.factors) out.push(e.i, e.j, sigma.apply_inverse(e.a));
    return out;
}

} // namespace

Factorization realize(const PolyMatrix& A) {
    std::size_t n = A.n();
    const RingPtr& ring = A.ring();
    if (n < 3) throw domain_error("realize: dimension must be at least 3");

    Poly det = mat_det(A);
    if (!det.is_one())
        throw not_unimodular_error("realize: determinant is " + det.str() + ", expected 1");

    if (A.is_identity()) return Factorization{n, ring, {}};
    if (auto cohn = detect_cohn_type(A)) return *cohn;

    PeelResult peel = greedy_peel(A);
    const PolyMatrix& M = peel.reduced;

    Factorization out{n, ring, {}};
    for (const ElemFactor& e : peel.left) out.push(e.i, e.j, -e.a);

    if (!M.is_identity()) {
        if (auto cohn = detect_cohn_type(M)) {
            out.append(*cohn);
            for (auto it = peel.right.rbegin(); it != peel.right.rend(); ++it)
                out.push(it->i, it->j, -it->a);
            return simplify(out);
        }
        std::vector<std::size_t> used = used_vars(M);
        if (used.size() > 2)
            throw unsupported_zero_search(
                "matrix still involves " + std::to_string(used.size()) +
                " variables after peeling; the patching step would need maximal "
                "ideals with irrational points, which this implementation cannot "
                "locate (guaranteed support covers at most two variables)");
        if (used.empty()) {
            out.append(factor_over_field(M));
        } else if (used.size() == 1) {
            out.append(factor_univariate(M));
        } else {
            ShrinkResult s;
            {
                TraceScope tr_("shrink_once n=" + std::to_string(n));
                s = shrink_once(M);
            }
            out.append(inverse_of(s.prefix));
            if (n > 3) {
                out.append(embed(realize(s.core), n));
            } else {
                PolyMatrix special = embed(s.core, 3);
                out.append(realize_special3(special));
            }
            out.append(inverse_of(s.suffix));
        }
    }

    for (auto it = peel.right.rbegin(); it != peel.right.rend(); ++it)
        out.push(it->i, it->j, -it->a);
    TraceScope ts_("final simplify k=" + std::to_string(out.factors.size()));
    return simplify(out);
}

} // namespace slf
