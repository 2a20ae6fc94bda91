#include "slfactor/colreduce.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "slfactor/basecase.hpp"
#include "slfactor/cohn.hpp"
#include "slfactor/ideals.hpp"
#include "slfactor/steinberg.hpp"
#include "slfactor/trace.hpp"

namespace slf {

namespace {

std::string fresh_name(const RingPtr& ring, const std::string& base) {
    std::string name = base;
    while (ring->index_of(name) >= 0) name += "_";
    return name;
}

/// f(X + Y*Z) = f(X) + Y * s(X,Y,Z), evaluated at X -> b, Y -> r, Z -> d.
Poly taylor_eval(const Poly& f, std::size_t var, const Poly& b, const Poly& r, const Poly& d) {
    const RingPtr& RX = f.ring();
    std::string ny = fresh_name(RX, "_y");
    std::string nz = fresh_name(RX, ny + "z");
    RingPtr ext = extend_ring(RX, {ny, nz});
    std::size_t vy = RX->nvars(), vz = RX->nvars() + 1;
    Poly s = taylor_split(f.lift_to(ext), var, vy, vz);
    std::map<std::size_t, Poly> sub{{var, b}, {vy, r}, {vz, d}};
    return s.substitute(sub, RX);
}

} // namespace

PolyMatrix lemma4_sl2(const Poly& f1, const Poly& f2, std::size_t var, const Poly& b,
                      const Poly& d, const BezoutCofactors& bez) {
    const RingPtr& RX = f1.ring();
    const Poly& r = bez.r;
    Poly s1 = taylor_eval(f1, var, b, r, d);
    Poly s2 = taylor_eval(f2, var, b, r, d);
    Poly t1 = taylor_eval(bez.g1, var, b, r, d);
    Poly t2 = taylor_eval(bez.g2, var, b, r, d);
    Poly f1b = f1.eval_var(var, b), f2b = f2.eval_var(var, b);
    Poly g1b = bez.g1.eval_var(var, b), g2b = bez.g2.eval_var(var, b);
    Poly one = Poly::one(RX);

    PolyMatrix B(2, RX);
    B.at(0, 0) = one + s1 * g1b + t2 * f2b;
    B.at(0, 1) = s1 * g2b - t2 * f1b;
    B.at(1, 0) = s2 * g1b - t1 * f2b;
    B.at(1, 1) = one + s2 * g2b + t1 * f1b;
    if (!mat_det(B).is_one()) throw domain_error("lemma4_sl2: determinant is not 1");
    return B;
}

PolyMatrix lemma4_sl2(const Poly& f1, const Poly& f2, std::size_t var, const Poly& b,
                      const Poly& d) {
    return lemma4_sl2(f1, f2, var, b, d, bezout_cofactors(f1, f2, var));
}

Theorem3Result theorem3_reduce(const std::vector<Poly>& v, std::size_t var) {
    TraceScope tr_("theorem3_reduce deg=" + std::to_string(v[0].degree_in(var)));
    std::size_t n = v.size();
    if (n < 3) throw domain_error("theorem3_reduce: need at least 3 entries");
    const RingPtr& RX = v.front().ring();
    if (v[0].degree_in(var) < 1 || !v[0].leading_coeff_in(var).is_one())
        throw domain_error("theorem3_reduce: leading entry must be monic of positive degree");
    RingPtr R = drop_vars(RX, {RX->vars[var]});

    struct Step {
        std::vector<ResidueRowOp> ops; // Euclidean row operations, symbolic in X
        std::vector<Poly> w;           // transformed tail: (G~, q_3, ..., q_n)
        BezoutCofactors bez;           // f v1 + h G~ = r
    };
    std::vector<Step> steps;
    std::vector<Poly> rs_R;
    std::vector<Poly> cert;

    for (std::size_t iter = 0;; ++iter) {
        if (iter > 64) throw domain_error("theorem3_reduce: denominator chain did not close");
        MaximalOrUnit found = find_maximal_ideal_containing(rs_R, R);
        if (found.is_unit) {
            cert = found.certificate;
            break;
        }
        std::vector<Poly> tail(v.begin() + 1, v.end());
        ResidueGcdResult g = univar_gcd_in_residue(tail, var, found.ideal);
        std::vector<Poly> w = tail;
        for (const ResidueRowOp& op : g.ops) w[op.dst] = w[op.dst] + op.coeff * w[op.src];
        BezoutCofactors bez = bezout_cofactors(v[0], w[0], var);
        if (found.ideal->contains(bez.r))
            throw domain_error("theorem3_reduce: resultant vanished at the maximal ideal");
        rs_R.push_back(bez.r.lift_to(R));
        steps.push_back(Step{g.ops, std::move(w), std::move(bez)});
    }

    std::size_t L = steps.size();
    Poly X = Poly::variable(RX, var);
    Poly b_prev = Poly::zero(RX);

    Theorem3Result out{Factorization{n, RX, {}}, PolyMatrix::identity(n, RX),
                       PolyMatrix::identity(n, RX)};
    auto emit = [&](std::size_t i, std::size_t j, const Poly& a) {
        if (a.is_zero()) return;
        out.factors.append(conjugate_elementary(out.S, out.S_inv, ElemFactor{i, j, a}));
    };

    for (std::size_t i = 0; i < L; ++i) {
        const Step& st = steps[i];
        const Poly& r_i = st.bez.r;
        Poly g_i = cert[i].lift_to(RX);
        Poly b_i = b_prev + r_i * g_i * X;

        // (1 (+) E(b_{i-1}))^{-1}: recorded operations forward, negated.
        for (const ResidueRowOp& op : st.ops)
            emit(op.dst + 2, op.src + 2, -op.coeff.eval_var(var, b_prev));

        // C^{-1}: transports q_l(b_{i-1}) to q_l(b_i) using
        // r_i = f(b_{i-1}) v1(b_{i-1}) + h(b_{i-1}) G~(b_{i-1}).
        Poly f_b = st.bez.g1.eval_var(var, b_prev);
        Poly h_b = st.bez.g2.eval_var(var, b_prev);
        for (std::size_t l = 3; l <= n; ++l) {
            const Poly& q = st.w[l - 2];
            Poly s = taylor_eval(q, var, b_prev, r_i, g_i * X);
            emit(l, 1, -(s * f_b));
            emit(l, 2, -(s * h_b));
        }

        // SL_2 transport block, inverted (2x2 adjugate).
        PolyMatrix Bt = lemma4_sl2(v[0], st.w[0], var, b_prev, g_i * X, st.bez);
        PolyMatrix blk = PolyMatrix::identity(n, RX);
        blk.at(0, 0) = Bt.at(1, 1);
        blk.at(0, 1) = -Bt.at(0, 1);
        blk.at(1, 0) = -Bt.at(1, 0);
        blk.at(1, 1) = Bt.at(0, 0);
        PolyMatrix blk_inv = embed(Bt, n);
        out.S = out.S * blk;
        out.S_inv = blk_inv * out.S_inv;

        // (1 (+) E(b_i)): recorded operations reversed.
        for (auto it = st.ops.rbegin(); it != st.ops.rend(); ++it)
            emit(it->dst + 2, it->src + 2, it->coeff.eval_var(var, b_i));

        b_prev = b_i;
    }
    if (!(b_prev == X))
        throw domain_error("theorem3_reduce: substitution chain does not telescope to X");

    // Exact check of the reduction identity.
    PolyMatrix total = product_of(out.factors) * out.S;
    Poly zero = Poly::zero(RX);
    for (std::size_t row = 0; row < n; ++row) {
        Poly got = zero;
        for (std::size_t col = 0; col < n; ++col) got = got + total.at(row, col) * v[col];
        if (!(got == v[row].eval_var(var, zero)))
            throw domain_error("theorem3_reduce: transport identity check failed");
    }
    return out;
}

namespace {

struct ColRecorder {
    std::vector<Poly> v;
    std::vector<ElemFactor> ops; // in application order

    void op(std::size_t i, std::size_t j, const Poly& a) {
        if (a.is_zero()) return;
        v[i - 1] = v[i - 1] + a * v[j - 1];
        ops.push_back(ElemFactor{i, j, a});
    }
};

void append_reversed_ops(Factorization& f, const std::vector<ElemFactor>& ops) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) f.push(it->i, it->j, it->a);
}

std::size_t column_weight(const std::vector<Poly>& v) {
    std::size_t w = 0;
    for (const Poly& p : v)
        if (!p.is_zero()) w += p.terms().size() + static_cast<std::size_t>(p.total_degree());
    return w;
}

std::string column_key(const std::vector<Poly>& v) {
    std::string key;
    for (const Poly& p : v) {
        key += p.str();
        key += ';';
    }
    return key;
}

/// Best-first search over row operations v[i] += a * v[j] whose coefficient
/// is a leading-monomial division quotient. Columns of short elementary
/// products - the common case - collapse to a single constant entry; whatever
/// is left goes to the general algorithm. Returns the operations in
/// application order.
std::vector<ElemFactor> greedy_column_peel(std::vector<Poly>& v) {
    struct State {
        std::size_t weight;
        std::vector<Poly> v;
        std::vector<ElemFactor> applied;
    };
    auto heavier = [](const State& a, const State& b) { return a.weight > b.weight; };
    std::priority_queue<State, std::vector<State>, decltype(heavier)> frontier(heavier);
    std::set<std::string> seen;
    std::size_t n = v.size();

    frontier.push(State{column_weight(v), v, {}});
    seen.insert(column_key(v));
    State best = frontier.top();

    for (int expanded = 0; !frontier.empty() && expanded < 400; ++expanded) {
        State cur = frontier.top();
        frontier.pop();
        if (cur.weight < best.weight) best = cur;
        if (cur.weight <= 1) break; // one constant entry left
        if (cur.applied.size() > 64) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || cur.v[i].is_zero() || cur.v[j].is_zero()) continue;
                Poly q = lm_quotient(cur.v[i], cur.v[j]);
                if (q.is_zero()) continue;
                State st{0, cur.v, cur.applied};
                st.v[i] = st.v[i] - q * st.v[j];
                if (!seen.insert(column_key(st.v)).second) continue;
                st.weight = column_weight(st.v);
                if (st.weight > cur.weight + 4) continue; // keep the search shrinking
                st.applied.push_back(ElemFactor{i + 1, j + 1, -q});
                frontier.push(std::move(st));
            }
    }

    v = best.v;
    return best.applied;
}

bool is_unit_column(const std::vector<Poly>& v, std::size_t k) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i == k ? !v[i].is_one() : !v[i].is_zero()) return false;
    return true;
}

/// Reduce a column with constant or single-variable entries to e_n by
/// Euclidean elimination; returns the factor list.
Factorization reduce_simple_column(const std::vector<Poly>& v, const RingPtr& ring,
                                   std::size_t var, bool any_var) {
    std::size_t n = v.size();
    ColRecorder rec{v, {}};
    auto deg = [&](const Poly& p) { return any_var ? p.degree_in(var) : (p.is_zero() ? -1L : 0L); };

    for (std::size_t guard = 0;; ++guard) {
        if (guard > 10000) throw domain_error("column reduction did not converge");
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < n; ++i)
            if (!rec.v[i].is_zero()) nz.push_back(i);
        if (nz.empty()) throw not_unimodular_error("column reduction: zero column");
        if (nz.size() == 1) break;
        std::size_t piv = nz[0];
        for (std::size_t i : nz)
            if (deg(rec.v[i]) < deg(rec.v[piv])) piv = i;
        for (std::size_t i : nz) {
            if (i == piv) continue;
            Poly q;
            if (rec.v[piv].is_constant()) {
                q = rec.v[i] * Poly::constant(ring, rec.v[piv].constant_value().inv());
            } else {
                Poly lead = rec.v[piv].leading_coeff_in(var);
                Scalar c = lead.constant_value().inv();
                auto [quo, rem] = univariate_divide(rec.v[i], rec.v[piv] * c, var);
                (void)rem;
                q = quo * c;
            }
            rec.op(i + 1, piv + 1, -q);
        }
    }
    std::size_t t = 0;
    while (rec.v[t].is_zero()) ++t;
    Poly c = rec.v[t];
    if (!c.is_constant())
        throw not_unimodular_error("column reduction: entries do not generate 1");
    Poly cinv = Poly::constant(ring, c.constant_value().inv());
    Poly one = Poly::one(ring);

    if (t != n - 1) {
        rec.op(n, t + 1, cinv);
        rec.op(t + 1, n, -c);
    } else if (!c.is_one()) {
        rec.op(1, n, cinv);
        rec.op(n, 1, one - c);
        rec.op(1, n, -one);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) rec.op(i + 1, n, -rec.v[i]);

    Factorization out{n, ring, {}};
    append_reversed_ops(out, rec.ops);
    return out;
}

Factorization reduce_general_column(const std::vector<Poly>& v, const RingPtr& ring) {
    std::size_t n = v.size();
    std::vector<std::size_t> used;
    for (std::size_t var = 0; var < ring->nvars(); ++var)
        for (const Poly& p : v)
            if (p.degree_in(var) > 0) {
                used.push_back(var);
                break;
            }

    if (used.size() <= 1)
        return reduce_simple_column(v, ring, used.empty() ? 0 : used[0], !used.empty());

    std::size_t var = used.back();

    // Stage 1 (before the substitution): make the leading entry nonzero.
    ColRecorder pre{v, {}};
    if (pre.v[0].is_zero()) {
        std::size_t t = 1;
        while (pre.v[t].is_zero()) ++t;
        pre.op(1, t + 1, Poly::one(ring));
    }

    // Stage 2: monicize in `var` by an invertible substitution.
    Substitution sigma = monicize(pre.v, var);
    std::vector<Poly> w;
    w.reserve(n);
    for (const Poly& p : pre.v) w.push_back(sigma.apply(p));

    ColRecorder post{w, {}};
    Poly lead = post.v[0].leading_coeff_in(var);
    if (!lead.is_constant() || lead.is_zero())
        throw domain_error("elementary_column_reduce: substitution failed to monicize");
    if (!lead.is_one()) {
        Poly u = Poly::constant(ring, lead.constant_value().inv());
        Poly u_inv = Poly::constant(ring, lead.constant_value());
        Poly one = Poly::one(ring);
        // row 1 *= u, row 2 *= u_inv (unit sandwich, application order)
        post.op(1, 2, (one - u) * u_inv);
        post.op(2, 1, one);
        post.op(1, 2, u - one);
        post.op(2, 1, -u_inv);
    }

    Theorem3Result t3 = theorem3_reduce(post.v, var);
    if (trace_enabled()) std::fprintf(stderr, "[trace] colreduce: t3 factors=%zu\n", t3.factors.factors.size());

    std::vector<Poly> w0;
    w0.reserve(n);
    Poly zero = Poly::zero(ring);
    for (const Poly& p : post.v) w0.push_back(p.eval_var(var, zero));

    Factorization inner = elementary_column_reduce(w0, ring);

    Factorization combined{n, ring, {}};
    combined.append(inner);
    combined.append(t3.factors);
    Factorization conj;
    {
        TraceScope tr2_("colreduce conjugation in=" + std::to_string(combined.factors.size()));
        conj = conjugate_factorization(combined, t3.S_inv, t3.S);
    }
    conj = simplify(conj);

    Factorization out{n, ring, {}};
    // Undo the substitution on everything recorded after it, then append the
    // pre-substitution fix.
    Factorization after{n, ring, {}};
    after.append(conj);
    append_reversed_ops(after, post.ops);
    for (const ElemFactor& e : after.factors) out.push(e.i, e.j, sigma.apply_inverse(e.a));
    append_reversed_ops(out, pre.ops);
    return out;
}

} // namespace

Factorization elementary_column_reduce(const std::vector<Poly>& v, const RingPtr& ring) {
    std::size_t n = v.size();
    if (n < 3) throw domain_error("elementary_column_reduce: need at least 3 entries");
    Factorization empty{n, ring, {}};
    if (is_unit_column(v, n - 1)) return empty;

    if (!unimodular_certificate_for_column(v, ring))
        throw not_unimodular_error("elementary_column_reduce: column is not unimodular");

    std::vector<Poly> w = v;
    std::vector<ElemFactor> peeled = greedy_column_peel(w);

    Factorization out{n, ring, {}};
    out.append(reduce_general_column(w, ring));
    append_reversed_ops(out, peeled);
    return out;
}

ShrinkResult shrink_once(const PolyMatrix& A) {
    std::size_t n = A.n();
    if (n < 3) throw domain_error("shrink_once: need dimension >= 3");
    const RingPtr& ring = A.ring();

    ShrinkResult out{Factorization{n, ring, {}}, Factorization{n, ring, {}},
                     PolyMatrix(n - 1, ring)};
    out.prefix = elementary_column_reduce(A.column(n - 1), ring);

    PolyMatrix M = product_of(out.prefix) * A;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Poly p = M.at(n - 1, i);
        if (p.is_zero()) continue;
        out.suffix.push(n, i + 1, -p);
        M.add_col(i, n - 1, -p);
    }
    for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = 0; j < n - 1; ++j) out.core.at(i, j) = M.at(i, j);
    if (!(M == embed(out.core, n)))
        throw domain_error("shrink_once: reduction did not reach block-diagonal form");
    return out;
}

} // namespace slf
