#include "slfactor/quillen.hpp"

#include <algorithm>

#include "slfactor/cohn.hpp"
#include "slfactor/ideals.hpp"
#include "slfactor/local.hpp"
#include "slfactor/steinberg.hpp"
#include "slfactor/trace.hpp"

namespace slf {

namespace {

std::string fresh_name(const RingPtr& ring, const std::string& base) {
    std::string name = base;
    while (ring->index_of(name) >= 0) name += "_";
    return name;
}

/// Minimal e >= 0 with den | r^e * num. Cancels the part of den covered by
/// num first, then counts how many copies of r cover the rest; this avoids
/// repeated trial divisions of ever-growing products.
long clearing_exponent(const Poly& num, const Poly& den, const Poly& r) {
    if (num.is_zero() || den.is_one()) return 0;
    Poly h = den, acc = num;
    for (int guard = 0; !h.is_constant(); ++guard) {
        if (guard > 256) throw domain_error("patching: denominator could not be cleared");
        Poly g = subring_gcd(acc, h);
        if (g.is_constant()) break;
        h = exact_divide(h, g);
        acc = exact_divide(acc, g);
    }
    long e = 0;
    while (!h.is_constant()) {
        Poly g = poly_gcd(h, r);
        if (g.is_constant())
            throw domain_error("patching: denominator could not be cleared");
        h = exact_divide(h, g);
        ++e;
        if (e > 256) throw domain_error("patching: denominator could not be cleared");
    }
    return e;
}

/// Merges adjacent factors at the same position and drops zero coefficients.
std::vector<LocalFactor> simplify_local(std::vector<LocalFactor> fs) {
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<LocalFactor> out;
        for (LocalFactor& f : fs) {
            if (f.a.is_zero()) {
                changed = true;
                continue;
            }
            if (!out.empty() && out.back().i == f.i && out.back().j == f.j) {
                out.back().a = out.back().a + f.a;
                changed = true;
                if (out.back().a.is_zero()) out.pop_back();
                continue;
            }
            out.push_back(std::move(f));
        }
        fs = std::move(out);
    }
    return fs;
}

Poly cleared(const LocalPoly& p, const Poly& r, long e) {
    Poly acc = p.num;
    for (long k = 0; k < e; ++k) acc = acc * r;
    return exact_divide(acc, p.den);
}

struct PairData {
    std::size_t gamma, delta;   // 0-based, gamma < delta
    LocalPoly base;             // f_j * (w_g c_d - w_d c_g), no Z inside
    long extra = 0;             // clearing exponent of base
};

struct BlockData {
    std::vector<LocalPoly> v;   // column of the running prefix product
    long l1 = 0;                // clearing exponent for v
    std::vector<PairData> pairs;
};

struct LocalPiece {
    Poly r;                        // product of the denominators, X-free
    std::vector<LocalFactor> fs;   // local factorization of A
    std::vector<BlockData> blocks;
    long lambda = 1;               // exponent needed by this piece
};

} // namespace

Factorization quillen_realize_special(const PolyMatrix& A, std::size_t var,
                                      const RealizeFn& realize_base) {
    const RingPtr& RX = A.ring();
    std::size_t n = A.n();
    if (n != 3) throw domain_error("patching: expected a 3 x 3 special matrix");
    RingPtr R = drop_vars(RX, {RX->vars[var]});

    std::string ny = fresh_name(RX, "_u");
    std::string nz = fresh_name(RX, ny + "v");
    RingPtr ext = extend_ring(RX, {ny, nz});
    std::size_t vy = RX->nvars(), vz = RX->nvars() + 1;
    Poly Y = Poly::variable(ext, vy), Z = Poly::variable(ext, vz);
    Poly X_ext = Poly::variable(ext, var);
    Poly one_ext = Poly::one(ext);

    // Localize at maximal ideals until the collected denominators generate 1.
    std::vector<LocalPiece> pieces;
    std::vector<Poly> rs_R;
    std::vector<Poly> cert;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > 64) throw domain_error("patching: denominator chain did not close");
        MaximalOrUnit found = find_maximal_ideal_containing(rs_R, R);
        if (found.is_unit) {
            cert = found.certificate;
            break;
        }
        LocalPiece piece;
        TraceScope tr_("murthy_realize");
        piece.fs = simplify_local(murthy_realize(A.at(0, 0), A.at(0, 1), A.at(1, 0),
                                                 A.at(1, 1), var, found.ideal));
        // The lcm of the denominators has the same radical as their product
        // but far smaller degree; every denominator product divides a power
        // of it, which is all the clearing step needs.
        piece.r = Poly::one(RX);
        for (const LocalFactor& f : piece.fs) {
            if (f.a.den.is_constant()) continue;
            Poly g = poly_gcd(piece.r, f.a.den);
            piece.r = piece.r * exact_divide(f.a.den, g);
        }

        // Shortcut: a denominator-free local factorization is already global.
        if (piece.r.is_one()) {
            Factorization out{n, RX, {}};
            for (const LocalFactor& f : piece.fs) out.push(f.i, f.j, f.a.num);
            return out;
        }

        rs_R.push_back(piece.r.lift_to(R));
        pieces.push_back(std::move(piece));
    }
    std::size_t L = pieces.size();

    // Analyze each piece: split the bracket A^{-1}(Y X) A((Y + Z) X) into
    // conjugated one-parameter blocks and record the exponent of r needed to
    // clear every denominator.
    for (LocalPiece& piece : pieces) {
        TraceScope tr_an_("bracket analysis fs=" + std::to_string(piece.fs.size()));
        Poly r_ext = piece.r.lift_to(ext);

        struct DFactor {
            std::size_t i, j;
            LocalPoly b, f; // coefficient = b + Z * f
        };
        std::vector<DFactor> dfs;
        auto push_sub = [&](const LocalFactor& lf, const Poly& scale, bool negate) {
            Poly num = lf.a.num.lift_to(ext).eval_var(var, scale * X_ext);
            if (negate) num = -num;
            Poly den = lf.a.den.lift_to(ext);
            Poly num0 = num.eval_var(vz, Poly::zero(ext));
            Poly numf = num - num0;
            if (!numf.is_zero()) numf = exact_divide(numf, Z);
            dfs.push_back(DFactor{lf.i, lf.j, LocalPoly::frac(num0, den),
                                  LocalPoly::frac(numf, den)});
        };
        for (const LocalFactor& lf : piece.fs) push_sub(lf, Y + Z, false);

        // The bracket is A^{-1}(YX) * A((Y+Z)X). The first half carries no Z,
        // so it contributes no blocks; its prefix product is just A^{-1}(YX),
        // available directly as the adjugate instead of factor by factor.
        PolyMatrix AY = A.map_entries(
            [&](const Poly& p) { return p.lift_to(ext).eval_var(var, Y * X_ext); }, ext);
        PolyMatrix AY_inv = mat_inverse_sl(AY);
        LocalMatrix C(3, ext);
        LocalMatrix C_inv(3, ext);
        for (std::size_t row = 0; row < 3; ++row)
            for (std::size_t col = 0; col < 3; ++col) {
                C.at(row, col) = LocalPoly::of(AY_inv.at(row, col));
                C_inv.at(row, col) = LocalPoly::of(AY.at(row, col));
            }
        for (const DFactor& df : dfs) {
            std::size_t s = df.i - 1, t = df.j - 1;
            // C *= E_st(b): col t += b * col s; C_inv = E_st(-b) * C_inv.
            for (std::size_t row = 0; row < 3; ++row)
                C.at(row, t) = C.at(row, t) + df.b * C.at(row, s);
            for (std::size_t col = 0; col < 3; ++col)
                C_inv.at(s, col) = C_inv.at(s, col) - df.b * C_inv.at(t, col);

            if (df.f.is_zero()) continue;
            BlockData blk;
            blk.v = {C.at(0, s), C.at(1, s), C.at(2, s)};
            blk.l1 = 0;
            for (const LocalPoly& e : blk.v)
                blk.l1 = std::max(blk.l1, clearing_exponent(e.num, e.den, r_ext));
            std::vector<LocalPoly> crow = {C_inv.at(s, 0), C_inv.at(s, 1), C_inv.at(s, 2)};
            std::vector<LocalPoly> wrow = {C_inv.at(t, 0), C_inv.at(t, 1), C_inv.at(t, 2)};
            for (std::size_t g = 0; g < 3; ++g)
                for (std::size_t d = g + 1; d < 3; ++d) {
                    PairData pd;
                    pd.gamma = g;
                    pd.delta = d;
                    pd.base = df.f * (wrow[g] * crow[d] - wrow[d] * crow[g]);
                    if (pd.base.is_zero()) continue;
                    pd.extra = clearing_exponent(pd.base.num, pd.base.den, r_ext);
                    blk.pairs.push_back(std::move(pd));
                }
            for (const PairData& pd : blk.pairs)
                piece.lambda = std::max(piece.lambda, pd.extra + 2 * blk.l1);
            piece.blocks.push_back(std::move(blk));
        }
        if (!(C == LocalMatrix::identity(3, ext)))
            throw domain_error("patching: bracket prefix product is not the identity");
    }

    long lambda = 1;
    for (const LocalPiece& piece : pieces) lambda = std::max(lambda, piece.lambda);
    if (trace_enabled()) {
        std::fprintf(stderr, "[trace] patching lambda=%ld pieces=%zu", lambda, pieces.size());
        for (const LocalPiece& piece : pieces)
            std::fprintf(stderr, " (deg r=%ld, lambda_i=%ld, blocks=%zu)",
                         piece.r.total_degree(), piece.lambda, piece.blocks.size());
        std::fprintf(stderr, "\n");
    }

    // Certificate sum g_i * r_i^lambda = 1 over R.
    std::vector<Poly> powers;
    powers.reserve(L);
    for (const Poly& r : rs_R) powers.push_back(r.pow(static_cast<unsigned long>(lambda)));
    auto cert_pow = unit_certificate(powers, R);
    if (!cert_pow) throw domain_error("patching: denominators do not generate the unit ideal");

    // Telescoping: A(X) = A(0) * B_L * ... * B_1 with
    // B_i = A^{-1}(c_i X) A(c_{i-1} X) and c_i = c_{i-1} - r_i^lambda g_i.
    std::vector<Poly> c_chain(L + 1, Poly::one(RX));
    std::vector<Poly> steps(L);
    for (std::size_t i = 0; i < L; ++i) {
        steps[i] = (powers[i] * (*cert_pow)[i]).lift_to(RX);
        c_chain[i + 1] = c_chain[i] - steps[i];
    }
    if (!c_chain[L].is_zero())
        throw domain_error("patching: substitution chain does not reach zero");

    Factorization out{n, RX, {}};
    PolyMatrix A0 = A.map_entries(
        [&](const Poly& p) { return p.eval_var(var, Poly::zero(RX)); }, RX);
    if (!A0.is_identity()) out.append(realize_base(A0));

    for (std::size_t idx = L; idx-- > 0;) {
        const LocalPiece& piece = pieces[idx];
        Poly r_RX = piece.r;
        const Poly& c_i = c_chain[idx + 1];
        Poly z_val = steps[idx]; // r_i^lambda * g_i

        std::map<std::size_t, Poly> sub{{vy, c_i}, {vz, z_val}};
        auto to_RX = [&](const Poly& p) { return p.substitute(sub, RX); };

        Factorization bracket{n, RX, {}};
        TraceScope te_("bracket emit idx=" + std::to_string(idx) +
                       " blocks=" + std::to_string(piece.blocks.size()));
        for (const BlockData& blk : piece.blocks) {
            std::vector<Poly> v_poly;
            v_poly.reserve(3);
            for (const LocalPoly& e : blk.v) v_poly.push_back(to_RX(cleared(e, piece.r.lift_to(ext), blk.l1)));
            for (const PairData& pd : blk.pairs) {
                // a = g_i r^(lambda - 2 l1) base, polynomial by choice of lambda
                Poly a = to_RX(cleared(pd.base, piece.r.lift_to(ext), lambda - 2 * blk.l1));
                // fold in g_i: z_val = r^lambda g_i, and a carries r^lambda
                // already except for the g_i factor
                a = a * ((*cert_pow)[idx].lift_to(RX));
                if (a.is_zero()) continue;
                bracket.append(factor_cohn_type(v_poly, a, pd.gamma + 1, pd.delta + 1));
            }
        }
        {
            TraceScope ts_("bracket simplify k=" + std::to_string(bracket.factors.size()));
            bracket = simplify(bracket);
        }

        long maxdeg = 0;
        for (const ElemFactor& e : bracket.factors)
            maxdeg = std::max(maxdeg, e.a.total_degree());
        TraceScope tc_("bracket check k=" + std::to_string(bracket.factors.size()) +
                       " maxdeg=" + std::to_string(maxdeg));
        // Exact check: the bracket equals A^{-1}(c_i X) A(c_{i-1} X).
        Poly scale_i = c_i, scale_prev = c_chain[idx];
        PolyMatrix Ai = A.map_entries(
            [&](const Poly& p) { return p.eval_var(var, scale_i * Poly::variable(RX, var)); },
            RX);
        PolyMatrix Aprev = A.map_entries(
            [&](const Poly& p) {
                return p.eval_var(var, scale_prev * Poly::variable(RX, var));
            },
            RX);
        if (product_of(bracket) != mat_inverse_sl(Ai) * Aprev)
            throw domain_error("patching: bracket product check failed");
        out.append(bracket);
    }
    return out;
}

} // namespace slf
