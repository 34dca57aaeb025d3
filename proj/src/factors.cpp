/*
   Copyright 2026 The lacunary authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lacunary/factors.hpp"

#include "lacunary/bounds.hpp"

#include <algorithm>
#include <map>

namespace lacunary {

namespace {

using Q = Rationals;
using QPoly = LacunaryPoly<Q>;
using QFactor = LinearFactor<Q>;
using GfFactor = LinearFactor<GaloisField>;

struct Ctx {
    FactorOptions opt;
    Rng rng;
    McTally tally;

    explicit Ctx(const FactorOptions& o) : opt(o), rng(o.seed) {}

    RootOptions roots() const { return RootOptions{opt.lambda, opt.exact_bit_limit}; }
    PitOptions pit() const { return PitOptions{opt.lambda, opt.seed, opt.exact_bit_limit, opt.exec}; }
};

LinearForm classify(bool u_zero, bool v_zero, bool w_zero)
{
    if (v_zero) return LinearForm::XminusA;
    if (u_zero) return LinearForm::YminusB;
    if (w_zero) return LinearForm::YminusUX;
    return LinearForm::General;
}

// ---------------------------------------------------------------------------
// Univariate groups.

// Terms grouped by a key, each group a univariate polynomial.
std::map<BigInt, LacunaryUni<Q>> group_terms(const QPoly& p, LinearForm form)
{
    std::map<BigInt, LacunaryUni<Q>> groups;
    for (const auto& t : p.terms) {
        BigInt key, exp;
        switch (form) {
        case LinearForm::XminusA: key = t.beta, exp = t.alpha; break;
        case LinearForm::YminusB: key = t.alpha, exp = t.beta; break;
        default: key = t.alpha + t.beta, exp = t.beta; break;
        }
        groups[key].terms.push_back({t.coef, exp});
    }
    for (auto& [k, g] : groups) g = normalize(std::move(g));
    return groups;
}

// The root of the group polynomials that corresponds to the factor.
BigRat group_root(const QFactor& f)
{
    switch (f.form) {
    case LinearForm::XminusA: return -f.w / f.u;
    case LinearForm::YminusB: return -f.w / f.v;
    default: return -f.u / f.v;
    }
}

BigInt root_multiplicity(const LacunaryUni<Q>& g, const BigRat& r, Ctx& ctx)
{
    if (sgn(r) == 0) return g.terms.front().exp;
    return BigInt(lacunary_root_multiplicity(g, r, ctx.roots(), ctx.rng, ctx.tally));
}

BigInt group_multiplicity(const QPoly& p, const QFactor& f, Ctx& ctx, std::vector<BigInt>* locals)
{
    const auto groups = group_terms(p, f.form);
    const BigRat r = group_root(f);
    BigInt m = -1;
    for (const auto& [k, g] : groups) {
        const BigInt mg = root_multiplicity(g, r, ctx);
        if (locals) locals->push_back(mg);
        if (m < 0 || mg < m) m = mg;
        if (m == 0 && !locals) break;
    }
    return m < 0 ? BigInt(0) : m;
}

// ---------------------------------------------------------------------------
// Pieces.

template <class F>
BigInt shift_multiplicity(const PieceDecomposition<F>& dec, const typename F::Elem& s, const typename F::Elem& t,
                          std::vector<BigInt>* locals)
{
    BigInt m = -1;
    for (const auto& piece : dec.pieces) {
        const BigInt mp(static_cast<unsigned long>(*y_valuation(substitute_shift(piece.poly, s, t))));
        if (locals) locals->push_back(mp);
        if (m < 0 || mp < m) m = mp;
        if (m == 0 && !locals) break;
    }
    return m < 0 ? BigInt(0) : m;
}

template <class F>
std::pair<typename F::Elem, typename F::Elem> slope_intercept(const F& f, const LinearFactor<F>& l)
{
    return {f.neg(f.div(l.u, l.v)), f.neg(f.div(l.w, l.v))};
}

template <class F>
struct Specialization {
    typename F::Elem x;
    std::vector<typename F::Elem> roots;
};

// Roots of Q(x, Y) at the first `count` points x = 1, 2, ... where the
// Y-degree does not drop.
template <class F, class RootFn>
std::vector<Specialization<F>> specializations(const DenseBi<F>& q, std::size_t count, const FactorOptions& opt,
                                               RootFn roots)
{
    const F& f = q.field();
    const BigInt ch = f.characteristic();
    std::vector<Specialization<F>> out;
    for (unsigned i = 1; i <= opt.specialization_budget && out.size() < count; ++i) {
        if (ch != 0 && BigInt(i) >= ch) break;
        const auto x = f.from_int(BigInt(i));
        const auto s = specialize_x(q, x);
        if (s.degree() != q.y_degree()) continue;
        out.push_back({x, roots(s)});
    }
    if (out.size() < count) throw RetryError("no admissible specialization points within the budget");
    return out;
}

// Candidate lines Y = sX + t with s, t != 0 through the roots of two specializations.
template <class F, class RootFn>
std::vector<std::pair<typename F::Elem, typename F::Elem>> line_candidates(const PieceDecomposition<F>& dec,
                                                                           const FactorOptions& opt, RootFn roots)
{
    std::vector<std::pair<typename F::Elem, typename F::Elem>> out;
    if (dec.pieces.empty()) return out;
    const auto& q = dec.pieces[minimal_piece(dec)].poly;
    if (q.y_degree() < 1 || q.x_degree() < 1) return out;
    const F& f = q.field();
    const auto pts = specializations(q, 2, opt, roots);
    const auto dx = f.sub(pts[1].x, pts[0].x);
    for (const auto& r0 : pts[0].roots)
        for (const auto& r1 : pts[1].roots) {
            const auto s = f.div(f.sub(r1, r0), dx);
            const auto t = f.sub(r0, f.mul(s, pts[0].x));
            if (f.is_zero(s) || f.is_zero(t)) continue;
            const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& c) {
                return f.equal(c.first, s) && f.equal(c.second, t);
            });
            if (!seen) out.emplace_back(s, t);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Restrictions.

template <class F>
BinomExprPoly<F> restrict_poly(const LacunaryPoly<F>& p, const typename F::Elem& u, const typename F::Elem& v,
                               bool swap)
{
    BinomExprPoly<F> out{p.field, u, v, BigInt(1), {}};
    for (const auto& t : p.terms) out.terms.push_back(swap ? Term<F>{t.coef, t.beta, t.alpha} : t);
    return normalize(std::move(out));
}

// ---------------------------------------------------------------------------
// Entry helpers.

BigInt linear_multiplicity_q(const QPoly& p, const QFactor& f, Ctx& ctx, std::vector<BigInt>* locals)
{
    if (f.form != LinearForm::General) return group_multiplicity(p, f, ctx, locals);
    const auto dec = piece_decomposition(p, 1);
    const auto [s, t] = slope_intercept(Q{}, f);
    return shift_multiplicity(dec, s, t, locals);
}

const char* route_of(LinearForm form)
{
    switch (form) {
    case LinearForm::XminusA: return "x-minus-a";
    case LinearForm::YminusB: return "y-minus-b";
    case LinearForm::YminusUX: return "y-minus-ux";
    case LinearForm::General: return "pieces";
    }
    return "pieces";
}

// Multiplicity plus restriction check; nullopt when f does not divide p.
std::optional<FactorEntry<Q>> linear_entry_q(const QPoly& p, const QFactor& f, Ctx& ctx)
{
    FactorEntry<Q> e;
    e.factor = f;
    e.evidence.route = route_of(f.form);
    e.multiplicity = linear_multiplicity_q(p, f, ctx, &e.evidence.local_multiplicities);
    if (e.multiplicity == 0) return std::nullopt;
    auto r = restriction_along(p, f);
    auto v = zero_test_q(r, ctx.pit());
    ctx.tally.note(v);
    if (v.verdict != Verdict::Zero) return std::nullopt;
    e.evidence.restriction = std::move(r);
    e.evidence.restriction_verdict = v;
    return e;
}

void route_groups(const QPoly& p, LinearForm form, Ctx& ctx, std::vector<FactorEntry<Q>>& out)
{
    const auto groups = group_terms(p, form);
    if (groups.empty()) return;
    auto smallest = groups.begin();
    for (auto it = groups.begin(); it != groups.end(); ++it)
        if (it->second.terms.size() < smallest->second.terms.size()) smallest = it;
    for (const auto& root : lacunary_univariate_rational_roots(smallest->second, ctx.roots(), ctx.rng, ctx.tally)) {
        const BigRat& r = root.root;
        QFactor f;
        switch (form) {
        case LinearForm::XminusA: f = canonical_linear(1, 0, -r); break;
        case LinearForm::YminusB: f = canonical_linear(0, 1, -r); break;
        default:
            if (sgn(r) == 0) continue;
            f = canonical_linear(-r, 1, 0);
            break;
        }
        if (auto e = linear_entry_q(p, f, ctx)) out.push_back(std::move(*e));
    }
}

void route_pieces(const QPoly& p, Ctx& ctx, std::vector<FactorEntry<Q>>& out)
{
    const auto dec = piece_decomposition(p, 1);
    const auto cands =
        line_candidates(dec, ctx.opt, [&](const DenseUni<Q>& s) { return dense_rational_roots(s, ctx.rng); });
    for (const auto& [s, t] : cands)
        if (auto e = linear_entry_q(p, canonical_linear(-s, 1, -t), ctx)) out.push_back(std::move(*e));
}

template <class F>
bool factor_less(const F& f, const std::variant<LinearFactor<F>, MultilinearFactor>& a,
                 const std::variant<LinearFactor<F>, MultilinearFactor>& b)
{
    if (a.index() != b.index()) return a.index() < b.index();
    if (const auto* la = std::get_if<LinearFactor<F>>(&a)) {
        const auto& lb = std::get<LinearFactor<F>>(b);
        if (la->form != lb.form) return la->form < lb.form;
        for (auto [x, y] : {std::pair{&la->u, &lb.u}, std::pair{&la->v, &lb.v}, std::pair{&la->w, &lb.w}}) {
            if (f.less(*x, *y)) return true;
            if (f.less(*y, *x)) return false;
        }
        return false;
    }
    const auto& ma = std::get<MultilinearFactor>(a);
    const auto& mb = std::get<MultilinearFactor>(b);
    return std::tie(ma.a, ma.b, ma.c) < std::tie(mb.a, mb.b, mb.c);
}

template <class F>
FactorReport<F> finish(const F& field, std::vector<FactorEntry<F>> entries, std::size_t mc_tests, std::size_t lambda)
{
    std::stable_sort(entries.begin(), entries.end(),
                     [&](const auto& a, const auto& b) { return factor_less(field, a.factor, b.factor); });
    FactorReport<F> r;
    r.entries = std::move(entries);
    if (mc_tests > 0) {
        r.certainty = Certainty::MonteCarlo;
        const std::size_t loss = ceil_log2(mc_tests);
        r.error_exponent = lambda > loss ? lambda - loss : 0;
    }
    return r;
}

QPoly checked_input(const QPoly& p_in)
{
    QPoly p = normalize(p_in);
    validate_exponents(p.terms);
    if (p.terms.empty()) throw DomainError("factoring the zero polynomial");
    return p;
}

// ---------------------------------------------------------------------------
// Multilinear.

enum class Reversal { X, Y, XY };

const char* route_of(Reversal r)
{
    switch (r) {
    case Reversal::X: return "reversal-x";
    case Reversal::Y: return "reversal-y";
    case Reversal::XY: return "reversal-xy";
    }
    return "reversal-x";
}

QPoly reverse(const QPoly& p, Reversal r)
{
    BigInt ax = 0, by = 0;
    for (const auto& t : p.terms) ax = std::max(ax, t.alpha), by = std::max(by, t.beta);
    QPoly out{p.field, {}};
    for (const auto& t : p.terms) {
        const bool rx = r != Reversal::Y, ry = r != Reversal::X;
        out.terms.push_back({t.coef, rx ? BigInt(ax - t.alpha) : t.alpha, ry ? BigInt(by - t.beta) : t.beta});
    }
    return normalize(std::move(out));
}

// The linear factor of the reversal that corresponds to m, if m has that shape.
std::optional<QFactor> reversed_factor(const MultilinearFactor& m, Reversal r)
{
    switch (r) {
    case Reversal::X:  // X Y - a X - c  ->  Y - a - c W
        if (sgn(m.b) != 0 || sgn(m.c) == 0) return std::nullopt;
        return canonical_linear(-m.c, 1, -m.a);
    case Reversal::Y:  // X Y + b Y - c  ->  X + b - c Z
        if (sgn(m.a) != 0 || sgn(m.c) == 0) return std::nullopt;
        return canonical_linear(1, -m.c, m.b);
    case Reversal::XY:  // X Y + b Y - a X  ->  1 + b W - a Z
        if (sgn(m.c) != 0 || sgn(m.a) == 0 || sgn(m.b) == 0) return std::nullopt;
        return canonical_linear(m.b, -m.a, 1);
    }
    return std::nullopt;
}

std::optional<MultilinearFactor> from_reversed(const QFactor& f, Reversal r)
{
    const bool u = sgn(f.u) != 0, v = sgn(f.v) != 0, w = sgn(f.w) != 0;
    switch (r) {
    case Reversal::X:
        if (!u || !v) return std::nullopt;
        return MultilinearFactor{-f.w / f.v, 0, -f.u / f.v};
    case Reversal::Y:
        if (!u || !v) return std::nullopt;
        return MultilinearFactor{0, f.w / f.u, -f.v / f.u};
    case Reversal::XY:
        if (!u || !v || !w) return std::nullopt;
        return MultilinearFactor{-f.v / f.w, f.u / f.w, 0};
    }
    return std::nullopt;
}

void route_reversal(const QPoly& p, Reversal r, Ctx& ctx, std::vector<FactorEntry<Q>>& out)
{
    const QPoly rp = reverse(p, r);
    std::vector<FactorEntry<Q>> lin;
    if (r != Reversal::XY) route_groups(rp, LinearForm::YminusUX, ctx, lin);
    route_pieces(rp, ctx, lin);
    for (auto& e : lin) {
        auto m = from_reversed(std::get<QFactor>(e.factor), r);
        if (!m || m->c == m->a * m->b) continue;
        e.factor = *m;
        e.evidence.route = route_of(r);
        out.push_back(std::move(e));
    }
}

void route_multilinear_pieces(const QPoly& p, Ctx& ctx, std::vector<FactorEntry<Q>>& out)
{
    const auto dec = piece_decomposition(p, 2);
    if (dec.pieces.empty()) return;
    const auto& q = dec.pieces[minimal_piece(dec)].poly;
    if (q.y_degree() < 1 || q.x_degree() < 1) return;
    const auto pts =
        specializations(q, 3, ctx.opt, [&](const DenseUni<Q>& s) { return dense_rational_roots(s, ctx.rng); });
    std::vector<MultilinearFactor> seen;
    for (const auto& y0 : pts[0].roots)
        for (const auto& y1 : pts[1].roots)
            for (const auto& y2 : pts[2].roots) {
                // a x_i - b y_i + c = x_i y_i
                const BigRat ys[3] = {y0, y1, y2};
                BigRat m[3][3], rhs[3];
                for (int i = 0; i < 3; ++i) {
                    m[i][0] = pts[i].x, m[i][1] = -ys[i], m[i][2] = 1;
                    rhs[i] = pts[i].x * ys[i];
                }
                auto det3 = [](const BigRat (&a)[3][3]) -> BigRat {
                    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
                };
                const BigRat det = det3(m);
                if (sgn(det) == 0) continue;
                BigRat sol[3];
                for (int c = 0; c < 3; ++c) {
                    BigRat mc[3][3];
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) mc[i][j] = j == c ? rhs[i] : m[i][j];
                    sol[c] = det3(mc) / det;
                }
                const MultilinearFactor cand{sol[0], sol[1], sol[2]};
                if (sgn(cand.a) == 0 || sgn(cand.b) == 0 || sgn(cand.c) == 0 || cand.c == cand.a * cand.b) continue;
                if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
                seen.push_back(cand);
                FactorEntry<Q> e;
                e.factor = cand;
                e.evidence.route = "pieces";
                const auto d = multilinear_dense(cand);
                BigInt mult = -1;
                for (const auto& piece : dec.pieces) {
                    const BigInt mp(division_multiplicity(piece.poly, d));
                    e.evidence.local_multiplicities.push_back(mp);
                    if (mult < 0 || mp < mult) mult = mp;
                    if (mult == 0) break;
                }
                if (mult <= 0) continue;
                e.multiplicity = mult;
                out.push_back(std::move(e));
            }
}

// ---------------------------------------------------------------------------
// Verification of individual entries.

bool reverify_linear_q(const QPoly& p, const FactorEntry<Q>& e, const QFactor& f, Ctx& ctx)
{
    if (e.evidence.route != route_of(f.form)) return false;
    if (linear_multiplicity_q(p, f, ctx, nullptr) != e.multiplicity) return false;
    const auto r = restriction_along(p, f);
    return zero_test_q(r, ctx.pit()).verdict == Verdict::Zero;
}

}  // namespace

std::string to_string(LinearForm f)
{
    return f == LinearForm::General ? "general" : route_of(f);
}

LinearFactor<Q> canonical_linear(const BigRat& u, const BigRat& v, const BigRat& w)
{
    if (sgn(u) == 0 && sgn(v) == 0 && sgn(w) == 0) throw DomainError("linear factor with all coefficients zero");
    BigInt l = 1, g = 0;
    for (const BigRat* x : {&u, &v, &w}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x->get_den_mpz_t());
    BigInt n[3];
    int i = 0;
    for (const BigRat* x : {&u, &v, &w}) {
        n[i] = x->get_num() * (l / x->get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
        ++i;
    }
    const BigInt& lead = sgn(n[1]) != 0 ? n[1] : sgn(n[0]) != 0 ? n[0] : n[2];
    if (lead < 0) g = -g;
    QFactor f;
    f.u = BigRat(n[0] / g);
    f.v = BigRat(n[1] / g);
    f.w = BigRat(n[2] / g);
    f.form = classify(sgn(f.u) == 0, sgn(f.v) == 0, sgn(f.w) == 0);
    return f;
}

LinearFactor<GaloisField> canonical_linear(const GaloisField& f, const FpsElem& u, const FpsElem& v,
                                           const FpsElem& w)
{
    if (f.is_zero(v)) throw DomainError("canonical form over a finite field needs a nonzero Y coefficient");
    GfFactor out;
    out.u = f.div(u, v);
    out.v = f.one();
    out.w = f.div(w, v);
    out.form = classify(f.is_zero(out.u), false, f.is_zero(out.w));
    return out;
}

DenseBi<Q> multilinear_dense(const MultilinearFactor& m)
{
    DenseBi<Q> d;
    d.add_to(1, 1, 1);
    d.add_to(0, 1, m.b);
    d.add_to(1, 0, -m.a);
    d.add_to(0, 0, -m.c);
    return d;
}

BigInt factor_multiplicity(const PieceDecomposition<Q>& pieces, const LinearFactor<Q>& f)
{
    if (f.form != LinearForm::General) throw DomainError("piece multiplicity needs a factor with u v w != 0");
    const auto [s, t] = slope_intercept(Q{}, f);
    return shift_multiplicity(pieces, s, t, nullptr);
}

BigInt factor_multiplicity(const PieceDecomposition<GaloisField>& pieces, const LinearFactor<GaloisField>& f)
{
    if (f.form != LinearForm::General) throw DomainError("piece multiplicity needs a factor with u v w != 0");
    if (pieces.pieces.empty()) return 0;
    const auto [s, t] = slope_intercept(pieces.pieces.front().poly.field(), f);
    return shift_multiplicity(pieces, s, t, nullptr);
}

BigInt factor_multiplicity(const PieceDecomposition<Q>& pieces, const MultilinearFactor& f)
{
    if (sgn(f.a) == 0 || sgn(f.b) == 0 || sgn(f.c) == 0 || f.c == f.a * f.b)
        throw DomainError("piece multiplicity needs an irreducible factor with a b c != 0");
    const auto d = multilinear_dense(f);
    BigInt m = -1;
    for (const auto& piece : pieces.pieces) {
        const BigInt mp(division_multiplicity(piece.poly, d));
        if (m < 0 || mp < m) m = mp;
        if (m == 0) break;
    }
    return m < 0 ? BigInt(0) : m;
}

BinomExprPoly<Q> restriction_along(const QPoly& p, const QFactor& f)
{
    switch (f.form) {
    case LinearForm::XminusA: return restrict_poly<Q>(p, 0, -f.w / f.u, true);
    case LinearForm::YminusB: return restrict_poly<Q>(p, 0, -f.w / f.v, false);
    case LinearForm::YminusUX: return restrict_poly<Q>(p, -f.u / f.v, 0, false);
    case LinearForm::General: break;
    }
    return restrict_poly<Q>(p, -f.u / f.v, -f.w / f.v, false);
}

BinomExprPoly<GaloisField> restriction_along(const LacunaryPoly<GaloisField>& p, const GfFactor& f)
{
    const auto [s, t] = slope_intercept(p.field, f);
    return restrict_poly(p, s, t, false);
}

FactorReport<Q> linear_factors_q(const QPoly& p_in, const FactorOptions& opt)
{
    const QPoly p = checked_input(p_in);
    Ctx ctx(opt);
    std::vector<FactorEntry<Q>> out;
    route_groups(p, LinearForm::XminusA, ctx, out);
    route_groups(p, LinearForm::YminusB, ctx, out);
    route_groups(p, LinearForm::YminusUX, ctx, out);
    route_pieces(p, ctx, out);
    return finish(p.field, std::move(out), ctx.tally.tests, opt.lambda);
}

FactorReport<Q> multilinear_factors_q(const QPoly& p_in, const FactorOptions& opt)
{
    const QPoly p = checked_input(p_in);
    Ctx ctx(opt);
    std::vector<FactorEntry<Q>> out;
    route_groups(p, LinearForm::XminusA, ctx, out);
    route_groups(p, LinearForm::YminusB, ctx, out);
    route_groups(p, LinearForm::YminusUX, ctx, out);
    route_pieces(p, ctx, out);

    std::vector<FactorEntry<Q>> multi;
    for (Reversal r : {Reversal::X, Reversal::Y, Reversal::XY}) route_reversal(p, r, ctx, multi);
    route_multilinear_pieces(p, ctx, multi);
    // X Y - c is found by both single reversals.
    for (auto& e : multi) {
        const auto& m = std::get<MultilinearFactor>(e.factor);
        const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& o) {
            const auto* om = std::get_if<MultilinearFactor>(&o.factor);
            return om && *om == m;
        });
        if (!dup) out.push_back(std::move(e));
    }
    return finish(p.field, std::move(out), ctx.tally.tests, opt.lambda);
}

FactorReport<GaloisField> linear_factors_fp(const LacunaryPoly<GaloisField>& p_in, const FactorOptions& opt,
                                            LinearForm requested)
{
    if (requested != LinearForm::General)
        throw UnsupportedFormError("over a finite field only factors u X + v Y + w with u v w != 0 are supported, not " +
                                   to_string(requested));
    const LacunaryPoly<GaloisField> p = normalize(p_in);
    validate_exponents(p.terms);
    if (p.terms.empty()) throw DomainError("factoring the zero polynomial");
    const GaloisField& f = p.field;
    const auto pre = fp_precondition_check(BinomExprPoly<GaloisField>{f, f.one(), f.one(), BigInt(1), p.terms});
    if (!pre.ok) throw PreconditionError(pre.message());

    Rng rng(opt.seed);
    const auto dec = piece_decomposition(p, 1);
    const auto cands =
        line_candidates(dec, opt, [&](const DenseUni<GaloisField>& s) { return fp_dense_roots(s, rng); });
    const PitOptions pit{opt.lambda, opt.seed, opt.exact_bit_limit, opt.exec};
    std::vector<FactorEntry<GaloisField>> out;
    for (const auto& [s, t] : cands) {
        FactorEntry<GaloisField> e;
        const auto lf = canonical_linear(f, f.neg(s), f.one(), f.neg(t));
        e.factor = lf;
        e.evidence.route = "pieces";
        e.multiplicity = shift_multiplicity(dec, s, t, &e.evidence.local_multiplicities);
        if (e.multiplicity == 0) continue;
        auto r = restriction_along(p, lf);
        auto v = zero_test_fp(r, pit);
        if (v.verdict != Verdict::Zero) continue;
        e.evidence.restriction = std::move(r);
        e.evidence.restriction_verdict = v;
        out.push_back(std::move(e));
    }
    auto report = finish(f, std::move(out), 0, opt.lambda);
    // Verification is exact; the randomness is in root splitting and in the
    // primality check of p.
    report.certainty = Certainty::MonteCarlo;
    report.error_exponent = opt.lambda;
    return report;
}

bool reverify(const QPoly& p_in, const FactorReport<Q>& report, const FactorOptions& opt)
{
    const QPoly p = checked_input(p_in);
    Ctx ctx(opt);
    for (const auto& e : report.entries) {
        if (e.multiplicity < 1) return false;
        if (const auto* lf = std::get_if<QFactor>(&e.factor)) {
            if (!reverify_linear_q(p, e, *lf, ctx)) return false;
            continue;
        }
        const auto& m = std::get<MultilinearFactor>(e.factor);
        if (m.c == m.a * m.b) return false;
        if (e.evidence.route == "pieces") {
            if (factor_multiplicity(piece_decomposition(p, 2), m) != e.multiplicity) return false;
            continue;
        }
        bool matched = false;
        for (Reversal r : {Reversal::X, Reversal::Y, Reversal::XY}) {
            if (e.evidence.route != route_of(r)) continue;
            const auto lf = reversed_factor(m, r);
            if (!lf) return false;
            const QPoly rp = reverse(p, r);
            FactorEntry<Q> inner = e;
            inner.evidence.route = route_of(lf->form);
            if (!reverify_linear_q(rp, inner, *lf, ctx)) return false;
            matched = true;
        }
        if (!matched) return false;
    }
    return true;
}

bool reverify(const LacunaryPoly<GaloisField>& p_in, const FactorReport<GaloisField>& report,
              const FactorOptions& opt)
{
    const LacunaryPoly<GaloisField> p = normalize(p_in);
    const auto dec = piece_decomposition(p, 1);
    const PitOptions pit{opt.lambda, opt.seed, opt.exact_bit_limit, opt.exec};
    for (const auto& e : report.entries) {
        const auto* lf = std::get_if<GfFactor>(&e.factor);
        if (!lf || e.multiplicity < 1) return false;
        if (factor_multiplicity(dec, *lf) != e.multiplicity) return false;
        if (zero_test_fp(restriction_along(p, *lf), pit).verdict != Verdict::Zero) return false;
    }
    return true;
}

namespace {

template <class F>
std::string format_linear(const F& field, const LinearFactor<F>& l)
{
    std::string out;
    auto put = [&](const typename F::Elem& c, const char* var) {
        if (field.is_zero(c)) return;
        std::string s = field.format(c);
        const bool neg = !s.empty() && s[0] == '-';
        if (neg) s.erase(0, 1);
        if (*var && s == "1") s.clear();
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += s;
        if (*var) out += s.empty() ? var : std::string("*") + var;
    };
    put(l.u, "X");
    put(l.v, "Y");
    put(l.w, "");
    return out;
}

std::string format_multilinear(const MultilinearFactor& m)
{
    std::string out = "X*Y";
    auto put = [&](const BigRat& c, const char* var) {
        if (sgn(c) == 0) return;
        BigRat a = abs(c);
        out += sgn(c) < 0 ? " - " : " + ";
        if (a != 1 || !*var) out += to_string(a);
        if (*var) out += (a != 1 ? "*" : "") + std::string(var);
    };
    put(m.b, "Y");
    put(-m.a, "X");
    put(-m.c, "");
    return out;
}

}  // namespace

std::string format_factor(const Rationals& f, const std::variant<LinearFactor<Q>, MultilinearFactor>& x)
{
    if (const auto* l = std::get_if<QFactor>(&x)) return format_linear(f, *l);
    return format_multilinear(std::get<MultilinearFactor>(x));
}

std::string format_factor(const GaloisField& f, const std::variant<LinearFactor<GaloisField>, MultilinearFactor>& x)
{
    if (const auto* l = std::get_if<GfFactor>(&x)) return format_linear(f, *l);
    return format_multilinear(std::get<MultilinearFactor>(x));
}

}  // namespace lacunary
