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

#include "lacunary/run.hpp"

#include "lacunary/bounds.hpp"
#include "lacunary/document.hpp"
#include "lacunary/factors.hpp"
#include "lacunary/gap.hpp"
#include "lacunary/parallel.hpp"
#include "lacunary/pit.hpp"

#include <json.hpp>

#include <chrono>
#include <map>

namespace lacunary {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

template <class... Fs>
struct Overload : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

const char* command_name(Command c)
{
    switch (c) {
    case Command::ZeroTest: return "zero-test";
    case Command::Factor: return "factor";
    case Command::Bound: return "bound";
    case Command::GapSplit: return "gap-split";
    case Command::GenerateHajos: return "generate hajos";
    case Command::CheckWz: return "check wz";
    case Command::Wronskian: return "wronskian";
    case Command::SearchMaxValuation: return "search max-valuation";
    }
    return "";
}

std::string field_name(const FieldSpec& s)
{
    if (s.is_rationals()) return "Q";
    if (s.s == 1) return "GF(" + to_string(s.p) + ")";
    return "GF(" + to_string(s.p) + "^" + std::to_string(s.s) + ")";
}

Json witness_json(const Witness& w)
{
    Json j;
    j["kind"] = to_string(w.kind);
    switch (w.kind) {
    case Witness::Kind::CoefficientKey:
        j["part"] = {w.part_begin, w.part_end};
        j["key"] = to_string(w.key);
        break;
    case Witness::Kind::AdicValuation:
    case Witness::Kind::ModularImage:
        j["group"] = to_string(w.key);
        j["prime"] = to_string(w.prime);
        break;
    default: j["group"] = to_string(w.key); break;
    }
    if (w.residue_class != 0) j["residue_class"] = to_string(w.residue_class);
    return j;
}

Json verdict_json(const ZeroTestVerdict& v)
{
    Json j;
    j["verdict"] = to_string(v.verdict);
    j["certainty"] = to_string(v.certainty);
    j["error_exponent"] = v.error_exponent;
    if (v.witness) j["witness"] = witness_json(*v.witness);
    return j;
}

template <class F>
Json terms_json(const F& f, const std::vector<Term<F>>& terms)
{
    Json out = Json::array();
    for (const auto& t : terms) out.push_back({f.format(t.coef), to_string(t.alpha), to_string(t.beta)});
    return out;
}

struct Ctx {
    const Request& req;
    Json report;
    Exec exec;
};

InputDocument need_doc(std::string_view text, Ctx& ctx)
{
    auto doc = parse_document(text);
    std::visit(
        [&](const auto& p) {
            ctx.report["field"] = field_name(p.field.spec());
            ctx.report["kind"] = doc.is_binom() ? "binom" : "lacunary";
            ctx.report["terms"] = p.terms.size();
            ctx.report["size_measure"] = size_measure(p);
        },
        doc.poly);
    return doc;
}

[[noreturn]] void input_error(const std::string& what) { throw DomainError(what); }

// ---------------------------------------------------------------------------

int cmd_zero_test(std::string_view text, Ctx& ctx)
{
    const auto doc = need_doc(text, ctx);
    const PitOptions opt{ctx.req.lambda, ctx.req.seed, std::size_t{1} << 16, ctx.exec};
    ZeroTestVerdict v;
    bool verified = true;
    std::visit(Overload{
                   [&](const BinomExprPoly<Rationals>& p) {
                       ctx.report["method"] = p.d == 1 ? "gap" : "two-sparse";
                       v = p.d == 1 ? zero_test_q(p, opt) : zero_test_two_sparse(p, opt);
                       if (v.verdict == Verdict::NonZero) verified = verify_witness(p, v);
                   },
                   [&](const BinomExprPoly<GaloisField>& p) {
                       ctx.report["method"] = p.d == 1 ? "finite-field" : "two-sparse";
                       v = p.d == 1 ? zero_test_fp(p, opt) : zero_test_two_sparse(p, opt);
                       if (v.verdict == Verdict::NonZero) verified = verify_witness(p, v);
                   },
                   [&](const auto& p) {
                       // Already canonical: a lacunary polynomial is zero iff it has no terms.
                       ctx.report["method"] = "canonical-form";
                       v.verdict = p.terms.empty() ? Verdict::Zero : Verdict::NonZero;
                   },
               },
               doc.poly);
    ctx.report.update(verdict_json(v));
    if (v.witness) ctx.report["witness_verified"] = verified;
    return v.verdict == Verdict::Zero ? kExitOk : kExitViolated;
}

template <class F>
Json factor_entry_json(const F& field, const FactorEntry<F>& e)
{
    Json j;
    Overload fmt{
        [&](const LinearFactor<F>& l) {
            j["type"] = "linear";
            j["form"] = to_string(l.form);
            j["u"] = field.format(l.u);
            j["v"] = field.format(l.v);
            j["w"] = field.format(l.w);
        },
        [&](const MultilinearFactor& m) {
            j["type"] = "multilinear";
            j["a"] = to_string(m.a);
            j["b"] = to_string(m.b);
            j["c"] = to_string(m.c);
        },
    };
    std::visit(fmt, e.factor);
    j["text"] = format_factor(field, e.factor);
    j["multiplicity"] = to_string(e.multiplicity);
    Json ev;
    ev["route"] = e.evidence.route;
    Json locals = Json::array();
    for (const auto& m : e.evidence.local_multiplicities) locals.push_back(to_string(m));
    ev["local_multiplicities"] = locals;
    if (e.evidence.restriction_verdict) ev["restriction"] = verdict_json(*e.evidence.restriction_verdict);
    j["evidence"] = ev;
    return j;
}

LinearForm parse_form(const std::string& s)
{
    if (s == "general") return LinearForm::General;
    if (s == "x-minus-a") return LinearForm::XminusA;
    if (s == "y-minus-b") return LinearForm::YminusB;
    if (s == "y-minus-ux") return LinearForm::YminusUX;
    input_error("unknown factor form '" + s + "'");
}

int cmd_factor(std::string_view text, Ctx& ctx)
{
    const auto doc = need_doc(text, ctx);
    if (doc.is_binom()) input_error("factor needs a lacunary document");
    FactorOptions opt;
    opt.lambda = ctx.req.lambda;
    opt.seed = ctx.req.seed;
    opt.exec = ctx.exec;
    const LinearForm form = parse_form(ctx.req.form);
    auto emit = [&](const auto& p, const auto& report) {
        Json entries = Json::array();
        for (const auto& e : report.entries) entries.push_back(factor_entry_json(p.field, e));
        ctx.report["mode"] = ctx.req.multilinear ? "multilinear" : "linear";
        ctx.report["factors"] = entries;
        ctx.report["certainty"] = to_string(report.certainty);
        ctx.report["error_exponent"] = report.error_exponent;
        ctx.report["reverified"] = reverify(p, report, opt);
    };
    if (const auto* p = std::get_if<LacunaryPoly<Rationals>>(&doc.poly)) {
        if (form != LinearForm::General) input_error("--form applies to finite fields only");
        emit(*p, ctx.req.multilinear ? multilinear_factors_q(*p, opt) : linear_factors_q(*p, opt));
    } else {
        const auto& q = std::get<LacunaryPoly<GaloisField>>(doc.poly);
        if (ctx.req.multilinear)
            throw UnsupportedFormError("multilinear factors are only supported over Q");
        emit(q, linear_factors_fp(q, opt, form));
    }
    return kExitOk;
}

MultiBoundInput parse_multi_bound(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error&) {
        throw ParseError(ParseError::Code::Syntax, 0, 0, "generalized bound input must be JSON");
    }
    MultiBoundInput in;
    try {
        in.degrees = j.at("degrees").get<std::vector<unsigned long>>();
        in.multiplicities = j.at("multiplicities").get<std::vector<unsigned long>>();
        for (const auto& row : j.at("alpha")) {
            std::vector<BigInt> r;
            for (const auto& x : row) r.push_back(x.is_string() ? parse_bigint(x.get<std::string>()) : BigInt(x.get<long>()));
            in.alpha.push_back(std::move(r));
        }
    } catch (const Json::exception& e) {
        throw ParseError(ParseError::Code::Syntax, 0, 0, std::string("generalized bound input: ") + e.what());
    }
    return in;
}

int cmd_bound(std::string_view text, Ctx& ctx)
{
    if (ctx.req.bound == BoundKind::Generalized) {
        const auto in = parse_multi_bound(text);
        ctx.report["bound_kind"] = "generalized";
        ctx.report["order_opt"] = ctx.req.order_opt;
        ctx.report["bound"] = to_string(generalized_multiplicity_bound(in, ctx.req.order_opt));
        return kExitOk;
    }
    const auto doc = need_doc(text, ctx);
    const auto* p = std::get_if<BinomExprPoly<Rationals>>(&doc.poly);
    if (!p) input_error("bound needs a binom document over Q");
    if (p->terms.empty()) input_error("bound of the zero polynomial");
    std::vector<BigInt> alphas;
    for (const auto& t : p->terms) alphas.push_back(t.alpha);
    const bool w2 = ctx.req.bound == BoundKind::Weight2;
    const BigInt bound = w2 ? weight2_valuation_bound(alphas) : valuation_bound(alphas);
    ctx.report["bound_kind"] = w2 ? "weight2" : "thm1";
    ctx.report["bound"] = to_string(bound);
    if (p->d != 1 || sgn(p->v) == 0) {
        ctx.report["checked"] = false;
        return kExitOk;
    }
    try {
        const auto dense = expand_oracle(*p, ctx.req.oracle_cap, ctx.exec);
        const auto val = valuation(dense);
        ctx.report["checked"] = true;
        if (!val) {
            ctx.report["valuation"] = nullptr;
            ctx.report["holds"] = true;
            return kExitOk;
        }
        ctx.report["valuation"] = *val;
        const bool holds = BigInt(static_cast<unsigned long>(*val)) <= bound;
        ctx.report["holds"] = holds;
        return holds ? kExitOk : kExitViolated;
    } catch (const DegreeCapError&) {
        ctx.report["checked"] = false;
        return kExitOk;
    }
}

int cmd_gap_split(std::string_view text, Ctx& ctx)
{
    const auto doc = need_doc(text, ctx);
    const unsigned weight = ctx.req.weight;
    ctx.report["weight"] = weight;
    auto intervals = [&](const auto& p) {
        std::vector<BigInt> alphas;
        for (const auto& t : p.terms) alphas.push_back(t.alpha);
        const auto part = gap_partition(alphas, weight);
        Json parts = Json::array();
        for (const auto& iv : part.intervals)
            parts.push_back({{"begin", iv.begin},
                             {"end", iv.end},
                             {"alpha_min", to_string(alphas[iv.begin])},
                             {"alpha_max", to_string(alphas[iv.end - 1])}});
        ctx.report["parts"] = parts;
        ctx.report["exact"] = partition_is_exact(alphas, part);
    };
    auto pieces = [&](const auto& p) {
        const auto dec = piece_decomposition(p, weight);
        Json out = Json::array();
        for (const auto& piece : dec.pieces)
            out.push_back({{"alpha_shift", to_string(piece.alpha_shift)},
                           {"beta_shift", to_string(piece.beta_shift)},
                           {"terms", piece.term_indices.size()},
                           {"x_degree", piece.poly.x_degree()},
                           {"y_degree", piece.poly.y_degree()}});
        ctx.report["pieces"] = out;
        const auto back = reassemble(dec, p.field);
        bool same = back.terms.size() == p.terms.size();
        for (std::size_t i = 0; same && i < p.terms.size(); ++i)
            same = p.field.equal(back.terms[i].coef, p.terms[i].coef) && back.terms[i].alpha == p.terms[i].alpha &&
                   back.terms[i].beta == p.terms[i].beta;
        ctx.report["reassembles"] = same;
    };
    std::visit(Overload{
                   [&](const LacunaryPoly<Rationals>& p) { intervals(p), pieces(p); },
                   [&](const LacunaryPoly<GaloisField>& p) { intervals(p), pieces(p); },
                   [&](const auto& p) { intervals(p); },
               },
               doc.poly);
    return kExitOk;
}

int cmd_generate(Ctx& ctx, std::string& raw_out)
{
    const InputDocument doc{hajos_family(ctx.req.k)};
    raw_out = ctx.req.json_output ? serialize_json(doc) : serialize_text(doc);
    return kExitOk;
}

int cmd_check_wz(Ctx& ctx)
{
    const auto r = wz_identity_check(ctx.req.k);
    ctx.report["k"] = ctx.req.k;
    ctx.report["passed"] = r.passed;
    ctx.report["checked"] = r.checked;
    ctx.report["skipped"] = r.skipped;
    if (!r.passed) {
        ctx.report["failure"] = r.failure;
        if (r.failing_m) ctx.report["m"] = *r.failing_m;
        if (r.failing_j) ctx.report["j"] = *r.failing_j;
    }
    return r.passed ? kExitOk : kExitViolated;
}

int cmd_wronskian(std::string_view text, Ctx& ctx)
{
    const auto doc = need_doc(text, ctx);
    const auto* p = std::get_if<LacunaryPoly<Rationals>>(&doc.poly);
    if (!p) input_error("wronskian needs a lacunary document over Q (member j is the coefficient of Y^j)");
    std::map<BigInt, LacunaryUni<Rationals>> members;
    for (const auto& t : p->terms) members[t.beta].terms.push_back({t.coef, t.alpha});
    std::vector<DenseUni<Rationals>> fs;
    std::vector<BigInt> vals;
    for (auto& [b, f] : members) {
        fs.push_back(to_dense(normalize(f), ctx.req.oracle_cap));
        vals.push_back(BigInt(static_cast<unsigned long>(*valuation(fs.back()))));
    }
    if (fs.empty()) input_error("wronskian of an empty family");
    const auto w = wronskian(std::span<const DenseUni<Rationals>>(fs));
    ctx.report["family_size"] = fs.size();
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < w.coeffs().size(); ++i)
        if (sgn(w.coeffs()[i]) != 0) coeffs.push_back({to_string(w.coeffs()[i]), i});
    ctx.report["wronskian"] = coeffs;
    ctx.report["independent"] = !w.is_zero();
    if (!w.is_zero()) {
        std::sort(vals.begin(), vals.end());
        BigInt sum = 0;
        for (const auto& v : vals) sum += v;
        ctx.report["valuation"] = *valuation(w);
        ctx.report["lower_bound"] = to_string(BigInt(sum - binomial(fs.size(), 2)));
        ctx.report["plateau_bound"] = to_string(plateau_bound(vals));
    }
    return kExitOk;
}

int cmd_search(Ctx& ctx)
{
    SearchOptions opt;
    opt.k = static_cast<unsigned>(ctx.req.k);
    opt.exp_cap = ctx.req.exp_cap;
    opt.coeff_cap = ctx.req.coeff_cap;
    opt.samples = ctx.req.samples;
    opt.seed = ctx.req.seed;
    opt.exec = ctx.exec;
    const auto r = max_valuation_search(opt);
    ctx.report["k"] = opt.k;
    ctx.report["exp_cap"] = opt.exp_cap;
    ctx.report["instances"] = r.instances;
    ctx.report["exhaustive"] = r.exhaustive;
    ctx.report["best_gap"] = r.best_gap;
    if (r.best_gap >= 0) ctx.report["witness"] = terms_json(r.witness.field, r.witness.terms);
    return kExitOk;
}

Json error_json(const std::string& kind, const std::string& message)
{
    return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

bool needs_document(Command c)
{
    return c != Command::GenerateHajos && c != Command::CheckWz && c != Command::SearchMaxValuation;
}

RunResult run(const Request& req, std::string_view document)
{
    const auto start = Clock::now();
    Ctx ctx{req, Json{}, req.threads > 1 ? Exec::Parallel : Exec::Serial};
    set_thread_count(req.threads);
    ctx.report["command"] = command_name(req.command);
    RunResult out;
    std::string raw;
    try {
        switch (req.command) {
        case Command::ZeroTest: out.exit_code = cmd_zero_test(document, ctx); break;
        case Command::Factor: out.exit_code = cmd_factor(document, ctx); break;
        case Command::Bound: out.exit_code = cmd_bound(document, ctx); break;
        case Command::GapSplit: out.exit_code = cmd_gap_split(document, ctx); break;
        case Command::GenerateHajos: out.exit_code = cmd_generate(ctx, raw); break;
        case Command::CheckWz: out.exit_code = cmd_check_wz(ctx); break;
        case Command::Wronskian: out.exit_code = cmd_wronskian(document, ctx); break;
        case Command::SearchMaxValuation: out.exit_code = cmd_search(ctx); break;
        }
    } catch (const ParseError& e) {
        Json j = error_json("parse", e.detail());
        j["error"]["code"] = to_string(e.code());
        if (e.line() > 0) j["error"]["line"] = e.line(), j["error"]["column"] = e.column();
        return {j.dump(2) + "\n", kExitInput};
    } catch (const UnsupportedFormError& e) {
        return {error_json("unsupported-form", e.what()).dump(2) + "\n", kExitPrecondition};
    } catch (const PreconditionError& e) {
        return {error_json("precondition", e.what()).dump(2) + "\n", kExitPrecondition};
    } catch (const DegreeCapError& e) {
        return {error_json("degree-cap", e.what()).dump(2) + "\n", kExitPrecondition};
    } catch (const RetryError& e) {
        return {error_json("retry-exhausted", e.what()).dump(2) + "\n", kExitPrecondition};
    } catch (const std::exception& e) {
        return {error_json("input", e.what()).dump(2) + "\n", kExitInput};
    }
    if (!raw.empty()) {
        out.report = std::move(raw);
        return out;
    }
    if (req.timings) {
        const auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        ctx.report["timings"] = {{"total_ms", ms}, {"threads", thread_count()}};
    }
    out.report = ctx.report.dump(2) + "\n";
    return out;
}

}  // namespace lacunary
