#include "cmlab/runner.hpp"

#include "cmlab/dimension.hpp"
#include "cmlab/errors.hpp"
#include "cmlab/invariants.hpp"
#include "cmlab/models/badring.hpp"
#include "cmlab/models/subring.hpp"
#include "cmlab/models/trivext.hpp"
#include "cmlab/models/valuation.hpp"
#include "cmlab/primes.hpp"
#include "cmlab/sequences.hpp"

#include <atomic>
#include <cctype>
#include <chrono>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

namespace cmlab::cli {

namespace {

using nlohmann::ordered_json;
using algebra::Field;
using algebra::IdealHandle;
using algebra::ModulePresentation;
using algebra::Poly;
using algebra::PresentedRing;
using algebra::PresentedRingPtr;

// ---------- ring expression parsing ----------

struct ExprCur {
    const std::string& s;
    std::size_t pos = 0;

    explicit ExprCur(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("ring expression '" + s + "': " + msg);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::string w;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_'))
            w += s[pos++];
        return w;
    }
    long long integer() {
        skip_ws();
        std::size_t p = pos;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        std::size_t d = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == d) fail("expected an integer");
        long long v = std::stoll(s.substr(pos, p - pos));
        pos = p;
        return v;
    }
    // balanced group body, cursor placed after the closer
    std::string group(char open, char close) {
        expect(open);
        int depth = 1;
        std::string body;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == open) ++depth;
            else if (c == close) {
                if (--depth == 0) {
                    ++pos;
                    return body;
                }
            }
            body += c;
            ++pos;
        }
        fail(std::string("unbalanced '") + open + "'");
    }
};

int bracket_delta(char c) {
    if (c == '(' || c == '[' || c == '{') return 1;
    if (c == ')' || c == ']' || c == '}') return -1;
    return 0;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    auto flush = [&] {
        std::size_t a = cur.find_first_not_of(" \t");
        std::size_t b = cur.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(cur.substr(a, b - a + 1));
        cur.clear();
    };
    for (char c : s) {
        depth += bracket_delta(c);
        if (c == sep && depth == 0) flush();
        else cur += c;
    }
    flush();
    return out;
}

std::vector<std::string> split_commas(const std::string& s) { return split_on(s, ','); }
std::vector<std::string> split_semis(const std::string& s) { return split_on(s, ';'); }

std::string strip_parens(const std::string& t) {
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
        return t.substr(1, t.size() - 2);
    return t;
}

bool small_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct Backend {
    std::string kind; // presented | valuation | trivext | badlimit | subring | action
    std::unique_ptr<seq::RingAdapter> adapter;
    PresentedRingPtr ring; // presented backends only
    std::shared_ptr<models::SubringModel> sub;
    std::optional<invariants::LinearGroupAction> action;
    int badring_N = 0;
    int subring_B = 0;
};

invariants::Matrix parse_matrix(const std::string& text, Field f) {
    ExprCur cur(text);
    invariants::Matrix m;
    cur.expect('[');
    while (true) {
        cur.expect('[');
        std::vector<algebra::Scalar> row;
        while (true) {
            row.push_back(algebra::Scalar(f, long(cur.integer())));
            if (!cur.accept(',')) break;
        }
        cur.expect(']');
        m.push_back(std::move(row));
        if (!cur.accept(',')) break;
    }
    cur.expect(']');
    if (!cur.done()) cur.fail("trailing characters after the matrix");
    return m;
}

Backend make_backend(const std::string& expr, Budget& budget, const RunOptions& opts);

Backend make_presented(ExprCur& cur, const std::string& head, Budget& budget) {
    Field f{0};
    if (head == "GF") {
        std::string body = cur.group('(', ')');
        ExprCur icur(body);
        long long p = icur.integer();
        if (!icur.done()) icur.fail("GF takes a single prime");
        if (!small_prime(p) || p > 2147483647LL)
            cur.fail("GF characteristic must be a machine-size prime");
        f = Field{std::uint32_t(p)};
    } else if (head != "QQ") {
        cur.fail("unknown coefficient field '" + head + "'");
    }
    std::string vars_body = cur.group('[', ']');
    std::vector<std::string> vars = split_commas(vars_body);
    if (vars.empty()) cur.fail("no variables");
    for (const std::string& v : vars) {
        if (v.empty() || std::isdigit(static_cast<unsigned char>(v[0])))
            cur.fail("bad variable name '" + v + "'");
        for (char c : v)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                cur.fail("bad variable name '" + v + "'");
    }
    auto amb = algebra::make_ring(f, vars);
    std::vector<Poly> rels;
    if (cur.accept('/')) {
        std::string rel_body = cur.group('(', ')');
        for (const std::string& r : split_commas(rel_body))
            rels.push_back(algebra::parse_poly(amb, r));
    }
    Backend b;
    b.kind = "presented";
    b.ring = PresentedRing::make(amb, std::move(rels), budget);
    b.adapter = std::make_unique<seq::PresentedRingAdapter>(b.ring);
    return b;
}

Backend make_trivext_backend(ExprCur& cur, Budget& budget, const RunOptions& opts) {
    std::string body = cur.group('(', ')');
    // <base ring> at (<max ideal gens>), level=<k>
    int depth = 0;
    std::size_t at_pos = std::string::npos;
    for (std::size_t i = 0; i + 1 < body.size(); ++i) {
        depth += bracket_delta(body[i]);
        if (depth == 0 && body.compare(i, 4, " at ") == 0) {
            at_pos = i;
            break;
        }
    }
    if (at_pos == std::string::npos)
        cur.fail("trivext needs '<ring> at (<maximal ideal>), level=<k>'");
    std::string base_expr = body.substr(0, at_pos);
    Backend base = make_backend(base_expr, budget, RunOptions{});
    if (base.kind != "presented")
        cur.fail("trivext base must be a finitely presented ring");

    ExprCur rest(body);
    rest.pos = at_pos + 4;
    std::string gens_body = rest.group('(', ')');
    rest.expect(',');
    if (rest.ident() != "level") rest.fail("expected 'level=<k>'");
    rest.expect('=');
    long long level = rest.integer();
    if (!rest.done()) rest.fail("trailing characters in trivext(...)");

    std::vector<Poly> m;
    for (const std::string& g : split_commas(gens_body))
        m.push_back(base.ring->parse(g));
    auto S = models::make_trivext(base.ring, std::move(m), int(level));
    Backend b;
    b.kind = "trivext";
    b.adapter = std::make_unique<models::TrivExtAdapter>(std::move(S));
    (void)opts;
    return b;
}

Backend make_backend(const std::string& expr, Budget& budget, const RunOptions& opts) {
    ExprCur cur(expr);
    std::string head = cur.ident();
    if (head.empty()) cur.fail("expected a ring constructor");
    if (head == "QQ" || head == "GF") {
        Backend b = make_presented(cur, head, budget);
        if (!cur.done()) cur.fail("trailing characters");
        return b;
    }
    if (head == "valuation") {
        std::string body = cur.group('(', ')');
        if (!cur.done()) cur.fail("trailing characters");
        ExprCur icur(body);
        if (icur.ident() != "rank") icur.fail("expected 'rank=2'");
        icur.expect('=');
        if (icur.integer() != 2 || !icur.done())
            icur.fail("only the rank-2 lexicographic valuation ring is modeled");
        Backend b;
        b.kind = "valuation";
        b.adapter = std::make_unique<models::ValuationAdapter>();
        return b;
    }
    if (head == "trivext") {
        Backend b = make_trivext_backend(cur, budget, opts);
        if (!cur.done()) cur.fail("trailing characters");
        return b;
    }
    if (head == "badring") {
        std::string body = cur.group('(', ')');
        if (!cur.done()) cur.fail("trailing characters");
        int N = 0;
        bool limit = false;
        for (const std::string& arg : split_commas(body)) {
            if (arg == "limit") {
                limit = true;
                continue;
            }
            ExprCur acur(arg);
            std::string key = acur.ident();
            if (key != "N" && key != "n") acur.fail("badring takes N=<depth> and 'limit'");
            acur.expect('=');
            N = int(acur.integer());
            if (!acur.done()) acur.fail("bad badring argument");
        }
        Backend b;
        b.badring_N = N;
        if (limit) {
            b.kind = "badlimit";
            b.adapter = std::make_unique<models::BadRingLimitAdapter>(N > 0 ? N : 6);
        } else {
            if (N <= 0) cur.fail("badring truncation needs N=<depth>");
            models::TruncatedBadRing T = models::make_bad_ring(N, budget);
            b.kind = "presented";
            b.ring = T.ring;
            b.adapter = std::make_unique<seq::PresentedRingAdapter>(T.ring);
        }
        return b;
    }
    if (head == "subring") {
        std::string body = cur.group('(', ')');
        if (!cur.done()) cur.fail("trailing characters");
        ExprCur icur(body);
        if (icur.ident() != "B") icur.fail("expected 'B=<degree bound>'");
        icur.expect('=');
        long long B = icur.integer();
        if (!icur.done()) icur.fail("bad subring argument");
        Backend b;
        b.kind = "subring";
        b.subring_B = int(B);
        b.sub = std::make_shared<models::SubringModel>(int(B));
        return b;
    }
    if (head == "action") {
        std::string body = cur.group('(', ')');
        if (!cur.done()) cur.fail("trailing characters");
        std::size_t semi = std::string::npos;
        int depth = 0;
        for (std::size_t i = 0; i < body.size(); ++i) {
            depth += bracket_delta(body[i]);
            if (depth == 0 && body[i] == ';') {
                semi = i;
                break;
            }
        }
        if (semi == std::string::npos)
            cur.fail("action needs 'action(<ring>; <matrix>, <matrix>, ...)'");
        Backend base = make_backend(body.substr(0, semi), budget, RunOptions{});
        if (base.kind != "presented" || !base.ring->is_polynomial_ring())
            cur.fail("group actions are defined on polynomial rings");
        Field f = base.ring->ambient()->field;
        std::vector<invariants::Matrix> gens;
        for (const std::string& m : split_commas(body.substr(semi + 1)))
            gens.push_back(parse_matrix(m, f));
        if (gens.empty()) cur.fail("action needs at least one generator matrix");
        Backend b;
        b.kind = "action";
        b.action = invariants::action_from_generators(base.ring->ambient(), std::move(gens));
        return b;
    }
    cur.fail("unknown ring constructor '" + head + "'");
}

// ---------- JSON helpers ----------

ordered_json height_json(const algebra::Height& h) {
    return ordered_json{{"infinite", h.infinite}, {"value", h.value}, {"str", h.str()}};
}

ordered_json grade_json(const grade::GradeValue& g) {
    return ordered_json{{"infinite", g.infinite}, {"value", g.value},
                        {"route", g.route},      {"str", g.str()}};
}

ordered_json wpr_json(const seq::WprVerdict& v) {
    return ordered_json{{"kind", v.kind_str()},   {"level", v.level},
                        {"bound", v.bound},       {"citation", v.citation},
                        {"detail", v.detail}};
}

ordered_json param_json(const seq::ParamVerdict& v) {
    return ordered_json{{"value", v.value},
                        {"length", v.length},
                        {"height", height_json(v.height)},
                        {"reason", v.reason},
                        {"citation", v.citation}};
}

ordered_json reg_json(const seq::RegVerdict& v) {
    return ordered_json{{"value", v.value},
                        {"failing_step", v.failing_step},
                        {"improper", v.improper},
                        {"witness", v.witness},
                        {"detail", v.detail}};
}

std::string bool_token(bool b) { return b ? "true" : "false"; }

// ---------- check handlers ----------

struct CheckCtx {
    const Scenario& sc;
    const CheckSpec& c;
    const RunOptions& opts;
    Budget& budget;
    std::optional<Backend> backend; // lazily built

    seq::RingAdapter& adapter() {
        need_backend();
        if (!backend->adapter)
            throw DomainError("the '" + backend->kind +
                              "' backend answers no sequence checks");
        return *backend->adapter;
    }

    void need_backend() {
        if (backend) return;
        std::string expr = c.ring_expr.empty() ? sc.ring_expr : c.ring_expr;
        if (expr.empty())
            throw DomainError("check '" + c.kind + "' needs a ring (add a 'ring' "
                              "line or an 'in <ring>' clause)");
        backend.emplace(make_backend(expr, budget, opts));
    }

    Backend& be() {
        need_backend();
        return *backend;
    }

    seq::PresentedRingAdapter& presented() {
        need_backend();
        if (backend->kind != "presented")
            throw DomainError("check '" + c.kind +
                              "' needs a finitely presented ring, not '" +
                              backend->kind + "'");
        return static_cast<seq::PresentedRingAdapter&>(*backend->adapter);
    }

    seq::Seq elems() {
        if (c.elements.empty())
            throw DomainError("check '" + c.kind + "' needs elements");
        return adapter().parse_elements(c.elements, budget);
    }
};

void run_kind(CheckCtx& ctx, CheckOutcome& out) {
    const CheckSpec& c = ctx.c;
    const std::string& k = c.kind;

    if (k == "wpr") {
        int bound = c.bound > 0 ? c.bound : ctx.opts.wpr_bound;
        auto x = ctx.elems();
        auto v = seq::is_weakly_proregular(ctx.adapter(), x, bound, ctx.budget);
        out.outcome = v.kind_str();
        out.citation = v.citation;
        out.data = wpr_json(v);
        if (v.kind == seq::WprKind::Counterexample) out.status = "violation";
    } else if (k == "parameter") {
        auto v = seq::is_parameter_sequence(ctx.adapter(), ctx.elems(), ctx.budget);
        out.outcome = bool_token(v.value);
        out.citation = v.citation;
        out.data = param_json(v);
    } else if (k == "sps") {
        auto v = seq::is_strong_parameter_sequence(ctx.adapter(), ctx.elems(), ctx.budget);
        out.outcome = bool_token(v.value);
        ordered_json trace = ordered_json::array();
        for (const auto& p : v.trace) trace.push_back(param_json(p));
        if (!v.trace.empty()) out.citation = v.trace.back().citation;
        out.data = ordered_json{{"value", v.value},
                                {"failing_prefix", v.failing_prefix},
                                {"trace", std::move(trace)}};
    } else if (k == "regular") {
        auto v = seq::is_regular_sequence(ctx.adapter(), ctx.elems(), ctx.budget);
        out.outcome = bool_token(v.value);
        out.data = reg_json(v);
    } else if (k == "grade") {
        auto g = ctx.adapter().sequence_grade(ctx.elems(), ctx.budget);
        out.outcome = g.str();
        out.data = grade_json(g);
    } else if (k == "pgrade") {
        ctx.need_backend();
        if (ctx.be().kind == "presented") {
            auto& A = ctx.presented();
            IdealHandle I(A.ring(), A.polys(ctx.elems()), ctx.budget);
            auto g = grade::p_grade(I, ModulePresentation::free_module(A.ring(), 1),
                                    ctx.budget);
            out.outcome = g.str();
            out.data = grade_json(g);
            out.data["ideal"] = I.str();
        } else {
            auto g = ctx.adapter().sequence_grade(ctx.elems(), ctx.budget);
            out.outcome = g.str();
            out.data = grade_json(g);
        }
    } else if (k == "classical") {
        auto& A = ctx.presented();
        IdealHandle I(A.ring(), A.polys(ctx.elems()), ctx.budget);
        auto g = grade::classical_grade(I, ModulePresentation::free_module(A.ring(), 1),
                                        ctx.budget);
        out.outcome = g.str();
        out.data = grade_json(g);
    } else if (k == "profile") {
        auto& A = ctx.presented();
        auto prof = grade::cech_vanishing_profile(
            A.ring(), A.polys(ctx.elems()),
            ModulePresentation::free_module(A.ring(), 1), ctx.budget);
        out.outcome = prof.grade.str();
        ordered_json deg = ordered_json::array();
        for (auto v : prof.by_degree)
            deg.push_back(v == grade::Vanish::Vanishes    ? "vanishes"
                          : v == grade::Vanish::NonZero   ? "nonzero"
                                                          : "undetermined");
        out.data = ordered_json{{"grade", grade_json(prof.grade)},
                                {"by_degree", std::move(deg)},
                                {"profile", prof.str()}};
    } else if (k == "pdepth") {
        auto g = ctx.adapter().pdepth(ctx.budget);
        out.outcome = g.str();
        out.data = grade_json(g);
    } else if (k == "dim") {
        int d = ctx.adapter().dimension(ctx.budget);
        out.outcome = std::to_string(d);
        out.data = ordered_json{{"dimension", d}};
    } else if (k == "height") {
        auto h = ctx.adapter().height(ctx.elems(), ctx.budget);
        out.outcome = h.str();
        out.data = height_json(h);
    } else if (k == "minprimes") {
        auto& A = ctx.presented();
        std::vector<Poly> gens;
        if (!c.elements.empty()) gens = A.polys(ctx.elems());
        IdealHandle I(A.ring(), gens, ctx.budget);
        auto primes = algebra::minimal_primes(I, ctx.budget);
        out.outcome = std::to_string(primes.size());
        ordered_json arr = ordered_json::array();
        for (const auto& p : primes) {
            ordered_json gl = ordered_json::array();
            for (const auto& g : p.basis()) gl.push_back(g.str());
            arr.push_back(ordered_json{
                {"generators", std::move(gl)},
                {"height", height_json(algebra::prime_height(p, ctx.budget))}});
        }
        out.data = ordered_json{{"count", primes.size()}, {"primes", std::move(arr)}};
    } else if (k == "unmixed") {
        auto& A = ctx.presented();
        IdealHandle I(A.ring(), A.polys(ctx.elems()), ctx.budget);
        int deg = c.degree > 0 ? c.degree : 2;
        auto r = seq::unmixedness_probe(I, deg, ctx.budget);
        out.outcome = r.witness_found ? "mixed" : "no-witness";
        if (r.witness_found) out.status = "violation";
        ordered_json prime = ordered_json::array();
        for (const auto& g : r.witness_prime) prime.push_back(g);
        out.data = ordered_json{{"witness_found", r.witness_found},
                                {"witness", r.witness},
                                {"colon", r.colon_str},
                                {"ideal_height", height_json(r.ideal_height)},
                                {"colon_height", height_json(r.colon_height)},
                                {"witness_prime", std::move(prime)},
                                {"candidates_tried", r.candidates_tried},
                                {"note", r.note}};
    } else if (k == "cm") {
        auto& A = ctx.adapter();
        std::vector<seq::Seq> seqs;
        if (!c.from.empty()) {
            for (const std::string& entry : split_semis(c.from))
                seqs.push_back(A.parse_elements(strip_parens(entry), ctx.budget));
        } else {
            if (c.pool.empty())
                throw DomainError("check 'cm' needs a pool { ... } or from { ... }");
            seq::Seq handles;
            for (const std::string& entry : split_semis(c.pool)) {
                auto hs = A.parse_elements(entry, ctx.budget);
                handles.insert(handles.end(), hs.begin(), hs.end());
            }
            std::size_t maxlen = c.maxlen > 0 ? std::size_t(c.maxlen)
                                              : std::min<std::size_t>(handles.size(), 3);
            for (const auto& idx : seq::enumerate_pool(handles.size(), maxlen)) {
                seq::Seq s;
                for (auto i : idx) s.push_back(handles[i]);
                seqs.push_back(std::move(s));
            }
        }
        seq::CmMemo memo;
        auto v = seq::cohen_macaulay_verdict(A, seqs, ctx.budget, &memo);
        out.outcome = v.violation_found ? "violation" : "no-violation";
        if (v.violation_found) out.status = "violation";
        out.data = ordered_json{{"violation_found", v.violation_found},
                                {"sequences_checked", v.sequences_checked},
                                {"sps_found", v.sps_found},
                                {"regular_confirmed", v.regular_confirmed},
                                {"note", v.note}};
        if (v.violation) {
            ordered_json el = ordered_json::array();
            for (const auto& e : v.violation->elements) el.push_back(e);
            out.data["violation"] =
                ordered_json{{"elements", std::move(el)},
                             {"length", v.violation->length},
                             {"grade", grade_json(v.violation->grade)},
                             {"certificate", v.violation->certificate},
                             {"citation", v.violation->citation}};
            out.citation = v.violation->citation;
        }
    } else if (k == "locality") {
        auto& A = ctx.presented();
        auto plan = seq::locality_reduction(A, ctx.elems(), ctx.budget);
        bool all = true;
        ordered_json arr = ordered_json::array();
        for (const auto& entry : plan) {
            all = all && entry.locally_regular;
            ordered_json steps = ordered_json::array();
            for (const auto& st : entry.steps)
                steps.push_back(ordered_json{{"step", st.step},
                                             {"locally_regular", st.locally_regular},
                                             {"obstruction", st.obstruction}});
            ordered_json pr = ordered_json::array();
            for (const auto& g : entry.prime) pr.push_back(g);
            arr.push_back(ordered_json{{"prime", std::move(pr)},
                                       {"locally_regular", entry.locally_regular},
                                       {"steps", std::move(steps)}});
        }
        out.outcome = all ? "locally-regular" : "obstructed";
        out.citation = "Prop 4.7";
        out.data = ordered_json{{"minimal_primes", plan.size()},
                                {"entries", std::move(arr)}};
        if (!all) out.status = "violation";
    } else if (k == "report") {
        auto& A = ctx.adapter();
        int bound = c.bound > 0 ? c.bound : ctx.opts.wpr_bound;
        auto rep = seq::sequence_report(A, ctx.elems(), bound, true, ctx.budget);
        out.outcome = "report";
        ordered_json el = ordered_json::array();
        for (const auto& e : rep.elements) el.push_back(e);
        ordered_json prefixes = ordered_json::array();
        for (const auto& p : rep.prefixes) {
            ordered_json pj{{"length", p.length},
                            {"wpr", wpr_json(p.wpr)},
                            {"parameter", param_json(p.parameter)}};
            if (p.grade) pj["grade"] = grade_json(*p.grade);
            prefixes.push_back(std::move(pj));
        }
        out.data = ordered_json{{"ring", A.name()},
                                {"noetherian", A.noetherian()},
                                {"capabilities", A.capabilities()},
                                {"elements", std::move(el)},
                                {"prefixes", std::move(prefixes)},
                                {"strong_parameter", rep.strong_parameter},
                                {"regular", reg_json(rep.regular)}};
    } else if (k == "hochster") {
        auto& A = ctx.presented();
        std::vector<Poly> module_ideal;
        for (const std::string& g : split_semis(c.from))
            module_ideal.push_back(A.ring()->parse(g));
        auto hc = grade::hochster_check(A.ring(), A.polys(ctx.elems()), module_ideal,
                                        ctx.budget);
        bool agree = hc.annihilator_zero == hc.nzd_on_extension;
        out.outcome = agree ? "consistent" : "inconsistent";
        out.citation = "Lemma 2.5";
        out.data = ordered_json{{"variable", hc.data.var},
                                {"element", hc.data.element.str()},
                                {"annihilator_zero", hc.annihilator_zero},
                                {"nzd_on_extension", hc.nzd_on_extension}};
        if (!agree) out.status = "violation";
    } else if (k == "example37") {
        ctx.need_backend();
        auto* va = dynamic_cast<models::ValuationAdapter*>(ctx.be().adapter.get());
        if (!va) throw DomainError("example37 runs on the valuation(rank=2) backend");
        int n = c.n > 0 ? c.n : 3;
        auto ex = models::val_example37(va->model(), n, ctx.budget);
        bool ok = ex.weakly_proregular && ex.principal_identity && !ex.parameter &&
                  !ex.height.infinite && ex.height.value == 2;
        for (const auto& lvl : ex.levels)
            ok = ok && lvl.h2_zero && lvl.syzygy_identity && lvl.boundary_identity;
        out.outcome = ok ? "verified" : "failed";
        out.citation = ex.citation;
        ordered_json lv = ordered_json::array();
        for (const auto& lvl : ex.levels)
            lv.push_back(ordered_json{{"n", lvl.n},
                                      {"h2_zero", lvl.h2_zero},
                                      {"syzygy_identity", lvl.syzygy_identity},
                                      {"boundary_identity", lvl.boundary_identity}});
        out.data = ordered_json{{"n_max", ex.n_max},
                                {"levels", std::move(lv)},
                                {"weakly_proregular", ex.weakly_proregular},
                                {"height", height_json(ex.height)},
                                {"parameter", ex.parameter},
                                {"principal_identity", ex.principal_identity},
                                {"detail", ex.detail}};
    } else if (k == "badchain") {
        int n = c.n > 0 ? c.n : 0;
        if (n == 0 && !ctx.sc.ring_expr.empty() && c.ring_expr.empty()) {
            ctx.need_backend();
            n = ctx.be().badring_N;
        }
        if (n <= 0) throw DomainError("badchain needs n=<depth>");
        auto chain = models::bad_colon_chain(n, ctx.budget);
        bool strict = chain.strictly_increasing && chain.stabilizes_at_N;
        out.outcome = strict ? "strict" : "not-strict";
        out.citation = chain.citation;
        if (strict) out.status = "violation";
        ordered_json lv = ordered_json::array();
        for (const auto& l : chain.levels) {
            ordered_json basis = ordered_json::array();
            for (const auto& g : l.colon_basis) basis.push_back(g);
            lv.push_back(ordered_json{{"n", l.n},
                                      {"colon_basis", std::move(basis)},
                                      {"strict_vs_prev", l.strict_vs_prev},
                                      {"witness", l.witness}});
        }
        out.data = ordered_json{{"N", chain.N},
                                {"levels", std::move(lv)},
                                {"strictly_increasing", chain.strictly_increasing},
                                {"stabilizes_at_N", chain.stabilizes_at_N},
                                {"limit_conclusion", chain.limit_conclusion}};
    } else if (k == "colonids") {
        int B = 0;
        if (!ctx.sc.ring_expr.empty() || !c.ring_expr.empty()) {
            ctx.need_backend();
            B = ctx.be().subring_B;
        }
        if (c.degree > 0) B = c.degree;
        if (B == 0) B = 8;
        auto cert = models::subring_colon_identities(B);
        bool ok = cert.colon_x_is_xyS && cert.colon_x2_is_xyS && cert.witness_in_colon &&
                  cert.witness_in_xyS && cert.witness_outside_xyD && cert.xS_in_D &&
                  cert.x_xyS_in_xyD && cert.yS_cap_D_is_xyS && cert.x_powers_escape;
        out.outcome = ok ? "verified" : "failed";
        out.citation = cert.citation;
        out.data = ordered_json{{"B", cert.B},
                                {"colon_x_is_xyS", cert.colon_x_is_xyS},
                                {"colon_x2_is_xyS", cert.colon_x2_is_xyS},
                                {"witness_in_colon", cert.witness_in_colon},
                                {"witness_in_xyS", cert.witness_in_xyS},
                                {"witness_outside_xyD", cert.witness_outside_xyD},
                                {"xS_in_D", cert.xS_in_D},
                                {"x_xyS_in_xyD", cert.x_xyS_in_xyD},
                                {"yS_cap_D_is_xyS", cert.yS_cap_D_is_xyS},
                                {"x_powers_escape", cert.x_powers_escape},
                                {"monomials_checked", cert.monomials_checked},
                                {"note", cert.note}};
    } else if (k == "presentation" || k == "reynolds" || k == "invariant_cm") {
        ctx.need_backend();
        if (!ctx.be().action)
            throw DomainError("check '" + k + "' runs on an action(...) backend");
        const auto& G = *ctx.be().action;
        if (k == "presentation") {
            int bound = c.degree > 0 ? c.degree : int(std::max<std::size_t>(G.order(), 2));
            auto pres = invariants::invariant_presentation(G, bound, ctx.budget);
            out.outcome = pres.bound_too_small ? "bound-too-small" : "presented";
            ordered_json gens = ordered_json::array();
            for (std::size_t i = 0; i < pres.generators.size(); ++i)
                gens.push_back(ordered_json{{"name", pres.names[i]},
                                            {"invariant", pres.generators[i].str()}});
            ordered_json rels = ordered_json::array();
            for (const auto& r : pres.relations) rels.push_back(r.str());
            out.data = ordered_json{{"group_order", G.order()},
                                    {"degree_bound", pres.degree_bound},
                                    {"bound_too_small", pres.bound_too_small},
                                    {"generators", std::move(gens)},
                                    {"relations", std::move(rels)},
                                    {"presented_ring", pres.ring->str()},
                                    {"note", pres.note}};
        } else if (k == "reynolds") {
            int samples = c.samples > 0 ? c.samples : 100;
            auto laws = invariants::reynolds_laws(G, samples, 20260815u, ctx.budget);
            out.outcome = laws.all() ? "laws-hold" : "laws-fail";
            if (!laws.all()) out.status = "violation";
            out.data = ordered_json{{"samples", laws.samples},
                                    {"seed", laws.seed},
                                    {"idempotent", laws.idempotent},
                                    {"action_invariant", laws.action_invariant},
                                    {"retraction_linear", laws.retraction_linear}};
        } else {
            if (c.pool.empty())
                throw DomainError("invariant_cm needs a pool { ... } of sequences "
                                  "in the generator names");
            std::vector<std::string> pool;
            for (const std::string& entry : split_semis(c.pool))
                pool.push_back(strip_parens(entry));
            int samples = c.samples > 0 ? c.samples : 50;
            auto r = invariants::invariant_cm_scenario(G, pool, samples, ctx.budget);
            out.outcome = r.cm.violation_found ? "violation" : "no-violation";
            out.citation = r.citation;
            if (r.cm.violation_found) out.status = "violation";
            ordered_json gens = ordered_json::array();
            for (std::size_t i = 0; i < r.presentation.generators.size(); ++i)
                gens.push_back(ordered_json{{"name", r.presentation.names[i]},
                                            {"invariant",
                                             r.presentation.generators[i].str()}});
            ordered_json rels = ordered_json::array();
            for (const auto& rel : r.presentation.relations) rels.push_back(rel.str());
            ordered_json skipped = ordered_json::array();
            for (const auto& s : r.skipped) skipped.push_back(s);
            ordered_json beyond = ordered_json::array();
            for (const auto& s : r.beyond) beyond.push_back(s);
            out.data = ordered_json{
                {"generators", std::move(gens)},
                {"relations", std::move(rels)},
                {"laws_hold", r.laws.all()},
                {"violation_found", r.cm.violation_found},
                {"sequences_checked", r.cm.sequences_checked},
                {"sps_found", r.cm.sps_found},
                {"regular_confirmed", r.cm.regular_confirmed},
                {"skipped", std::move(skipped)},
                {"beyond", std::move(beyond)},
                {"note", r.cm.note}};
        }
    } else {
        throw DomainError("unknown check kind '" + k + "'");
    }
}

CheckOutcome run_check(const Scenario& sc, const CheckSpec& c, std::uint64_t limit,
                       const RunOptions& opts) {
    CheckOutcome out;
    out.spec = c;
    Budget budget(limit);
    CheckCtx ctx{sc, c, opts, budget, std::nullopt};
    auto t0 = std::chrono::steady_clock::now();
    try {
        run_kind(ctx, out);
        if (out.status.empty()) out.status = "pass";
        if (!c.expect.empty() && c.expect != out.outcome) out.status = "mismatch";
    } catch (const BudgetExceeded& e) {
        out.status = "error";
        out.outcome = "error";
        out.data = ordered_json{{"error", e.what()}, {"class", "budget"}};
    } catch (const Error& e) {
        out.status = "error";
        out.outcome = "error";
        out.data = ordered_json{{"error", e.what()}, {"class", "domain"}};
    } catch (const std::exception& e) {
        out.status = "error";
        out.outcome = "error";
        out.data = ordered_json{{"error", e.what()}, {"class", "internal"}};
    }
    out.budget_steps = budget.used;
    out.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return out;
}

int status_rank(const std::string& s) {
    if (s == "error") return 3;
    if (s == "mismatch") return 2;
    if (s == "violation") return 1;
    return 0;
}

} // namespace

RunResult run_scenario(const Scenario& sc, const RunOptions& opts) {
    RunResult r;
    r.scenario = sc;
    std::uint64_t limit = opts.budget        ? opts.budget
                          : sc.budget        ? sc.budget
                                             : Budget::kDefault;
    r.checks.resize(sc.checks.size());
    if (opts.jobs <= 1 || sc.checks.size() <= 1) {
        for (std::size_t i = 0; i < sc.checks.size(); ++i)
            r.checks[i] = run_check(sc, sc.checks[i], limit, opts);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= sc.checks.size()) return;
                r.checks[i] = run_check(sc, sc.checks[i], limit, opts);
            }
        };
        std::size_t nthreads =
            std::min<std::size_t>(std::size_t(opts.jobs), sc.checks.size());
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    int worst = 0;
    for (const auto& c : r.checks) worst = std::max(worst, status_rank(c.status));
    r.status = worst == 3   ? "error"
               : worst == 2 ? "mismatch"
               : worst == 1 ? "violation"
                            : "pass";
    r.exit_code = worst == 3 ? 2 : worst > 0 ? 1 : 0;
    return r;
}

std::string emit_json(const RunResult& r) {
    ordered_json j;
    j["scenario"] = r.scenario.name;
    j["ring"] = r.scenario.ring_expr;
    j["status"] = r.status;
    j["exit_code"] = r.exit_code;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json cj;
        cj["check"] = c.spec.str();
        cj["kind"] = c.spec.kind;
        cj["status"] = c.status;
        cj["outcome"] = c.outcome;
        if (!c.spec.expect.empty()) cj["expect"] = c.spec.expect;
        if (!c.citation.empty()) cj["citation"] = c.citation;
        cj["budget_steps"] = c.budget_steps;
        cj["data"] = c.data;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string emit_text(const RunResult& r) {
    std::ostringstream os;
    os << "scenario " << r.scenario.name << "\n";
    if (!r.scenario.ring_expr.empty()) os << "ring " << r.scenario.ring_expr << "\n";
    os << "\n";
    for (const auto& c : r.checks) {
        os << "[" << c.status << "] " << c.spec.str() << "\n";
        os << "    -> " << c.outcome;
        if (!c.citation.empty()) os << "    [" << c.citation << "]";
        os << "    (" << c.budget_steps << " steps, ";
        os.setf(std::ios::fixed);
        os.precision(1);
        os << c.elapsed_ms << " ms)\n";
        os.unsetf(std::ios::fixed);
        if (c.status == "error") os << "    error: " << c.data.value("error", "") << "\n";
        if (c.status == "mismatch")
            os << "    expected: " << c.spec.expect << "\n";
    }
    os << "\nresult: " << r.status << " (exit " << r.exit_code << ")\n";
    return os.str();
}

} // namespace cmlab::cli
