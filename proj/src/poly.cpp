#include "cmlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cmlab::algebra {

std::string RingDesc::str() const {
    std::ostringstream os;
    os << field.str() << "[";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) os << ",";
        os << vars[i];
    }
    os << "]";
    return os.str();
}

int RingDesc::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return int(i);
    return -1;
}

RingDescPtr make_ring(Field f, std::vector<std::string> vars, MonomialOrder ord) {
    auto r = std::make_shared<RingDesc>();
    r->field = f;
    r->vars = std::move(vars);
    r->order = ord;
    for (std::size_t i = 0; i < r->vars.size(); ++i)
        for (std::size_t j = i + 1; j < r->vars.size(); ++j)
            if (r->vars[i] == r->vars[j])
                throw DomainError("duplicate variable name " + r->vars[i]);
    return r;
}

RingDescPtr reorder_ring(const RingDescPtr& r, MonomialOrder ord) {
    return make_ring(r->field, r->vars, ord);
}

RingDescPtr extend_ring(const RingDescPtr& r, const std::vector<std::string>& extra) {
    auto vars = r->vars;
    vars.insert(vars.end(), extra.begin(), extra.end());
    return make_ring(r->field, std::move(vars), r->order);
}

Poly Poly::constant(const RingDescPtr& r, const Scalar& c) {
    Poly p(r);
    if (!c.is_zero()) p.terms_.push_back({Monomial(r->nvars()), c});
    return p;
}

Poly Poly::constant(const RingDescPtr& r, long n) {
    return constant(r, Scalar(r->field, n));
}

Poly Poly::variable(const RingDescPtr& r, std::size_t i, std::uint32_t exp) {
    if (i >= r->nvars()) throw DomainError("variable index out of range");
    Poly p(r);
    if (exp == 0) return constant(r, 1);
    Monomial m(r->nvars());
    m.e[i] = exp;
    p.terms_.push_back({m, Scalar::one(r->field)});
    return p;
}

Poly Poly::from_terms(const RingDescPtr& r, std::vector<Term> terms) {
    Poly p(r);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    auto& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ord.compare(a.mon, b.mon) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mon == t.mon) {
            out.back().coef += t.coef;
            if (out.back().coef.is_zero()) out.pop_back();
        } else if (!t.coef.is_zero()) {
            out.push_back(t);
        }
    }
    terms_ = std::move(out);
}

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    if (!ring_ || is_zero()) return o;
    if (!o.ring_ || o.is_zero()) return *this;
    Poly p(ring_);
    auto& ord = ring_->order;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) p.terms_.push_back(terms_[i++]);
        else if (c < 0) p.terms_.push_back(o.terms_[j++]);
        else {
            Scalar s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) p.terms_.push_back({terms_[i].mon, s});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::term_mul(const Monomial& m, const Scalar& c) const {
    Poly p(ring_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (auto& t : terms_) {
        Scalar s = t.coef * c;
        if (!s.is_zero()) p.terms_.push_back({t.mon * m, s});
    }
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    Poly acc(ring_ ? ring_ : o.ring_);
    if (is_zero() || o.is_zero()) return acc;
    // accumulate via map keyed by monomial to avoid quadratic merges
    auto& ord = ring_->order;
    auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
    std::map<Monomial, Scalar, decltype(cmp)> acc_map(cmp);
    for (auto& a : terms_)
        for (auto& b : o.terms_) {
            Monomial m = a.mon * b.mon;
            Scalar s = a.coef * b.coef;
            auto it = acc_map.find(m);
            if (it == acc_map.end()) acc_map.emplace(std::move(m), std::move(s));
            else it->second += s;
        }
    for (auto& [m, s] : acc_map)
        if (!s.is_zero()) acc.terms_.push_back({m, s});
    return acc;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly p(ring_);
    if (c.is_zero()) return p;
    for (auto& t : terms_) p.terms_.push_back({t.mon, t.coef * c});
    return p;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inverse());
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mon == o.terms_[i].mon) || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

std::optional<Poly> Poly::divided_by(const Poly& g) const {
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    Poly rem(*this), quot(ring_);
    while (!rem.is_zero()) {
        if (!g.lm().divides(rem.lm())) return std::nullopt;
        Monomial m = rem.lm() / g.lm();
        Scalar c = rem.lc() / g.lc();
        quot.terms_.push_back({m, c});
        rem -= g.term_mul(m, c);
    }
    quot.normalize();
    return quot;
}

Poly Poly::pow(std::uint32_t n) const {
    Poly r = Poly::constant(ring_, 1);
    Poly b(*this);
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

Poly Poly::dvar(std::size_t i) const {
    Poly p(ring_);
    for (auto& t : terms_) {
        if (t.mon.e[i] == 0) continue;
        Term d = t;
        d.coef = t.coef * Scalar(ring_->field, long(t.mon.e[i]));
        d.mon.e[i] -= 1;
        if (!d.coef.is_zero()) p.terms_.push_back(d);
    }
    p.normalize();
    return p;
}

bool Poly::homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_[0].mon.degree();
    for (auto& t : terms_)
        if (t.mon.degree() != d) return false;
    return true;
}

Poly Poly::substitute(const RingDescPtr& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars())
        throw DomainError("substitution image count mismatch");
    Poly acc = Poly::zero(target);
    for (auto& t : terms_) {
        Poly prod = Poly::constant(target, Scalar(target->field,0) + t.coef);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (t.mon.e[i]) prod *= images[i].pow(t.mon.e[i]);
        acc += prod;
    }
    return acc;
}

Poly Poly::transport(const RingDescPtr& target) const {
    if (!ring_) return Poly(target);
    if (target->nvars() < ring_->nvars())
        throw DomainError("transport target has fewer variables");
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (target->vars[i] != ring_->vars[i])
            throw DomainError("transport requires matching variable prefix");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (auto& t : terms_) {
        Monomial m(target->nvars());
        std::copy(t.mon.e.begin(), t.mon.e.end(), m.e.begin());
        ts.push_back({std::move(m), t.coef});
    }
    return Poly::from_terms(target, std::move(ts));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Scalar c = t.coef;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool unit_coef = (cs == "1");
        if (t.mon.is_one()) {
            os << cs;
            continue;
        }
        bool emitted = false;
        if (!unit_coef) { os << cs; emitted = true; }
        for (std::size_t i = 0; i < t.mon.e.size(); ++i) {
            if (!t.mon.e[i]) continue;
            if (emitted) os << "*";
            os << ring_->vars[i];
            if (t.mon.e[i] > 1) os << "^" << t.mon.e[i];
            emitted = true;
        }
    }
    return os.str();
}

namespace {

// minimal recursive-descent expression parser shared by tests and the CLI
struct ElemParser {
    const RingDescPtr& ring;
    const std::string& s;
    std::size_t pos = 0;

    void skip() { while (pos < s.size() && std::isspace(std::uint8_t(s[pos]))) ++pos; }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + s + "'");
    }

    Poly expr() {
        Poly p = term();
        for (;;) {
            skip();
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            skip();
            if (eat('*')) { p *= factor(); continue; }
            if (eat('/')) {
                Poly d = factor();
                if (!d.is_constant() || d.is_zero())
                    fail("division restricted to nonzero constants");
                p = p.scaled(d.terms()[0].coef.inverse());
                continue;
            }
            return p;
        }
    }

    Poly factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Poly base = atom();
        skip();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(std::uint8_t(s[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            unsigned long n = std::stoul(s.substr(start, pos - start));
            return base.pow(std::uint32_t(n));
        }
        return base;
    }

    Poly atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(std::uint8_t(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(std::uint8_t(s[pos]))) ++pos;
            mpz_class z(s.substr(start, pos - start));
            if (ring->field.rational())
                return Poly::constant(ring, Scalar::rational(mpq_class(z)));
            mpz_class m = z % ring->field.p;
            return Poly::constant(ring, Scalar(ring->field, m.get_si()));
        }
        if (std::isalpha(std::uint8_t(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(std::uint8_t(s[pos])) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = ring->var_index(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Poly::variable(ring, std::size_t(idx));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }
};

} // namespace

Poly parse_poly(const RingDescPtr& r, const std::string& text) {
    ElemParser p{r, text};
    Poly out = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

std::vector<Poly> parse_poly_list(const RingDescPtr& r, const std::string& text) {
    // split at top-level commas
    std::vector<Poly> out;
    int depth = 0;
    std::string cur;
    auto flush = [&]() {
        bool blank = cur.find_first_not_of(" \t") == std::string::npos;
        if (!blank) out.push_back(parse_poly(r, cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) { flush(); continue; }
        cur.push_back(c);
    }
    flush();
    return out;
}

} // namespace cmlab::algebra
