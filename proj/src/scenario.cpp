#include "cmlab/scenario.hpp"

#include "cmlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cmlab::cli {

namespace {

const std::vector<std::string> kKinds = {
    "wpr",       "parameter", "sps",       "regular",      "grade",
    "pgrade",    "classical", "profile",   "pdepth",       "dim",
    "height",    "minprimes", "unmixed",   "cm",           "locality",
    "report",    "hochster",  "example37", "badchain",     "colonids",
    "presentation", "reynolds", "invariant_cm",
};

bool is_kind(const std::string& w) {
    return std::find(kKinds.begin(), kKinds.end(), w) != kKinds.end();
}

const std::vector<std::string> kOptions = {"in",      "bound", "n",
                                           "maxlen",  "samples", "degree",
                                           "pool",    "from",  "expect"};

bool is_option(const std::string& w) {
    return std::find(kOptions.begin(), kOptions.end(), w) != kOptions.end();
}

std::string normalize_ws(const std::string& s) {
    std::string out;
    bool pending = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending = true;
        } else {
            if (pending) out += ' ';
            pending = false;
            out += c;
        }
    }
    return out;
}

int depth_delta(char c) {
    if (c == '(' || c == '[' || c == '{') return 1;
    if (c == ')' || c == ']' || c == '}') return -1;
    return 0;
}

// Splits on a separator at bracket depth zero; entries are ws-normalized and
// empties dropped.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        depth += depth_delta(c);
        if (c == sep && depth == 0) {
            std::string e = normalize_ws(cur);
            if (!e.empty()) out.push_back(e);
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::string e = normalize_ws(cur);
    if (!e.empty()) out.push_back(e);
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

struct LineCursor {
    const std::string& s;
    size_t pos = 0;
    int line;

    LineCursor(const std::string& text, int ln) : s(text), line(ln) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    std::string peek_word() {
        skip_ws();
        size_t p = pos;
        std::string w;
        while (p < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_'))
            w += s[p++];
        return w;
    }

    std::string read_word() {
        std::string w = peek_word();
        pos += w.size();
        return w;
    }

    // Reads a balanced group opened by `open`, returns the interior.
    std::string read_group(char open, char close) {
        skip_ws();
        if (pos >= s.size() || s[pos] != open)
            fail(std::string("expected '") + open + "'");
        ++pos;
        int depth = 1;
        std::string body;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == open) ++depth;
            if (c == close) {
                --depth;
                if (depth == 0) {
                    ++pos;
                    return body;
                }
            }
            body += c;
            ++pos;
        }
        fail(std::string("unbalanced '") + open + "'");
    }

    long long read_int() {
        skip_ws();
        size_t p = pos;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        size_t d0 = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == d0) fail("expected an integer");
        long long v = std::stoll(s.substr(pos, p - pos));
        pos = p;
        return v;
    }

    // Consumes text until an option keyword appears at bracket depth zero.
    std::string read_expr() {
        skip_ws();
        int depth = 0;
        std::string body;
        while (pos < s.size()) {
            char c = s[pos];
            if (depth == 0 &&
                (std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
                size_t p = pos;
                std::string w;
                while (p < s.size() && (std::isalnum(static_cast<unsigned char>(
                                            s[p])) ||
                                        s[p] == '_'))
                    w += s[p++];
                if (is_option(w)) break;
                body += w;
                pos = p;
                continue;
            }
            depth += depth_delta(c);
            if (depth < 0) fail("unbalanced brackets");
            body += c;
            ++pos;
        }
        return normalize_ws(body);
    }
};

void set_num(CheckSpec& c, const std::string& key, long long v, LineCursor& cur) {
    if (v < 0) cur.fail("option '" + key + "' takes a nonnegative integer");
    int* slot = nullptr;
    if (key == "n" || key == "N") slot = &c.n;
    else if (key == "bound") slot = &c.bound;
    else if (key == "maxlen") slot = &c.maxlen;
    else if (key == "samples") slot = &c.samples;
    else if (key == "degree") slot = &c.degree;
    else cur.fail("unknown option '" + key + "'");
    if (*slot != -1) cur.fail("duplicate option '" + key + "'");
    *slot = static_cast<int>(v);
}

// Parses everything after the (optional) "check" keyword.
CheckSpec parse_check_body(const std::string& text, int line) {
    LineCursor cur(text, line);
    CheckSpec c;
    c.kind = cur.read_word();
    if (c.kind.empty()) cur.fail("expected a check kind");
    if (!is_kind(c.kind)) cur.fail("unknown check kind '" + c.kind + "'");

    cur.skip_ws();
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == '(') {
        std::string body = cur.read_group('(', ')');
        std::vector<std::string> elems;
        for (const std::string& entry : split_top(body, ',')) {
            size_t eq = entry.find('=');
            bool is_kv = false;
            if (eq != std::string::npos) {
                std::string key = normalize_ws(entry.substr(0, eq));
                std::string val = normalize_ws(entry.substr(eq + 1));
                if ((key == "n" || key == "N" || key == "bound" ||
                     key == "maxlen" || key == "samples" || key == "degree") &&
                    !val.empty() &&
                    val.find_first_not_of("0123456789") == std::string::npos) {
                    set_num(c, key, std::stoll(val), cur);
                    is_kv = true;
                }
            }
            if (!is_kv) elems.push_back(entry);
        }
        c.elements = join(elems, ", ");
    }

    while (!cur.done()) {
        std::string opt = cur.read_word();
        if (opt == "in") {
            if (!c.ring_expr.empty()) cur.fail("duplicate 'in'");
            c.ring_expr = cur.read_expr();
            if (c.ring_expr.empty()) cur.fail("'in' needs a ring expression");
        } else if (opt == "pool" || opt == "from") {
            std::string body = cur.read_group('{', '}');
            std::string norm = join(split_top(body, ';'), "; ");
            std::string& slot = (opt == "pool") ? c.pool : c.from;
            if (!slot.empty()) cur.fail("duplicate '" + opt + "'");
            if (norm.empty()) cur.fail("'" + opt + "' block is empty");
            slot = norm;
        } else if (opt == "expect") {
            if (!c.expect.empty()) cur.fail("duplicate 'expect'");
            cur.skip_ws();
            size_t p = cur.pos;
            while (p < cur.s.size() &&
                   !std::isspace(static_cast<unsigned char>(cur.s[p])))
                ++p;
            c.expect = cur.s.substr(cur.pos, p - cur.pos);
            cur.pos = p;
            if (c.expect.empty()) cur.fail("'expect' needs a token");
        } else if (opt == "bound" || opt == "n" || opt == "maxlen" ||
                   opt == "samples" || opt == "degree") {
            set_num(c, opt, cur.read_int(), cur);
        } else if (opt.empty()) {
            cur.fail("unexpected character '" + std::string(1, cur.s[cur.pos]) +
                     "'");
        } else {
            cur.fail("unknown option '" + opt + "'");
        }
    }
    return c;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
            c != '-' && c != '/' && c != '.')
            return false;
    return true;
}

Scenario parse_file_form(const std::string& text) {
    Scenario sc;
    bool saw_name = false, saw_ring = false, saw_budget = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::string s = normalize_ws(raw);
        if (s.empty()) continue;
        LineCursor cur(s, line);
        std::string head = cur.peek_word();
        if (head == "scenario") {
            cur.read_word();
            cur.skip_ws();
            std::string name = s.substr(cur.pos);
            if (saw_name) cur.fail("duplicate scenario line");
            if (!valid_name(name))
                cur.fail("invalid scenario name '" + name + "'");
            sc.name = name;
            saw_name = true;
        } else if (head == "ring") {
            cur.read_word();
            if (saw_ring) cur.fail("duplicate ring line");
            sc.ring_expr = normalize_ws(s.substr(cur.pos));
            if (sc.ring_expr.empty()) cur.fail("'ring' needs an expression");
            saw_ring = true;
        } else if (head == "budget") {
            cur.read_word();
            if (saw_budget) cur.fail("duplicate budget line");
            long long v = cur.read_int();
            if (v <= 0) cur.fail("budget must be positive");
            sc.budget = static_cast<std::uint64_t>(v);
            saw_budget = true;
        } else if (head == "check") {
            cur.read_word();
            cur.skip_ws();
            sc.checks.push_back(parse_check_body(s.substr(cur.pos), line));
        } else if (is_kind(head)) {
            sc.checks.push_back(parse_check_body(s, line));
        } else {
            cur.fail("unrecognized line '" + s + "'");
        }
    }
    if (!saw_name) throw ParseError("scenario has no 'scenario <name>' line");
    if (sc.checks.empty()) throw ParseError("scenario has no checks");
    return sc;
}

} // namespace

std::string CheckSpec::str() const {
    std::string out = "check " + kind + " (";
    std::vector<std::string> args;
    if (!elements.empty()) args.push_back(elements);
    if (n != -1) args.push_back("n=" + std::to_string(n));
    if (bound != -1) args.push_back("bound=" + std::to_string(bound));
    if (maxlen != -1) args.push_back("maxlen=" + std::to_string(maxlen));
    if (samples != -1) args.push_back("samples=" + std::to_string(samples));
    if (degree != -1) args.push_back("degree=" + std::to_string(degree));
    out += join(args, ", ") + ")";
    if (!ring_expr.empty()) out += " in " + ring_expr;
    if (!pool.empty()) out += " pool { " + pool + " }";
    if (!from.empty()) out += " from { " + from + " }";
    if (!expect.empty()) out += " expect " + expect;
    return out;
}

std::string Scenario::str() const {
    std::string out = "scenario " + name + "\n";
    if (!ring_expr.empty()) out += "ring " + ring_expr + "\n";
    if (budget != 0) out += "budget " + std::to_string(budget) + "\n";
    out += "\n";
    for (const CheckSpec& c : checks) out += c.str() + "\n";
    return out;
}

Scenario parse_scenario(const std::string& text) {
    std::string t = normalize_ws(text);
    if (text.find('\n') != std::string::npos || t.rfind("scenario ", 0) == 0)
        return parse_file_form(text);
    return parse_inline(text);
}

Scenario parse_inline(const std::string& text) {
    Scenario sc;
    sc.name = "inline";
    std::vector<std::string> segs = split_top(text, ';');
    if (segs.empty()) throw ParseError("empty inline scenario");
    size_t first_check = 0;
    {
        LineCursor cur(segs[0], 1);
        std::string head = cur.peek_word();
        if (head != "check" && !is_kind(head)) {
            sc.ring_expr = segs[0];
            first_check = 1;
        }
    }
    for (size_t i = first_check; i < segs.size(); ++i) {
        LineCursor cur(segs[i], 1);
        std::string head = cur.peek_word();
        std::string body = segs[i];
        if (head == "check") {
            cur.read_word();
            cur.skip_ws();
            body = segs[i].substr(cur.pos);
        }
        sc.checks.push_back(parse_check_body(body, 1));
    }
    if (sc.checks.empty()) throw ParseError("inline scenario has no checks");
    return sc;
}

const std::vector<std::string>& known_check_kinds() { return kKinds; }

} // namespace cmlab::cli
