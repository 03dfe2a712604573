#include <cctype>
#include <map>

#include "mfk/poly.hpp"

namespace mfk {

namespace {

std::string monomial_text(const VarList& vars, const std::vector<int>& exp) {
    std::string s;
    for (size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (exp[i] != 1) {
            s += "^";
            s += std::to_string(exp[i]);
        }
    }
    return s;
}

}  // namespace

std::string Poly::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string mono = monomial_text(*vars_, t.exp);
        bool neg = false;
        std::string cs;
        if (t.c.is_real()) {
            Rat r = t.c.re();
            neg = r < 0;
            Rat mag = neg ? Rat(-r) : r;
            if (!(mag == 1 && !mono.empty())) cs = rat_str(mag);
        } else {
            cs = t.c.str();
        }
        std::string body;
        if (cs.empty()) {
            body = mono;
        } else if (mono.empty()) {
            body = cs;
        } else {
            body = cs + "*" + mono;
        }
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += body;
        first = false;
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

std::string parse_ident(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    while (cur.pos < cur.s.size() &&
           (std::isalnum(static_cast<unsigned char>(cur.s[cur.pos])) || cur.s[cur.pos] == '_'))
        ++cur.pos;
    if (cur.pos == start) throw ParseError("expected identifier");
    return std::string(cur.s.substr(start, cur.pos - start));
}

int parse_uint(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.pos;
    while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])))
        ++cur.pos;
    if (cur.pos == start) throw ParseError("expected integer");
    return std::stoi(std::string(cur.s.substr(start, cur.pos - start)));
}

GaussRat parse_coeff(Cursor& cur) {
    cur.skip_ws();
    if (cur.peek() == '(') {
        size_t depth = 0;
        size_t start = cur.pos;
        size_t i = cur.pos;
        for (; i < cur.s.size(); ++i) {
            if (cur.s[i] == '(') ++depth;
            if (cur.s[i] == ')') {
                if (--depth == 0) break;
            }
        }
        if (i >= cur.s.size()) throw ParseError("unbalanced parenthesis in coefficient");
        GaussRat c = GaussRat::parse(cur.s.substr(start, i - start + 1));
        cur.pos = i + 1;
        return c;
    }
    size_t start = cur.pos;
    while (cur.pos < cur.s.size() &&
           (std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])) || cur.s[cur.pos] == '/'))
        ++cur.pos;
    if (cur.pos == start) throw ParseError("expected coefficient");
    return GaussRat::parse(cur.s.substr(start, cur.pos - start));
}

}  // namespace

Poly Poly::parse(std::string_view text, const VarsPtr& vars) {
    Cursor cur{text};
    std::map<std::vector<int>, GaussRat> acc;
    bool first = true;
    while (!cur.done()) {
        bool neg = false;
        if (first) {
            if (cur.eat('-')) neg = true;
            else cur.eat('+');
        } else {
            if (cur.eat('-')) neg = true;
            else if (!cur.eat('+')) throw ParseError("expected '+' or '-' between terms");
        }
        first = false;

        GaussRat c(1);
        std::vector<int> exp(vars->size(), 0);
        bool have_coeff = false;
        char p = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(p)) || p == '(') {
            c = parse_coeff(cur);
            have_coeff = true;
        }
        bool want_var = !have_coeff;
        if (have_coeff && cur.peek() == '*') {
            cur.eat('*');
            want_var = true;
        }
        while (want_var) {
            if (!ident_start(cur.peek())) throw ParseError("expected variable name");
            std::string name = parse_ident(cur);
            int idx = -1;
            for (size_t i = 0; i < vars->size(); ++i) {
                if ((*vars)[i] == name) {
                    idx = static_cast<int>(i);
                    break;
                }
            }
            if (idx < 0) throw ParseError("unknown variable '" + name + "'");
            int e = 1;
            if (cur.eat('^')) e = parse_uint(cur);
            exp[idx] += e;
            want_var = cur.eat('*');
            if (want_var && !ident_start(cur.peek()))
                throw ParseError("expected variable after '*'");
        }
        if (neg) c = -c;
        acc[std::move(exp)] += c;
    }
    Poly out(vars);
    std::vector<Term> terms;
    for (auto& [e, c] : acc) {
        if (!c.is_zero()) terms.push_back(Term{e, std::move(c)});
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; });
    return Poly::from_canonical(vars, std::move(terms));
}

}  // namespace mfk
