#include "ellfib/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "ellfib/errors.hpp"

namespace ellfib {

namespace {

// sparse polynomial in two variables; exponents (i, j) of (u, v)
using Mono = std::pair<int, int>;
struct Sparse {
    Field f;
    std::map<Mono, FieldElem> terms;

    void clean() {
        for (auto it = terms.begin(); it != terms.end();)
            it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
    bool constant(FieldElem& c) const {
        c = FieldElem(f);
        for (auto& [m, v] : terms) {
            if (m != Mono{0, 0}) return false;
            c = v;
        }
        return true;
    }
};

Sparse add(Sparse a, const Sparse& b, bool negate) {
    for (auto& [m, v] : b.terms) {
        auto it = a.terms.find(m);
        FieldElem w = negate ? -v : v;
        if (it == a.terms.end())
            a.terms.emplace(m, w);
        else
            it->second += w;
    }
    a.clean();
    return a;
}

Sparse mul(const Sparse& a, const Sparse& b) {
    Sparse r{a.f, {}};
    for (auto& [ma, va] : a.terms)
        for (auto& [mb, vb] : b.terms) {
            Mono m{ma.first + mb.first, ma.second + mb.second};
            auto it = r.terms.find(m);
            if (it == r.terms.end())
                r.terms.emplace(m, va * vb);
            else
                it->second += va * vb;
        }
    r.clean();
    return r;
}

class Parser {
public:
    Parser(const std::string& text, const Field& f, std::string vars) : s_(text), f_(f), vars_(std::move(vars)) {}

    Sparse run() {
        Sparse r = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    const std::string& s_;
    Field f_;
    std::string vars_;  // allowed variables, mapped to exponent slots 0 and 1; 'a' is the generator
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << what << " at column " << pos_ + 1 << " in \"" << s_ << "\"";
        throw Error(ErrorKind::Parse, os.str());
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Sparse constant(const FieldElem& c) {
        Sparse r{f_, {}};
        if (!c.is_zero()) r.terms.emplace(Mono{0, 0}, c);
        return r;
    }

    Sparse expr() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Sparse r = term();
        if (neg) r = add(constant(FieldElem(f_)), r, true);
        for (;;) {
            if (eat('+'))
                r = add(r, term(), false);
            else if (eat('-'))
                r = add(r, term(), true);
            else
                return r;
        }
    }

    Sparse term() {
        Sparse r = factor();
        for (;;) {
            if (eat('*')) {
                r = mul(r, factor());
            } else if (eat('/')) {
                size_t at = pos_;
                Sparse d = factor();
                FieldElem c;
                if (!d.constant(c)) {
                    pos_ = at;
                    fail("division by a non-constant");
                }
                if (c.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                r = mul(r, constant(c.inverse()));
            } else {
                return r;
            }
        }
    }

    Sparse factor() {
        Sparse b = base();
        if (eat('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            if (e > 1000) fail("exponent too large");
            Sparse r = constant(FieldElem(f_, 1L));
            for (unsigned long i = 0; i < e; ++i) r = mul(r, b);
            return r;
        }
        return b;
    }

    Sparse base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Sparse r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++pos_;
            return add(constant(FieldElem(f_)), factor(), true);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(FieldElem(f_, Q(mpz_class(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name.size() == 1) {
                auto k = vars_.find(name[0]);
                if (k != std::string::npos) {
                    Sparse r{f_, {}};
                    r.terms.emplace(k == 0 ? Mono{1, 0} : Mono{0, 1}, FieldElem(f_, 1L));
                    return r;
                }
                if (name[0] == 'a') {
                    if (f_.is_rational()) {
                        pos_ = start;
                        fail("generator 'a' used over the rationals");
                    }
                    return constant(FieldElem::generator(f_));
                }
            }
            pos_ = start;
            fail("unknown symbol '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

std::string mono_string(const Mono& m) {
    std::string r;
    if (m.first) r += m.first == 1 ? "s" : "s^" + std::to_string(m.first);
    if (m.second) r += std::string(m.first ? "*" : "") + (m.second == 1 ? "t" : "t^" + std::to_string(m.second));
    return r.empty() ? "1" : r;
}

}  // namespace

HomogPoly parse_homog(const std::string& text, const Field& f) {
    Sparse p = Parser(text, f, "st").run();
    if (p.terms.empty()) return HomogPoly(f);
    int d = 0;
    for (auto& [m, v] : p.terms) d = std::max(d, m.first + m.second);
    std::string bad;
    for (auto& [m, v] : p.terms)
        if (m.first + m.second != d) bad += (bad.empty() ? "" : ", ") + mono_string(m) + " (degree " + std::to_string(m.first + m.second) + ")";
    if (!bad.empty())
        throw Error(ErrorKind::NonHomogeneous, "expected degree " + std::to_string(d) + " in \"" + text + "\"; offending monomials: " + bad);
    std::vector<FieldElem> c(d + 1, FieldElem(f));
    for (auto& [m, v] : p.terms) c[m.first] = v;
    return HomogPoly(f, d, std::move(c));
}

FieldElem parse_constant(const std::string& text, const Field& f) {
    Sparse p = Parser(text, f, "").run();
    FieldElem c;
    if (!p.constant(c)) throw Error(ErrorKind::Parse, "expected a constant: \"" + text + "\"");
    return c.lift(f);
}

QPoly parse_univariate(const std::string& text, char var) {
    Sparse p = Parser(text, Field(), std::string(1, var)).run();
    QPoly r;
    for (auto& [m, v] : p.terms) {
        if (static_cast<int>(r.size()) <= m.first) r.resize(m.first + 1);
        r[m.first] = v.rational();
    }
    qpoly::trim(r);
    return r;
}

Field parse_field(const std::string& text) {
    std::string t = text;
    auto strip = [](std::string x) {
        size_t a = x.find_first_not_of(" \t"), b = x.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
    };
    t = strip(t);
    if (t == "rationals" || t == "Q") return Field::rationals();
    const std::string pre = "extension:";
    if (t.rfind(pre, 0) == 0) return Field::extension(parse_univariate(strip(t.substr(pre.size())), 'x'));
    throw Error(ErrorKind::Parse, "unknown field \"" + text + "\"");
}

}  // namespace ellfib
