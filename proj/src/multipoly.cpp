#include <mwlat/multipoly.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mwlat {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.t_[Expv(p.vars_.size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    int vi = p.varIndex(name);
    if (vi < 0) throw std::invalid_argument("unknown variable " + name);
    Expv e(p.vars_.size(), 0);
    e[vi] = 1;
    p.t_[e] = 1;
    return p;
}

long MultiPoly::totalDeg() const {
    long d = 0;
    for (const auto& [e, c] : t_) {
        long s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

long MultiPoly::degIn(std::size_t vi) const {
    long d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, (long)e[vi]);
    return d;
}

int MultiPoly::varIndex(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}

bool MultiPoly::involves(const std::string& name) const {
    int vi = varIndex(name);
    if (vi < 0) return false;
    return degIn(vi) > 0;
}

void MultiPoly::addTerm(const Expv& e, const Rat& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.addTerm(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.t_) r.addTerm(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(vars_);
    for (const auto& [e1, c1] : t_) {
        for (const auto& [e2, c2] : o.t_) {
            Expv e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.addTerm(e, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
    MultiPoly r(vars_);
    if (s == 0) return r;
    for (const auto& [e, c] : t_) r.t_[e] = c * s;
    return r;
}

MultiPoly MultiPoly::substPower(std::size_t vi, std::size_t ui, int k, int& clearedPower) const {
    // With x_vi = u^k each term picks up u-exponent k*e_vi; a negative k
    // makes some exponents negative, so shift everything by the minimum.
    long minU = 0;
    for (const auto& [e, c] : t_) {
        long ue = (long)e[ui] + (long)k * e[vi];
        minU = std::min(minU, ue);
    }
    clearedPower = (int)(-minU);
    MultiPoly r(vars_);
    for (const auto& [e, c] : t_) {
        Expv e2 = e;
        long ue = (long)e[ui] + (long)k * e[vi] - minU;
        e2[ui] = (int)ue;
        e2[vi] = 0;
        r.addTerm(e2, c);
    }
    return r;
}

MultiPoly MultiPoly::evalVar(std::size_t vi, const Rat& value) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : t_) {
        Expv e2 = e;
        e2[vi] = 0;
        r.addTerm(e2, c * rpow(value, e[vi]));
    }
    return r;
}

MultiPoly MultiPoly::primitivePart() const {
    if (t_.empty()) return *this;
    Int num = 0, den = 1;
    Expv minExp(vars_.size(), INT32_MAX);
    for (const auto& [e, c] : t_) {
        num = gcdInt(num, c.get_num());
        den = lcmInt(den, c.get_den());
        for (std::size_t i = 0; i < e.size(); ++i) minExp[i] = std::min(minExp[i], e[i]);
    }
    Rat content(num, den);
    content.canonicalize();
    if (t_.rbegin()->second < 0) content = -content;  // grlex-leading term sign
    MultiPoly r(vars_);
    for (const auto& [e, c] : t_) {
        Expv e2 = e;
        for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= minExp[i];
        r.t_[e2] = c / content;
    }
    return r;
}

MultiPoly MultiPoly::divExact(const MultiPoly& d) const {
    if (d.isZero()) throw std::domain_error("multipoly division by zero");
    MultiPoly rem = *this;
    MultiPoly q(vars_);
    const auto& dl = *d.t_.rbegin();  // grlex-leading term of divisor
    while (!rem.isZero()) {
        const auto& rl = *rem.t_.rbegin();
        Expv e(rl.first.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = rl.first[i] - dl.first[i];
            if (e[i] < 0) throw std::domain_error("inexact multipoly division");
        }
        Rat c = rl.second / dl.second;
        q.addTerm(e, c);
        MultiPoly piece(vars_);
        piece.t_[e] = c;
        rem = rem - piece * d;
    }
    return q;
}

std::vector<MultiPoly> MultiPoly::coeffsIn(std::size_t vi) const {
    long d = degIn(vi);
    std::vector<MultiPoly> out((std::size_t)d + 1, MultiPoly(vars_));
    for (const auto& [e, c] : t_) {
        Expv e2 = e;
        int k = e2[vi];
        e2[vi] = 0;
        out[(std::size_t)k].addTerm(e2, c);
    }
    while (out.size() > 1 && out.back().isZero()) out.pop_back();
    return out;
}

MultiPoly MultiPoly::fromCoeffsIn(const std::vector<MultiPoly>& cs, std::size_t vi,
                                  const std::vector<std::string>& vars) {
    MultiPoly r(vars);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e, c] : cs[k].terms()) {
            Expv e2 = e;
            e2[vi] += (int)k;
            r.addTerm(e2, c);
        }
    }
    return r;
}

int MultiPoly::singleVariable() const {
    int found = -1;
    for (const auto& [e, c] : t_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (found >= 0 && found != (int)i) return -1;
            found = (int)i;
        }
    }
    return found < 0 ? 0 : found;
}

QPoly MultiPoly::toUni(std::size_t vi, const std::string& varName) const {
    std::vector<Rat> c((std::size_t)degIn(vi) + 1, Rat(0));
    for (const auto& [e, coef] : t_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != vi && e[i] != 0) throw std::domain_error("not univariate in " + vars_[vi]);
        c[(std::size_t)e[vi]] = coef;
    }
    return QPoly(Rat(0), std::move(c), varName);
}

std::string MultiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest grlex term first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Rat& c = it->second;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rat ac = abs(c);
        bool hasVar = false;
        for (int e : it->first)
            if (e) hasVar = true;
        if (ac != 1 || !hasVar) os << ratStr(ac);
        bool star = ac != 1 || !hasVar;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (!e) continue;
            if (star) os << "*";
            star = true;
            os << vars_[i];
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// Minimal recursive-descent parser: integers, variables, ^, *, implicit
// multiplication is NOT supported (write 3*a^2*b), unary minus, parentheses.
struct Parser {
    const std::vector<std::string>& vars;
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly r = term();
        for (;;) {
            skip();
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else return r;
        }
    }

    MultiPoly term() {
        MultiPoly r = factor();
        for (;;) {
            skip();
            if (eat('*')) r = r * factor();
            else return r;
        }
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        skip();
        if (eat('^')) {
            long e = integer();
            MultiPoly r = MultiPoly::constant(vars, 1);
            for (long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    MultiPoly atom() {
        skip();
        if (eat('-')) return -atom();
        if (eat('(')) {
            MultiPoly r = expr();
            if (!eat(')')) throw std::invalid_argument("expected ')' in: " + s);
            return r;
        }
        if (pos < s.size() && (std::isdigit((unsigned char)s[pos]))) {
            return MultiPoly::constant(vars, Rat(integer()));
        }
        // identifier
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_' || s[pos] == '\'')) ++pos;
        if (start == pos) throw std::invalid_argument("parse error at '" + s.substr(pos) + "'");
        return MultiPoly::variable(vars, s.substr(start, pos - start));
    }

    long integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw std::invalid_argument("expected integer in: " + s);
        return std::stol(s.substr(start, pos - start));
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::vector<std::string> vars, const std::string& text) {
    Parser p{vars, text};
    MultiPoly r = p.expr();
    p.skip();
    if (p.pos != text.size())
        throw std::invalid_argument("trailing input in polynomial: " + text);
    return r;
}

}  // namespace mwlat
