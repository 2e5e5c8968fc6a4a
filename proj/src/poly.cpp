#include "folcalc/poly.hpp"

#include <cctype>
#include <map>

#include "folcalc/errors.hpp"

namespace folcalc {

namespace {

struct MonoDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_degrevlex(a, b) > 0;
    }
};

MultiPoly from_map(int nvars, std::map<Monomial, GaussianRational, MonoDescending>&& m) {
    MultiPoly r;
    r.nvars = nvars;
    r.terms.reserve(m.size());
    for (auto& [mono, c] : m) {
        if (!c.is_zero()) r.terms.emplace_back(mono, std::move(c));
    }
    return r;
}

void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars != b.nvars) throw DimensionMismatch("polynomials from different rings");
}

}  // namespace

MultiPoly MultiPoly::constant(int n, GaussianRational c) {
    MultiPoly r = zero(n);
    if (!c.is_zero()) r.terms.emplace_back(Monomial::one(n), std::move(c));
    return r;
}

MultiPoly MultiPoly::variable(int n, int idx) {
    if (idx < 0 || idx >= n) throw Error("variable index out of range");
    Monomial m = Monomial::one(n);
    m.exp[idx] = 1;
    return term(n, std::move(m), GaussianRational(1));
}

MultiPoly MultiPoly::term(int n, Monomial m, GaussianRational c) {
    MultiPoly r = zero(n);
    if (!c.is_zero()) r.terms.emplace_back(std::move(m), std::move(c));
    return r;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars != b.nvars || a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].first != b.terms[i].first || a.terms[i].second != b.terms[i].second)
            return false;
    }
    return true;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    MultiPoly r;
    r.nvars = a.nvars;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = cmp_degrevlex(a.terms[i].first, b.terms[j].first);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            GaussianRational s = a.terms[i].second + b.terms[j].second;
            if (!s.is_zero()) r.terms.emplace_back(a.terms[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly scale(const MultiPoly& a, const GaussianRational& c) {
    if (c.is_zero()) return MultiPoly::zero(a.nvars);
    MultiPoly r = a;
    for (auto& [m, k] : r.terms) k *= c;
    return r;
}

MultiPoly mono_scale(const MultiPoly& a, const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return MultiPoly::zero(a.nvars);
    MultiPoly r;
    r.nvars = a.nvars;
    r.terms.reserve(a.terms.size());
    for (const auto& [mono, k] : a.terms) r.terms.emplace_back(mono_mul(mono, m), k * c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    std::map<Monomial, GaussianRational, MonoDescending> acc;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            acc[mono_mul(ma, mb)] += ca * cb;
        }
    }
    return from_map(a.nvars, std::move(acc));
}

MultiPoly poly_pow(const MultiPoly& a, int k) {
    if (k < 0) throw Error("negative polynomial exponent");
    MultiPoly r = MultiPoly::constant(a.nvars, GaussianRational(1));
    MultiPoly base = a;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

MultiPoly differentiate(const MultiPoly& p, int var) {
    if (var < 0 || var >= p.nvars) throw Error("variable index out of range");
    MultiPoly r;
    r.nvars = p.nvars;
    for (const auto& [m, c] : p.terms) {
        if (m.exp[var] == 0) continue;
        Monomial d = m;
        GaussianRational k = c * GaussianRational(d.exp[var]);
        d.exp[var] -= 1;
        r.terms.emplace_back(std::move(d), std::move(k));
    }
    // Dropping one exponent preserves the descending degrevlex order only
    // termwise; re-sort and merge.
    std::map<Monomial, GaussianRational, MonoDescending> acc;
    for (auto& [m, c] : r.terms) acc[m] += c;
    return from_map(p.nvars, std::move(acc));
}

std::complex<double> eval_poly(const MultiPoly& p, std::span<const std::complex<double>> z) {
    if (static_cast<int>(z.size()) != p.nvars) throw DimensionMismatch("evaluation point dimension");
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : p.terms) {
        std::complex<double> t = c.to_complex();
        for (int v = 0; v < p.nvars; ++v) {
            for (int e = 0; e < m.exp[v]; ++e) t *= z[v];
        }
        acc += t;
    }
    return acc;
}

GaussianRational eval_poly_exact(const MultiPoly& p, const std::vector<GaussianRational>& z) {
    if (static_cast<int>(z.size()) != p.nvars) throw DimensionMismatch("evaluation point dimension");
    GaussianRational acc;
    for (const auto& [m, c] : p.terms) {
        GaussianRational t = c;
        for (int v = 0; v < p.nvars; ++v) {
            for (int e = 0; e < m.exp[v]; ++e) t *= z[v];
        }
        acc += t;
    }
    return acc;
}

bool try_divexact(const MultiPoly& a, const MultiPoly& b, MultiPoly& q) {
    check_same_ring(a, b);
    if (b.is_zero()) return false;
    MultiPoly rem = a;
    MultiPoly quot = MultiPoly::zero(a.nvars);
    const auto& [lb, cb] = b.leading();
    while (!rem.is_zero()) {
        const auto& [lr, cr] = rem.leading();
        if (!mono_divides(lb, lr)) return false;
        Monomial m = mono_div(lr, lb);
        GaussianRational c = cr / cb;
        quot = quot + MultiPoly::term(a.nvars, m, c);
        rem = rem - mono_scale(b, m, c);
    }
    q = std::move(quot);
    return true;
}

MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!try_divexact(a, b, q)) throw Error("inexact polynomial division");
    return q;
}

// ---- gcd ----------------------------------------------------------------

namespace {

// Index of the last variable actually occurring in p, or -1.
int last_used_var(const MultiPoly& p) {
    int v = -1;
    for (const auto& [m, c] : p.terms)
        for (int i = 0; i < p.nvars; ++i)
            if (m.exp[i] > 0) v = std::max(v, i);
    return v;
}

int degree_in(const MultiPoly& p, int var) {
    int d = 0;
    for (const auto& [m, c] : p.terms) d = std::max(d, m.exp[var]);
    return d;
}

// Coefficients of p as a univariate polynomial in z_{var+1}.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int var) {
    std::vector<MultiPoly> cs(degree_in(p, var) + 1, MultiPoly::zero(p.nvars));
    for (const auto& [m, c] : p.terms) {
        Monomial q = m;
        int e = q.exp[var];
        q.exp[var] = 0;
        cs[e] = cs[e] + MultiPoly::term(p.nvars, std::move(q), c);
    }
    return cs;
}

MultiPoly gcd_impl(MultiPoly a, MultiPoly b);

MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly g = MultiPoly::zero(p.nvars);
    for (const auto& c : coeffs_in(p, var)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_impl(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// Pseudo-remainder of a by b in the variable var (both nonzero, deg_a >= deg_b).
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, int var) {
    int db = degree_in(b, var);
    auto bc = coeffs_in(b, var);
    const MultiPoly& lb = bc[db];
    while (!a.is_zero()) {
        int da = degree_in(a, var);
        if (da < db) break;
        auto ac = coeffs_in(a, var);
        Monomial shift = Monomial::one(a.nvars);
        shift.exp[var] = da - db;
        MultiPoly shifted = b * MultiPoly::term(a.nvars, shift, GaussianRational(1));
        a = a * lb - shifted * ac[da];
    }
    return a;
}

MultiPoly gcd_impl(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(a.nvars, GaussianRational(1));
    int var = std::max(last_used_var(a), last_used_var(b));
    MultiPoly ca = content_in(a, var);
    MultiPoly cb = content_in(b, var);
    MultiPoly pa = divexact(a, ca);
    MultiPoly pb = divexact(b, cb);
    // Primitive PRS on the primitive parts.
    if (degree_in(pa, var) < degree_in(pb, var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MultiPoly r = pseudo_rem(pa, pb, var);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = MultiPoly::zero(a.nvars);
        } else {
            pb = divexact(r, content_in(r, var));
        }
    }
    MultiPoly cont = gcd_impl(ca, cb);
    return cont * divexact(pa, content_in(pa, var));
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a, b);
    MultiPoly g = gcd_impl(a, b);
    if (g.is_zero()) return g;
    return scale(g, GaussianRational(1) / g.leading().second);
}

// ---- printing -----------------------------------------------------------

std::string default_var_name(int idx) { return "z" + std::to_string(idx + 1); }

namespace {

std::string mono_str(const Monomial& m, const VarNamer& namer) {
    std::string s;
    for (int v = 0; v < m.nvars(); ++v) {
        if (m.exp[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += namer(v);
        if (m.exp[v] > 1) s += "^" + std::to_string(m.exp[v]);
    }
    return s;
}

// One printed term: positive rational magnitude, optional "i", monomial.
std::string piece_str(const mpq_class& mag, bool imag, const Monomial& m, const VarNamer& namer) {
    std::string ms = mono_str(m, namer);
    std::string cs;
    if (mag != 1 || (!imag && ms.empty())) cs = rational_str(mag);
    if (imag) {
        if (!cs.empty()) cs += "*";
        cs += "i";
    }
    if (cs.empty()) return ms;
    if (ms.empty()) return cs;
    return cs + "*" + ms;
}

}  // namespace

std::string print_poly(const MultiPoly& p, const VarNamer& namer) {
    if (p.is_zero()) return "0";
    std::string out;
    auto emit = [&](const mpq_class& coeff, bool imag, const Monomial& m) {
        if (coeff == 0) return;
        bool neg = coeff < 0;
        mpq_class mag = neg ? mpq_class(-coeff) : coeff;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += piece_str(mag, imag, m, namer);
    };
    for (const auto& [m, c] : p.terms) {
        emit(c.re, false, m);
        emit(c.im, true, m);
    }
    return out;
}

// ---- parsing ------------------------------------------------------------

namespace {

struct PolyParser {
    const std::string& s;
    int nvars;
    const VarResolver& resolver;
    size_t pos = 0;
    int line = 1, col = 1;

    PolyParser(const std::string& text, int n, const VarResolver& r)
        : s(text), nvars(n), resolver(r) {}

    [[noreturn]] void fail(const std::string& msg) { throw ParseError({line, col}, msg); }

    void advance() {
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    MultiPoly parse() {
        MultiPoly r = parse_sum();
        if (!eof()) fail("unexpected trailing input");
        return r;
    }

    MultiPoly parse_sum() {
        MultiPoly acc = parse_term_signed();
        for (;;) {
            char c = peek();
            if (c == '+') {
                advance();
                acc = acc + parse_term();
            } else if (c == '-') {
                advance();
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_term_signed() {
        if (accept('-')) return -parse_term();
        accept('+');
        return parse_term();
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_power();
        while (peek() == '*') {
            advance();
            acc = acc * parse_power();
        }
        return acc;
    }

    MultiPoly parse_power() {
        MultiPoly base = parse_atom();
        if (peek() == '^') {
            advance();
            long e = parse_int();
            if (e < 0) fail("negative exponent");
            return poly_pow(base, static_cast<int>(e));
        }
        return base;
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            advance();
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000'000L) fail("integer literal too large");
            advance();
        }
        return neg ? -v : v;
    }

    MultiPoly parse_atom() {
        char c = peek();
        if (c == '(') {
            advance();
            MultiPoly inner = parse_sum();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            advance();
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_int();
            long den = 1;
            if (peek() == '/') {
                advance();
                den = parse_int();
                if (den == 0) fail("zero denominator");
            }
            mpq_class q(num, den);
            q.canonicalize();
            return MultiPoly::constant(nvars, GaussianRational(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                name += s[pos];
                advance();
            }
            if (name == "i")
                return MultiPoly::constant(nvars, GaussianRational::i());
            int idx = resolver ? resolver(name) : -1;
            if (idx < 0 && !resolver && name.size() >= 2 && name[0] == 'z') {
                bool digits = true;
                for (size_t k = 1; k < name.size(); ++k)
                    digits = digits && std::isdigit(static_cast<unsigned char>(name[k]));
                if (digits) idx = std::stoi(name.substr(1)) - 1;
            }
            if (idx < 0 || idx >= nvars) fail("unknown variable '" + name + "'");
            return MultiPoly::variable(nvars, idx);
        }
        fail(c ? std::string("unexpected character '") + c + "'" : "unexpected end of input");
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, int nvars, const VarResolver& resolver) {
    PolyParser p(text, nvars, resolver);
    return p.parse();
}

}  // namespace folcalc
