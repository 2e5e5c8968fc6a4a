#include "folcalc/field.hpp"

#include <cctype>
#include <cmath>

#include "folcalc/rational.hpp"

namespace folcalc {

namespace {

struct ExprParser {
    const std::string& s;
    int nvars;
    size_t pos = 0;
    int line = 1, col = 1;

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
    SourcePos here() {
        skip_ws();
        return {line, col};
    }

    ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (pos < s.size()) fail("unexpected trailing input");
        return e;
    }

    ExprPtr parse_sum() {
        ExprPtr acc = parse_product();
        for (;;) {
            SourcePos p = here();
            if (accept('+')) {
                acc = node({Expr::Kind::Add, {}, -1, 0, acc, parse_product(), p});
            } else if (accept('-')) {
                acc = node({Expr::Kind::Sub, {}, -1, 0, acc, parse_product(), p});
            } else {
                return acc;
            }
        }
    }

    ExprPtr parse_product() {
        ExprPtr acc = parse_unary();
        for (;;) {
            SourcePos p = here();
            if (accept('*')) {
                acc = node({Expr::Kind::Mul, {}, -1, 0, acc, parse_unary(), p});
            } else if (accept('/')) {
                acc = node({Expr::Kind::Div, {}, -1, 0, acc, parse_unary(), p});
            } else {
                return acc;
            }
        }
    }

    ExprPtr parse_unary() {
        SourcePos p = here();
        if (accept('-')) return node({Expr::Kind::Neg, {}, -1, 0, parse_unary(), nullptr, p});
        accept('+');
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek() == '^') {
            SourcePos p = here();
            advance();
            bool neg = false;
            skip_ws();
            if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                neg = s[pos] == '-';
                advance();
            }
            long e = parse_uint();
            return node({Expr::Kind::Pow, {}, -1, static_cast<int>(neg ? -e : e), base, nullptr, p});
        }
        return base;
    }

    long parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000L) fail("integer literal too large");
            advance();
        }
        return v;
    }

    ExprPtr parse_atom() {
        SourcePos p = here();
        char c = peek();
        if (c == '(') {
            advance();
            ExprPtr inner = parse_sum();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_uint();
            long den = 1;
            // A '/' directly after a literal groups as an exact rational; a
            // spaced '/' is just division and evaluates the same way.
            if (peek() == '/') {
                size_t save_pos = pos;
                int save_line = line, save_col = col;
                advance();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    den = parse_uint();
                    if (den == 0) fail("zero denominator");
                } else {
                    pos = save_pos;
                    line = save_line;
                    col = save_col;
                }
            }
            return node({Expr::Kind::Const,
                         {static_cast<double>(num) / static_cast<double>(den), 0.0},
                         -1,
                         0,
                         nullptr,
                         nullptr,
                         p});
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                name += s[pos];
                advance();
            }
            if (name == "i") return node({Expr::Kind::Const, {0.0, 1.0}, -1, 0, nullptr, nullptr, p});
            if (name == "eps") return node({Expr::Kind::Eps, {}, -1, 0, nullptr, nullptr, p});
            if (name == "conj" || name == "abs2") {
                if (!accept('(')) fail("expected '(' after " + name);
                ExprPtr inner = parse_sum();
                if (!accept(')')) fail("expected ')'");
                return node({name == "conj" ? Expr::Kind::Conj : Expr::Kind::Abs2,
                             {},
                             -1,
                             0,
                             inner,
                             nullptr,
                             p});
            }
            if (name.size() >= 2 && name[0] == 'z') {
                bool digits = true;
                for (size_t t = 1; t < name.size(); ++t)
                    digits = digits && std::isdigit(static_cast<unsigned char>(name[t]));
                if (digits) {
                    int idx = std::stoi(name.substr(1)) - 1;
                    if (idx < 0 || idx >= nvars) fail("variable '" + name + "' out of range");
                    return node({Expr::Kind::Var, {}, idx, 0, nullptr, nullptr, p});
                }
            }
            fail("unknown symbol '" + name + "'");
        }
        fail(c ? std::string("unexpected character '") + c + "'" : "unexpected end of input");
    }
};

}  // namespace

ExprPtr parse_expression(const std::string& text, int nvars) {
    ExprParser p{text, nvars};
    return p.parse();
}

std::complex<double> eval_expression(const Expr& e, std::span<const std::complex<double>> z,
                                     double eps) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Const:
            return e.value;
        case K::Var:
            return z[e.var];
        case K::Eps:
            return {eps, 0.0};
        case K::Conj:
            return std::conj(eval_expression(*e.a, z, eps));
        case K::Abs2: {
            std::complex<double> v = eval_expression(*e.a, z, eps);
            return {std::norm(v), 0.0};
        }
        case K::Add:
            return eval_expression(*e.a, z, eps) + eval_expression(*e.b, z, eps);
        case K::Sub:
            return eval_expression(*e.a, z, eps) - eval_expression(*e.b, z, eps);
        case K::Mul:
            return eval_expression(*e.a, z, eps) * eval_expression(*e.b, z, eps);
        case K::Neg:
            return -eval_expression(*e.a, z, eps);
        case K::Div: {
            std::complex<double> num = eval_expression(*e.a, z, eps);
            std::complex<double> den = eval_expression(*e.b, z, eps);
            if (den == std::complex<double>(0.0, 0.0)) throw EvalError(e.pos, "division by zero");
            return num / den;
        }
        case K::Pow: {
            std::complex<double> base = eval_expression(*e.a, z, eps);
            int k = e.ipow;
            bool inv = k < 0;
            if (inv) {
                if (base == std::complex<double>(0.0, 0.0))
                    throw EvalError(e.pos, "division by zero");
                k = -k;
            }
            std::complex<double> r = 1.0;
            while (k > 0) {
                r *= base;
                --k;
            }
            return inv ? 1.0 / r : r;
        }
    }
    throw Error("unreachable expression kind");
}

HermitianField HermitianField::make(int n) {
    HermitianField f;
    f.n = n;
    f.upper.assign(n, std::vector<ExprPtr>(n));
    return f;
}

void HermitianField::set_entry(int a, int b, ExprPtr e) {
    if (a < 0 || b < a || b >= n) throw Error("field entries are declared in the upper triangle");
    upper[a][b] = std::move(e);
}

void HermitianField::eval(std::span<const std::complex<double>> z, double eps,
                          std::vector<std::vector<std::complex<double>>>& out) const {
    out.assign(n, std::vector<std::complex<double>>(n, {0.0, 0.0}));
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            if (!upper[a][b]) continue;
            std::complex<double> v = eval_expression(*upper[a][b], z, eps);
            if (a == b) {
                double scale = std::max(1.0, std::abs(v));
                if (std::abs(v.imag()) > 1e-12 * scale)
                    throw EvalError(upper[a][b]->pos, "diagonal field entry must be real");
                out[a][a] = {v.real(), 0.0};
            } else {
                out[a][b] = v;
                out[b][a] = std::conj(v);
            }
        }
    }
}

double Chart::volume() const { return std::pow(2.0 * half_width, 2 * n); }

long long Chart::cell_count() const {
    long long c = 1;
    for (int i = 0; i < 2 * n; ++i) c *= grid;
    return c;
}

void Chart::validate() const {
    if (n < 1) throw Error("chart dimension must be positive");
    if (static_cast<int>(center.size()) != 2 * n)
        throw DimensionMismatch("chart center must have 2n coordinates");
    if (half_width <= 0) throw Error("chart half_width must be positive");
    if (grid < 2) throw Error("chart grid must be at least 2");
    if (k < 0 || k > n) throw Error("chart leaf dimension out of range");
}

}  // namespace folcalc
