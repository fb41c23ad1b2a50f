#include "branchcut/dsl.hpp"

#include <cctype>
#include <sstream>

namespace branchcut {

namespace {

enum class Tok {
    Number,   // integer or decimal, exact rational value
    ImagNum,  // number immediately suffixed with i, e.g. 2i, 0.5i
    Ident,    // x, i, pi, D, y
    Quote,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Equals,
    Semi,
    Comma,
    End,
};

struct Token {
    Tok kind;
    Rational value;  // numbers
    std::string text;
    int line = 1, col = 1;
};

[[noreturn]] void parse_fail(const Token& at, const std::string& msg) {
    fail(ErrorKind::Parse, std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + msg);
}

Rational decimal_to_rational(const std::string& digits, const Token& at) {
    // digits is mantissa[.fraction][e[+-]exp]
    std::string mant;
    long frac_len = 0;
    long exp10 = 0;
    size_t k = 0;
    for (; k < digits.size() && std::isdigit(static_cast<unsigned char>(digits[k])); ++k) mant += digits[k];
    if (k < digits.size() && digits[k] == '.') {
        ++k;
        for (; k < digits.size() && std::isdigit(static_cast<unsigned char>(digits[k])); ++k) {
            mant += digits[k];
            ++frac_len;
        }
    }
    if (k < digits.size() && (digits[k] == 'e' || digits[k] == 'E')) {
        ++k;
        bool neg = false;
        if (k < digits.size() && (digits[k] == '+' || digits[k] == '-')) neg = digits[k++] == '-';
        std::string e;
        for (; k < digits.size() && std::isdigit(static_cast<unsigned char>(digits[k])); ++k) e += digits[k];
        if (e.empty()) parse_fail(at, "malformed exponent in numeric literal");
        exp10 = std::stol(e);
        if (neg) exp10 = -exp10;
    }
    if (k != digits.size() || mant.empty()) parse_fail(at, "malformed numeric literal");
    // GMP would read a leading zero as an octal prefix
    size_t nz = mant.find_first_not_of('0');
    mant = nz == std::string::npos ? "0" : mant.substr(nz);
    Rational v{Integer(mant)};
    long shift = exp10 - frac_len;
    Integer ten(10);
    for (long j = 0; j < std::abs(shift); ++j) {
        if (shift > 0)
            v *= ten;
        else
            v /= ten;
    }
    return v;
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t k = 0;
    auto push = [&](Tok kind, std::string s) {
        Token t;
        t.kind = kind;
        t.text = std::move(s);
        t.line = line;
        t.col = col;
        out.push_back(std::move(t));
    };
    while (k < text.size()) {
        char c = text[k];
        if (c == '\n') {
            ++line;
            col = 1;
            ++k;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++k;
            continue;
        }
        int startcol = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            bool decimal = false;
            while (k < text.size()) {
                char d = text[k];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    num += d;
                } else if (d == '.' && !decimal) {
                    num += d;
                    decimal = true;
                } else if ((d == 'e' || d == 'E') && k + 1 < text.size() &&
                           (std::isdigit(static_cast<unsigned char>(text[k + 1])) || text[k + 1] == '+' ||
                            text[k + 1] == '-')) {
                    num += d;
                    ++k;
                    ++col;
                    if (text[k] == '+' || text[k] == '-') {
                        num += text[k];
                        ++k;
                        ++col;
                    }
                    continue;
                } else {
                    break;
                }
                ++k;
                ++col;
            }
            Token t;
            t.kind = Tok::Number;
            t.text = num;
            t.line = line;
            t.col = startcol;
            t.value = decimal_to_rational(num, t);
            if (k < text.size() && text[k] == 'i' &&
                (k + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[k + 1])))) {
                t.kind = Tok::ImagNum;
                ++k;
                ++col;
            }
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (k < text.size() && std::isalnum(static_cast<unsigned char>(text[k]))) {
                id += text[k];
                ++k;
                ++col;
            }
            push(Tok::Ident, id);
            out.back().col = startcol;
            continue;
        }
        Tok kind;
        switch (c) {
            case '\'': kind = Tok::Quote; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case '[': kind = Tok::LBracket; break;
            case ']': kind = Tok::RBracket; break;
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '=': kind = Tok::Equals; break;
            case ';': kind = Tok::Semi; break;
            case ',': kind = Tok::Comma; break;
            default: {
                Token t;
                t.line = line;
                t.col = col;
                parse_fail(t, std::string("unexpected character '") + c + "'");
            }
        }
        push(kind, std::string(1, c));
        ++k;
        ++col;
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// value of an operator-side expression: rational-function coefficients per D power
struct OpExpr {
    std::vector<RationalFunction> d;  // index = D power

    static OpExpr scalar(RationalFunction f) {
        OpExpr e;
        e.d.push_back(std::move(f));
        return e;
    }
    bool d_free() const { return d.size() <= 1; }
    void trim() {
        while (!d.empty() && d.back().is_zero()) d.pop_back();
    }
};

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& get() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) parse_fail(peek(), std::string("expected ") + what);
    }

    // ---- operator-side expressions ----

    OpExpr op_expr() {
        OpExpr acc = op_term();
        for (;;) {
            if (accept(Tok::Plus))
                acc = add(acc, op_term(), 1);
            else if (accept(Tok::Minus))
                acc = add(acc, op_term(), -1);
            else
                return acc;
        }
    }

    // ---- scalar expressions (initial conditions, literals) ----

    PiGaussian scalar_expr() {
        PiGaussian acc = scalar_term();
        for (;;) {
            if (accept(Tok::Plus))
                acc = acc + scalar_term();
            else if (accept(Tok::Minus))
                acc = acc - scalar_term();
            else
                return acc;
        }
    }

    // ---- whole problem ----

    ProblemSpec problem() {
        OpExpr lhs = op_expr();
        expect(Tok::Equals, "'=' between operator and right-hand side");
        Token rhs_at = peek();
        OpExpr rhs = op_expr();
        expect(Tok::Semi, "';' before initial conditions");
        if (!rhs.d_free()) parse_fail(rhs_at, "right-hand side must not contain D");
        lhs.trim();
        if (lhs.d.size() < 2) parse_fail(rhs_at, "equation must have order at least 1");

        // clear rational-function denominators of the operator coefficients
        Poly common = Poly::constant(GaussianRational(1));
        for (const auto& c : lhs.d) {
            Poly g = poly_gcd(common, c.den);
            common = common * exact_divide(c.den, g);
        }
        LinearODE ode;
        for (const auto& c : lhs.d) ode.coeffs.push_back(c.num * exact_divide(common, c.den));
        RationalFunction d0 = rhs.d.empty() ? RationalFunction{} : rhs.d[0];
        ode.rhs = d0 * RationalFunction(common, Poly::constant(GaussianRational(1)));
        ode.normalize();

        ProblemSpec spec;
        spec.ode = std::move(ode);
        spec.ics = ics_list();
        expect(Tok::End, "end of input");
        return spec;
    }

    InitialConditions ics_list() {
        InitialConditions ics;
        bool have_base = false;
        int expected_order = 0;
        for (;;) {
            Token at = peek();
            if (at.kind != Tok::Ident || at.text != "y") parse_fail(at, "expected initial condition 'y...'");
            get();
            int order = 0;
            while (accept(Tok::Quote)) ++order;
            if (order != expected_order)
                parse_fail(at, "initial conditions must list derivatives in ascending order from y");
            ++expected_order;
            expect(Tok::LParen, "'(' after y");
            Token pt_at = peek();
            PiGaussian pt = scalar_expr();
            if (!pt.b.is_zero()) parse_fail(pt_at, "base point must be an exact Gaussian rational");
            expect(Tok::RParen, "')' after base point");
            expect(Tok::Equals, "'=' in initial condition");
            PiGaussian val = scalar_expr();
            GaussianRational base{pt.a};
            if (!have_base) {
                ics.base_point = base;
                have_base = true;
            } else if (!(ics.base_point == base)) {
                parse_fail(pt_at, "all initial conditions must share one base point");
            }
            ics.values.push_back(val);
            if (!accept(Tok::Comma)) break;
        }
        return ics;
    }

private:
    OpExpr add(const OpExpr& a, const OpExpr& b, int sign) {
        OpExpr out;
        out.d.resize(std::max(a.d.size(), b.d.size()));
        for (size_t k = 0; k < out.d.size(); ++k) {
            RationalFunction x = k < a.d.size() ? a.d[k] : RationalFunction{};
            RationalFunction y = k < b.d.size() ? b.d[k] : RationalFunction{};
            out.d[k] = sign > 0 ? x + y : x - y;
        }
        out.trim();
        return out;
    }

    OpExpr mul(const OpExpr& a, const OpExpr& b, const Token& at) {
        if (a.d.empty() || b.d.empty()) return OpExpr{};
        if (!a.d_free() && !b.d_free())
            parse_fail(at, "products of two D-carrying factors are not part of the grammar");
        OpExpr out;
        out.d.assign(a.d.size() + b.d.size() - 1, RationalFunction{});
        for (size_t i = 0; i < a.d.size(); ++i)
            for (size_t j = 0; j < b.d.size(); ++j) out.d[i + j] = out.d[i + j] + a.d[i] * b.d[j];
        out.trim();
        return out;
    }

    OpExpr op_term() {
        int sign = 1;
        while (true) {
            if (accept(Tok::Minus))
                sign = -sign;
            else if (accept(Tok::Plus))
                ;
            else
                break;
        }
        Token at = peek();
        OpExpr acc = op_factor();
        for (;;) {
            if (accept(Tok::Star)) {
                Token t2 = peek();
                acc = mul(acc, op_factor(), t2);
            } else if (accept(Tok::Slash)) {
                Token t2 = peek();
                OpExpr rhs = op_factor();
                if (!rhs.d_free()) parse_fail(t2, "cannot divide by D");
                if (rhs.d.empty() || rhs.d[0].is_zero()) parse_fail(t2, "division by zero");
                OpExpr out;
                for (const auto& c : acc.d) out.d.push_back(c / rhs.d[0]);
                out.trim();
                acc = std::move(out);
            } else {
                break;
            }
        }
        if (sign < 0) {
            for (auto& c : acc.d) c = -c;
        }
        (void)at;
        return acc;
    }

    OpExpr op_factor() {
        Token at = peek();
        OpExpr base = op_atom();
        if (accept(Tok::Caret)) {
            Token e = get();
            int sign = 1;
            if (e.kind == Tok::Minus) {
                sign = -1;
                e = get();
            }
            if (e.kind != Tok::Number || denominator(e.value) != 1) parse_fail(e, "exponent must be an integer");
            long p = numerator(e.value).convert_to<long>() * sign;
            if (!base.d_free()) {
                // only the bare D atom may carry a power
                bool pure_d = base.d.size() == 2 && base.d[0].is_zero() &&
                              base.d[1].num == Poly::constant(GaussianRational(1)) &&
                              base.d[1].den.degree() == 0;
                if (!pure_d || p < 0) parse_fail(at, "only D itself may be raised to a (nonnegative) power");
                OpExpr out;
                out.d.resize(p + 1);
                out.d[p] = RationalFunction(Poly::constant(GaussianRational(1)),
                                            Poly::constant(GaussianRational(1)));
                return out;
            }
            if (p < 0) {
                OpExpr out = OpExpr::scalar(RationalFunction(Poly::constant(GaussianRational(1)),
                                                             Poly::constant(GaussianRational(1))));
                for (long j = 0; j < -p; ++j) out.d[0] = out.d[0] / base.d[0];
                return out;
            }
            OpExpr out = OpExpr::scalar(RationalFunction(Poly::constant(GaussianRational(1)),
                                                         Poly::constant(GaussianRational(1))));
            for (long j = 0; j < p; ++j) out = mul(out, base, at);
            return out;
        }
        return base;
    }

    OpExpr op_atom() {
        Token t = get();
        switch (t.kind) {
            case Tok::Number:
                return OpExpr::scalar(RationalFunction(Poly::constant(GaussianRational(t.value)),
                                                       Poly::constant(GaussianRational(1))));
            case Tok::ImagNum:
                return OpExpr::scalar(RationalFunction(
                    Poly::constant(GaussianRational(Rational(0), t.value)), Poly::constant(GaussianRational(1))));
            case Tok::Ident:
                if (t.text == "x")
                    return OpExpr::scalar(RationalFunction(Poly::x(), Poly::constant(GaussianRational(1))));
                if (t.text == "i")
                    return OpExpr::scalar(RationalFunction(Poly::constant(GaussianRational::i()),
                                                           Poly::constant(GaussianRational(1))));
                if (t.text == "D") {
                    OpExpr e;
                    e.d.resize(2);
                    e.d[1] = RationalFunction(Poly::constant(GaussianRational(1)),
                                              Poly::constant(GaussianRational(1)));
                    return e;
                }
                parse_fail(t, "unexpected identifier '" + t.text + "' in operator (pi is only allowed in initial values)");
            case Tok::LParen: {
                OpExpr inner = op_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default: parse_fail(t, "unexpected token '" + t.text + "' in operator expression");
        }
    }

    PiGaussian scalar_term() {
        int sign = 1;
        while (true) {
            if (accept(Tok::Minus))
                sign = -sign;
            else if (accept(Tok::Plus))
                ;
            else
                break;
        }
        PiGaussian acc = scalar_factor();
        for (;;) {
            Token at = peek();
            if (accept(Tok::Star)) {
                acc = scalar_mul(acc, scalar_factor(), at);
            } else if (accept(Tok::Slash)) {
                PiGaussian rhs = scalar_factor();
                if (!rhs.b.is_zero()) parse_fail(at, "cannot divide by a pi-term");
                if (rhs.a.is_zero()) parse_fail(at, "division by zero");
                acc = PiGaussian(acc.a / rhs.a, acc.b / rhs.a);
            } else {
                break;
            }
        }
        if (sign < 0) acc = -acc;
        return acc;
    }

    PiGaussian scalar_mul(const PiGaussian& x, const PiGaussian& y, const Token& at) {
        if (!x.b.is_zero() && !y.b.is_zero()) parse_fail(at, "nonlinear pi expressions are not supported");
        if (x.b.is_zero()) return PiGaussian(x.a * y.a, x.a * y.b);
        return PiGaussian(y.a * x.a, y.a * x.b);
    }

    PiGaussian scalar_factor() {
        Token at = peek();
        PiGaussian base = scalar_atom();
        if (accept(Tok::Caret)) {
            Token e = get();
            int esign = 1;
            if (e.kind == Tok::Minus) {
                esign = -1;
                e = get();
            }
            if (e.kind != Tok::Number || denominator(e.value) != 1) parse_fail(e, "exponent must be an integer");
            long p = numerator(e.value).convert_to<long>() * esign;
            if (p < 0) {
                if (!base.b.is_zero()) parse_fail(at, "negative powers of pi-terms are not supported");
                if (base.a.is_zero()) parse_fail(at, "division by zero");
                return PiGaussian(GaussianRational(1) / base.a.pow(-p));
            }
            PiGaussian out(GaussianRational(1));
            for (long j = 0; j < p; ++j) out = scalar_mul(out, base, at);
            return out;
        }
        return base;
    }

    PiGaussian scalar_atom() {
        Token t = get();
        switch (t.kind) {
            case Tok::Number: return PiGaussian(GaussianRational(t.value));
            case Tok::ImagNum: return PiGaussian(GaussianRational(Rational(0), t.value));
            case Tok::Ident:
                if (t.text == "i") return PiGaussian(GaussianRational::i());
                if (t.text == "pi") return PiGaussian(GaussianRational(0), GaussianRational(1));
                parse_fail(t, "unexpected identifier '" + t.text + "' in a scalar value");
            case Tok::LParen: {
                PiGaussian inner = scalar_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default: parse_fail(t, "unexpected token '" + t.text + "' in a scalar value");
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

ProblemSpec parse_ode(const std::string& text) {
    Parser p(text);
    return p.problem();
}

PiGaussian parse_scalar_literal(const std::string& text) {
    Parser p(text);
    PiGaussian v = p.scalar_expr();
    p.expect(Tok::End, "end of literal");
    return v;
}

Complex parse_complex_literal(const std::string& text) { return parse_scalar_literal(text).to_complex(); }

Path parse_path_literal(const std::string& text) {
    Parser p(text);
    p.expect(Tok::LBracket, "'[' to open a path literal");
    Path path;
    if (!p.accept(Tok::RBracket)) {
        for (;;) {
            path.vertices.push_back(p.scalar_expr().to_complex());
            if (p.accept(Tok::RBracket)) break;
            p.expect(Tok::Comma, "',' between path vertices");
        }
    }
    p.expect(Tok::End, "end of path literal");
    return path;
}

std::string format_spec(const ProblemSpec& spec) {
    std::ostringstream os;
    bool first = true;
    for (int k = spec.ode.order(); k >= 0; --k) {
        const Poly& c = spec.ode.coeffs[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << poly_str(c) << ")";
        if (k >= 1) os << "*D";
        if (k >= 2) os << "^" << k;
    }
    os << " = ";
    if (spec.ode.rhs.is_zero())
        os << "0";
    else if (spec.ode.rhs.is_polynomial())
        os << "(" << poly_str(spec.ode.rhs.num) << ")";
    else
        os << "(" << poly_str(spec.ode.rhs.num) << ")/(" << poly_str(spec.ode.rhs.den) << ")";
    os << " ; ";
    for (size_t k = 0; k < spec.ics.values.size(); ++k) {
        if (k) os << ", ";
        os << "y";
        for (size_t q = 0; q < k; ++q) os << "'";
        os << "(" << spec.ics.base_point.str() << ") = " << spec.ics.values[k].str();
    }
    return os.str();
}

}  // namespace branchcut
