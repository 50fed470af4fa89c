#include "wzpi/term_parser.hpp"

#include "wzpi/errors.hpp"

#include <cctype>

namespace wzpi {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    HyperTerm term() {
        HyperTerm t = factor();
        while (accept('*')) t = t * factor();
        expect_end("'*' or end of input");
        return t;
    }

    Poly2 whole_poly() {
        Poly2 p = poly();
        expect_end("an operator or end of input");
        return p;
    }

private:
    // ---- product grammar ----

    HyperTerm factor() {
        skip_space();
        if (peek() == '(') {
            ++pos_;
            const BigRational base = constant(poly(), "a constant base");
            expect(')');
            expect('^');
            return HyperTerm::power(base, exponent_form());
        }
        if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
            const BigRational value = rational_literal();
            if (!accept('^')) return HyperTerm::constant(value);
            return HyperTerm::power(value, exponent_form());
        }
        const std::size_t at = pos_;
        const std::string name = identifier();
        if (name == "pi") return HyperTerm::pi_power(accept('^') ? pi_exponent() : 2);
        if (name == "binom") {
            expect('(');
            const LinForm top = lin();
            expect(',');
            const LinForm bottom = lin();
            expect(')');
            const LinForm diff{top.a - bottom.a, top.b - bottom.b, top.c - bottom.c};
            const HyperTerm b = HyperTerm::gamma(plus_one(top)) *
                                HyperTerm::gamma(plus_one(bottom), -1) *
                                HyperTerm::gamma(plus_one(diff), -1);
            return b.pow(optional_power());
        }
        if (name == "fact") {
            expect('(');
            const LinForm arg = lin();
            expect(')');
            return HyperTerm::gamma(plus_one(arg), optional_power());
        }
        if (name == "poch") {
            expect('(');
            const BigRational a = constant(poly(), "a rational first argument");
            expect(',');
            const LinForm len = lin();
            expect(')');
            const HyperTerm p = HyperTerm::gamma(LinForm{len.a, len.b, len.c + a}) *
                                HyperTerm::gamma(LinForm{0, 0, a}, -1);
            return p.pow(optional_power());
        }
        if (name == "gamma") {
            expect('(');
            const LinForm arg = lin();
            expect(')');
            return HyperTerm::gamma(arg, optional_power());
        }
        if (name == "cospi") {
            expect('(');
            const LinForm arg = lin();
            expect(')');
            if (arg.c != 0 || arg.a < 0 || arg.a > 1 || arg.b < 0 || arg.b > 1)
                throw DomainError("cospi argument must be u*n + v*k with u, v in {0, 1}, got " +
                                  to_string(arg));
            const int m = optional_power();
            if (m < 0) throw DomainError("negative power of cospi");
            return HyperTerm::cos_pi(static_cast<int>(arg.a), static_cast<int>(arg.b), m);
        }
        if (name == "P" || name == "Q") {
            expect('(');
            const Poly2 p = poly();
            expect(')');
            if (p.is_zero() && name == "Q") throw DomainError("Q(0) is a zero denominator");
            const RatFunc2 f = name == "P" ? RatFunc2(p) : RatFunc2(Poly2(1), p);
            return HyperTerm::rational(f).pow(optional_power());
        }
        pos_ = at;
        fail("a factor: number, '(', pi, binom, fact, poch, gamma, cospi, P or Q");
    }

    static LinForm plus_one(LinForm l) {
        l.c += 1;
        return l;
    }

    // After '^': n, k, an integer, or a parenthesized linear form.
    LinForm exponent_form() {
        skip_space();
        if (accept('(')) {
            const LinForm l = lin();
            expect(')');
            return l;
        }
        if (peek() == 'n' || peek() == 'k') {
            const char v = text_[pos_++];
            return v == 'n' ? LinForm{1, 0, 0} : LinForm{0, 1, 0};
        }
        return LinForm{0, 0, BigRational(signed_integer())};
    }

    // pi^e with e an integer or (p/2).
    int pi_exponent() {
        skip_space();
        BigRational e;
        if (accept('(')) {
            e = constant(poly(), "an integer or half-integer exponent");
            expect(')');
        } else {
            e = BigRational(signed_integer());
        }
        const BigRational twice = 2 * e;
        if (!is_integer(twice)) throw DomainError("pi exponent must be a multiple of 1/2");
        return static_cast<int>(to_long(twice.get_num()));
    }

    int optional_power() {
        if (!accept('^')) return 1;
        skip_space();
        if (accept('(')) {
            const long e = signed_integer();
            expect(')');
            return static_cast<int>(e);
        }
        return static_cast<int>(signed_integer());
    }

    long signed_integer() {
        skip_space();
        const bool negative = accept('-');
        const long v = to_long(unsigned_integer());
        return negative ? -v : v;
    }

    BigRational rational_literal() {
        skip_space();
        const bool negative = accept('-');
        BigRational r(unsigned_integer());
        if (peek() == '/') {
            ++pos_;
            const BigInt d = unsigned_integer();
            if (d == 0) throw DomainError("zero denominator in a rational literal");
            r /= BigRational(d);
        }
        return negative ? BigRational(-r) : r;
    }

    LinForm lin() {
        const std::size_t at = pos_;
        const Poly2 p = poly();
        if (p.degree() > 1) {
            pos_ = at;
            throw DomainError("expected a linear form in n and k, got " + to_string(p));
        }
        const BigRational a = p.coefficient({1, 0}), b = p.coefficient({0, 1});
        if (!is_integer(a) || !is_integer(b))
            throw DomainError("n and k coefficients must be integers in " + to_string(p));
        return LinForm{to_long(a.get_num()), to_long(b.get_num()), p.constant()};
    }

    BigRational constant(const Poly2& p, const char* what) {
        if (!p.is_constant()) throw DomainError(std::string("expected ") + what + ", got " + to_string(p));
        return p.constant();
    }

    // ---- polynomial grammar ----

    Poly2 poly() {
        Poly2 acc = poly_term();
        for (;;) {
            if (accept('+'))
                acc += poly_term();
            else if (accept('-'))
                acc -= poly_term();
            else
                return acc;
        }
    }

    Poly2 poly_term() {
        skip_space();
        bool negative = false;
        while (peek() == '-' || peek() == '+') {
            if (text_[pos_++] == '-') negative = !negative;
            skip_space();
        }
        Poly2 acc = poly_power();
        for (;;) {
            if (accept('*')) {
                acc *= poly_power();
            } else if (peek_is('/')) {
                ++pos_;
                const Poly2 d = poly_power();
                if (!d.is_constant() || d.is_zero())
                    throw DomainError("polynomials may only be divided by nonzero constants");
                acc *= BigRational(1) / d.constant();
            } else {
                break;
            }
        }
        return negative ? -acc : acc;
    }

    Poly2 poly_power() {
        Poly2 base = poly_atom();
        if (!accept('^')) return base;
        skip_space();
        const bool paren = accept('(');
        const long e = to_long(unsigned_integer());
        if (paren) expect(')');
        return base.pow(static_cast<unsigned>(e));
    }

    Poly2 poly_atom() {
        skip_space();
        if (accept('(')) {
            Poly2 p = poly();
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) return Poly2(BigRational(unsigned_integer()));
        if (peek() == 'n' && !std::isalpha(static_cast<unsigned char>(peek(1)))) {
            ++pos_;
            return Poly2::n();
        }
        if (peek() == 'k' && !std::isalpha(static_cast<unsigned char>(peek(1)))) {
            ++pos_;
            return Poly2::k();
        }
        fail("a number, 'n', 'k' or '('");
    }

    // ---- lexing helpers ----

    BigInt unsigned_integer() {
        skip_space();
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    bool peek_is(char c) {
        skip_space();
        return peek() == c;
    }

    void skip_space() {
        while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    void expect_end(const char* expected) {
        skip_space();
        if (pos_ != text_.size()) fail(expected);
    }

    [[noreturn]] void fail(const std::string& expected) {
        skip_space();
        const std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw SyntaxError(pos_, expected, found);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string power_suffix(int e) {
    if (e == 1) return "";
    return "^" + std::to_string(e);
}

}  // namespace

HyperTerm parse_term(std::string_view text) { return Parser(text).term(); }

Poly2 parse_poly(std::string_view text) { return Parser(text).whole_poly(); }

std::string render_term(const HyperTerm& t) {
    std::vector<std::string> factors;
    if (t.c_rat() != 1) factors.push_back(to_string(t.c_rat()));
    if (t.pi_half_pow() != 0) {
        const int h = t.pi_half_pow();
        factors.push_back(h % 2 == 0 ? "pi^" + std::to_string(h / 2) : "pi^(" + std::to_string(h) + "/2)");
    }
    if (t.cos().m > 0)
        factors.push_back("cospi(" + to_string(LinForm{t.cos().u, t.cos().v, 0}) + ")" +
                          power_suffix(t.cos().m));
    for (const auto& [base, e] : t.expo_factors()) {
        const std::string b = base > 0 && is_integer(base) ? to_string(base) : "(" + to_string(base) + ")";
        factors.push_back(b + "^(" + to_string(e) + ")");
    }
    if (t.rat_pref().num() != Poly2(1)) factors.push_back("P(" + to_string(t.rat_pref().num()) + ")");
    if (t.rat_pref().den() != Poly2(1)) factors.push_back("Q(" + to_string(t.rat_pref().den()) + ")");
    for (const auto& [arg, e] : t.gammas()) factors.push_back("gamma(" + to_string(arg) + ")" + power_suffix(e));

    if (factors.empty()) return "1";
    std::string s;
    for (const auto& f : factors) s += (s.empty() ? "" : " * ") + f;
    return s;
}

}  // namespace wzpi
