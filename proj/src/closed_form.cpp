#include "wzpi/closed_form.hpp"

#include "wzpi/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace wzpi {

ClosedForm::ClosedForm(BigRational r, int sqrt2, int pi_half, int gamma34)
    : rational(std::move(r)), sqrt2_pow(sqrt2), pi_half_pow(pi_half), gamma34_pow(gamma34) {
    // floor division keeps sqrt2_pow in {0, 1}
    const int twos = sqrt2_pow >= 0 ? sqrt2_pow / 2 : -((-sqrt2_pow + 1) / 2);
    sqrt2_pow -= 2 * twos;
    if (twos != 0) rational *= wzpi::pow(BigRational(2), twos);
    if (rational == 0) {
        sqrt2_pow = pi_half_pow = gamma34_pow = 0;
    }
}

ClosedForm ClosedForm::pow(int e) const {
    return {wzpi::pow(rational, e), sqrt2_pow * e, pi_half_pow * e, gamma34_pow * e};
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
    return {a.rational * b.rational, a.sqrt2_pow + b.sqrt2_pow, a.pi_half_pow + b.pi_half_pow,
            a.gamma34_pow + b.gamma34_pow};
}

ClosedForm operator/(const ClosedForm& a, const ClosedForm& b) {
    if (b.rational == 0) throw DomainError("division by a zero constant");
    return a * b.pow(-1);
}

namespace {

std::string power_suffix(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

std::string pi_factor(int half_pow) {
    if (half_pow == 1) return "sqrt(pi)";
    if (half_pow % 2 == 0) return "pi" + power_suffix(half_pow / 2);
    return "pi^(" + std::to_string(half_pow) + "/2)";
}

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : "*") + p;
    return s;
}

}  // namespace

std::string to_string(const ClosedForm& c) {
    if (c.rational == 0) return "0";
    std::vector<std::string> top, bottom;
    const BigInt num = abs(c.rational.get_num());
    const BigInt& den = c.rational.get_den();
    if (num != 1) top.push_back(num.get_str());
    if (den != 1) bottom.push_back(den.get_str());
    if (c.sqrt2_pow > 0) top.push_back("sqrt(2)" + power_suffix(c.sqrt2_pow));
    if (c.sqrt2_pow < 0) bottom.push_back("sqrt(2)" + power_suffix(-c.sqrt2_pow));
    if (c.pi_half_pow > 0) top.push_back(pi_factor(c.pi_half_pow));
    if (c.pi_half_pow < 0) bottom.push_back(pi_factor(-c.pi_half_pow));
    if (c.gamma34_pow > 0) top.push_back("gamma(3/4)" + power_suffix(c.gamma34_pow));
    if (c.gamma34_pow < 0) bottom.push_back("gamma(3/4)" + power_suffix(-c.gamma34_pow));

    std::string s = c.rational < 0 ? "-" : "";
    s += top.empty() ? "1" : join(top);
    if (!bottom.empty()) {
        const std::string b = join(bottom);
        s += "/" + (bottom.size() > 1 ? "(" + b + ")" : b);
    }
    return s;
}

ClosedForm gamma_closed_form(const BigRational& x) {
    const BigInt m = floor(x);
    const BigRational r = x - BigRational(m);
    if (r == 0 && m <= 0) throw DomainError("gamma pole at " + to_string(x));
    ClosedForm base;
    BigRational start = r;
    if (r == 0) {
        start = 1;
    } else if (r == BigRational(1, 2)) {
        base = ClosedForm::sqrt_pi();
    } else if (r == BigRational(1, 4)) {
        base = ClosedForm::gamma_quarter();
    } else if (r == BigRational(3, 4)) {
        base = ClosedForm::gamma_three_quarters();
    } else {
        throw DomainError("gamma(" + to_string(x) + ") is not a supported constant");
    }
    BigRational product = 1;
    if (x >= start)
        for (BigRational y = start; y < x; y += 1) product *= y;
    else
        for (BigRational y = start - 1; y >= x; y -= 1) product /= y;
    return base * ClosedForm(product);
}

namespace {

class ConstantParser {
public:
    explicit ConstantParser(std::string_view text) : text_(text) {}

    ClosedForm parse() {
        ClosedForm c = expression();
        skip_space();
        if (pos_ != text_.size()) fail("'*', '/' or end of input");
        return c;
    }

private:
    ClosedForm expression() {
        ClosedForm acc = power();
        for (;;) {
            skip_space();
            if (accept('*'))
                acc = acc * power();
            else if (accept('/'))
                acc = acc / power();
            else
                return acc;
        }
    }

    ClosedForm power() {
        ClosedForm base = atom();
        skip_space();
        if (!accept('^')) return base;
        skip_space();
        const bool paren = accept('(');
        skip_space();
        const bool negative = accept('-');
        const BigInt e = integer();
        if (paren) expect(')');
        return base.pow(static_cast<int>(to_long(negative ? BigInt(-e) : e)));
    }

    ClosedForm atom() {
        skip_space();
        if (accept('-')) return ClosedForm(-1) * atom();
        if (accept('(')) {
            ClosedForm c = expression();
            expect(')');
            return c;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return ClosedForm(BigRational(integer()));
        const std::string word = identifier();
        if (word == "pi") return ClosedForm::pi();
        if (word == "sqrt") {
            expect('(');
            skip_space();
            ClosedForm c;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const BigInt v = integer();
                BigInt root;
                if (v == 2)
                    c = ClosedForm::sqrt2();
                else if (mpz_perfect_square_p(v.get_mpz_t())) {
                    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
                    c = ClosedForm(BigRational(root));
                } else
                    throw DomainError("sqrt(" + v.get_str() + ") is not supported");
            } else if (identifier() == "pi") {
                c = ClosedForm::sqrt_pi();
            } else {
                fail("'pi' or an integer");
            }
            expect(')');
            return c;
        }
        if (word == "gamma") {
            expect('(');
            ClosedForm arg = expression();
            expect(')');
            if (!arg.is_rational()) throw DomainError("gamma of a non-rational constant");
            return gamma_closed_form(arg.rational);
        }
        fail("a number, 'pi', 'sqrt(...)', 'gamma(...)' or '('");
    }

    BigInt integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }

    [[noreturn]] void fail(const std::string& expected) const {
        const std::string found =
            pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw SyntaxError(pos_, expected, found);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ClosedForm parse_constant(std::string_view text) { return ConstantParser(text).parse(); }

}  // namespace wzpi
