#include "wzpi/rational.hpp"

#include "wzpi/errors.hpp"

#include <cctype>

namespace wzpi {

BigRational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw DomainError("empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](std::string_view t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    BigInt p(num[0] == '+' ? num.substr(1) : num, 10);
    BigInt q(den, 10);
    if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    BigRational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt floor(const BigRational& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

BigRational pow(const BigRational& r, long e) {
    if (e < 0) {
        if (r == 0) throw DomainError("zero raised to a negative power");
        return pow(BigRational(1) / r, -e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(n, d);
}

long to_long(const BigInt& z) {
    if (!z.fits_slong_p()) throw DomainError("integer out of range: " + z.get_str());
    return z.get_si();
}

}  // namespace wzpi
