#include "wzpi/bigfloat.hpp"

#include "wzpi/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace wzpi {

namespace {

mpfr_prec_t clamp(long precision) {
    return static_cast<mpfr_prec_t>(std::max(precision, BigFloat::min_precision));
}

long max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(long precision) {
    mpfr_init2(v_, clamp(precision));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long precision) : BigFloat(precision) {
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, long precision) : BigFloat(precision) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& text, long precision, int base) {
    BigFloat r(precision);
    if (mpfr_set_str(r.v_, text.c_str(), base, MPFR_RNDN) != 0)
        throw DomainError("malformed number '" + text + "'");
    return r;
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : BigFloat(o) {}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(long precision) const {
    BigFloat r(precision);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigFloat r(max_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    if (x.sign() < 0) throw DomainError("square root of a negative number");
    BigFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat root(const BigFloat& x, unsigned long k) {
    if (x.sign() < 0) throw DomainError("root of a negative number");
    BigFloat r(x.precision());
    mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, long e) {
    BigFloat r(x.precision());
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

BigFloat pow10(long e, long precision) {
    BigFloat r(precision);
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
    return r;
}

std::string to_decimal(const BigFloat& x, int digits) {
    if (x.is_zero()) return "0";
    digits = std::max(digits, 1);
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), x.get(), MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // value = 0.mant * 10^exp10
    if (exp10 >= 1 && exp10 <= 30) {
        std::string s = mant.substr(0, static_cast<std::size_t>(std::min<long>(exp10, static_cast<long>(mant.size()))));
        while (static_cast<long>(s.size()) < exp10) s += '0';
        if (static_cast<long>(mant.size()) > exp10) s += "." + mant.substr(static_cast<std::size_t>(exp10));
        return sign + s;
    }
    if (exp10 <= 0 && exp10 > -6) return sign + "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
    return sign + mant.substr(0, 1) + (mant.size() > 1 ? "." + mant.substr(1) : "") + "e" +
           std::to_string(exp10 - 1);
}

std::string to_hex(const BigFloat& x) {
    if (x.is_zero()) return "0";
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 16, 0, x.get(), MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // 0.mant * 16^exp; mpfr_set_str reads "@" as the base-16 exponent marker (in hex digits scale)
    return sign + "0." + mant + "@" + std::to_string(exp);
}

}  // namespace wzpi
