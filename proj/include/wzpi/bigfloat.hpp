#pragma once

#include "wzpi/rational.hpp"

#include <mpfr.h>

#include <string>

namespace wzpi {

/// Arbitrary-precision binary float (MPFR, round-to-nearest). Precision is at least 64 bits;
/// binary operations produce a result at the larger operand precision.
class BigFloat {
public:
    static constexpr long min_precision = 64;

    explicit BigFloat(long precision = 128);
    BigFloat(long value, long precision);
    BigFloat(const BigRational& value, long precision);
    /// Decimal or "0x" hex text; throws DomainError if malformed.
    static BigFloat parse(const std::string& text, long precision, int base = 10);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    /// Same value rounded to a new precision.
    BigFloat with_precision(long precision) const;

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// floor(log2 |x|) + 1 for nonzero x.
    long exponent2() const { return static_cast<long>(mpfr_get_exp(v_)); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
/// x^(1/k) for x >= 0.
BigFloat root(const BigFloat& x, unsigned long k);
BigFloat pow(const BigFloat& x, long e);
/// 10^e at the given precision.
BigFloat pow10(long e, long precision);

/// Decimal rendering with `digits` significant digits, e.g. "2.546479089", "1.2e-25".
std::string to_decimal(const BigFloat& x, int digits);

/// Exact hexadecimal rendering that parse(..., base 16) reads back bit-for-bit.
std::string to_hex(const BigFloat& x);

}  // namespace wzpi
