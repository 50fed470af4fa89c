#include "wzpi/ratfunc2.hpp"

#include "wzpi/errors.hpp"

namespace wzpi {

namespace {

// Scales both polynomials by one rational so together they are integral, primitive, and den has
// a positive leading coefficient.
void canonicalize(Poly2& num, Poly2& den) {
    if (num.is_zero()) {
        den = Poly2(1);
        return;
    }
    BigInt num_gcd = 0, den_lcm = 1;
    for (const Poly2* p : {&num, &den})
        for (const auto& [m, c] : p->terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        }
    BigRational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (den.leading_coefficient() < 0) scale = -scale;
    if (scale != 1) {
        num *= scale;
        den *= scale;
    }
}

}  // namespace

RatFunc2::RatFunc2(Poly2 num) : RatFunc2(std::move(num), Poly2(1)) {}

RatFunc2::RatFunc2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    canonicalize(num_, den_);
}

RatFunc2 RatFunc2::inverse() const { return RatFunc2(den_, num_); }

RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
    if (a.den_ == b.den_) return RatFunc2(a.num_ + b.num_, a.den_);
    return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) {
    if (a.den_ == b.den_) return RatFunc2(a.num_ - b.num_, a.den_);
    return RatFunc2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
    return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) {
    return RatFunc2(a.num_ * b.den_, a.den_ * b.num_);
}

bool ratfunc_equal(const RatFunc2& a, const RatFunc2& b) {
    return a.num() * b.den() == b.num() * a.den();
}

RatFunc2 ratfunc_reduce(const RatFunc2& a) {
    if (a.is_zero()) return a;
    const Poly2 g = gcd(a.num(), a.den());
    if (g.is_constant()) return a;
    return RatFunc2(*divide_exact(a.num(), g), *divide_exact(a.den(), g));
}

BigRational evaluate(const RatFunc2& f, const BigRational& n0, const BigRational& k0) {
    const BigRational d = poly_eval(f.den(), n0, k0);
    if (d == 0)
        throw PoleAtPoint("denominator " + to_string(f.den()) + " vanishes at (" + to_string(n0) +
                          ", " + to_string(k0) + ")");
    return poly_eval(f.num(), n0, k0) / d;
}

RatFunc2 substitute(const RatFunc2& f, const Poly2& n_image, const Poly2& k_image) {
    return RatFunc2(substitute(f.num(), n_image, k_image), substitute(f.den(), n_image, k_image));
}

RatFunc2 shift(const RatFunc2& f, const BigRational& dn, const BigRational& dk) {
    return RatFunc2(shift(f.num(), dn, dk), shift(f.den(), dn, dk));
}

std::string to_string(const RatFunc2& f) {
    if (f.den() == Poly2(1)) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace wzpi
