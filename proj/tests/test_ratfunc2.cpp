#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "random_poly.hpp"
#include "wzpi/errors.hpp"
#include "wzpi/ratfunc2.hpp"
#include "wzpi/term_parser.hpp"

using namespace wzpi;

namespace {
RatFunc2 rf(const char* num, const char* den) { return RatFunc2(parse_poly(num), parse_poly(den)); }
}  // namespace

TEST_CASE("ratfunc_equal") {
    CHECK(ratfunc_equal(rf("n^2 - k^2", "n - k"), rf("n + k", "1")));
    CHECK_FALSE(ratfunc_equal(rf("n + 1", "n"), rf("n + 2", "n")));
    CHECK(ratfunc_equal(rf("0", "1"), rf("0", "4*n - 2*k - 1")));
}

TEST_CASE("ratfunc_reduce") {
    CHECK(ratfunc_reduce(rf("n^2 - k^2", "n - k")) == rf("n + k", "1"));
    CHECK(ratfunc_reduce(rf("64*n^2*(20*n + 2*k + 3)", "64*n^2")) == rf("20*n + 2*k + 3", "1"));
    const RatFunc2 reduced = rf("20*n + 2*k + 3", "4*n - 2*k - 1");
    CHECK(ratfunc_reduce(reduced) == reduced);
}

TEST_CASE("canonical scaling") {
    const RatFunc2 f = rf("n/2", "-3*k");
    CHECK(f.den().leading_coefficient() > 0);
    CHECK(f == rf("-n", "6*k"));
    CHECK(rf("0", "n + 5") == RatFunc2());
    CHECK_THROWS_AS(rf("n", "0"), DomainError);
}

TEST_CASE("evaluation and poles") {
    const RatFunc2 f = rf("20*n + 2*k + 3", "4*n - 2*k - 1");
    CHECK(evaluate(f, 1, 0) == BigRational(23, 3));
    CHECK_THROWS_AS(evaluate(f, 0, BigRational(-1, 2)), PoleAtPoint);
    CHECK(to_string(rf("n", "2*k")) == "(n)/(2*k)");
    CHECK(to_string(rf("n + 1", "1")) == "n + 1");
}

TEST_CASE("field operations agree with pointwise arithmetic") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const RatFunc2 a(testutil::random_poly(rng), testutil::random_nonzero_poly(rng));
        const RatFunc2 b(testutil::random_poly(rng), testutil::random_nonzero_poly(rng));
        const BigRational n0 = testutil::random_rational(rng), k0 = testutil::random_rational(rng);
        if (poly_eval(a.den(), n0, k0) == 0 || poly_eval(b.den(), n0, k0) == 0) continue;
        const BigRational av = evaluate(a, n0, k0), bv = evaluate(b, n0, k0);
        CHECK(evaluate(a + b, n0, k0) == av + bv);
        CHECK(evaluate(a - b, n0, k0) == av - bv);
        CHECK(evaluate(a * b, n0, k0) == av * bv);
        CHECK(ratfunc_equal(ratfunc_reduce(a * b), a * b));
        CHECK(evaluate(shift(a, 1, 0), n0 - 1, k0) == av);
    }
}

TEST_CASE("ratfunc_equal is an equivalence and ratfunc_reduce is idempotent") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly2 f = testutil::random_nonzero_poly(rng, 2), g = testutil::random_nonzero_poly(rng, 2);
        const Poly2 num = testutil::random_poly(rng, 2), den = testutil::random_nonzero_poly(rng, 2);
        const RatFunc2 a(num, den), b(num * f, den * f), c(num * f * g, den * f * g);
        CHECK(ratfunc_equal(a, a));
        CHECK(ratfunc_equal(a, b) == ratfunc_equal(b, a));
        CHECK(ratfunc_equal(a, b));
        CHECK(ratfunc_equal(b, c));
        CHECK(ratfunc_equal(a, c));
        const RatFunc2 r = ratfunc_reduce(c);
        CHECK(ratfunc_reduce(r) == r);
        const BigRational n0 = testutil::random_rational(rng), k0 = testutil::random_rational(rng);
        if (poly_eval(c.den(), n0, k0) != 0) CHECK(evaluate(r, n0, k0) == evaluate(c, n0, k0));
    }
}
