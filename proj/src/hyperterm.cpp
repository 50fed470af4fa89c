#include "wzpi/hyperterm.hpp"

#include "wzpi/errors.hpp"

#include <algorithm>

namespace wzpi {

std::string to_string(const LinForm& l) { return to_string(l.to_poly()); }

namespace {

long mod2(long x) { return ((x % 2) + 2) % 2; }

BigRational fractional_part(const BigRational& x) { return x - BigRational(floor(x)); }

// Gamma(L + s) / Gamma(L) as a rational function of (n, k).
RatFunc2 gamma_shift_ratio(const LinForm& l, long s) {
    Poly2 p(1);
    if (s > 0) {
        for (long j = 0; j < s; ++j) p *= Poly2::linear(l.a, l.b, l.c + j);
        return RatFunc2(p);
    }
    for (long j = 1; j <= -s; ++j) p *= Poly2::linear(l.a, l.b, l.c - j);
    return RatFunc2(Poly2(1), p);
}

// b = root^mult with root > 1 not a perfect power; b > 0, b != 1.
std::pair<BigRational, long> minimal_base(BigRational b) {
    long sign = 1;
    if (b < 1) {
        b = 1 / b;
        sign = -1;
    }
    if (b == 1) return {b, 0};
    const unsigned long max_degree = mpz_sizeinbase(b.get_num().get_mpz_t(), 2);
    for (unsigned long d = max_degree; d >= 2; --d) {
        BigInt num, den;
        if (mpz_root(num.get_mpz_t(), b.get_num().get_mpz_t(), d) != 0 &&
            mpz_root(den.get_mpz_t(), b.get_den().get_mpz_t(), d) != 0)
            return {BigRational(num, den), sign * static_cast<long>(d)};
    }
    return {b, sign};
}

RatFunc2 pow(const RatFunc2& f, int e) {
    const RatFunc2 base = e < 0 ? f.inverse() : f;
    RatFunc2 r(Poly2(1));
    for (int i = 0; i < std::abs(e); ++i) r = r * base;
    return r;
}

}  // namespace

HyperTerm::HyperTerm(BigRational c_rat, int pi_half_pow, CosFactor cos, std::vector<ExpoFactor> expo,
                     RatFunc2 rat_pref, Gammas gammas)
    : c_rat_(std::move(c_rat)), pi_half_pow_(pi_half_pow), cos_(cos), expo_(std::move(expo)),
      rat_pref_(std::move(rat_pref)), gammas_(std::move(gammas)) {
    canonicalize();
}

void HyperTerm::canonicalize() {
    if (cos_.m < 0 || cos_.u < 0 || cos_.u > 1 || cos_.v < 0 || cos_.v > 1)
        throw DomainError("cos factor must be cos(pi(u n + v k))^m with u, v in {0, 1} and m >= 0");
    if (cos_.m == 0) cos_ = {};
    if (cos_.m > 0 && cos_.v == 0) {
        if (cos_.u == 1) expo_.push_back({BigRational(-1), LinForm{cos_.m, 0, 0}});
        cos_ = {};
    }

    // Powers: split signs, fold constant exponents, merge by base.
    std::map<BigRational, LinForm> merged;
    for (const auto& [base, exponent] : expo_) {
        if (base == 0) throw DomainError("zero base in a power factor");
        if (exponent.c != 0) {
            if (!is_integer(exponent.c))
                throw DomainError("power " + to_string(base) + "^(" + to_string(exponent.c) +
                                  ") is not rational");
            c_rat_ *= wzpi::pow(base, to_long(exponent.c.get_num()));
        }
        auto add = [&](const BigRational& b) {
            LinForm& e = merged[b];
            e.a += exponent.a;
            e.b += exponent.b;
        };
        if (base < 0) add(BigRational(-1));
        if (base != -1) {
            const auto [root, mult] = minimal_base(abs(base));
            LinForm& e = merged[root];
            e.a += mult * exponent.a;
            e.b += mult * exponent.b;
        }
    }
    expo_.clear();
    for (auto& [base, e] : merged) {
        if (base == -1) e.a = mod2(e.a);
        if (base == 1 || (e.a == 0 && e.b == 0)) continue;
        expo_.push_back({base, e});
    }

    // Scalars of the rational prefactor move into c_rat.
    if (!rat_pref_.is_zero()) {
        rat_pref_ = ratfunc_reduce(rat_pref_);
        const Poly2 num = primitive_part(rat_pref_.num());
        const Poly2 den = primitive_part(rat_pref_.den());
        c_rat_ *= rat_pref_.num().leading_coefficient() / num.leading_coefficient();
        c_rat_ /= rat_pref_.den().leading_coefficient() / den.leading_coefficient();
        rat_pref_ = RatFunc2(num, den);
    }

    for (auto it = gammas_.begin(); it != gammas_.end();) {
        const auto& [arg, e] = *it;
        const bool half_grid = BigRational(arg.c * 2).get_den() == 1;
        const bool pole = is_integer(arg.c) && arg.c <= 0;
        if (e == 0) {
            it = gammas_.erase(it);
        } else if (arg.is_constant() && half_grid && !pole) {
            const ClosedForm g = gamma_closed_form(arg.c).pow(e);
            c_rat_ *= g.rational;
            pi_half_pow_ += g.pi_half_pow;
            it = gammas_.erase(it);
        } else {
            ++it;
        }
    }

    if (c_rat_ == 0 || rat_pref_.is_zero()) *this = HyperTerm::constant(0);
}

HyperTerm HyperTerm::constant(const BigRational& c) {
    HyperTerm t;
    t.c_rat_ = c;
    if (c == 0) t.c_rat_ = 0;
    return t;
}

HyperTerm HyperTerm::pi_power(int half_pow) {
    HyperTerm t;
    t.pi_half_pow_ = half_pow;
    return t;
}

HyperTerm HyperTerm::gamma(const LinForm& arg, int exp) {
    return HyperTerm(1, 0, {}, {}, RatFunc2(Poly2(1)), {{arg, exp}});
}

HyperTerm HyperTerm::cos_pi(int u, int v, int m) {
    return HyperTerm(1, 0, CosFactor{m, u, v}, {}, RatFunc2(Poly2(1)), {});
}

HyperTerm HyperTerm::power(const BigRational& base, const LinForm& exponent) {
    return HyperTerm(1, 0, {}, {{base, exponent}}, RatFunc2(Poly2(1)), {});
}

HyperTerm HyperTerm::rational(const RatFunc2& f) { return HyperTerm(1, 0, {}, {}, f, {}); }

HyperTerm HyperTerm::pow(int e) const {
    if (e >= 0) {
        HyperTerm r;
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }
    if (cos_.m > 0) throw DomainError("negative power of a cos factor");
    if (c_rat_ == 0) throw DomainError("negative power of the zero term");
    std::vector<ExpoFactor> expo;
    for (const auto& f : expo_) expo.push_back({f.base, LinForm{-f.exponent.a, -f.exponent.b, 0}});
    Gammas g;
    for (const auto& [arg, ge] : gammas_) g[arg] = -ge;
    return HyperTerm(1 / c_rat_, -pi_half_pow_, {}, std::move(expo), rat_pref_.inverse(),
                     std::move(g))
        .pow(-e);
}

HyperTerm operator*(const HyperTerm& x, const HyperTerm& y) {
    CosFactor cx = x.cos_, cy = y.cos_;
    std::vector<ExpoFactor> expo = x.expo_;
    expo.insert(expo.end(), y.expo_.begin(), y.expo_.end());
    if (cx.m > 0 && cy.m > 0 && cx.u != cy.u) {
        // both have v = 1; cos(pi(n + k)) = (-1)^n cos(pi k) on integer n
        for (CosFactor* c : {&cx, &cy})
            if (c->u == 1) {
                expo.push_back({BigRational(-1), LinForm{c->m, 0, 0}});
                c->u = 0;
            }
    }
    CosFactor cos = cx.m == 0 ? cy : cx;
    if (cx.m > 0 && cy.m > 0) cos.m = cx.m + cy.m;

    HyperTerm::Gammas gammas = x.gammas_;
    for (const auto& [arg, e] : y.gammas_) gammas[arg] += e;
    return HyperTerm(x.c_rat_ * y.c_rat_, x.pi_half_pow_ + y.pi_half_pow_, cos, std::move(expo),
                     x.rat_pref_ * y.rat_pref_, std::move(gammas));
}

RatFunc2 ShiftQuotient::combined() const {
    return RatFunc2(quotient.num() * (sign * base_multiplier), quotient.den());
}

ShiftQuotient shift_quotient(const HyperTerm& t, Var var) {
    const bool on_n = var == Var::N;
    ShiftQuotient sq;
    const int flag = on_n ? t.cos().u : t.cos().v;
    int flips = t.cos().m * flag;
    for (const auto& f : t.expo_factors()) {
        const long step = on_n ? f.exponent.a : f.exponent.b;
        if (f.base == -1) flips += static_cast<int>(step % 2);
        else sq.base_multiplier *= wzpi::pow(f.base, step);
    }
    sq.sign = flips % 2 == 0 ? 1 : -1;

    Poly2 num(1), den(1);
    for (const auto& [arg, e] : t.gammas()) {
        const long s = on_n ? arg.a : arg.b;
        if (s == 0) continue;
        const RatFunc2 r = gamma_shift_ratio(arg, s);
        const Poly2& up = e > 0 ? r.num() : r.den();
        const Poly2& down = e > 0 ? r.den() : r.num();
        for (int i = 0; i < std::abs(e); ++i) {
            num *= up;
            den *= down;
        }
    }
    const RatFunc2& rp = t.rat_pref();
    const RatFunc2 shifted = on_n ? shift(rp, 1, 0) : shift(rp, 0, 1);
    sq.quotient = RatFunc2(num * shifted.num() * rp.den(), den * shifted.den() * rp.num());
    return sq;
}

namespace {

// Rewrites every non-constant Gamma(L) as Gamma(L0) times a rational factor, where L0 has the
// fractional part of L's constant.
std::pair<HyperTerm::Gammas, RatFunc2> normalize_gamma_offsets(const HyperTerm::Gammas& gammas) {
    HyperTerm::Gammas out;
    RatFunc2 factor(Poly2(1));
    for (const auto& [arg, e] : gammas) {
        if (arg.is_constant()) {
            out[arg] += e;
            continue;
        }
        const LinForm base{arg.a, arg.b, fractional_part(arg.c)};
        const long offset = to_long(floor(arg.c));
        if (offset != 0) factor = factor * pow(gamma_shift_ratio(base, offset), e);
        out[base] += e;
    }
    std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
    return {out, factor};
}

}  // namespace

TermRatio term_ratio(const HyperTerm& t1, const HyperTerm& t2) {
    if (!(t1.cos() == t2.cos()))
        throw GammaMismatch("cos factors differ; the ratio is not a rational function");
    if (t1.expo_factors() != t2.expo_factors())
        throw GammaMismatch("exponential factors differ; the ratio is not a rational function");
    if (t2.c_rat() == 0) throw DomainError("ratio by the zero term");

    TermRatio r;
    r.constant = t1.c_rat() / t2.c_rat();
    r.pi_half_pow = t1.pi_half_pow() - t2.pi_half_pow();
    if (t1.gammas() == t2.gammas()) {
        r.ratio = t1.rat_pref() / t2.rat_pref();
        return r;
    }
    const auto [g1, f1] = normalize_gamma_offsets(t1.gammas());
    const auto [g2, f2] = normalize_gamma_offsets(t2.gammas());
    if (g1 != g2) throw GammaMismatch("Gamma factors do not cancel; the ratio is not a rational function");
    r.ratio = (t1.rat_pref() * f1) / (t2.rat_pref() * f2);
    return r;
}

namespace {

// n -> alpha*n + p, k -> q*n + k + r
HyperTerm transform(const HyperTerm& t, long alpha, long p, long q, const BigRational& r) {
    HyperTerm::Gammas gammas;
    for (const auto& [arg, e] : t.gammas())
        gammas[LinForm{arg.a * alpha + arg.b * q, arg.b, arg.c + arg.a * p + arg.b * r}] += e;

    std::vector<ExpoFactor> expo;
    for (const auto& [base, x] : t.expo_factors())
        expo.push_back({base, LinForm{x.a * alpha + x.b * q, x.b, BigRational(x.a * p) + x.b * r}});

    const CosFactor& c = t.cos();
    CosFactor cos = c;
    BigRational c_rat = t.c_rat();
    if (c.m > 0) {
        const BigRational constant = BigRational(c.u * p) + c.v * r;
        if (!is_integer(constant))
            throw DomainError("substitution shifts the cos argument by a non-integer");
        if (to_long(constant.get_num()) % 2 != 0 && c.m % 2 != 0) c_rat = -c_rat;
        cos.u = static_cast<int>(mod2(c.u * alpha + c.v * q));
    }
    const RatFunc2 rat = substitute(t.rat_pref(), Poly2::linear(alpha, 0, p), Poly2::linear(q, 1, r));
    return HyperTerm(c_rat, t.pi_half_pow(), cos, std::move(expo), rat, std::move(gammas));
}

struct PointAnalysis {
    bool hard_pole = false;
    bool identically_zero = false;
    int zero_order = 0;
    int pole_order = 0;
    PoleClass::Source zero_source = PoleClass::Source::None;
    PoleClass::Source pole_source = PoleClass::Source::None;
    std::optional<LinForm> zero_witness, pole_witness;

    int valuation() const { return zero_order - pole_order; }

    void add_zero(int order, PoleClass::Source s, std::optional<LinForm> w) {
        if (zero_order == 0) {
            zero_source = s;
            zero_witness = std::move(w);
        }
        zero_order += order;
    }
    void mark_identically_zero(PoleClass::Source s, std::optional<LinForm> w) {
        if (!identically_zero && zero_order == 0) {
            zero_source = s;
            zero_witness = std::move(w);
        }
        identically_zero = true;
    }
    void add_pole(int order, PoleClass::Source s, std::optional<LinForm> w) {
        if (pole_order == 0) {
            pole_source = s;
            pole_witness = std::move(w);
        }
        pole_order += order;
    }
};

// Valuation of k -> t(n0, k) at k0.
PointAnalysis analyze_point(const HyperTerm& t, long n0, const BigRational& k0) {
    PointAnalysis a;
    const BigRational n(n0);
    const CosFactor& c = t.cos();
    if (c.m > 0 && c.v == 1 && is_integer(c.u * n + k0 - BigRational(1, 2)))
        a.add_zero(c.m, PoleClass::Source::Cos, LinForm{c.u, c.v, 0});

    for (const auto& [arg, e] : t.gammas()) {
        const BigRational x = arg.at(n, k0);
        if (!is_integer(x) || x > 0) continue;
        if (arg.b == 0) {
            if (e > 0) {
                a.hard_pole = true;
                a.add_pole(e, PoleClass::Source::Gamma, arg);
            } else {
                a.mark_identically_zero(PoleClass::Source::Gamma, arg);
            }
            continue;
        }
        if (e > 0)
            a.add_pole(e, PoleClass::Source::Gamma, arg);
        else
            a.add_zero(-e, PoleClass::Source::Gamma, arg);
    }

    const int num_mult = root_multiplicity_in_k(t.rat_pref().num(), n, k0);
    const int den_mult = root_multiplicity_in_k(t.rat_pref().den(), n, k0);
    if (num_mult < 0)
        a.mark_identically_zero(PoleClass::Source::RationalPrefactor, std::nullopt);
    else if (num_mult > 0)
        a.add_zero(num_mult, PoleClass::Source::RationalPrefactor, std::nullopt);
    if (den_mult < 0) {
        a.hard_pole = true;
        a.add_pole(1, PoleClass::Source::RationalPrefactor, std::nullopt);
    } else if (den_mult > 0) {
        a.add_pole(den_mult, PoleClass::Source::RationalPrefactor, std::nullopt);
    }
    if (t.c_rat() == 0) a.identically_zero = true;
    return a;
}

std::string point_string(long n0, const BigRational& k0) {
    return "(" + std::to_string(n0) + ", " + to_string(k0) + ")";
}

// cos(pi x) for x on the quarter grid.
ClosedForm cos_pi_closed_form(const BigRational& x) {
    const BigRational r = x - 2 * BigRational(floor(x / 2));  // in [0, 2)
    const BigRational scaled = r * 4;
    if (!is_integer(scaled)) throw DomainError("cos(pi*" + to_string(x) + ") is off the quarter grid");
    static const ClosedForm table[8] = {
        ClosedForm(1),        ClosedForm(BigRational(1, 2), 1),  ClosedForm(0),
        ClosedForm(BigRational(-1, 2), 1), ClosedForm(-1), ClosedForm(BigRational(-1, 2), 1),
        ClosedForm(0),        ClosedForm(BigRational(1, 2), 1)};
    return table[scaled.get_num().get_si()];
}

// Exact integer root, if any.
std::optional<BigInt> exact_root(const BigInt& x, unsigned long degree) {
    BigInt r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), degree) == 0) return std::nullopt;
    return r;
}

// base^e with positive base and rational e, in closed form when possible.
std::optional<ClosedForm> power_closed_form(const BigRational& base, const BigRational& e) {
    const BigRational x = wzpi::pow(base, to_long(e.get_num()));
    const unsigned long degree = e.get_den().get_ui();
    auto num = exact_root(x.get_num(), degree);
    auto den = exact_root(x.get_den(), degree);
    if (num && den) return ClosedForm(BigRational(*num, *den));
    if (degree != 2) return std::nullopt;
    // x = 2^j * y with y a rational square
    BigInt n = x.get_num(), d = x.get_den();
    const long twos = static_cast<long>(mpz_scan1(n.get_mpz_t(), 0)) -
                      static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
    mpz_tdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), mpz_scan1(n.get_mpz_t(), 0));
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), mpz_scan1(d.get_mpz_t(), 0));
    num = exact_root(n, 2);
    den = exact_root(d, 2);
    if (!num || !den) return std::nullopt;
    return ClosedForm(BigRational(*num, *den), static_cast<int>(twos));
}

}  // namespace

HyperTerm substitute_affine(const HyperTerm& t, const AffineMap& map) {
    return transform(t, 1, map.p, map.q, map.r);
}

HyperTerm restrict_n(const HyperTerm& t, long n0) { return transform(t, 0, n0, 0, 0); }

TermValue evaluate_closed_form(const HyperTerm& t, long n0, const BigRational& k0) {
    const PointAnalysis pa = analyze_point(t, n0, k0);
    if (pa.hard_pole) throw PoleAtPoint("term is undefined along k at n = " + std::to_string(n0));
    if (pa.identically_zero || pa.valuation() > 0) return {ClosedForm(0), {}};
    if (pa.valuation() < 0) throw PoleAtPoint("pole at " + point_string(n0, k0));
    if (pa.pole_order > 0)
        throw PoleAtPoint("removable singularity at " + point_string(n0, k0) +
                          "; the value exists only as a limit");

    const BigRational n(n0);
    TermValue out;
    ClosedForm v(t.c_rat() * evaluate(t.rat_pref(), n, k0), 0, t.pi_half_pow(), 0);
    const CosFactor& c = t.cos();
    if (c.m > 0) v = v * cos_pi_closed_form(c.u * n + c.v * k0).pow(c.m);

    for (const auto& [base, x] : t.expo_factors()) {
        const BigRational e = x.at(n, k0);
        if (is_integer(e)) {
            v = v * ClosedForm(wzpi::pow(base, to_long(e.get_num())));
        } else if (base < 0) {
            throw DomainError("(" + to_string(base) + ")^(" + to_string(e) + ") is not real");
        } else if (auto p = power_closed_form(base, e)) {
            v = v * *p;
        } else {
            out.extra_powers.emplace_back(base, e);
        }
    }
    for (const auto& [arg, e] : t.gammas()) v = v * gamma_closed_form(arg.at(n, k0)).pow(e);
    out.value = v;
    return out;
}

BigRational evaluate_exact(const HyperTerm& t, long n0, const BigRational& k0) {
    if (k0.get_den() > 2) throw DomainError("exact evaluation needs k with denominator 1 or 2");
    const TermValue tv = evaluate_closed_form(t, n0, k0);
    if (!tv.value.is_rational() || !tv.extra_powers.empty())
        throw IrrationalResidue("value at " + point_string(n0, k0) + " is " + to_string(tv.value) +
                                ", not rational");
    return tv.value.rational;
}

HyperTerm reflection_simplify(const HyperTerm& t, bool require_progress) {
    const LinForm minus{0, -1, BigRational(1, 2)};
    const LinForm plus{0, 1, BigRational(1, 2)};
    CosFactor cos = t.cos();
    HyperTerm::Gammas gammas = t.gammas();
    int pairs = 0;
    if (cos.u == 0 && cos.v == 1) {
        while (cos.m > 0 && gammas[minus] > 0 && gammas[plus] > 0) {
            --cos.m;
            --gammas[minus];
            --gammas[plus];
            ++pairs;
        }
    }
    if (pairs == 0) {
        if (require_progress)
            throw NoReflectionPair("no cos(pi k) Gamma(1/2 - k) Gamma(1/2 + k) triple to cancel");
        return t;
    }
    return HyperTerm(t.c_rat(), t.pi_half_pow() + 2 * pairs, cos, t.expo_factors(), t.rat_pref(),
                     std::move(gammas));
}

std::vector<PoleClass> pole_analysis(const HyperTerm& t, const BigRational& k0, long n_first,
                                     long n_last) {
    std::vector<PoleClass> out;
    for (long n = n_first; n <= n_last; ++n) {
        const PointAnalysis pa = analyze_point(t, n, k0);
        PoleClass pc;
        pc.n = n;
        if (pa.hard_pole || pa.valuation() < 0) {
            pc.kind = PoleClass::Kind::Pole;
            pc.source = pa.pole_source;
            pc.witness = pa.pole_witness;
        } else if (pa.identically_zero || pa.valuation() > 0) {
            pc.kind = PoleClass::Kind::Zero;
            pc.source = pa.zero_source;
            pc.witness = pa.zero_witness;
        } else if (pa.pole_order > 0) {
            pc.kind = PoleClass::Kind::Finite;
            pc.source = pa.pole_source;
            pc.witness = pa.pole_witness;
        }
        out.push_back(pc);
    }
    return out;
}

BigRational evaluate_exact(const TermSum& s, long n0, const BigRational& k0) {
    BigRational sum = 0;
    for (const HyperTerm& t : s.parts) sum += evaluate_exact(t, n0, k0);
    return sum;
}

const char* to_string(PoleClass::Kind kind) {
    switch (kind) {
        case PoleClass::Kind::Zero: return "ZERO";
        case PoleClass::Kind::Finite: return "FINITE";
        case PoleClass::Kind::Pole: return "POLE";
    }
    return "?";
}

}  // namespace wzpi
