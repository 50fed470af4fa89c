#include "wzpi/numerics.hpp"

#include "wzpi/errors.hpp"
#include "wzpi/wz.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace wzpi {

BigFloat agm(const BigFloat& a0, const BigFloat& b0, long precision) {
    if (a0.sign() <= 0 || b0.sign() <= 0) throw DomainError("agm needs positive arguments");
    const long work = precision + 16;
    BigFloat a = a0.with_precision(work), b = b0.with_precision(work);
    const BigFloat half = BigFloat(BigRational(1, 2), work);
    for (int i = 0; i < 200; ++i) {
        const BigFloat diff = abs(a - b);
        if (diff.is_zero() || diff.exponent2() < a.exponent2() - work + 2) break;
        BigFloat next_a = (a + b) * half;
        b = sqrt(a * b);
        a = std::move(next_a);
    }
    return a.with_precision(precision);
}

namespace {

BigFloat compute_pi(long precision) {
    const long work = precision + 32;
    BigFloat a(1, work);
    BigFloat b = sqrt(BigFloat(BigRational(1, 2), work));
    BigFloat t(BigRational(1, 4), work);
    BigFloat p(1, work);
    const BigFloat half(BigRational(1, 2), work);
    for (int i = 0; i < 64; ++i) {
        const BigFloat diff = abs(a - b);
        if (diff.is_zero() || diff.exponent2() < -work / 2) break;
        BigFloat next_a = (a + b) * half;
        b = sqrt(a * b);
        const BigFloat d = a - next_a;
        t = t - p * d * d;
        p = p + p;
        a = std::move(next_a);
    }
    const BigFloat s = a + b;
    return (s * s / (BigFloat(4, work) * t)).with_precision(precision);
}

BigFloat compute_gamma_quarter(long precision) {
    const long work = precision + 32;
    const BigFloat two_pi = const_pi(work) * BigFloat(2, work);
    const BigFloat m = agm(const_sqrt2(work), BigFloat(1, work), work);
    return sqrt(two_pi * sqrt(two_pi) / m).with_precision(precision);
}

BigFloat compute_gamma_three_quarter(long precision) {
    const long work = precision + 32;
    return (const_pi(work) * const_sqrt2(work) / const_gamma_quarter(work)).with_precision(precision);
}

BigFloat compute_sqrt2(long precision) { return sqrt(BigFloat(2, precision)); }

// Highest-precision value computed so far for each constant.
class ConstantCache {
public:
    BigFloat get(const std::string& name, long precision, BigFloat (*compute)(long)) {
        {
            std::lock_guard lock(mu_);
            auto it = values_.find(name);
            if (it != values_.end() && it->second.precision() >= precision)
                return it->second.with_precision(precision);
        }
        BigFloat v = compute(precision);
        std::lock_guard lock(mu_);
        auto it = values_.find(name);
        if (it == values_.end() || it->second.precision() < precision) values_.insert_or_assign(name, v);
        return v;
    }

    std::map<std::string, BigFloat> snapshot() {
        std::lock_guard lock(mu_);
        return values_;
    }

    void put(const std::string& name, const BigFloat& v) {
        std::lock_guard lock(mu_);
        auto it = values_.find(name);
        if (it == values_.end() || it->second.precision() < v.precision()) values_.insert_or_assign(name, v);
    }

private:
    std::mutex mu_;
    std::map<std::string, BigFloat> values_;
};

ConstantCache& cache() {
    static ConstantCache c;
    return c;
}

}  // namespace

BigFloat const_pi(long precision) { return cache().get("pi", precision, compute_pi); }
BigFloat const_sqrt2(long precision) { return cache().get("sqrt2", precision, compute_sqrt2); }
BigFloat const_gamma_quarter(long precision) {
    return cache().get("gamma_1_4", precision, compute_gamma_quarter);
}
BigFloat const_gamma_three_quarter(long precision) {
    return cache().get("gamma_3_4", precision, compute_gamma_three_quarter);
}

void save_constants_cache(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    for (const auto& [name, v] : cache().snapshot())
        out << name << ' ' << v.precision() << ' ' << to_hex(v) << '\n';
}

int load_constants_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    int count = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string name, hex;
        long bits = 0;
        if (!(fields >> name >> bits >> hex)) continue;
        cache().put(name, BigFloat::parse(hex, bits, 16));
        ++count;
    }
    return count;
}

BigFloat to_bigfloat(const ClosedForm& c, long precision) {
    const long work = precision + 16;
    BigFloat v(c.rational, work);
    if (c.sqrt2_pow != 0) v *= pow(const_sqrt2(work), c.sqrt2_pow);
    if (c.pi_half_pow != 0) v *= pow(sqrt(const_pi(work)), c.pi_half_pow);
    if (c.gamma34_pow != 0) v *= pow(const_gamma_three_quarter(work), c.gamma34_pow);
    return v.with_precision(precision);
}

namespace {

BigFloat rational_power(const BigRational& base, const BigRational& e, long precision) {
    BigFloat r(precision);
    const BigFloat b(base, precision);
    const BigFloat x(e, precision);
    mpfr_pow(r.get(), b.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace

BigFloat evaluate_numeric(const HyperTerm& t, long n0, const BigRational& k0, long precision) {
    if (BigRational(4 * k0).get_den() != 1) throw DomainError("numeric evaluation needs k on the quarter grid");
    const TermValue tv = evaluate_closed_form(t, n0, k0);
    const long work = precision + 16;
    BigFloat v = to_bigfloat(tv.value, work);
    for (const auto& [base, e] : tv.extra_powers) v *= rational_power(base, e, work);
    return v.with_precision(precision);
}

std::optional<BigRational> asymptotic_ratio(const HyperTerm& t, const BigRational& k0) {
    const RatFunc2 q = shift_quotient(t, Var::N).combined();
    const Poly2 num = substitute(q.num(), Poly2::n(), Poly2(k0));
    const Poly2 den = substitute(q.den(), Poly2::n(), Poly2(k0));
    if (num.is_zero()) return BigRational(0);
    if (num.degree() > den.degree()) return std::nullopt;
    if (num.degree() < den.degree()) return BigRational(0);
    return abs(num.leading_coefficient() / den.leading_coefficient());
}

namespace {

constexpr long kWindow = 16;
const BigRational kMaxRho(95, 100);

class PartState {
public:
    PartState(HyperTerm term, const BigRational& k0) : term_(std::move(term)), k0_(k0) {
        const RatFunc2 q = shift_quotient(term_, Var::N).combined();
        num_ = substitute(q.num(), Poly2::n(), Poly2(k0));
        den_ = substitute(q.den(), Poly2::n(), Poly2(k0));
        rho_inf_ = asymptotic_ratio(term_, k0);
    }

    const std::optional<BigRational>& rho_inf() const { return rho_inf_; }

    // t(n+1)/t(n), or nullopt where the quotient has a pole.
    const std::optional<BigRational>& quotient(long n) {
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        const BigRational d = poly_eval(den_, n, 0);
        std::optional<BigRational> q;
        if (d != 0) q = poly_eval(num_, n, 0) / d;
        return cache_.emplace(n, std::move(q)).first->second;
    }

    // max |q| over [n, n + kWindow] and the limit; nullopt if a pole lies in the window.
    std::optional<BigRational> rho(long n) {
        while (!cache_.empty() && cache_.begin()->first < n) cache_.erase(cache_.begin());
        BigRational best = *rho_inf_;
        for (long j = n; j <= n + kWindow; ++j) {
            const auto& q = quotient(j);
            if (!q) return std::nullopt;
            const BigRational a = abs(*q);
            if (a > best) best = a;
        }
        return best;
    }

    void start(long precision) { value_ = evaluate_numeric(term_, 0, k0_, precision); }

    void advance(long n, long precision) {
        const auto& q = quotient(n);
        if (q)
            value_ = value_ * BigFloat(*q, precision);
        else
            value_ = evaluate_numeric(term_, n + 1, k0_, precision);
    }

    const BigFloat& value() const { return value_; }

private:
    HyperTerm term_;
    BigRational k0_;
    Poly2 num_, den_;
    std::optional<BigRational> rho_inf_;
    std::map<long, std::optional<BigRational>> cache_;
    BigFloat value_;
};

}  // namespace

SumResult sum_series(const TermSum& series, const BigRational& k0, int digits, const SumOptions& options) {
    if (digits < 1) throw DomainError("digits must be positive");
    std::vector<PartState> parts;
    double worst = 0.0;
    for (const HyperTerm& t : series.parts) {
        parts.emplace_back(t, k0);
        const auto& r = parts.back().rho_inf();
        if (!r || *r >= kMaxRho)
            throw RatioNotContracting("term ratio tends to " + (r ? to_string(*r) : std::string("infinity")) +
                                      "; the series does not contract below 0.95");
        worst = std::max(worst, r->get_d());
    }

    const double bits_per_term = worst > 0 ? -std::log2(worst) : 64.0;
    const double estimated_terms = digits * std::log2(10.0) / bits_per_term + kWindow + 2;
    const long precision = options.precision_bits.value_or(
        static_cast<long>(std::ceil(digits * 3.33 + 32 + std::log2(estimated_terms))));

    SumResult result;
    result.requested_digits = digits;
    result.precision_bits = precision;
    BigFloat sum(precision);
    for (auto& p : parts) {
        p.start(precision);
        sum += p.value();
    }
    const BigFloat threshold = pow10(-digits, precision) * BigFloat(BigRational(1, 2), precision);

    for (long n = 0;; ++n) {
        bool bounded = true;
        BigFloat bound(precision);
        for (auto& p : parts) {
            const auto rho = p.rho(n);
            if (!rho || *rho > kMaxRho) {
                bounded = false;
                break;
            }
            const BigFloat r(*rho, precision);
            bound += abs(p.value()) * r / (BigFloat(1, precision) - r);
        }
        if (bounded && bound < threshold) {
            result.terms_used = n + 1;
            result.tail_bound = bound;
            break;
        }
        if (n + 1 >= options.max_terms)
            throw RatioNotContracting("no tail bound below 1e-" + std::to_string(digits) + " after " +
                                      std::to_string(options.max_terms) + " terms");
        for (auto& p : parts) {
            p.advance(n, precision);
            sum += p.value();
        }
    }
    result.value = sum;
    return result;
}

SumResult sum_series(const HyperTerm& term, const BigRational& k0, int digits, const SumOptions& options) {
    return sum_series(TermSum{{term}}, k0, digits, options);
}

CarlsonResult carlson_constant(const WZPair& pair, long precision) {
    const BigRational half(1, 2);
    CarlsonResult r;
    try {
        r.simplified = reflection_simplify(restrict_n(pair.G, 0), true);
        const TermValue tv = evaluate_closed_form(r.simplified, 0, half);
        if (!tv.extra_powers.empty()) throw ReflectionFailed("limit has no closed form");
        r.exact = tv.value;
    } catch (const NoReflectionPair& e) {
        throw ReflectionFailed(std::string("G(0, k) has no removable cos/Gamma pair: ") + e.what());
    } catch (const PoleAtPoint& e) {
        throw ReflectionFailed(std::string("G(0, k) is still singular at k = 1/2: ") + e.what());
    }
    r.tail = pole_analysis(pair.G, half, 1, 50);
    for (const PoleClass& pc : r.tail)
        if (pc.kind != PoleClass::Kind::Zero)
            throw TailNotVanishing("G(" + std::to_string(pc.n) + ", 1/2) is " + to_string(pc.kind) +
                                   ", not ZERO");
    r.value = to_bigfloat(r.exact, precision);
    return r;
}

}  // namespace wzpi
