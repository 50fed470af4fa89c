#include "wzpi/poly2.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace wzpi {

Poly2::Poly2(const BigRational& c) { add_term({0, 0}, c); }

Poly2 Poly2::monomial(const BigRational& c, int deg_n, int deg_k) {
    Poly2 p;
    p.add_term({deg_n, deg_k}, c);
    return p;
}

Poly2 Poly2::linear(const BigRational& a, const BigRational& b, const BigRational& c) {
    Poly2 p;
    p.add_term({1, 0}, a);
    p.add_term({0, 1}, b);
    p.add_term({0, 0}, c);
    return p;
}

bool Poly2::is_constant() const { return terms_.empty() || leading_monomial().total() == 0; }

int Poly2::degree() const { return terms_.empty() ? -1 : leading_monomial().total(); }

int Poly2::degree_n() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg_n);
    return d;
}

int Poly2::degree_k() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg_k);
    return d;
}

BigRational Poly2::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void Poly2::add_term(Monomial m, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 result(1);
    Poly2 base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly2& Poly2::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly2 operator-(const Poly2& a) { return a * BigRational(-1); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.deg_n + mb.deg_n, ma.deg_k + mb.deg_k}, ca * cb);
    return r;
}

BigRational poly_eval(const Poly2& p, const BigRational& n0, const BigRational& k0) {
    BigRational sum = 0;
    for (const auto& [m, c] : p.terms())
        sum += c * pow(n0, m.deg_n) * pow(k0, m.deg_k);
    return sum;
}

Poly2 substitute(const Poly2& p, const Poly2& n_image, const Poly2& k_image) {
    std::vector<Poly2> n_pows{Poly2(1)}, k_pows{Poly2(1)};
    const int dn = std::max(p.degree_n(), 0), dk = std::max(p.degree_k(), 0);
    for (int i = 1; i <= dn; ++i) n_pows.push_back(n_pows.back() * n_image);
    for (int i = 1; i <= dk; ++i) k_pows.push_back(k_pows.back() * k_image);
    Poly2 r;
    for (const auto& [m, c] : p.terms()) r += c * (n_pows[m.deg_n] * k_pows[m.deg_k]);
    return r;
}

Poly2 shift(const Poly2& p, const BigRational& dn, const BigRational& dk) {
    return substitute(p, Poly2::linear(1, 0, dn), Poly2::linear(0, 1, dk));
}

namespace {

std::string monomial_string(Monomial m) {
    std::string s;
    auto var = [&](const char* name, int d) {
        if (d == 0) return;
        if (!s.empty()) s += "*";
        s += name;
        if (d > 1) s += "^" + std::to_string(d);
    };
    var("n", m.deg_n);
    var("k", m.deg_k);
    return s;
}

// Coefficients of n^0 .. n^deg_n, each a polynomial in k only.
std::vector<Poly2> coefficients_in_n(const Poly2& p) {
    std::vector<Poly2> out(static_cast<std::size_t>(std::max(p.degree_n() + 1, 0)));
    for (const auto& [m, c] : p.terms()) out[m.deg_n] += Poly2::monomial(c, 0, m.deg_k);
    return out;
}

Poly2 leading_coefficient_in_n(const Poly2& p) { return coefficients_in_n(p).back(); }

// Division with remainder of univariate polynomials in k.
std::pair<Poly2, Poly2> divmod_in_k(Poly2 a, const Poly2& b) {
    const int db = b.degree_k();
    const BigRational lb = b.coefficient({0, db});
    Poly2 q;
    while (!a.is_zero() && a.degree_k() >= db) {
        const int da = a.degree_k();
        Poly2 t = Poly2::monomial(a.coefficient({0, da}) / lb, 0, da - db);
        q += t;
        a -= t * b;
    }
    return {q, a};
}

Poly2 gcd_in_k(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
        Poly2 r = divmod_in_k(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? r : primitive_part(r);
    }
    return primitive_part(a);
}

Poly2 content_in_k(const Poly2& p) {
    Poly2 g;
    for (const Poly2& c : coefficients_in_n(p)) {
        g = gcd_in_k(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Poly2 primitive_part_in_k(const Poly2& p) {
    return primitive_part(*divide_exact(p, content_in_k(p)));
}

// Sparse pseudo-remainder of a by b as polynomials in n over Q[k].
Poly2 pseudo_remainder_in_n(Poly2 a, const Poly2& b) {
    const int db = b.degree_n();
    const Poly2 lb = leading_coefficient_in_n(b);
    while (!a.is_zero() && a.degree_n() >= db) {
        const Poly2 la = leading_coefficient_in_n(a);
        a = lb * a - la * Poly2::monomial(1, a.degree_n() - db, 0) * b;
    }
    return a;
}

}  // namespace

std::string to_string(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const BigRational mag = negative ? BigRational(-c) : c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        const std::string mono = monomial_string(m);
        if (mono.empty())
            s += to_string(mag);
        else if (mag == 1)
            s += mono;
        else
            s += to_string(mag) + "*" + mono;
        first = false;
    }
    return s;
}

BigRational content(const Poly2& p) {
    if (p.is_zero()) return 1;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    BigRational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

Poly2 primitive_part(const Poly2& p) {
    if (p.is_zero()) return p;
    BigRational c = content(p);
    if (p.leading_coefficient() < 0) c = -c;
    return p * (BigRational(1) / c);
}

std::optional<Poly2> divide_exact(const Poly2& p, const Poly2& d) {
    if (d.is_zero()) return std::nullopt;
    const Monomial ld = d.leading_monomial();
    const BigRational lc = d.leading_coefficient();
    Poly2 q, r = p;
    while (!r.is_zero()) {
        const Monomial lr = r.leading_monomial();
        if (lr.deg_n < ld.deg_n || lr.deg_k < ld.deg_k) return std::nullopt;
        Poly2 t = Poly2::monomial(r.leading_coefficient() / lc, lr.deg_n - ld.deg_n,
                                  lr.deg_k - ld.deg_k);
        q += t;
        r -= t * d;
    }
    return q;
}

Poly2 gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.is_constant() || b.is_constant()) return Poly2(1);

    const Poly2 ca = content_in_k(a), cb = content_in_k(b);
    const Poly2 common_content = gcd_in_k(ca, cb);
    Poly2 p = *divide_exact(a, ca);
    Poly2 q = *divide_exact(b, cb);
    if (p.degree_n() < q.degree_n()) std::swap(p, q);
    while (!q.is_zero()) {
        Poly2 r = pseudo_remainder_in_n(p, q);
        p = std::move(q);
        q = r.is_zero() ? Poly2() : primitive_part_in_k(r);
    }
    return primitive_part(primitive_part_in_k(p) * common_content);
}

int root_multiplicity_in_k(const Poly2& p, const BigRational& n0, const BigRational& k0) {
    Poly2 u = substitute(p, Poly2(n0), Poly2::k());
    if (u.is_zero()) return -1;
    const Poly2 factor = Poly2::linear(0, 1, -k0);
    int mult = 0;
    while (auto q = divide_exact(u, factor)) {
        u = std::move(*q);
        ++mult;
    }
    return mult;
}

}  // namespace wzpi
