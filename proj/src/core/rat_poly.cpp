#include "rat_poly.hpp"

#include <algorithm>

namespace thurston {

int RatPoly::degree() const {
    for (std::size_t k = coeffs.size(); k-- > 0;)
        if (coeffs[k] != 0) return static_cast<int>(k);
    return -1;
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

RatPoly RatPoly::derivative() const {
    RatPoly d;
    if (coeffs.size() <= 1) {
        d.coeffs = {Rational(0)};
        return d;
    }
    d.coeffs.resize(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        d.coeffs[k - 1] = coeffs[k] * Rational(static_cast<long>(k));
    return d;
}

void RatPoly::trim() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

RatPoly poly_remainder(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a;
    r.trim();
    RatPoly d = b;
    d.trim();
    int db = d.degree();
    if (db < 0) throw Error(ErrorKind::Argument, "poly_remainder: division by zero polynomial");
    while (r.degree() >= db && r.degree() >= 0) {
        int dr = r.degree();
        Rational c = r.coeffs[dr] / d.coeffs[db];
        for (int k = 0; k <= db; ++k)
            r.coeffs[dr - db + k] -= c * d.coeffs[k];
        r.coeffs[dr] = 0;
        r.trim();
        if (r.degree() < 0) break;
    }
    return r;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    a.trim();
    b.trim();
    while (b.degree() >= 0) {
        RatPoly r = poly_remainder(a, b);
        a = b;
        b = r;
    }
    // normalize monic
    int d = a.degree();
    if (d >= 0) {
        Rational lead = a.coeffs[d];
        for (auto& c : a.coeffs) c /= lead;
    }
    return a;
}

RatPoly square_free_part(const RatPoly& p) {
    RatPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) {
        RatPoly out = p;
        out.trim();
        return out;
    }
    // divide p by g exactly
    RatPoly r = p;
    r.trim();
    RatPoly q;
    q.coeffs.assign(r.coeffs.size(), Rational(0));
    int dg = g.degree();
    while (r.degree() >= dg) {
        int dr = r.degree();
        Rational c = r.coeffs[dr] / g.coeffs[dg];
        q.coeffs[dr - dg] = c;
        for (int k = 0; k <= dg; ++k)
            r.coeffs[dr - dg + k] -= c * g.coeffs[k];
        r.trim();
        if (r.degree() < 0) break;
    }
    q.trim();
    return q;
}

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

} // namespace

int sturm_count(const RatPoly& square_free, const Rational& a, const Rational& b) {
    RatPoly p = square_free;
    p.trim();
    if (p.degree() <= 0) return 0;
    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (chain.back().degree() > 0) {
        RatPoly r = poly_remainder(chain[chain.size() - 2], chain.back());
        if (r.degree() < 0) break;
        for (auto& c : r.coeffs) c = -c;
        chain.push_back(r);
    }
    return sign_variations(chain, a) - sign_variations(chain, b);
}

std::optional<std::vector<Rational>> rational_roots(const RatPoly& p) {
    RatPoly q = p;
    q.trim();
    std::vector<Rational> roots;
    if (q.degree() <= 0) return roots;

    // factor out x^k
    std::size_t shift = 0;
    while (shift < q.coeffs.size() && q.coeffs[shift] == 0) ++shift;
    if (shift > 0) {
        roots.push_back(Rational(0));
        q.coeffs.erase(q.coeffs.begin(), q.coeffs.begin() + static_cast<long>(shift));
    }
    if (q.degree() <= 0) return roots;

    // clear denominators to a primitive integer polynomial
    BigInt den_lcm(1);
    for (const auto& c : q.coeffs)
        den_lcm = lcm(den_lcm, denominator(c));
    std::vector<BigInt> ic(q.coeffs.size());
    for (std::size_t k = 0; k < q.coeffs.size(); ++k)
        ic[k] = numerator(q.coeffs[k]) * (den_lcm / denominator(q.coeffs[k]));

    BigInt a0 = abs(ic.front());
    BigInt an = abs(ic.back());
    static constexpr long kDivisorCap = 100000;
    auto divisors = [](const BigInt& n) -> std::optional<std::vector<BigInt>> {
        std::vector<BigInt> out;
        if (n == 0) return out;
        if (n > BigInt(kDivisorCap) * BigInt(kDivisorCap)) return std::nullopt;
        for (BigInt d = 1; d * d <= n; ++d) {
            if (d > kDivisorCap) return std::nullopt;
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        }
        return out;
    };
    auto ds0 = divisors(a0);
    auto dsn = divisors(an);
    if (!ds0 || !dsn) return std::nullopt;
    for (const auto& num : *ds0)
        for (const auto& den : *dsn)
            for (int s : {1, -1}) {
                Rational cand(BigInt(s) * num, den);
                if (q.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

RatPoly characteristic_polynomial(const RatMatrix& a) {
    const std::size_t n = a.size();
    RatPoly chi;
    chi.coeffs.assign(n + 1, Rational(0));
    chi.coeffs[n] = 1;
    RatMatrix m = RatMatrix(n); // M_0 = 0
    Rational c(1);
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A * (M_{k-1} + c_{n-k+1} I)
        RatMatrix t = m;
        for (std::size_t i = 0; i < n; ++i) t.at(i, i) += c;
        m = a * t;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
        c = -tr / Rational(static_cast<long>(k));
        chi.coeffs[n - k] = c;
    }
    return chi;
}

} // namespace thurston
