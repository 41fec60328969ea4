#include "motionfactor/factor_small.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

// Strategy: clear denominators with t -> u/d so every monic rational factor
// of degree <= 2 corresponds to a monic *integer* factor of the transformed
// polynomial (Gauss). Find those by factoring mod a prime into linear and
// quadratic pieces, Hensel-lifting each piece against its cofactor past the
// Mignotte bound, and verifying candidates by exact integer division.

namespace mf::detail {
namespace {

using ZPoly = std::vector<mpz_class>;   // ascending, normalized
using PPoly = std::vector<std::uint64_t>;

// ----- arithmetic mod p (p odd prime, p < 2^31) -----

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a % p, p - 2, p); }

void pnorm(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly padd(const PPoly& a, const PPoly& b, std::uint64_t p) {
    PPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        out[i] = (x + y) % p;
    }
    pnorm(out);
    return out;
}

PPoly psub(const PPoly& a, const PPoly& b, std::uint64_t p) {
    PPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        out[i] = (x + p - y) % p;
    }
    pnorm(out);
    return out;
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
    pnorm(out);
    return out;
}

// divisor need not be monic
std::pair<PPoly, PPoly> pdivmod(PPoly a, const PPoly& b, std::uint64_t p) {
    if (b.empty()) throw std::domain_error("mod-p division by zero");
    std::uint64_t li = invmod(b.back(), p);
    int db = static_cast<int>(b.size()) - 1;
    pnorm(a);
    PPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
    for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
        std::uint64_t f = mulmod(a[d], li, p);
        if (f) {
            q[d - db] = f;
            for (int i = 0; i <= db; ++i)
                a[d - db + i] = (a[d - db + i] + p - mulmod(f, b[i], p)) % p;
        }
    }
    pnorm(a);
    return {q, a};
}

PPoly pmonic(PPoly f, std::uint64_t p) {
    pnorm(f);
    if (f.empty()) return f;
    std::uint64_t li = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, li, p);
    return f;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
    pnorm(a);
    pnorm(b);
    while (!b.empty()) {
        auto r = pdivmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(std::move(a), p);
}

PPoly pderiv(const PPoly& f, std::uint64_t p) {
    PPoly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(mulmod(f[i], i % p, p));
    pnorm(out);
    return out;
}

// base^e mod (f, p)
PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& f, std::uint64_t p) {
    PPoly r{1};
    base = pdivmod(std::move(base), f, p).second;
    while (e) {
        if (e & 1) r = pdivmod(pmul(r, base, p), f, p).second;
        base = pdivmod(pmul(base, base, p), f, p).second;
        e >>= 1;
    }
    return r;
}

// Bezout s*g + t*h = 1 mod p for coprime g, h.
void pext_gcd(const PPoly& g, const PPoly& h, std::uint64_t p, PPoly& s, PPoly& t) {
    PPoly r0 = g, r1 = h;
    PPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = pdivmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        PPoly t2 = psub(t0, pmul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("pext_gcd: inputs not coprime");
    std::uint64_t li = invmod(r0[0], p);
    for (auto& c : s0) c = mulmod(c, li, p);
    for (auto& c : t0) c = mulmod(c, li, p);
    s = std::move(s0);
    t = std::move(t0);
}

// ----- integer polynomial helpers -----

void znorm(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    znorm(out);
    return out;
}

// exact division by a monic divisor; returns false if a nonzero remainder shows up
bool zdiv_exact_monic(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
    ZPoly rem = a;
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 < db) return false;
    quot.assign(rem.size() - db, mpz_class(0));
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        mpz_class f = rem[d];
        if (f != 0) {
            quot[d - db] = f;
            for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b[i];
        }
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    znorm(quot);
    return true;
}

mpz_class zeval(const ZPoly& f, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PPoly zmod(const ZPoly& f, std::uint64_t p) {
    PPoly out;
    mpz_class pm(static_cast<unsigned long>(p));
    for (const auto& c : f) {
        mpz_class r = c % pm;
        if (r < 0) r += pm;
        out.push_back(r.get_ui());
    }
    pnorm(out);
    return out;
}

ZPoly zlift(const PPoly& f) {
    ZPoly out;
    for (auto c : f) out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

void zreduce_mod(ZPoly& f, const mpz_class& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    znorm(f);
}

// ----- equal-degree splitting of the degree-2 part (Cantor-Zassenhaus) -----

void edf_deg2(const PPoly& f, std::uint64_t p, std::mt19937_64& rng, std::vector<PPoly>& out) {
    if (f.size() <= 1) return;
    if (f.size() == 3) {  // degree 2: already irreducible piece
        out.push_back(pmonic(f, p));
        return;
    }
    std::uint64_t e = (p * p - 1) / 2;
    for (;;) {
        PPoly u(4);
        for (auto& c : u) c = rng() % p;
        pnorm(u);
        if (u.empty()) continue;
        PPoly w = ppowmod(u, e, f, p);
        if (w.empty()) continue;
        w[0] = (w[0] + p - 1) % p;
        pnorm(w);
        PPoly g = pgcd(f, w, p);
        if (g.size() > 1 && g.size() < f.size()) {
            edf_deg2(g, p, rng, out);
            edf_deg2(pdivmod(f, g, p).first, p, rng, out);
            return;
        }
    }
}

// ----- Hensel lifting (linear steps, fixed Bezout data mod p) -----

// pre: F monic over Z, F = g0 * h0 mod p with g0, h0 monic and coprime mod p.
// Returns the lift of g0 modulo p^steps.
ZPoly hensel_lift(const ZPoly& F, PPoly g0, std::uint64_t p, int steps) {
    PPoly h0 = pdivmod(zmod(F, p), g0, p).first;
    PPoly s, t;
    pext_gcd(g0, h0, p, s, t);
    ZPoly G = zlift(g0), H = zlift(h0);
    mpz_class pk(static_cast<unsigned long>(p));
    mpz_class pz(static_cast<unsigned long>(p));
    for (int k = 1; k < steps; ++k) {
        // e = (F - G H) / p^k mod p
        ZPoly prod = zmul(G, H);
        ZPoly diff(std::max(F.size(), prod.size()), mpz_class(0));
        for (std::size_t i = 0; i < diff.size(); ++i) {
            mpz_class a = i < F.size() ? F[i] : mpz_class(0);
            mpz_class b = i < prod.size() ? prod[i] : mpz_class(0);
            diff[i] = (a - b) / pk;
        }
        znorm(diff);
        PPoly e = zmod(diff, p);
        if (!e.empty()) {
            // u h0 + w g0 = e with deg u < deg g0; deg w < deg h0 follows.
            auto [q, u] = pdivmod(pmul(t, e, p), g0, p);
            PPoly w = padd(pmul(s, e, p), pmul(q, h0, p), p);
            ZPoly du = zlift(u), dw = zlift(w);
            for (std::size_t i = 0; i < du.size(); ++i) G[i] += pk * du[i];
            for (std::size_t i = 0; i < dw.size(); ++i) H[i] += pk * dw[i];
        }
        pk *= pz;
    }
    zreduce_mod(G, pk);
    // restore monic leading 1 (reduction maps it to 1 anyway since lift is monic)
    return G;
}

mpz_class symmetric(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// ----- one round: find a monic integer factor of degree <= 2 of F (monic,
// squarefree). Returns true and the factor in `fac` if found. -----

bool find_small_factor(const ZPoly& F, ZPoly& fac) {
    int n = static_cast<int>(F.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) {
        fac = F;
        return true;
    }
    if (n == 2) {
        // either it splits into two integer linears or it is the factor itself
        mpz_class b = F[1], c = F[0], disc = b * b - 4 * c;
        if (disc >= 0) {
            mpz_class r = sqrt(disc);
            if (r * r == disc && (-b + r) % 2 == 0) {
                fac = {(-b + r) / 2 * (-1), mpz_class(1)};  // u - (-b+r)/2
                return true;
            }
        }
        fac = F;
        return true;
    }

    // pick a prime keeping F squarefree
    mpz_class pz = 10007;
    PPoly Fp;
    for (int tries = 0; tries < 1000; ++tries) {
        std::uint64_t p = pz.get_ui();
        Fp = zmod(F, p);
        if (static_cast<int>(Fp.size()) - 1 == n) {
            PPoly g = pgcd(Fp, pderiv(Fp, p), p);
            if (g.size() == 1) break;
        }
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        if (tries == 999) throw std::logic_error("no good prime found (input not squarefree?)");
    }
    std::uint64_t p = pz.get_ui();

    // distinct-degree: degree-1 part, then degree-2 part of the quotient
    PPoly x{0, 1};
    PPoly xp = ppowmod(x, p, Fp, p);
    PPoly lin_part = pgcd(psub(xp, x, p), Fp, p);
    PPoly rest = pdivmod(Fp, lin_part, p).first;
    PPoly xpp = ppowmod(xp, p, rest, p);  // x^(p^2) mod rest
    PPoly quad_part = pgcd(psub(xpp, x, p), rest, p);

    // split the degree-1 part by root scan, the degree-2 part by CZ
    std::vector<PPoly> linears, quads;
    if (lin_part.size() > 1) {
        for (std::uint64_t r = 0; r < p && linears.size() + 1 < lin_part.size(); ++r) {
            // evaluate lin_part at r
            std::uint64_t acc = 0;
            for (auto it = lin_part.rbegin(); it != lin_part.rend(); ++it)
                acc = (mulmod(acc, r, p) + *it) % p;
            if (acc == 0) linears.push_back(PPoly{(p - r) % p, 1});
        }
    }
    if (quad_part.size() > 1) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (p * 1315423911ULL) ^ n);
        edf_deg2(quad_part, p, rng, quads);
    }
    if (linears.empty() && quads.empty()) return false;

    // Mignotte-style bound for coefficients of monic degree <= 2 factors
    mpz_class norm2sq = 0;
    for (const auto& c : F) norm2sq += c * c;
    mpz_class bound = 4 * (sqrt(norm2sq) + 1) + 1;
    int steps = 1;
    mpz_class pB(static_cast<unsigned long>(p));
    while (pB <= 2 * bound) {
        pB *= static_cast<unsigned long>(p);
        ++steps;
    }

    std::vector<ZPoly> lifted_lin, lifted_quad;
    for (const auto& g : linears) lifted_lin.push_back(hensel_lift(F, g, p, steps));
    for (const auto& g : quads) lifted_quad.push_back(hensel_lift(F, g, p, steps));

    // integer roots first
    std::vector<bool> used(lifted_lin.size(), false);
    for (std::size_t i = 0; i < lifted_lin.size(); ++i) {
        mpz_class r = -symmetric(lifted_lin[i][0], pB);
        if (zeval(F, r) == 0) {
            fac = {-r, mpz_class(1)};
            return true;
        }
    }
    // single mod-p quadratics
    ZPoly quot;
    for (const auto& g : lifted_quad) {
        ZPoly cand{symmetric(g[0], pB), symmetric(g[1], pB), mpz_class(1)};
        if (zdiv_exact_monic(F, cand, quot)) {
            fac = cand;
            return true;
        }
    }
    // pairs of mod-p linears
    for (std::size_t i = 0; i < lifted_lin.size(); ++i) {
        for (std::size_t j = i + 1; j < lifted_lin.size(); ++j) {
            ZPoly prod = zmul(lifted_lin[i], lifted_lin[j]);
            zreduce_mod(prod, pB);
            ZPoly cand{symmetric(prod[0], pB), symmetric(prod[1], pB), mpz_class(1)};
            if (zdiv_exact_monic(F, cand, quot)) {
                fac = cand;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

SmallFactors small_rational_factors(const RealPolynomial<Rational>& f) {
    if (!f.is_monic()) throw std::invalid_argument("small_rational_factors: not monic");
    SmallFactors out;
    int n = f.degree();
    if (n < 1) {
        out.leftover = RealPolynomial<Rational>::one();
        return out;
    }

    // t -> u/d: F(u) = d^n f(u/d) is monic over Z
    mpz_class d = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.denominator().get_mpz_t());
    ZPoly F(n + 1);
    mpz_class dpow = 1;
    for (int k = n; k >= 0; --k) {
        mpq_class scaled = f.coeffs()[k].raw() * mpq_class(dpow);
        if (scaled.get_den() != 1) throw std::logic_error("denominator clearing failed");
        F[k] = scaled.get_num();
        dpow *= d;
    }

    ZPoly fac, quot;
    while (static_cast<int>(F.size()) - 1 >= 1) {
        if (!find_small_factor(F, fac)) break;
        if (fac.size() == 2) {
            out.linear_roots.emplace_back(Rational(mpq_class(-fac[0]) / mpq_class(d)));
        } else {
            Rational b(mpq_class(fac[1]) / mpq_class(d));
            Rational c(mpq_class(fac[0]) / mpq_class(d * d));
            out.quads.emplace_back(b, c);
        }
        if (!zdiv_exact_monic(F, fac, quot)) throw std::logic_error("verified factor fails to divide");
        F = quot;
    }

    // map leftover back: G(t) = F(d t) / d^m, coefficient of t^k = F[k] / d^(m-k)
    int m = static_cast<int>(F.size()) - 1;
    std::vector<Rational> rest(m + 1);
    mpz_class dpw = 1;
    for (int k = m; k >= 0; --k) {
        rest[k] = Rational(mpq_class(F[k]) / mpq_class(dpw));
        dpw *= d;
    }
    out.leftover = RealPolynomial<Rational>(std::move(rest));
    return out;
}

}  // namespace mf::detail
