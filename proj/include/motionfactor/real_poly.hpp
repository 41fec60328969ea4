// Commutative polynomials over the scalar field, coefficients ascending.
// Carries the exact-mode toolbox needed by the factor extraction: gcd,
// Yun squarefree decomposition and Sturm-chain real root counting.
#pragma once

#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace mf {

template <class S>
class RealPolynomial {
public:
    RealPolynomial() = default;
    explicit RealPolynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static RealPolynomial constant(const S& v) { return RealPolynomial(std::vector<S>{v}); }
    static RealPolynomial one() { return constant(scalar_traits<S>::from_int(1)); }

    const std::vector<S>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const {
        return !c_.empty() && scalar_traits<S>::equal(c_.back(), scalar_traits<S>::from_int(1));
    }
    const S& leading() const { return c_.back(); }
    S coeff(std::size_t d) const { return d < c_.size() ? c_[d] : S{}; }

    S evaluate(const S& t) const {
        S acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    RealPolynomial operator+(const RealPolynomial& o) const {
        std::vector<S> out(std::max(c_.size(), o.c_.size()), S{});
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
        return RealPolynomial(std::move(out));
    }
    RealPolynomial operator-(const RealPolynomial& o) const {
        std::vector<S> out(std::max(c_.size(), o.c_.size()), S{});
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
        return RealPolynomial(std::move(out));
    }
    RealPolynomial operator*(const RealPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<S> out(c_.size() + o.c_.size() - 1, S{});
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
        return RealPolynomial(std::move(out));
    }
    RealPolynomial scaled(const S& s) const {
        std::vector<S> out = c_;
        for (auto& v : out) v *= s;
        return RealPolynomial(std::move(out));
    }
    RealPolynomial monic() const {
        if (is_zero()) return {};
        S inv = scalar_traits<S>::from_int(1) / c_.back();
        return scaled(inv);
    }

    friend bool operator==(const RealPolynomial& a, const RealPolynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!scalar_traits<S>::equal(a.c_[i], b.c_[i])) return false;
        return true;
    }

    RealPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            out[i - 1] = c_[i] * scalar_traits<S>::from_int(static_cast<long>(i));
        return RealPolynomial(std::move(out));
    }

    // Division over the field; divisor need not be monic.
    friend std::pair<RealPolynomial, RealPolynomial> divmod(const RealPolynomial& a,
                                                            const RealPolynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<S> rem = a.c_;
        int db = b.degree();
        std::vector<S> quot(a.degree() >= db ? a.degree() - db + 1 : 0, S{});
        S lead_inv = scalar_traits<S>::from_int(1) / b.leading();
        for (int d = a.degree(); d >= db; --d) {
            S f = rem[d] * lead_inv;
            if (!scalar_traits<S>::is_zero(f)) {
                quot[d - db] = f;
                for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.c_[i];
            }
            rem[d] = S{};
        }
        return {RealPolynomial(std::move(quot)), RealPolynomial(std::move(rem))};
    }

    bool divides(const RealPolynomial& a) const { return divmod(a, *this).second.is_zero(); }

private:
    void normalize() {
        while (!c_.empty() && scalar_traits<S>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

// Monic gcd; exact mode only (float gcd is ill-posed).
template <class S>
RealPolynomial<S> poly_gcd(RealPolynomial<S> a, RealPolynomial<S> b) {
    static_assert(scalar_traits<S>::is_exact, "poly_gcd requires exact scalars");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// Yun's algorithm: f = prod part[k]^(k+1), parts monic and squarefree,
// pairwise coprime. part[k] may be constant 1.
template <class S>
std::vector<RealPolynomial<S>> squarefree_decomposition(const RealPolynomial<S>& f) {
    static_assert(scalar_traits<S>::is_exact, "squarefree decomposition requires exact scalars");
    std::vector<RealPolynomial<S>> parts;
    if (f.degree() < 1) return parts;
    RealPolynomial<S> a = f.monic();
    RealPolynomial<S> d = a.derivative();
    RealPolynomial<S> g = poly_gcd(a, d);
    RealPolynomial<S> w = divmod(a, g).first;
    RealPolynomial<S> y = divmod(d, g).first;
    RealPolynomial<S> z = y - w.derivative();
    while (!(w.degree() == 0)) {
        RealPolynomial<S> p = poly_gcd(w, z);
        parts.push_back(p.monic());
        w = divmod(w, p).first;
        y = divmod(z, p).first;
        z = y - w.derivative();
    }
    // Drop trailing constant parts.
    while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
    return parts;
}

// Number of distinct real roots via the Sturm chain (signs at -inf/+inf).
template <class S>
int sturm_real_root_count(const RealPolynomial<S>& f) {
    static_assert(scalar_traits<S>::is_exact, "Sturm chain requires exact scalars");
    if (f.degree() < 1) return 0;
    // Work on the squarefree part so multiple roots count once.
    RealPolynomial<S> g = divmod(f, poly_gcd(f, f.derivative())).first;
    std::vector<RealPolynomial<S>> chain{g, g.derivative()};
    while (!chain.back().is_zero()) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(r.scaled(scalar_traits<S>::from_int(-1)));
    }
    chain.pop_back();
    auto sign_at_inf = [](const RealPolynomial<S>& p, bool pos) {
        if (p.is_zero()) return 0;
        int s = p.leading() > S{} ? 1 : -1;
        if (!pos && p.degree() % 2 == 1) s = -s;
        return s;
    };
    auto variations = [&](bool pos) {
        int count = 0, prev = 0;
        for (const auto& p : chain) {
            int s = sign_at_inf(p, pos);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

}  // namespace mf
