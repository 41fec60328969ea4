// Left polynomials over the dual quaternions with central indeterminate t.
// The single evaluation convention is right evaluation (coefficients on the
// left, powers of the argument on the right); there is no left-evaluation
// API.
#pragma once

#include <utility>
#include <vector>

#include "dual_quaternion.hpp"
#include "error.hpp"
#include "quadratic.hpp"
#include "real_poly.hpp"

namespace mf {

template <class S>
class MotionPolynomial {
public:
    MotionPolynomial() = default;
    explicit MotionPolynomial(std::vector<DualQuaternion<S>> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }
    static MotionPolynomial constant(const DualQuaternion<S>& h) {
        return MotionPolynomial(std::vector<DualQuaternion<S>>{h});
    }
    static MotionPolynomial one() { return constant(DualQuaternion<S>::one()); }
    // t - h
    static MotionPolynomial linear(const DualQuaternion<S>& h) {
        return MotionPolynomial({-h, DualQuaternion<S>::one()});
    }
    static MotionPolynomial from_real(const RealPolynomial<S>& p) {
        std::vector<DualQuaternion<S>> out;
        out.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) out.push_back(DualQuaternion<S>::from_scalar(c));
        return MotionPolynomial(std::move(out));
    }
    static MotionPolynomial from_quadratic(const QuadraticFactor<S>& m) {
        return from_real(m.as_real_poly());
    }

    const std::vector<DualQuaternion<S>>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const DualQuaternion<S>& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == DualQuaternion<S>::one(); }
    DualQuaternion<S> coeff(std::size_t d) const {
        return d < c_.size() ? c_[d] : DualQuaternion<S>::zero();
    }

    MotionPolynomial operator+(const MotionPolynomial& o) const {
        std::vector<DualQuaternion<S>> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
        return MotionPolynomial(std::move(out));
    }
    MotionPolynomial operator-(const MotionPolynomial& o) const {
        std::vector<DualQuaternion<S>> out(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
        return MotionPolynomial(std::move(out));
    }
    // coefficient convolution; the coefficient product is non-commutative
    MotionPolynomial operator*(const MotionPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<DualQuaternion<S>> out(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                out[i + j] = out[i + j] + c_[i] * o.c_[j];
        return MotionPolynomial(std::move(out));
    }

    friend bool operator==(const MotionPolynomial& a, const MotionPolynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    // coefficientwise conjugation; conj(AB) = conj(B) conj(A)
    MotionPolynomial conj() const {
        std::vector<DualQuaternion<S>> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(c.conj());
        return MotionPolynomial(std::move(out));
    }

    // right evaluation: sum of a_d h^d
    DualQuaternion<S> evaluate(const DualQuaternion<S>& h) const {
        DualQuaternion<S> acc = DualQuaternion<S>::zero();
        DualQuaternion<S> pw = DualQuaternion<S>::one();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            acc = acc + c_[i] * pw;
            pw = pw * h;
        }
        return acc;
    }

    // evaluation at a real parameter (t is central, so plain Horner works)
    DualQuaternion<S> evaluate_real(const S& t) const {
        DualQuaternion<S> acc = DualQuaternion<S>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc.scaled(t) + *it;
        return acc;
    }

    // P Pbar; succeeds iff every coefficient of the product is strictly real.
    RealPolynomial<S> norm_poly() const {
        MotionPolynomial n = (*this) * conj();
        std::vector<S> out;
        out.reserve(n.c_.size());
        for (const auto& c : n.c_) {
            using T = scalar_traits<S>;
            bool real = c.p.vec().is_zero() && T::is_zero(c.q.w) && c.q.vec().is_zero();
            if (!real)
                throw Error(errc::not_motion_polynomial,
                            "P conj(P) has a coefficient that is not strictly real");
            out.push_back(c.p.w);
        }
        return RealPolynomial<S>(std::move(out));
    }

    bool is_motion() const {
        try {
            norm_poly();
            return true;
        } catch (const Error&) {
            return false;
        }
    }

    // max |coefficient component|, as double; used for float-mode residuals
    double sup_norm() const {
        double m = 0;
        for (const auto& c : c_)
            for (const auto& v : c.flat())
                m = std::max(m, std::fabs(scalar_traits<S>::to_double(v)));
        return m;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<DualQuaternion<S>> c_;
};

// P1 = Q P2 + R with deg R < deg P2 (unique); P2 must be monic.
template <class S>
std::pair<MotionPolynomial<S>, MotionPolynomial<S>> div_right(const MotionPolynomial<S>& p1,
                                                              const MotionPolynomial<S>& p2) {
    if (!p2.is_monic())
        throw Error(errc::non_monic_divisor, "right division needs a monic divisor");
    std::vector<DualQuaternion<S>> rem(p1.coeffs());
    int m = p2.degree();
    int dq = p1.degree() - m;
    std::vector<DualQuaternion<S>> quot(dq >= 0 ? dq + 1 : 0);
    for (int d = p1.degree(); d >= m; --d) {
        DualQuaternion<S> a = rem[d];
        if (!a.is_zero()) {
            quot[d - m] = a;
            for (int i = 0; i <= m; ++i)
                rem[d - m + i] = rem[d - m + i] - a * p2.coeffs()[i];
        } else {
            rem[d] = DualQuaternion<S>::zero();
        }
    }
    return {MotionPolynomial<S>(std::move(quot)), MotionPolynomial<S>(std::move(rem))};
}

// Unique h with P(h) = M(h) = 0 (Lemma: common root of P and a quadratic
// divisor of its norm polynomial). Computed from the linear remainder
// R = r1 t + r0 as h = -r1^-1 r0.
template <class S>
DualQuaternion<S> common_root(const MotionPolynomial<S>& p, const QuadraticFactor<S>& m) {
    RealPolynomial<S> n = p.norm_poly();
    if (!divmod(n, m.as_real_poly()).second.is_zero())
        throw Error(errc::not_a_divisor, "quadratic does not divide the norm polynomial");
    auto [q, r] = div_right(p, MotionPolynomial<S>::from_quadratic(m));
    DualQuaternion<S> r1 = r.coeff(1);
    DualQuaternion<S> r0 = r.coeff(0);
    if (scalar_traits<S>::is_zero(r1.norm().re))
        throw Error(errc::degenerate_primal,
                    "remainder has non-invertible leading coefficient (M divides primal(P))");
    return -(r1.inverse() * r0);
}

}  // namespace mf
