// Monic real quadratic t^2 + b t + c. These are the building blocks of the
// norm polynomial: irreducible quadratics belong to rotations, squares of
// linear polynomials to translations.
#pragma once

#include "dual_quaternion.hpp"
#include "real_poly.hpp"
#include "scalar.hpp"

namespace mf {

template <class S>
struct QuadraticFactor {
    enum class Kind { Irreducible, LinearSquare };

    S b{}, c{};
    Kind kind = Kind::Irreducible;
    S lambda{};  // meaningful for LinearSquare: b = -2 lambda, c = lambda^2

    static QuadraticFactor irreducible(S b, S c) { return {b, c, Kind::Irreducible, S{}}; }
    static QuadraticFactor linear_square(S lam) {
        return {scalar_traits<S>::from_int(-2) * lam, lam * lam, Kind::LinearSquare, lam};
    }

    S discriminant() const { return b * b - scalar_traits<S>::from_int(4) * c; }

    RealPolynomial<S> as_real_poly() const {
        return RealPolynomial<S>({c, b, scalar_traits<S>::from_int(1)});
    }

    S evaluate(const S& t) const { return t * t + b * t + c; }

    friend bool operator==(const QuadraticFactor& u, const QuadraticFactor& v) {
        using T = scalar_traits<S>;
        return T::equal(u.b, v.b) && T::equal(u.c, v.c);
    }
    // (b, c) lexicographic; used for the canonical factor ordering.
    friend bool operator<(const QuadraticFactor& u, const QuadraticFactor& v) {
        if (!scalar_traits<S>::equal(u.b, v.b)) return u.b < v.b;
        return !scalar_traits<S>::equal(u.c, v.c) && u.c < v.c;
    }
};

// t^2 - (h + hbar) t + h hbar, the unique monic real quadratic with M(h) = 0.
// pre: h is a rotation or translation quaternion.
template <class S>
QuadraticFactor<S> minimal_poly(const DualQuaternion<S>& h) {
    DisplacementClass cls = classify(h);
    if (cls != DisplacementClass::Rotation && cls != DisplacementClass::Translation)
        throw std::invalid_argument(
            std::string("minimal_poly: not a rotation/translation quaternion (") +
            to_string(cls) + ")");
    S b = -h.trace().re;
    S c = h.norm().re;
    if (cls == DisplacementClass::Translation) {
        // discriminant is zero: M = (t - p_w)^2
        return QuadraticFactor<S>{b, c, QuadraticFactor<S>::Kind::LinearSquare, h.p.w};
    }
    return QuadraticFactor<S>::irreducible(b, c);
}

}  // namespace mf
