// Dual numbers, quaternions and dual quaternions with the kinematic layer:
// Study condition, displacement classification, the point action and screw
// axis extraction. Basis order is (1,i,j,k) primal then (eps, eps i, eps j,
// eps k) everywhere, including I/O.
//
// All values are immutable after construction and every operation is pure.
#pragma once

#include <array>
#include <string>

#include "error.hpp"
#include "scalar.hpp"

namespace mf {

template <class S>
struct Vec3 {
    S x{}, y{}, z{};

    bool is_zero() const {
        using T = scalar_traits<S>;
        return T::is_zero(x) && T::is_zero(y) && T::is_zero(z);
    }
    friend bool operator==(const Vec3& a, const Vec3& b) {
        using T = scalar_traits<S>;
        return T::equal(a.x, b.x) && T::equal(a.y, b.y) && T::equal(a.z, b.z);
    }
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(const S& s) const { return {x * s, y * s, z * s}; }
};

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// a + eps b with eps^2 = 0.
template <class S>
struct DualNumber {
    S re{}, du{};

    DualNumber operator+(const DualNumber& o) const { return {re + o.re, du + o.du}; }
    DualNumber operator-(const DualNumber& o) const { return {re - o.re, du - o.du}; }
    DualNumber operator*(const DualNumber& o) const {
        return {re * o.re, re * o.du + du * o.re};
    }
    // (re + eps du)^-1 = 1/re - eps du/re^2; needs re != 0.
    DualNumber inverse() const {
        if (scalar_traits<S>::is_zero(re))
            throw Error(errc::non_invertible, "dual number with zero real part");
        S inv = scalar_traits<S>::from_int(1) / re;
        return {inv, -du * inv * inv};
    }
    bool is_zero() const {
        using T = scalar_traits<S>;
        return T::is_zero(re) && T::is_zero(du);
    }
    friend bool operator==(const DualNumber& a, const DualNumber& b) {
        using T = scalar_traits<S>;
        return T::equal(a.re, b.re) && T::equal(a.du, b.du);
    }
};

template <class S>
struct Quaternion {
    S w{}, x{}, y{}, z{};

    static Quaternion zero() { return {}; }
    static Quaternion one() { return {scalar_traits<S>::from_int(1), S{}, S{}, S{}}; }

    Vec3<S> vec() const { return {x, y, z}; }

    Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    Quaternion scaled(const S& s) const { return {w * s, x * s, y * s, z * s}; }
    Quaternion conj() const { return {w, -x, -y, -z}; }

    bool is_zero() const {
        using T = scalar_traits<S>;
        return T::is_zero(w) && T::is_zero(x) && T::is_zero(y) && T::is_zero(z);
    }
    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        using T = scalar_traits<S>;
        return T::equal(a.w, b.w) && T::equal(a.x, b.x) && T::equal(a.y, b.y) &&
               T::equal(a.z, b.z);
    }
};

enum class DisplacementClass {
    Rotation,
    Translation,
    GeneralDisplacement,
    Ideal,
    Invalid,
};

inline const char* to_string(DisplacementClass c) {
    switch (c) {
        case DisplacementClass::Rotation: return "rotation";
        case DisplacementClass::Translation: return "translation";
        case DisplacementClass::GeneralDisplacement: return "general_displacement";
        case DisplacementClass::Ideal: return "ideal";
        case DisplacementClass::Invalid: return "invalid";
    }
    return "?";
}

enum class AxisKind { Revolute, Prismatic };

// Plucker data of a joint axis. In exact mode direction/moment are stored
// unnormalized with the squared direction magnitude recorded (|h_v| is
// generally irrational); in float mode the direction is unit length.
template <class S>
struct ScrewAxis {
    Vec3<S> direction{};
    Vec3<S> moment{};
    AxisKind kind = AxisKind::Revolute;
    S dir_norm_sq{};
};

template <class S>
struct DualQuaternion {
    Quaternion<S> p{};  // primal
    Quaternion<S> q{};  // dual

    static DualQuaternion zero() { return {}; }
    static DualQuaternion one() { return {Quaternion<S>::one(), Quaternion<S>::zero()}; }
    static DualQuaternion from_scalar(const S& s) {
        return {{s, S{}, S{}, S{}}, Quaternion<S>::zero()};
    }

    DualQuaternion operator+(const DualQuaternion& o) const { return {p + o.p, q + o.q}; }
    DualQuaternion operator-(const DualQuaternion& o) const { return {p - o.p, q - o.q}; }
    DualQuaternion operator-() const { return {-p, -q}; }
    // eps^2 = 0.
    DualQuaternion operator*(const DualQuaternion& o) const {
        return {p * o.p, p * o.q + q * o.p};
    }
    DualQuaternion scaled(const S& s) const { return {p.scaled(s), q.scaled(s)}; }

    DualQuaternion conj() const { return {p.conj(), q.conj()}; }

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    friend bool operator==(const DualQuaternion& a, const DualQuaternion& b) {
        return a.p == b.p && a.q == b.q;
    }

    std::array<S, 8> flat() const { return {p.w, p.x, p.y, p.z, q.w, q.x, q.y, q.z}; }

    // h hbar; always a dual number. Its dual part vanishing is the Study
    // condition.
    DualNumber<S> norm() const {
        S two = scalar_traits<S>::from_int(2);
        S re = p.w * p.w + p.x * p.x + p.y * p.y + p.z * p.z;
        S du = two * (p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z);
        return {re, du};
    }

    // h + hbar.
    DualNumber<S> trace() const {
        S two = scalar_traits<S>::from_int(2);
        return {two * p.w, two * q.w};
    }

    bool on_study_quadric() const { return scalar_traits<S>::is_zero(norm().du); }

    DualQuaternion inverse() const {
        DualNumber<S> n = norm();
        if (scalar_traits<S>::is_zero(n.re))
            throw Error(errc::non_invertible, "primal part of norm is zero");
        DualNumber<S> ninv = n.inverse();
        DualQuaternion c = conj();
        // (a + eps b)(r + eps d) = a r + eps(a d + b r)
        return {c.p.scaled(ninv.re), c.p.scaled(ninv.du) + c.q.scaled(ninv.re)};
    }
};

template <class S>
DisplacementClass classify(const DualQuaternion<S>& h) {
    using T = scalar_traits<S>;
    if (h.is_zero())
        throw std::invalid_argument("classify: zero dual quaternion");
    if (h.p.is_zero()) return DisplacementClass::Ideal;
    if (!T::is_zero(h.norm().du)) return DisplacementClass::Invalid;
    if (!T::is_zero(h.q.w)) return DisplacementClass::GeneralDisplacement;
    if (!h.p.vec().is_zero()) return DisplacementClass::Rotation;
    return DisplacementClass::Translation;
}

// v |-> (p v pbar + q pbar) / (p pbar), with v embedded as a pure quaternion.
// Orientation-preserving isometry; projectively invariant in h.
template <class S>
Vec3<S> act_on_point(const DualQuaternion<S>& h, const Vec3<S>& v) {
    DisplacementClass c = classify(h);
    if (c == DisplacementClass::Ideal || c == DisplacementClass::Invalid)
        throw Error(errc::evaluation_domain,
                    std::string("act_on_point: pose is ") + to_string(c));
    Quaternion<S> vq{S{}, v.x, v.y, v.z};
    Quaternion<S> pc = h.p.conj();
    Quaternion<S> num = h.p * vq * pc + h.q * pc;
    S pp = h.p.w * h.p.w + h.p.x * h.p.x + h.p.y * h.p.y + h.p.z * h.p.z;
    S inv = scalar_traits<S>::from_int(1) / pp;
    return {num.x * inv, num.y * inv, num.z * inv};
}

template <class S>
ScrewAxis<S> axis_of(const DualQuaternion<S>& h) {
    DisplacementClass c = classify(h);
    if (c == DisplacementClass::Translation) {
        Vec3<S> d = h.q.vec();
        if (d.is_zero())
            throw Error(errc::zero_direction, "translation with zero dual vector");
        ScrewAxis<S> a;
        a.kind = AxisKind::Prismatic;
        a.dir_norm_sq = dot(d, d);
        if constexpr (scalar_traits<S>::is_exact) {
            a.direction = d;
        } else {
            double n = std::sqrt(scalar_traits<S>::to_double(a.dir_norm_sq));
            a.direction = {d.x / n, d.y / n, d.z / n};
            a.dir_norm_sq = 1.0;
        }
        return a;
    }
    if (c != DisplacementClass::Rotation)
        throw std::invalid_argument(std::string("axis_of: not a rotation/translation (") +
                                    to_string(c) + ")");
    Vec3<S> d = h.p.vec();
    Vec3<S> m = h.q.vec();
    ScrewAxis<S> a;
    a.kind = AxisKind::Revolute;
    a.dir_norm_sq = dot(d, d);
    if constexpr (scalar_traits<S>::is_exact) {
        a.direction = d;
        a.moment = m;
    } else {
        double n = std::sqrt(scalar_traits<S>::to_double(a.dir_norm_sq));
        a.direction = {d.x / n, d.y / n, d.z / n};
        a.moment = {m.x / n, m.y / n, m.z / n};
        a.dir_norm_sq = 1.0;
    }
    return a;
}

// Commuting dual quaternions describe rotations about a common axis and can
// be merged into one higher-degree joint.
template <class S>
bool are_compatible(const DualQuaternion<S>& a, const DualQuaternion<S>& b) {
    return a * b == b * a;
}

}  // namespace mf
