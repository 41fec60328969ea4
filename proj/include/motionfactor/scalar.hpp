// Scalar abstraction: the whole library is generic over one scalar type,
// either exact rationals (GMP-backed) or binary64. Exact mode has decidable
// equality; float mode replaces equality by |a-b| <= tol with a configurable
// tolerance.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace mf {

// Value-type wrapper around mpq_class. Keeps fractions canonical (reduced,
// positive denominator) and hides gmpxx expression templates from the
// templated layers above.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(long n) : v_(n) {}                // NOLINT
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Accepts "p", "p/q", with optional sign; returns nullopt on junk.
    static std::optional<Rational> parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

private:
    mpq_class v_;
};

inline std::optional<Rational> Rational::parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    // mpq set_str is permissive about whitespace and leading junk in ways we
    // do not want in a file format; validate shape first.
    std::size_t i = 0;
    auto digits = [&](std::size_t& k) {
        std::size_t start = k;
        while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
        return k > start;
    };
    if (s[i] == '+' || s[i] == '-') ++i;
    if (!digits(i)) return std::nullopt;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        if (s[i] == '-' || s[i] == '+') return std::nullopt;  // sign lives on the numerator
        if (!digits(i) || i != s.size()) return std::nullopt;
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return Rational(std::move(q));
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
    static Rational from_int(long v) { return Rational(v); }
    static double to_double(const Rational& a) { return a.to_double(); }
    static const char* mode_name() { return "exact"; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    // Per-thread tolerance; the CLI sets it from --tol (default 1e-10).
    static double& tolerance() {
        static thread_local double tol = 1e-10;
        return tol;
    }
    static bool is_zero(double a) { return std::fabs(a) <= tolerance(); }
    static bool equal(double a, double b) { return std::fabs(a - b) <= tolerance(); }
    static double from_int(long v) { return static_cast<double>(v); }
    static double to_double(double a) { return a; }
    static const char* mode_name() { return "float"; }
};

template <class S>
S scalar_abs(const S& a) {
    if constexpr (scalar_traits<S>::is_exact)
        return a.abs();
    else
        return std::fabs(a);
}

}  // namespace mf
