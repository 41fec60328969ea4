// Splitting the norm polynomial into n distinct monic quadratics, each
// irreducible or the square of a linear polynomial (the extended genericity
// test). Exact mode factors over the rationals; float mode pairs numeric
// roots of the companion matrix.
#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <vector>

#include "error.hpp"
#include "factor_small.hpp"
#include "motion_poly.hpp"
#include "quadratic.hpp"
#include "real_poly.hpp"

namespace mf {

enum class GenericityFailure {
    None,
    NotMotion,
    RealRoot,
    RepeatedFactor,
    NeedsAlgebraicExtension,
};

inline const char* to_string(GenericityFailure f) {
    switch (f) {
        case GenericityFailure::None: return "none";
        case GenericityFailure::NotMotion: return "not_motion";
        case GenericityFailure::RealRoot: return "real_root";
        case GenericityFailure::RepeatedFactor: return "repeated_factor";
        case GenericityFailure::NeedsAlgebraicExtension: return "needs_algebraic_extension";
    }
    return "?";
}

template <class S>
struct GenericityReport {
    bool is_motion = false;
    std::vector<QuadraticFactor<S>> factors;  // canonical (b, c) order
    bool extended_generic = false;            // n distinct quadratics, squares allowed
    bool strictly_generic = false;            // all irreducible and squarefree norm
    GenericityFailure failure = GenericityFailure::None;
    int unsplit_degree = 0;                   // leftover degree on algebraic-extension failure

    bool ok() const { return extended_generic; }
};

namespace detail {

inline void sort_canonical(std::vector<QuadraticFactor<Rational>>& fs) {
    std::sort(fs.begin(), fs.end());
}
inline void sort_canonical(std::vector<QuadraticFactor<double>>& fs) {
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        if (a.b != b.b) return a.b < b.b;
        return a.c < b.c;
    });
}

inline GenericityReport<Rational> split_norm(const RealPolynomial<Rational>& n) {
    GenericityReport<Rational> rep;
    rep.is_motion = true;
    if (n.degree() < 2 || n.degree() % 2 != 0)
        throw std::invalid_argument("quadratic_factors: degree must be even and >= 2");
    if (!n.is_monic()) throw std::invalid_argument("quadratic_factors: not monic");

    auto parts = squarefree_decomposition(n);  // n = prod parts[k]^(k+1)
    for (std::size_t k = 2; k < parts.size(); ++k) {
        if (parts[k].degree() > 0) {
            rep.failure = GenericityFailure::RepeatedFactor;
            return rep;
        }
    }
    RealPolynomial<Rational> q1 =
        parts.size() > 0 && parts[0].degree() > 0 ? parts[0] : RealPolynomial<Rational>::one();
    RealPolynomial<Rational> q2 =
        parts.size() > 1 && parts[1].degree() > 0 ? parts[1] : RealPolynomial<Rational>::one();

    // multiplicity-two part: must split into distinct rational linear factors.
    // Complex roots here mean a quadratic appears twice in any M-decomposition;
    // irrational real roots mean the (t - lambda)^2 factors need an extension.
    if (q2.degree() > 0) {
        if (sturm_real_root_count(q2) < q2.degree()) {
            rep.failure = GenericityFailure::RepeatedFactor;
            return rep;
        }
        auto sf = detail::small_rational_factors(q2);
        if (static_cast<int>(sf.linear_roots.size()) != q2.degree()) {
            rep.failure = GenericityFailure::NeedsAlgebraicExtension;
            rep.unsplit_degree = 2 * (q2.degree() - static_cast<int>(sf.linear_roots.size()));
            return rep;
        }
        for (const auto& lam : sf.linear_roots)
            rep.factors.push_back(QuadraticFactor<Rational>::linear_square(lam));
    }

    // multiplicity-one part: no real roots allowed, then split into quadratics
    if (q1.degree() > 0) {
        if (sturm_real_root_count(q1) > 0) {
            rep.failure = GenericityFailure::RealRoot;
            return rep;
        }
        auto sf = detail::small_rational_factors(q1);
        // no real roots => no linear factors; quadratic factors are irreducible
        for (const auto& [b, c] : sf.quads)
            rep.factors.push_back(QuadraticFactor<Rational>::irreducible(b, c));
        if (sf.leftover.degree() > 0) {
            rep.failure = GenericityFailure::NeedsAlgebraicExtension;
            rep.unsplit_degree = sf.leftover.degree();
            sort_canonical(rep.factors);
            return rep;
        }
    }

    sort_canonical(rep.factors);
    rep.extended_generic = static_cast<int>(rep.factors.size()) * 2 == n.degree();
    rep.strictly_generic = rep.extended_generic && q2.degree() == 0;
    return rep;
}

inline GenericityReport<double> split_norm(const RealPolynomial<double>& n) {
    GenericityReport<double> rep;
    rep.is_motion = true;
    int deg = n.degree();
    if (deg < 2 || deg % 2 != 0)
        throw std::invalid_argument("quadratic_factors: degree must be even and >= 2");
    if (!n.is_monic()) throw std::invalid_argument("quadratic_factors: not monic");
    double tol = scalar_traits<double>::tolerance();

    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -n.coeffs()[i];
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    std::vector<std::complex<double>> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()[i];

    std::vector<double> reals;
    std::vector<std::complex<double>> upper, lower;
    for (const auto& r : roots) {
        if (std::fabs(r.imag()) <= tol * (1.0 + std::abs(r)))
            reals.push_back(r.real());
        else if (r.imag() > 0)
            upper.push_back(r);
        else
            lower.push_back(r);
    }
    if (upper.size() != lower.size()) {
        rep.failure = GenericityFailure::RealRoot;  // stray unpairable root
        return rep;
    }
    // conjugate pairing by nearest match
    for (const auto& u : upper) {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < lower.size(); ++i) {
            double dd = std::abs(std::conj(u) - lower[i]);
            if (dd < bd) {
                bd = dd;
                best = i;
            }
        }
        std::complex<double> r = 0.5 * (u + std::conj(lower[best]));
        lower.erase(lower.begin() + static_cast<long>(best));
        rep.factors.push_back(
            QuadraticFactor<double>::irreducible(-2.0 * r.real(), std::norm(r)));
    }
    // real roots must come in coincident pairs (squares of linear factors);
    // a numerically doubled root splits by about sqrt(eps), so pair with a
    // looser tolerance than scalar equality
    std::sort(reals.begin(), reals.end());
    double pair_tol = std::max(std::sqrt(tol), 100.0 * tol);
    for (std::size_t i = 0; i < reals.size();) {
        if (i + 1 < reals.size() &&
            std::fabs(reals[i + 1] - reals[i]) <= pair_tol * (1.0 + std::fabs(reals[i]))) {
            rep.factors.push_back(
                QuadraticFactor<double>::linear_square(0.5 * (reals[i] + reals[i + 1])));
            i += 2;
        } else {
            rep.failure = GenericityFailure::RealRoot;
            return rep;
        }
    }

    sort_canonical(rep.factors);
    // distinctness on coefficient distance
    for (std::size_t i = 0; i + 1 < rep.factors.size(); ++i) {
        double db = std::fabs(rep.factors[i].b - rep.factors[i + 1].b);
        double dc = std::fabs(rep.factors[i].c - rep.factors[i + 1].c);
        if (std::max(db, dc) <= 10.0 * tol) {
            rep.failure = GenericityFailure::RepeatedFactor;
            return rep;
        }
    }
    rep.extended_generic = static_cast<int>(rep.factors.size()) * 2 == deg;
    bool any_square = false;
    for (const auto& f : rep.factors)
        any_square |= f.kind == QuadraticFactor<double>::Kind::LinearSquare;
    rep.strictly_generic = rep.extended_generic && !any_square;
    return rep;
}

}  // namespace detail

// Split a monic real polynomial of even degree into monic quadratics.
template <class S>
GenericityReport<S> quadratic_factors(const RealPolynomial<S>& n) {
    return detail::split_norm(n);
}

// Full genericity check of a motion polynomial: norm polynomial, quadratic
// split, and (exact mode) the independent squarefree + Sturm verdicts for
// strict genericity.
template <class S>
GenericityReport<S> is_generic(const MotionPolynomial<S>& p) {
    if (!p.is_monic()) throw std::invalid_argument("is_generic: polynomial not monic");
    GenericityReport<S> rep;
    RealPolynomial<S> n;
    try {
        n = p.norm_poly();
    } catch (const Error&) {
        rep.failure = GenericityFailure::NotMotion;
        return rep;
    }
    rep = detail::split_norm(n);
    if constexpr (scalar_traits<S>::is_exact) {
        if (rep.extended_generic && rep.strictly_generic) {
            // double-check strictness through the stated independent route
            bool squarefree = poly_gcd(n, n.derivative()).degree() == 0;
            bool no_real_roots = sturm_real_root_count(n) == 0;
            rep.strictly_generic = squarefree && no_real_roots;
        }
    }
    return rep;
}

}  // namespace mf
