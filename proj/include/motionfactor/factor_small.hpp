// Extraction of all monic rational factors of degree <= 2 from a squarefree
// monic rational polynomial. This is exactly what the norm-polynomial split
// needs: irreducible quadratics from the squarefree part and rational roots
// from the repeated part. Anything that survives has only irreducible
// rational factors of degree >= 3 and requires an algebraic field extension.
#pragma once

#include <utility>
#include <vector>

#include "real_poly.hpp"
#include "scalar.hpp"

namespace mf::detail {

struct SmallFactors {
    std::vector<Rational> linear_roots;                  // factors (t - r)
    std::vector<std::pair<Rational, Rational>> quads;    // monic t^2 + b t + c as (b, c)
    RealPolynomial<Rational> leftover;                   // monic, no rational deg <= 2 factors
};

// pre: f monic, squarefree, degree >= 1.
SmallFactors small_rational_factors(const RealPolynomial<Rational>& f);

}  // namespace mf::detail
