#pragma once

#include <complex>
#include <vector>

#include "pchg/coloring.hpp"
#include "pchg/multimatrix.hpp"

namespace pchg {

using Complex = std::complex<double>;

struct EigenPair {
    Complex lambda;
    std::vector<Complex> x;
    double residual = 0.0;
};

// Univariate polynomial with exact rational coefficients, ascending degree.
struct RatPoly {
    std::vector<Rational> coeffs;

    int degree() const;
    friend bool operator==(const RatPoly& a, const RatPoly& b) = default;
};

// Complex evaluation of A ∘ x, component i = sum a[i,i2..id] x[i2]...x[id].
std::vector<Complex> apply_vector_complex(const MultiMatrix& a, const std::vector<Complex>& x);

// Max-norm of A ∘ x - lambda * (x_i^{d-1})_i.
double eigen_residual(const MultiMatrix& a, Complex lambda, const std::vector<Complex>& x);

bool verify_eigenpair(const MultiMatrix& a, Complex lambda, const std::vector<Complex>& x,
                      double tol);

// (lambda, Px) for the color matrix of f; the caller re-verifies against the
// larger matrix. The lifted vector attains at most k distinct values.
EigenPair lift_eigenpair(const Coloring& f, const EigenPair& pair);

// The reduced parameters of a 2-coloring of a 3-uniform hypergraph: the
// 3-dimensional order-2 matrix is a, b, b, c / chi*b, chi*c, chi*c, d over
// indices 000,001,010,011 / 100,101,110,111, with chi the class-size ratio
// n_0/n_1.
struct TwoColorThreeUniformParams {
    Rational a, b, c, d, chi;

    MultiMatrix tensor() const;
};

// Fits the template to a 3-dimensional order-2 matrix; rejects matrices that
// do not match it. Without an explicit chi the ratio is inferred from the
// mixed entries (chi = 1 if both b and c vanish).
TwoColorThreeUniformParams fit_two_color_params(const MultiMatrix& s);
TwoColorThreeUniformParams fit_two_color_params(const MultiMatrix& s, const Rational& chi);
TwoColorThreeUniformParams two_color_params(const Hypergraph& h, const Coloring& f);

// Quartic characteristic polynomial of the template matrix, exact rational
// coefficients, degree 4 = n(d-1)^{n-1} for n = 2, d = 3.
RatPoly charpoly_2color_3uniform(const TwoColorThreeUniformParams& params);

// Eigenpairs of a d-dimensional matrix of order 2 via three branches: the
// axis vectors (1,0), (0,1) and x = (t,1) with t a root of the polynomial
// eliminating lambda between the two components. Each returned pair verifies
// at 1e-9; eigenvalues are deduplicated at 1e-9 and ordered by (re, im).
std::vector<EigenPair> eigen_order2(const MultiMatrix& s);

// Parameter matrix of a k-transversal in a d-uniform r-regular hypergraph,
// with color 0 the transversal: entries r / C(d-1, k-1) at indices starting
// with 0 and carrying exactly k zeros, r / C(d-1, k) at indices starting
// with 1 and carrying exactly k zeros.
MultiMatrix transversal_parameter_tensor(int d, int r, int k);

// {0} together with r * xi^{jk} for j = 1..d, xi = exp(2 pi i / d),
// deduplicated; d / gcd(k, d) distinct nonzero values.
std::vector<Complex> transversal_eigenvalues(int d, int r, int k);

// All complex roots with multiplicity by simultaneous (Durand-Kerner)
// iteration on the monic normalization; deterministic order by (re, im).
std::vector<Complex> poly_roots(const RatPoly& p);
std::vector<Complex> poly_roots(std::vector<Complex> coeffs);

Complex poly_eval(const std::vector<Complex>& coeffs, Complex x);

} // namespace pchg
