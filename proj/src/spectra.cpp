#include "pchg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace pchg {

int RatPoly::degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (!coeffs[i].is_zero()) return static_cast<int>(i);
    return -1;
}

std::vector<Complex> apply_vector_complex(const MultiMatrix& a, const std::vector<Complex>& x) {
    const int d = a.dim();
    for (int axis = 1; axis < d; ++axis)
        if (static_cast<std::size_t>(a.extent(axis)) != x.size())
            fail(errc::validation, "vector length does not match matrix order");
    const std::size_t rows = static_cast<std::size_t>(a.extent(0));
    const std::size_t a_cols = a.size() / rows;
    const std::size_t inner = x.size();

    std::vector<Complex> out(rows, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t m = 0; m < a_cols; ++m) {
            const Rational& av = a[i * a_cols + m];
            if (av.is_zero()) continue;
            Complex term(av.to_double(), 0.0);
            std::size_t rest = m;
            for (int j = 0; j < d - 1; ++j) {
                term *= x[rest % inner];
                rest /= inner;
            }
            out[i] += term;
        }
    }
    return out;
}

double eigen_residual(const MultiMatrix& a, Complex lambda, const std::vector<Complex>& x) {
    const int d = a.dim();
    auto lhs = apply_vector_complex(a, x);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Complex power(1.0, 0.0);
        for (int j = 0; j < d - 1; ++j) power *= x[i];
        worst = std::max(worst, std::abs(lhs[i] - lambda * power));
    }
    return worst;
}

bool verify_eigenpair(const MultiMatrix& a, Complex lambda, const std::vector<Complex>& x,
                      double tol) {
    if (x.size() != static_cast<std::size_t>(a.extent(0)))
        fail(errc::validation, "vector length does not match matrix order");
    bool nonzero = std::any_of(x.begin(), x.end(), [](Complex c) { return std::abs(c) > 0.0; });
    if (!nonzero) fail(errc::validation, "eigenvector must be nonzero");
    return eigen_residual(a, lambda, x) <= tol;
}

EigenPair lift_eigenpair(const Coloring& f, const EigenPair& pair) {
    if (static_cast<int>(pair.x.size()) != f.color_count())
        fail(errc::validation, "eigenvector length does not match color count");
    EigenPair lifted;
    lifted.lambda = pair.lambda;
    lifted.x.resize(static_cast<std::size_t>(f.size()));
    for (int v = 0; v < f.size(); ++v)
        lifted.x[static_cast<std::size_t>(v)] = pair.x[static_cast<std::size_t>(f.color(v))];
    lifted.residual = 0.0;
    return lifted;
}

MultiMatrix TwoColorThreeUniformParams::tensor() const {
    MultiMatrix s(3, 2);
    s.at({0, 0, 0}) = a;
    s.at({0, 0, 1}) = b;
    s.at({0, 1, 0}) = b;
    s.at({0, 1, 1}) = c;
    s.at({1, 0, 0}) = chi * b;
    s.at({1, 0, 1}) = chi * c;
    s.at({1, 1, 0}) = chi * c;
    s.at({1, 1, 1}) = d;
    return s;
}

namespace {

TwoColorThreeUniformParams fit_template(const MultiMatrix& s, const Rational* chi_hint) {
    if (s.dim() != 3 || !s.cubical() || s.order() != 2)
        fail(errc::validation, "expected a 3-dimensional matrix of order 2");
    TwoColorThreeUniformParams p;
    p.a = s.at({0, 0, 0});
    p.b = s.at({0, 0, 1});
    p.c = s.at({0, 1, 1});
    p.d = s.at({1, 1, 1});
    if (chi_hint) {
        p.chi = *chi_hint;
    } else if (!p.b.is_zero()) {
        p.chi = s.at({1, 0, 0}) / p.b;
    } else if (!p.c.is_zero()) {
        p.chi = s.at({1, 0, 1}) / p.c;
    } else {
        p.chi = Rational(1);
    }
    if (!(s == p.tensor()))
        fail(errc::validation, "matrix does not match the 2-coloring template");
    return p;
}

} // namespace

TwoColorThreeUniformParams fit_two_color_params(const MultiMatrix& s) {
    return fit_template(s, nullptr);
}

TwoColorThreeUniformParams fit_two_color_params(const MultiMatrix& s, const Rational& chi) {
    return fit_template(s, &chi);
}

TwoColorThreeUniformParams two_color_params(const Hypergraph& h, const Coloring& f) {
    Profile prof = profile(h);
    if (!prof.uniform_d || *prof.uniform_d != 3)
        fail(errc::validation, "expected a 3-uniform hypergraph");
    if (f.color_count() != 2) fail(errc::validation, "expected a 2-coloring");
    auto sizes = f.class_sizes();
    Rational chi(sizes[0], sizes[1]);
    return fit_two_color_params(parameter_tensor(h, f), chi);
}

// Resultant of the two homogeneous component equations, expanded: for binary
// quadratic forms f = p0 x^2 + p1 xy + p2 y^2 and g = q0 x^2 + q1 xy + q2 y^2
// the resultant is (p0 q2 - p2 q0)^2 - (p0 q1 - p1 q0)(p1 q2 - p2 q1), here
// with f = (a - lambda, 2b, c) and g = (chi b, 2 chi c, d - lambda).
RatPoly charpoly_2color_3uniform(const TwoColorThreeUniformParams& p) {
    const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d, &chi = p.chi;
    RatPoly phi;
    phi.coeffs.resize(5);
    phi.coeffs[4] = Rational(1);
    phi.coeffs[3] = Rational(-2) * (a + d);
    phi.coeffs[2] = d * d + Rational(4) * a * d + a * a - Rational(6) * chi * b * c;
    phi.coeffs[1] = (a + d) * (Rational(6) * chi * b * c - Rational(2) * a * d) -
                    Rational(4) * chi * chi * c.pow(3) - Rational(4) * chi * b.pow(3);
    phi.coeffs[0] = a * a * d * d - Rational(3) * chi * chi * b * b * c * c -
                    Rational(6) * chi * a * b * c * d + Rational(4) * chi * chi * a * c.pow(3) +
                    Rational(4) * chi * b.pow(3) * d;
    return phi;
}

std::vector<Complex> poly_roots(std::vector<Complex> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2)
        fail(errc::validation, "root finding requires degree at least 1");
    const std::size_t degree = coeffs.size() - 1;

    double scale = 0.0;
    for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
    for (Complex& c : coeffs) c /= coeffs.back();

    // Initial guesses on a circle of radius 1 + max monic coefficient, with
    // an irrational angular offset to break symmetric configurations.
    double bound = 0.0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
        bound = std::max(bound, std::abs(coeffs[i]));
    const double radius = 1.0 + bound;
    std::vector<Complex> roots(degree);
    for (std::size_t j = 0; j < degree; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(degree) +
                       0.4;
        roots[j] = radius * Complex(std::cos(angle), std::sin(angle));
    }

    for (int iter = 0; iter < 1000; ++iter) {
        double step = 0.0;
        for (std::size_t j = 0; j < degree; ++j) {
            Complex denom(1.0, 0.0);
            for (std::size_t l = 0; l < degree; ++l)
                if (l != j) denom *= roots[j] - roots[l];
            if (std::abs(denom) == 0.0) continue;
            Complex delta = poly_eval(coeffs, roots[j]) / denom;
            roots[j] -= delta;
            step = std::max(step, std::abs(delta));
        }
        if (step <= 1e-13) break;
    }

    std::sort(roots.begin(), roots.end(), [](Complex lhs, Complex rhs) {
        if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
        return lhs.imag() < rhs.imag();
    });
    return roots;
}

std::vector<Complex> poly_roots(const RatPoly& p) {
    if (p.degree() < 1) fail(errc::validation, "root finding requires degree at least 1");
    std::vector<Complex> coeffs;
    coeffs.reserve(p.coeffs.size());
    for (const Rational& c : p.coeffs) coeffs.emplace_back(c.to_double(), 0.0);
    return poly_roots(std::move(coeffs));
}

Complex poly_eval(const std::vector<Complex>& coeffs, Complex x) {
    Complex value(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) value = value * x + coeffs[i];
    return value;
}

namespace {

constexpr double kEigenTol = 1e-9;

void push_pair(std::vector<EigenPair>& pairs, const MultiMatrix& s, Complex lambda,
               std::vector<Complex> x) {
    // Normalize so the largest-magnitude component is 1.
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (std::abs(x[i]) > std::abs(x[argmax])) argmax = i;
    if (std::abs(x[argmax]) == 0.0) return;
    Complex pivot = x[argmax];
    for (Complex& c : x) c /= pivot;

    double residual = eigen_residual(s, lambda, x);
    if (residual > kEigenTol) return;
    for (const EigenPair& seen : pairs)
        if (std::abs(seen.lambda - lambda) <= kEigenTol) return;
    pairs.push_back(EigenPair{lambda, std::move(x), residual});
}

} // namespace

std::vector<EigenPair> eigen_order2(const MultiMatrix& s) {
    if (!s.cubical() || s.order() != 2)
        fail(errc::validation, "eigen solver expects a matrix of order 2");
    const int d = s.dim();
    if (d < 2) fail(errc::validation, "eigen solver expects dimension at least 2");

    // Component polynomials in t for x = (t, 1): g_i(t) collects entries of
    // hyperplane i by the number of zeros in the index tail.
    std::vector<Rational> g0(static_cast<std::size_t>(d), Rational(0));
    std::vector<Rational> g1(static_cast<std::size_t>(d), Rational(0));
    std::vector<int> index;
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        if (s[flat].is_zero()) continue;
        s.unflatten(flat, index);
        int zeros = 0;
        for (std::size_t pos = 1; pos < index.size(); ++pos)
            if (index[pos] == 0) ++zeros;
        auto& g = index[0] == 0 ? g0 : g1;
        g[static_cast<std::size_t>(zeros)] += s[flat];
    }

    std::vector<EigenPair> pairs;

    // Axis branches: (1,0) needs s[1,0..0] = 0, eigenvalue s[0,0..0];
    // (0,1) needs s[0,1..1] = 0, eigenvalue s[1,1..1].
    std::vector<int> head0(static_cast<std::size_t>(d), 0);
    std::vector<int> head1(static_cast<std::size_t>(d), 1);
    std::vector<int> tail0 = head0;
    tail0[0] = 1;
    std::vector<int> tail1 = head1;
    tail1[0] = 0;
    if (s.at(tail0).is_zero())
        push_pair(pairs, s, Complex(s.at(head0).to_double(), 0.0), {Complex(1.0), Complex(0.0)});
    if (s.at(tail1).is_zero())
        push_pair(pairs, s, Complex(s.at(head1).to_double(), 0.0), {Complex(0.0), Complex(1.0)});

    // Elimination: g0(t) - t^{d-1} g1(t) = 0, lambda = g1(t).
    RatPoly elim;
    elim.coeffs.assign(static_cast<std::size_t>(2 * (d - 1)) + 1, Rational(0));
    for (int z = 0; z < d; ++z) elim.coeffs[static_cast<std::size_t>(z)] += g0[static_cast<std::size_t>(z)];
    for (int z = 0; z < d; ++z)
        elim.coeffs[static_cast<std::size_t>(z + d - 1)] -= g1[static_cast<std::size_t>(z)];

    std::vector<Complex> ts;
    if (elim.degree() >= 1) {
        ts = poly_roots(elim);
    } else if (elim.degree() < 0) {
        // Identically zero elimination: every (t, 1) satisfies the system;
        // keep one representative direction.
        ts = {Complex(1.0, 0.0)};
    }
    std::vector<Complex> g1_coeffs;
    for (const Rational& c : g1) g1_coeffs.emplace_back(c.to_double(), 0.0);
    for (Complex t : ts) {
        Complex lambda = poly_eval(g1_coeffs, t);
        push_pair(pairs, s, lambda, {t, Complex(1.0, 0.0)});
    }

    std::sort(pairs.begin(), pairs.end(), [](const EigenPair& lhs, const EigenPair& rhs) {
        if (lhs.lambda.real() != rhs.lambda.real()) return lhs.lambda.real() < rhs.lambda.real();
        return lhs.lambda.imag() < rhs.lambda.imag();
    });
    return pairs;
}

MultiMatrix transversal_parameter_tensor(int d, int r, int k) {
    if (k < 1 || k >= d) fail(errc::validation, "transversal parameter k must satisfy 1 <= k < d");
    if (r < 1) fail(errc::validation, "degree r must be positive");
    MultiMatrix s(d, 2);
    std::vector<int> index;
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        s.unflatten(flat, index);
        int zeros = 0;
        for (int c : index)
            if (c == 0) ++zeros;
        if (zeros != k) continue;
        if (index[0] == 0)
            s[flat] = Rational(r) / binomial(d - 1, k - 1);
        else
            s[flat] = Rational(r) / binomial(d - 1, k);
    }
    return s;
}

std::vector<Complex> transversal_eigenvalues(int d, int r, int k) {
    if (k < 1 || k >= d) fail(errc::validation, "transversal parameter k must satisfy 1 <= k < d");
    std::vector<Complex> values{Complex(0.0, 0.0)};
    for (int j = 1; j <= d; ++j) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) * static_cast<double>(k) /
                       static_cast<double>(d);
        Complex value = static_cast<double>(r) * Complex(std::cos(angle), std::sin(angle));
        bool fresh = std::all_of(values.begin(), values.end(),
                                 [&](Complex seen) { return std::abs(seen - value) > 1e-9; });
        if (fresh) values.push_back(value);
    }
    std::sort(values.begin(), values.end(), [](Complex lhs, Complex rhs) {
        if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
        return lhs.imag() < rhs.imag();
    });
    return values;
}

} // namespace pchg
