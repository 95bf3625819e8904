#ifndef RSG_POLYNOMIAL_HPP
#define RSG_POLYNOMIAL_HPP

#include <initializer_list>
#include <span>
#include <vector>

namespace rsg {

/// Real polynomial in the monomial basis, coefficients in ascending degree.
/// Trailing exact zeros are trimmed; an empty coefficient list is the zero
/// polynomial.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs);
    explicit Polynomial(std::vector<double> coeffs);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const double> coefficients() const { return coeffs_; }
    double coefficient(int k) const;

    double operator()(double x) const;
    Polynomial derivative() const;

    /// Largest |p(x)| bound on [-m, m] from the coefficient magnitudes,
    /// used to scale residual tolerances.
    double magnitude(double m) const;

    /// Drops leading coefficients that are negligible against the rest of the
    /// polynomial on [-m, m].
    Polynomial trimmed(double m, double rel = 1e-14) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& a);

    static Polynomial from_roots(std::span<const double> roots, double leading = 1.0);

private:
    void trim();
    std::vector<double> coeffs_;
};

/// Quotient and remainder of polynomial long division.
struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};
DivisionResult divide(const Polynomial& num, const Polynomial& den);

/// Numerical gcd by the Euclidean algorithm; a remainder whose coefficients
/// fall below `tol` (relative to the unit-normalized dividend) counts as zero.
Polynomial numerical_gcd(const Polynomial& a, const Polynomial& b, double tol = 1e-9);

struct Interval {
    double lo;
    double hi;
};

struct Root {
    double value;
    int multiplicity;
};
using RootList = std::vector<Root>;

/// All real roots of `p` in the closed interval, sorted ascending, each
/// refined to within `tol` and tagged with its multiplicity.
///
/// The square-free part p / gcd(p, p') is isolated by Descartes' rule of signs
/// on its Bernstein coefficients with midpoint subdivision; isolating
/// intervals are refined by bracketed bisection. Multiplicities come from
/// repeated gcds with the derivative at tolerance 1e-9.
///
/// Throws Error(IdenticallyZero) when p is the zero polynomial.
RootList real_roots(const Polynomial& p, Interval interval, double tol = 1e-12);

/// Bernstein coefficients of p restricted to [lo, hi] (degree = p.degree()).
std::vector<double> bernstein_coefficients(const Polynomial& p, Interval interval);

/// Number of sign changes in a coefficient sequence, zeros skipped.
int sign_variations(std::span<const double> coeffs);

} // namespace rsg

#endif
