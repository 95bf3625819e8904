#include "rsg/polynomial.hpp"

#include "rsg/error.hpp"

#include <algorithm>
#include <cmath>

namespace rsg {

namespace {

double max_abs(std::span<const double> c)
{
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

Polynomial normalized(const Polynomial& p)
{
    const double m = max_abs(p.coefficients());
    if (m == 0.0) return p;
    return (1.0 / m) * p;
}

double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Splits Bernstein coefficients at u = 1/2.
void de_casteljau_split(const std::vector<double>& b, std::vector<double>& left, std::vector<double>& right)
{
    const std::size_t n = b.size();
    std::vector<double> work = b;
    left.assign(n, 0.0);
    right.assign(n, 0.0);
    left[0] = work[0];
    right[n - 1] = work[n - 1];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) work[i] = 0.5 * (work[i] + work[i + 1]);
        left[level] = work[0];
        right[n - 1 - level] = work[n - 1 - level];
    }
}

double refine_by_bisection(const Polynomial& p, double lo, double hi, double flo, double tol)
{
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = p(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void isolate(const Polynomial& p, double lo, double hi, const std::vector<double>& b, int depth, double tol,
             std::vector<double>& out)
{
    const int v = sign_variations(b);
    if (v == 0) return;
    if (v == 1 && b.front() != 0.0 && b.back() != 0.0) {
        out.push_back(refine_by_bisection(p, lo, hi, b.front(), tol));
        return;
    }
    if (hi - lo <= tol || depth > 96) {
        out.push_back(0.5 * (lo + hi));
        return;
    }
    const double mid = 0.5 * (lo + hi);
    std::vector<double> left, right;
    de_casteljau_split(b, left, right);
    // The split coefficient is p(mid); an exact zero there is a root.
    if (left.back() == 0.0) out.push_back(mid);
    isolate(p, lo, mid, left, depth + 1, tol, out);
    isolate(p, mid, hi, right, depth + 1, tol, out);
}

} // namespace

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::coefficient(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<double> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(static_cast<double>(k) * coeffs_[k]);
    return Polynomial(std::move(d));
}

double Polynomial::magnitude(double m) const
{
    double acc = 0.0;
    double pw = 1.0;
    for (double c : coeffs_) {
        acc += std::abs(c) * pw;
        pw *= m;
    }
    return acc;
}

Polynomial Polynomial::trimmed(double m, double rel) const
{
    std::vector<double> c = coeffs_;
    const double total = magnitude(m);
    while (!c.empty()) {
        const double top = std::abs(c.back()) * std::pow(m, static_cast<double>(c.size() - 1));
        if (top > rel * total) break;
        c.pop_back();
    }
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& a)
{
    std::vector<double> c = a.coeffs_;
    for (double& v : c) v *= s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const double> roots, double leading)
{
    Polynomial p{leading};
    for (double r : roots) p = p * Polynomial{-r, 1.0};
    return p;
}

DivisionResult divide(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero()) throw Error(ErrorCode::IdenticallyZero, "division by the zero polynomial");
    std::vector<double> rem(num.coefficients().begin(), num.coefficients().end());
    const int dn = den.degree();
    const double lead = den.coefficient(dn);
    if (num.degree() < dn) return {Polynomial{}, num};
    std::vector<double> quo(static_cast<std::size_t>(num.degree() - dn + 1), 0.0);
    for (int k = num.degree(); k >= dn; --k) {
        const double f = rem[static_cast<std::size_t>(k)] / lead;
        quo[static_cast<std::size_t>(k - dn)] = f;
        for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k - dn + j)] -= f * den.coefficient(j);
        rem[static_cast<std::size_t>(k)] = 0.0;
    }
    rem.resize(static_cast<std::size_t>(dn));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial numerical_gcd(const Polynomial& a, const Polynomial& b, double tol)
{
    Polynomial u = normalized(a);
    Polynomial v = normalized(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    if (v.is_zero()) return u;
    while (v.degree() > 0) {
        Polynomial r = divide(u, v).remainder;
        if (max_abs(r.coefficients()) <= tol) return normalized(v);
        u = v;
        v = normalized(r);
    }
    return Polynomial{1.0};
}

std::vector<double> bernstein_coefficients(const Polynomial& p, Interval interval)
{
    const int n = p.degree();
    if (n < 0) return {};
    const double lo = interval.lo;
    const double w = interval.hi - interval.lo;
    // Monomial coefficients of p(lo + w u).
    std::vector<double> a(static_cast<std::size_t>(n + 1), 0.0);
    for (int j = 0; j <= n; ++j) {
        const double cj = p.coefficient(j);
        if (cj == 0.0) continue;
        for (int k = 0; k <= j; ++k)
            a[static_cast<std::size_t>(k)] += cj * binomial(j, k) * std::pow(lo, j - k) * std::pow(w, k);
    }
    std::vector<double> b(static_cast<std::size_t>(n + 1), 0.0);
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= i; ++k)
            b[static_cast<std::size_t>(i)] += binomial(i, k) / binomial(n, k) * a[static_cast<std::size_t>(k)];
    // Endpoint coefficients are exact values; evaluate directly to avoid drift.
    b.front() = p(interval.lo);
    b.back() = p(interval.hi);
    return b;
}

int sign_variations(std::span<const double> coeffs)
{
    int count = 0;
    int last = 0;
    for (double c : coeffs) {
        const int s = (c > 0.0) - (c < 0.0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

RootList real_roots(const Polynomial& p, Interval interval, double tol)
{
    if (p.is_zero()) throw Error(ErrorCode::IdenticallyZero, "polynomial vanishes on the whole interval");
    if (!(interval.lo <= interval.hi)) throw Error(ErrorCode::IdenticallyZero, "empty interval");
    const double m = std::max({1.0, std::abs(interval.lo), std::abs(interval.hi)});
    const Polynomial q = p.trimmed(m);
    if (q.is_zero()) throw Error(ErrorCode::IdenticallyZero, "polynomial vanishes on the whole interval");
    if (q.degree() == 0) return {};

    Polynomial squarefree = q;
    Polynomial g{1.0};
    if (q.degree() >= 2) {
        g = numerical_gcd(q, q.derivative());
        if (g.degree() >= 1) squarefree = divide(q, g).quotient;
    }

    std::vector<double> values;
    const double residual = 1e-14 * squarefree.magnitude(m);
    for (double end : {interval.lo, interval.hi})
        if (std::abs(squarefree(end)) <= residual) values.push_back(end);
    if (interval.hi > interval.lo)
        isolate(squarefree, interval.lo, interval.hi, bernstein_coefficients(squarefree, interval), 0, tol, values);

    std::sort(values.begin(), values.end());
    RootList roots;
    const double merge = std::max(2.0 * tol, 1e-10 * m);
    for (double v : values) {
        if (!roots.empty() && v - roots.back().value <= merge) continue;
        roots.push_back({v, 1});
    }

    if (g.degree() >= 1) {
        const double window = 1e-5 * m;
        for (Root& r : roots) {
            const RootList inner = real_roots(g, {r.value - window, r.value + window}, tol);
            int extra = 0;
            for (const Root& ir : inner) extra = std::max(extra, ir.multiplicity);
            r.multiplicity += extra;
        }
    }
    return roots;
}

} // namespace rsg
