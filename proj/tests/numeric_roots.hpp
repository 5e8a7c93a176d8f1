// Test-only numerical root oracle: Durand-Kerner iteration at 100 decimal
// digits. Independent of the Sturm/trace machinery it is used to check.
#ifndef ARITHQ_TESTS_NUMERIC_ROOTS_HPP
#define ARITHQ_TESTS_NUMERIC_ROOTS_HPP

#include "arithq/polynomial.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <vector>

namespace testoracle {

using Big = boost::multiprecision::cpp_bin_float_100;

struct BigComplex {
    Big re{0}, im{0};

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const {
        Big d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Big abs2() const { return re * re + im * im; }
};

inline Big to_big(const arithq::Rat& r) {
    return Big(r.get_num().get_str()) / Big(r.get_den().get_str());
}

/// All complex roots of a monic polynomial with rational coefficients
/// (simple roots expected; callers pass the square-free part).
inline std::vector<BigComplex> roots(const arithq::RatPoly& p) {
    int n = p.degree();
    std::vector<Big> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = to_big(p.coeff(static_cast<std::size_t>(i)) / p.leading());

    Big radius = 1;
    for (int i = 0; i < n; ++i) {
        Big m = abs(c[static_cast<std::size_t>(i)]);
        if (m + 1 > radius) radius = m + 1;
    }
    std::vector<BigComplex> w(static_cast<std::size_t>(n));
    // distinct start points on a spiral inside the root bound
    BigComplex seed{Big("0.4"), Big("0.9")};
    BigComplex cur{radius, Big(0)};
    for (auto& x : w) {
        cur = cur * seed;
        x = cur;
    }
    auto eval = [&](const BigComplex& z) {
        BigComplex acc{c[static_cast<std::size_t>(n)], Big(0)};
        for (int i = n - 1; i >= 0; --i)
            acc = acc * z + BigComplex{c[static_cast<std::size_t>(i)], Big(0)};
        return acc;
    };
    const Big tol("1e-80");
    for (int iter = 0; iter < 500; ++iter) {
        Big worst = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            BigComplex denom{Big(1), Big(0)};
            for (std::size_t j = 0; j < w.size(); ++j)
                if (j != i) denom = denom * (w[i] - w[j]);
            BigComplex delta = eval(w[i]) / denom;
            w[i] = w[i] - delta;
            Big d2 = delta.abs2();
            if (d2 > worst) worst = d2;
        }
        if (worst < tol * tol) break;
    }
    return w;
}

inline std::vector<BigComplex> roots(const arithq::IntPoly& p) { return roots(arithq::to_rat(p)); }

} // namespace testoracle

#endif
