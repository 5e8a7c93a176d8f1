#include "arithq/weil.hpp"

#include "arithq/numbertheory.hpp"

#include <sstream>
#include <stdexcept>

namespace arithq {

bool is_integral(const RatPoly& poly) {
    if (poly.is_zero() || poly.leading() != 1)
        throw std::invalid_argument("is_integral: polynomial must be monic");
    for (const auto& a : poly.c)
        if (a.get_den() != 1) return false;
    return true;
}

bool quadratic_weil_exact(const Int& a, const Int& b, const Int& q, unsigned n) {
    Int Q = pow_int(q, n);
    Int disc = a * a - 4 * b;
    if (disc < 0) return b == Q;
    if (disc == 0) return 4 * b == 4 * Q;  // double root -a/2 with (a/2)^2 = Q
    // two distinct real roots; both on {+-sqrt(Q)} forces x^2 - Q
    return a == 0 && b == -Q;
}

IntPoly trace_polynomial(const IntPoly& f, const Int& Q) {
    if (f.degree() < 0 || f.degree() % 2 != 0)
        throw std::invalid_argument("trace_polynomial: degree must be even");
    int m = f.degree() / 2;
    // f = sum_j b_j x^{m-j} (x^2 + Q)^j; peel coefficients from the top
    IntPoly g = f;
    std::vector<Int> b(static_cast<std::size_t>(m) + 1, Int(0));
    IntPoly x2Q(std::vector<Int>{Q, 0, 1});
    for (int j = m; j >= 0; --j) {
        Int bj = g.coeff(static_cast<std::size_t>(m + j));
        b[static_cast<std::size_t>(j)] = bj;
        if (bj != 0) {
            std::vector<Int> mono(static_cast<std::size_t>(m - j) + 1, Int(0));
            mono.back() = 1;  // x^{m-j}
            IntPoly term(std::move(mono));
            for (int t = 0; t < j; ++t) term = mul(term, x2Q);
            g = sub(g, scale(term, bj));
        }
    }
    if (!g.is_zero())
        throw std::invalid_argument("trace_polynomial: polynomial is not self-reciprocal");
    return IntPoly(std::move(b));
}

namespace {

// G(gamma) = prod (gamma - beta_i^2) for h = prod (beta - beta_i):
// G(x^2) = (-1)^m h(x) h(-x).
IntPoly root_square_polynomial(const IntPoly& h) {
    IntPoly hneg = h;
    for (std::size_t i = 1; i < hneg.c.size(); i += 2) hneg.c[i] = -hneg.c[i];
    IntPoly prod = mul(h, hneg);
    std::vector<Int> even;
    for (std::size_t i = 0; i < prod.c.size(); i += 2) even.push_back(prod.c[i]);
    IntPoly G(std::move(even));
    if (h.degree() % 2 != 0) G = scale(G, Int(-1));
    return G;
}

} // namespace

WeilVerdict check_weil(const WeilCandidate& c) {
    if (c.poly.is_zero() || !c.poly.is_monic())
        throw std::invalid_argument("check_weil: polynomial must be monic");
    if (c.q < 2 || !is_prime_power(c.q))
        throw std::invalid_argument("check_weil: q must be a prime power >= 2");

    WeilVerdict v;
    v.is_integral = true;  // IntPoly input is integral by construction
    Int Q = pow_int(c.q, c.weight);
    std::ostringstream cert;

    IntPoly f = c.poly;

    IntPoly quad(std::vector<Int>{-Q, 0, 1});  // x^2 - q^n
    while (f.degree() >= 2) {
        auto d = divide_exact(f, quad);
        if (!d) break;
        f = *d;
        ++v.stripped_quadratic;
    }
    Int s;
    if (perfect_sqrt(Q, s)) {
        IntPoly lin_minus(std::vector<Int>{-s, 1});
        IntPoly lin_plus(std::vector<Int>{s, 1});
        while (f.degree() >= 1) {
            auto d = divide_exact(f, lin_minus);
            if (!d) break;
            f = *d;
            ++v.stripped_minus;
        }
        while (f.degree() >= 1) {
            auto d = divide_exact(f, lin_plus);
            if (!d) break;
            f = *d;
            ++v.stripped_plus;
        }
    }
    cert << "stripped: (x^2-q^n)^" << v.stripped_quadratic << " (x-q^{n/2})^"
         << v.stripped_minus << " (x+q^{n/2})^" << v.stripped_plus << "; ";

    if (f.degree() <= 0) {
        v.is_weil = true;
        cert << "remainder constant";
        v.certificate = cert.str();
        return v;
    }

    int d = f.degree();
    if (d % 2 != 0) {
        v.is_weil = false;
        cert << "remainder of odd degree " << d << " cannot satisfy the functional equation";
        v.certificate = cert.str();
        return v;
    }
    int m = d / 2;

    // functional equation a_{d-j} Q^{d-j} = a_j Q^m for all j
    for (int j = 0; j <= d; ++j) {
        Int lhs = f.coeff(static_cast<std::size_t>(d - j)) * pow_int(Q, d - j);
        Int rhs = f.coeff(static_cast<std::size_t>(j)) * pow_int(Q, m);
        if (lhs != rhs) {
            v.is_weil = false;
            cert << "functional equation fails at coefficient " << j;
            v.certificate = cert.str();
            return v;
        }
    }

    IntPoly h = trace_polynomial(f, Q);
    RatPoly h_sf = squarefree_part(to_rat(h));
    int real_roots = sturm_count(h_sf, Endpoint::neg_inf(), Endpoint::pos_inf());
    cert << "trace poly deg " << m << ", squarefree deg " << h_sf.degree()
         << ", real roots " << real_roots << "/" << h_sf.degree();
    if (real_roots != h_sf.degree()) {
        v.is_weil = false;
        cert << " (non-real trace root)";
        v.certificate = cert.str();
        return v;
    }

    IntPoly G = root_square_polynomial(h);
    Int fourQ = 4 * Q;
    if (eval(G, fourQ) == 0) {
        // beta^2 = 4 q^n would mean a root at +-q^{n/2}, already stripped
        v.is_weil = false;
        cert << "; boundary root beta^2 = 4q^n";
        v.certificate = cert.str();
        return v;
    }
    int beyond = sturm_count(G, Endpoint::at(Rat(fourQ)), Endpoint::pos_inf());
    cert << "; roots with beta^2 in (4q^n, inf): " << beyond;
    v.is_weil = beyond == 0;
    v.certificate = cert.str();
    return v;
}

} // namespace arithq
