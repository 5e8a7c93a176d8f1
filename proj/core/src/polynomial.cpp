#include "arithq/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace arithq {

IntPoly int_poly(std::vector<long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.c.size());
    for (const auto& x : p.c) c.emplace_back(x);
    return RatPoly(std::move(c));
}

template <class C>
static Poly<C> add_impl(const Poly<C>& a, const Poly<C>& b) {
    std::vector<C> c(std::max(a.c.size(), b.c.size()), C(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return Poly<C>(std::move(c));
}

template <class C>
static Poly<C> sub_impl(const Poly<C>& a, const Poly<C>& b) {
    std::vector<C> c(std::max(a.c.size(), b.c.size()), C(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return Poly<C>(std::move(c));
}

template <class C>
static Poly<C> mul_impl(const Poly<C>& a, const Poly<C>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<C>();
    std::vector<C> c(a.c.size() + b.c.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return Poly<C>(std::move(c));
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return add_impl(a, b); }
IntPoly sub(const IntPoly& a, const IntPoly& b) { return sub_impl(a, b); }
IntPoly mul(const IntPoly& a, const IntPoly& b) { return mul_impl(a, b); }
RatPoly add(const RatPoly& a, const RatPoly& b) { return add_impl(a, b); }
RatPoly sub(const RatPoly& a, const RatPoly& b) { return sub_impl(a, b); }
RatPoly mul(const RatPoly& a, const RatPoly& b) { return mul_impl(a, b); }

IntPoly scale(const IntPoly& a, const Int& k) {
    std::vector<Int> c = a.c;
    for (auto& x : c) x *= k;
    return IntPoly(std::move(c));
}

Int eval(const IntPoly& p, const Int& x) {
    Int r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + *it;
    return r;
}

Rat eval(const IntPoly& p, const Rat& x) { return eval(to_rat(p), x); }

Rat eval(const RatPoly& p, const Rat& x) {
    Rat r = 0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + *it;
    return r;
}

RatPoly derivative(const RatPoly& p) {
    if (p.c.size() <= 1) return RatPoly();
    std::vector<Rat> c(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) c[i - 1] = p.c[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(c));
}

IntPoly derivative(const IntPoly& p) {
    if (p.c.size() <= 1) return IntPoly();
    std::vector<Int> c(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) c[i - 1] = p.c[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    RatPoly r = a;
    std::vector<Rat> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rat f = r.leading() / b.leading();
        q[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] -= f * b.c[i];
        r.normalize();
    }
    return {RatPoly(std::move(q)), r};
}

static RatPoly make_monic(RatPoly p) {
    if (p.is_zero()) return p;
    Rat lead = p.leading();
    for (auto& x : p.c) x /= lead;
    return p;
}

RatPoly gcd_poly(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(std::move(x));
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    RatPoly g = gcd_poly(p, derivative(p));
    if (g.degree() == 0) return make_monic(p);
    return make_monic(divmod(p, g).first);
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& d) {
    if (!d.is_monic()) throw std::invalid_argument("divide_exact: divisor must be monic");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < d.degree()) return std::nullopt;
    IntPoly r = a;
    std::vector<Int> q(a.c.size() - d.c.size() + 1, Int(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Int f = r.leading();
        q[shift] = f;
        for (std::size_t i = 0; i < d.c.size(); ++i) r.c[i + shift] -= f * d.c[i];
        r.normalize();
    }
    if (!r.is_zero()) return std::nullopt;
    return IntPoly(std::move(q));
}

namespace {

// Sturm chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i).
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    RatPoly d = derivative(p);
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        for (auto& x : r.c) x = -x;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_at(const RatPoly& p, const Endpoint& e) {
    if (p.is_zero()) return 0;
    switch (e.kind) {
        case Endpoint::Finite:
            return sgn(eval(p, e.value));
        case Endpoint::PosInf:
            return sgn(p.leading());
        case Endpoint::NegInf:
            return p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading());
    }
    return 0;
}

// Sign variations with zeros skipped. Evaluated this way, V(lo) - V(hi)
// counts distinct roots in (lo, hi].
int variations(const std::vector<RatPoly>& chain, const Endpoint& e) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, e);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

int sturm_count(const RatPoly& p, const Endpoint& lo, const Endpoint& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (p.degree() == 0) return 0;
    RatPoly sf = squarefree_part(p);
    if (sf.degree() == 0) return 0;
    auto chain = sturm_chain(sf);
    int v_lo = variations(chain, lo);
    int v_hi = variations(chain, hi);
    return v_lo - v_hi;
}

int sturm_count(const IntPoly& p, const Endpoint& lo, const Endpoint& hi) {
    return sturm_count(to_rat(p), lo, hi);
}

std::string to_string(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Int a = p.coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        if (!first) os << (a > 0 ? "+" : "-");
        else if (a < 0) os << "-";
        Int mag = abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace arithq
