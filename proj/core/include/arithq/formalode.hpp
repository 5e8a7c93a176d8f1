#ifndef ARITHQ_FORMALODE_HPP
#define ARITHQ_FORMALODE_HPP

#include "arithq/integer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arithq {

/// Multivariate power series truncated at total degree `order`; sparse
/// exponent map, absent index means zero coefficient.
class Series {
public:
    Series() = default;
    Series(unsigned nvars, unsigned order) : n_(nvars), order_(order) {}
    static Series constant(unsigned nvars, unsigned order, Rat value);
    static Series variable(unsigned nvars, unsigned order, unsigned index);

    unsigned nvars() const { return n_; }
    unsigned order() const { return order_; }
    bool is_zero() const { return coef_.empty(); }

    Rat coeff(const std::vector<unsigned>& exponents) const;
    void set_coeff(std::vector<unsigned> exponents, Rat value);

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series scaled(const Rat& k) const;
    Series derivative(unsigned var) const;
    Series shifted_by_var(unsigned var) const;   // multiply by t_var
    Series homogeneous_part(unsigned degree) const;
    Rat evaluate(const std::vector<Rat>& point) const;
    std::string str(const std::vector<std::string>& names = {}) const;

    const std::map<std::vector<unsigned>, Rat>& terms() const { return coef_; }

    bool operator==(const Series& o) const {
        return n_ == o.n_ && order_ == o.order_ && coef_ == o.coef_;
    }

private:
    unsigned n_ = 0;
    unsigned order_ = 0;
    std::map<std::vector<unsigned>, Rat> coef_;
    void check_compat(const Series& o) const;
};

using SeriesMat = std::vector<std::vector<Series>>;

SeriesMat series_identity(std::size_t m, unsigned nvars, unsigned order);
SeriesMat series_add(const SeriesMat& a, const SeriesMat& b);
SeriesMat series_mul(const SeriesMat& a, const SeriesMat& b);

/// Connection form omega = sum_i omega_i dt_i; each component is an m x m
/// matrix of polynomial entries of degree <= order.
struct ConnectionForm {
    unsigned nvars = 0;
    std::size_t size = 0;
    std::vector<SeriesMat> comps;  // one m x m matrix per variable
};

struct FlatnessFailure {
    unsigned i, j;                  // failing 2-form component dt_i ^ dt_j
    std::vector<unsigned> monomial; // a nonvanishing coefficient
};

/// dOmega + omega ^ omega, checked coefficientwise below total degree
/// `order`. One-variable forms are flat outright (no 2-forms).
std::optional<FlatnessFailure> flatness_failure(const ConnectionForm& omega, unsigned order);
bool is_flat(const ConnectionForm& omega, unsigned order);

/// The unique T with dT = -omega T and T(0) = I, modulo total degree
/// order+1, computed degree by degree via t_i-weighted integration of the
/// homogeneous components. Throws std::invalid_argument naming the failing
/// 2-form component if a multivariate omega is not flat.
SeriesMat parallel_transport(const ConnectionForm& omega, unsigned order);

std::vector<std::vector<Rat>> series_evaluate(const SeriesMat& m, const std::vector<Rat>& point);

} // namespace arithq

#endif
