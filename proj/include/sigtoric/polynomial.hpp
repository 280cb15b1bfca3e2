#ifndef SIGTORIC_POLYNOMIAL_HPP
#define SIGTORIC_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "sigtoric/rational.hpp"

namespace sigtoric {

// Polynomial in a_1..a_n over Q, sparse exponent-vector representation,
// canonical form (no zero terms).
class MultivariatePolynomial {
public:
    using Exponents = std::vector<int>;

    explicit MultivariatePolynomial(std::size_t nvars) : nvars_(nvars) {}

    static MultivariatePolynomial constant(std::size_t nvars, const Rational& c);
    static MultivariatePolynomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);
    Rational coefficient(const Exponents& e) const;

    MultivariatePolynomial& operator+=(const MultivariatePolynomial& o);
    MultivariatePolynomial& operator-=(const MultivariatePolynomial& o);
    MultivariatePolynomial operator+(const MultivariatePolynomial& o) const;
    MultivariatePolynomial operator-(const MultivariatePolynomial& o) const;
    MultivariatePolynomial operator*(const MultivariatePolynomial& o) const;
    MultivariatePolynomial operator*(const Rational& c) const;
    bool operator==(const MultivariatePolynomial&) const = default;

    Rational evaluate(const std::vector<Rational>& point) const;
    MultivariatePolynomial derivative(std::size_t var) const;

    // single term with coefficient != 0
    bool is_monomial() const { return terms_.size() == 1; }

    std::string str() const; // for reports: "3/2*a1^2*a3 - a2"

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

} // namespace sigtoric

#endif
