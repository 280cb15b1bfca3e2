#include "sigtoric/polynomial.hpp"

#include <stdexcept>

namespace sigtoric {

MultivariatePolynomial MultivariatePolynomial::constant(std::size_t nvars, const Rational& c) {
    MultivariatePolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::invalid_argument("variable index out of range");
    MultivariatePolynomial p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

void MultivariatePolynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultivariatePolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultivariatePolynomial MultivariatePolynomial::operator+(const MultivariatePolynomial& o) const {
    MultivariatePolynomial r = *this;
    r += o;
    return r;
}

MultivariatePolynomial MultivariatePolynomial::operator-(const MultivariatePolynomial& o) const {
    MultivariatePolynomial r = *this;
    r -= o;
    return r;
}

MultivariatePolynomial MultivariatePolynomial::operator*(const MultivariatePolynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
    MultivariatePolynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultivariatePolynomial MultivariatePolynomial::operator*(const Rational& c) const {
    MultivariatePolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Rational MultivariatePolynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point arity mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

MultivariatePolynomial MultivariatePolynomial::derivative(std::size_t var) const {
    if (var >= nvars_) throw std::invalid_argument("derivative variable out of range");
    MultivariatePolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * e[var]);
    }
    return r;
}

std::string MultivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) s += (c > 0 ? " + " : " - ");
        else if (c < 0) s += "-";
        first = false;
        Rational ac = boost::multiprecision::abs(c);
        std::vector<std::string> factors;
        bool any_var = false;
        for (int x : e)
            if (x) { any_var = true; break; }
        if (ac != 1 || !any_var) factors.push_back(ac.str());
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            std::string f = "a" + std::to_string(i + 1);
            if (e[i] > 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += "*";
            s += factors[i];
        }
    }
    return s;
}

} // namespace sigtoric
