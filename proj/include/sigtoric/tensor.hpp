#ifndef SIGTORIC_TENSOR_HPP
#define SIGTORIC_TENSOR_HPP

#include <map>

#include "sigtoric/words.hpp"

namespace sigtoric {

// Truncated element of the free tensor algebra with exact rational entries.
// `order` is a property of the value; mixing orders in arithmetic is an
// error, never an implicit re-truncation.
class TruncatedTensor {
public:
    explicit TruncatedTensor(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("tensor order must be >= 0");
        entries_.emplace(Word(), Rational(0));
    }

    static TruncatedTensor unit(int order) {
        TruncatedTensor t(order);
        t.set(Word(), 1);
        return t;
    }

    int order() const { return order_; }
    Rational entry(const Word& w) const;
    void set(const Word& w, const Rational& c);
    void add(const Word& w, const Rational& c);
    const std::map<Word, Rational>& entries() const { return entries_; }

    // max letter appearing in any stored nonzero entry (0 when none)
    int alphabet() const;

    TruncatedTensor& operator+=(const TruncatedTensor& other);
    TruncatedTensor operator+(const TruncatedTensor& other) const;
    TruncatedTensor operator-(const TruncatedTensor& other) const;
    TruncatedTensor operator*(const Rational& c) const;
    bool operator==(const TruncatedTensor&) const = default;

    // keep only the words of one length (plus the explicit e entry)
    TruncatedTensor graded_part(int k) const;

private:
    int order_;
    std::map<Word, Rational> entries_; // e always present; other zeros dropped
};

// Concatenation (Cauchy) product truncated at the common order.
TruncatedTensor tensor_product(const TruncatedTensor& s, const TruncatedTensor& t);

// Duality pairing <T, p>. Throws when p has a word beyond T's order.
Rational pairing(const TruncatedTensor& t, const WordPolynomial& p);

// exp(T) = sum T^n / n!, truncated. Requires T_e = 0.
TruncatedTensor exp_truncated(const TruncatedTensor& t);

// log(T) for T_e = 1; inverse of exp_truncated at the same order.
TruncatedTensor log_truncated(const TruncatedTensor& t);

// T_e = 1 and <T,v><T,w> = <T, v shuffle w> for all word pairs with
// len(v) + len(w) <= order.
bool is_group_like(const TruncatedTensor& t);

// Lie element stored in the Lyndon-bracketing basis.
class LieElement {
public:
    explicit LieElement(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("lie order must be >= 0");
    }

    int order() const { return order_; }
    void set(const Word& lyndon, const Rational& c);
    const std::map<Word, Rational>& coefficients() const { return coeffs_; }

    // expansion into the concatenation algebra via bracketings
    TruncatedTensor expand() const;

private:
    int order_;
    std::map<Word, Rational> coeffs_;
};

} // namespace sigtoric

#endif
