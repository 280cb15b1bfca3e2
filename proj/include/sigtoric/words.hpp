#ifndef SIGTORIC_WORDS_HPP
#define SIGTORIC_WORDS_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sigtoric/rational.hpp"

namespace sigtoric {

// Word over the alphabet {1..d}. Lexicographic order with "prefix is
// smaller", which is what std::vector's ordering gives us.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls);
    Word(std::initializer_list<int> ls) : Word(std::vector<int>(ls)) {}

    std::size_t length() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    auto operator<=>(const Word&) const = default;

    Word concat(const Word& other) const;
    std::string str() const;               // "1,2,1"; empty word -> ""
    static Word parse(const std::string&); // inverse of str()
};

// Finite Q-linear combination of words. Zero coefficients are never stored.
class WordPolynomial {
public:
    WordPolynomial() = default;
    explicit WordPolynomial(const Word& w, Rational c = 1) { add(w, c); }

    void add(const Word& w, const Rational& c);
    Rational coefficient(const Word& w) const;
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    WordPolynomial& operator+=(const WordPolynomial& other);
    WordPolynomial& operator-=(const WordPolynomial& other);
    WordPolynomial operator+(const WordPolynomial& other) const;
    WordPolynomial operator-(const WordPolynomial& other) const;
    WordPolynomial operator*(const Rational& c) const;
    bool operator==(const WordPolynomial&) const = default;

private:
    std::map<Word, Rational> terms_;
};

// Shuffle product of two words: sum of all order-preserving interleavings,
// with multiplicity.
WordPolynomial shuffle(const Word& v, const Word& w);

// Bilinear extension of the shuffle product.
WordPolynomial shuffle_poly(const WordPolynomial& p, const WordPolynomial& q);

// Concatenation product, extended bilinearly.
WordPolynomial concat_poly(const WordPolynomial& p, const WordPolynomial& q);

// A nonempty word w is Lyndon when w < q for every proper decomposition w=pq.
// Throws on the empty word.
bool is_lyndon(const Word& w);

// All Lyndon words of length <= m over {1..d}, lexicographically sorted
// (Duval's generation order).
std::vector<Word> lyndon_words(int d, int m);

// Standard factorization w = pq with q the lexicographically least proper
// suffix; bracketing [p,q] = pq - qp, expanded recursively into the
// concatenation algebra. Requires w Lyndon.
WordPolynomial bracketing(const Word& w);

// Moebius function.
int mobius(long long t);

// dim Lie^m(R^d) = sum over lengths l <= m of (1/l) sum_{t|l} mu(t) d^{l/t}.
Int lie_dimension(int d, int m);

// Count of Lyndon words of one fixed length (the inner sum above).
Int lyndon_count(int d, int length);

} // namespace sigtoric

#endif
