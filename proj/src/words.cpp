#include "sigtoric/words.hpp"

#include <sstream>
#include <stdexcept>

namespace sigtoric {

Word::Word(std::vector<int> ls) : letters(std::move(ls)) {
    for (int l : letters)
        if (l < 1) throw std::invalid_argument("word letters must be >= 1");
}

Word Word::concat(const Word& other) const {
    std::vector<int> ls = letters;
    ls.insert(ls.end(), other.letters.begin(), other.letters.end());
    return Word(std::move(ls));
}

std::string Word::str() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(letters[i]);
    }
    return s;
}

Word Word::parse(const std::string& s) {
    if (s.empty()) return Word();
    std::vector<int> ls;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad word literal: " + s);
        ls.push_back(std::stoi(tok));
    }
    return Word(std::move(ls));
}

void WordPolynomial::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational WordPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& other) {
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

WordPolynomial& WordPolynomial::operator-=(const WordPolynomial& other) {
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

WordPolynomial WordPolynomial::operator+(const WordPolynomial& other) const {
    WordPolynomial r = *this;
    r += other;
    return r;
}

WordPolynomial WordPolynomial::operator-(const WordPolynomial& other) const {
    WordPolynomial r = *this;
    r -= other;
    return r;
}

WordPolynomial WordPolynomial::operator*(const Rational& c) const {
    WordPolynomial r;
    if (c == 0) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

namespace {

void shuffle_rec(const std::vector<int>& v, std::size_t i, const std::vector<int>& w,
                 std::size_t j, std::vector<int>& acc, WordPolynomial& out) {
    if (i == v.size() && j == w.size()) {
        out.add(Word(acc), 1);
        return;
    }
    if (i < v.size()) {
        acc.push_back(v[i]);
        shuffle_rec(v, i + 1, w, j, acc, out);
        acc.pop_back();
    }
    if (j < w.size()) {
        acc.push_back(w[j]);
        shuffle_rec(v, i, w, j + 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

WordPolynomial shuffle(const Word& v, const Word& w) {
    WordPolynomial out;
    std::vector<int> acc;
    acc.reserve(v.length() + w.length());
    shuffle_rec(v.letters, 0, w.letters, 0, acc, out);
    return out;
}

WordPolynomial shuffle_poly(const WordPolynomial& p, const WordPolynomial& q) {
    WordPolynomial out;
    for (const auto& [v, cv] : p.terms())
        for (const auto& [w, cw] : q.terms()) {
            WordPolynomial s = shuffle(v, w);
            for (const auto& [u, cu] : s.terms()) out.add(u, cu * cv * cw);
        }
    return out;
}

WordPolynomial concat_poly(const WordPolynomial& p, const WordPolynomial& q) {
    WordPolynomial out;
    for (const auto& [v, cv] : p.terms())
        for (const auto& [w, cw] : q.terms()) out.add(v.concat(w), cv * cw);
    return out;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
    const auto& ls = w.letters;
    for (std::size_t cut = 1; cut < ls.size(); ++cut) {
        std::vector<int> suffix(ls.begin() + static_cast<long>(cut), ls.end());
        if (!(ls < suffix)) return false;
    }
    return true;
}

std::vector<Word> lyndon_words(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("lyndon_words: need d >= 1, m >= 1");
    // Duval's algorithm, emits in lexicographic order.
    std::vector<Word> out;
    std::vector<int> w{0};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) <= m) out.push_back(Word(w));
        std::size_t base = w.size();
        while (static_cast<int>(w.size()) < m) w.push_back(w[w.size() - base]);
        while (!w.empty() && w.back() == d) w.pop_back();
    }
    return out;
}

WordPolynomial bracketing(const Word& w) {
    if (!is_lyndon(w)) throw std::invalid_argument("bracketing: word is not Lyndon");
    if (w.length() == 1) return WordPolynomial(w);
    const auto& ls = w.letters;
    std::size_t best_cut = 1;
    std::vector<int> best(ls.begin() + 1, ls.end());
    for (std::size_t cut = 2; cut < ls.size(); ++cut) {
        std::vector<int> suffix(ls.begin() + static_cast<long>(cut), ls.end());
        if (suffix < best) {
            best = suffix;
            best_cut = cut;
        }
    }
    Word p(std::vector<int>(ls.begin(), ls.begin() + static_cast<long>(best_cut)));
    Word q(best);
    WordPolynomial bp = bracketing(p), bq = bracketing(q);
    return concat_poly(bp, bq) - concat_poly(bq, bp);
}

int mobius(long long t) {
    if (t < 1) throw std::invalid_argument("mobius: need t >= 1");
    int primes = 0;
    for (long long p = 2; p * p <= t; ++p) {
        if (t % p) continue;
        t /= p;
        if (t % p == 0) return 0;
        ++primes;
    }
    if (t > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

Int lyndon_count(int d, int length) {
    if (d < 1 || length < 1) throw std::invalid_argument("lyndon_count: bad arguments");
    Int sum = 0;
    for (int t = 1; t <= length; ++t) {
        if (length % t) continue;
        Int power = boost::multiprecision::pow(Int(d), static_cast<unsigned>(length / t));
        sum += mobius(t) * power;
    }
    return sum / length;
}

Int lie_dimension(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("lie_dimension: bad arguments");
    Int total = 0;
    for (int l = 1; l <= m; ++l) total += lyndon_count(d, l);
    return total;
}

} // namespace sigtoric
