#include "sigtoric/tensor.hpp"

#include <algorithm>

namespace sigtoric {

Rational TruncatedTensor::entry(const Word& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? Rational(0) : it->second;
}

void TruncatedTensor::set(const Word& w, const Rational& c) {
    if (static_cast<int>(w.length()) > order_)
        throw std::invalid_argument("tensor entry beyond truncation order");
    if (w.empty()) {
        entries_[w] = c;
        return;
    }
    if (c == 0)
        entries_.erase(w);
    else
        entries_[w] = c;
}

void TruncatedTensor::add(const Word& w, const Rational& c) { set(w, entry(w) + c); }

int TruncatedTensor::alphabet() const {
    int d = 0;
    for (const auto& [w, c] : entries_) {
        if (c == 0) continue;
        for (int l : w.letters) d = std::max(d, l);
    }
    return d;
}

TruncatedTensor& TruncatedTensor::operator+=(const TruncatedTensor& other) {
    if (other.order_ != order_) throw std::invalid_argument("tensor order mismatch");
    for (const auto& [w, c] : other.entries_) add(w, c);
    return *this;
}

TruncatedTensor TruncatedTensor::operator+(const TruncatedTensor& other) const {
    TruncatedTensor r = *this;
    r += other;
    return r;
}

TruncatedTensor TruncatedTensor::operator-(const TruncatedTensor& other) const {
    if (other.order_ != order_) throw std::invalid_argument("tensor order mismatch");
    TruncatedTensor r = *this;
    for (const auto& [w, c] : other.entries_) r.add(w, -c);
    return r;
}

TruncatedTensor TruncatedTensor::operator*(const Rational& c) const {
    TruncatedTensor r(order_);
    if (c == 0) return r;
    for (const auto& [w, k] : entries_) r.set(w, k * c);
    return r;
}

TruncatedTensor TruncatedTensor::graded_part(int k) const {
    TruncatedTensor r(order_);
    for (const auto& [w, c] : entries_)
        if (static_cast<int>(w.length()) == k) r.set(w, c);
    return r;
}

TruncatedTensor tensor_product(const TruncatedTensor& s, const TruncatedTensor& t) {
    if (s.order() != t.order()) throw std::invalid_argument("tensor order mismatch");
    TruncatedTensor r(s.order());
    for (const auto& [u, cu] : s.entries()) {
        if (cu == 0) continue;
        for (const auto& [v, cv] : t.entries()) {
            if (cv == 0) continue;
            if (static_cast<int>(u.length() + v.length()) > s.order()) continue;
            r.add(u.concat(v), cu * cv);
        }
    }
    return r;
}

Rational pairing(const TruncatedTensor& t, const WordPolynomial& p) {
    Rational r = 0;
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.length()) > t.order())
            throw std::invalid_argument("pairing: word beyond truncation order");
        r += c * t.entry(w);
    }
    return r;
}

TruncatedTensor exp_truncated(const TruncatedTensor& t) {
    if (t.entry(Word()) != 0) throw std::invalid_argument("exp: nonzero constant term");
    int m = t.order();
    TruncatedTensor result = TruncatedTensor::unit(m);
    TruncatedTensor power = TruncatedTensor::unit(m);
    Rational inv_fact = 1;
    for (int n = 1; n <= m; ++n) {
        power = tensor_product(power, t);
        inv_fact /= n;
        result += power * inv_fact;
    }
    return result;
}

TruncatedTensor log_truncated(const TruncatedTensor& t) {
    if (t.entry(Word()) != 1) throw std::invalid_argument("log: constant term must be 1");
    int m = t.order();
    TruncatedTensor n = t - TruncatedTensor::unit(m); // nilpotent part
    TruncatedTensor result(m);
    TruncatedTensor power = TruncatedTensor::unit(m);
    for (int k = 1; k <= m; ++k) {
        power = tensor_product(power, n);
        Rational coef = Rational(k % 2 == 1 ? 1 : -1) / k;
        result += power * coef;
    }
    return result;
}

namespace {

void all_words_rec(int d, int len, std::vector<int>& acc, std::vector<Word>& out) {
    if (len == 0) {
        out.push_back(Word(acc));
        return;
    }
    for (int l = 1; l <= d; ++l) {
        acc.push_back(l);
        all_words_rec(d, len - 1, acc, out);
        acc.pop_back();
    }
}

std::vector<Word> all_words(int d, int len) {
    std::vector<Word> out;
    std::vector<int> acc;
    all_words_rec(d, len, acc, out);
    return out;
}

} // namespace

bool is_group_like(const TruncatedTensor& t) {
    if (t.entry(Word()) != 1) return false;
    int d = t.alphabet();
    int m = t.order();
    for (int lv = 1; lv <= m - 1; ++lv) {
        for (int lw = lv; lv + lw <= m; ++lw) {
            for (const Word& v : all_words(d, lv)) {
                for (const Word& w : all_words(d, lw)) {
                    if (pairing(t, shuffle(v, w)) != t.entry(v) * t.entry(w)) return false;
                }
            }
        }
    }
    return true;
}

void LieElement::set(const Word& lyndon, const Rational& c) {
    if (static_cast<int>(lyndon.length()) > order_)
        throw std::invalid_argument("lie coefficient beyond order");
    if (!is_lyndon(lyndon)) throw std::invalid_argument("lie basis word is not Lyndon");
    if (c == 0)
        coeffs_.erase(lyndon);
    else
        coeffs_[lyndon] = c;
}

TruncatedTensor LieElement::expand() const {
    TruncatedTensor t(order_);
    for (const auto& [w, c] : coeffs_) {
        WordPolynomial b = bracketing(w);
        for (const auto& [u, cu] : b.terms()) t.add(u, c * cu);
    }
    return t;
}

} // namespace sigtoric
