#include "sigtoric/paths.hpp"

#include <algorithm>
#include <stdexcept>

#include "sigtoric/linalg.hpp"
#include "sigtoric/rng.hpp"

namespace sigtoric {

PLPath::PLPath(int d, std::vector<std::vector<Rational>> s)
    : dimension(d), steps(std::move(s)) {
    if (d < 1) throw std::invalid_argument("path dimension must be >= 1");
    if (steps.empty()) throw std::invalid_argument("path needs at least one step");
    for (const auto& v : steps)
        if (static_cast<int>(v.size()) != d)
            throw std::invalid_argument("step has wrong number of coordinates");
}

AxisPath::AxisPath(std::vector<int> shape_, std::vector<Rational> lengths_)
    : shape(std::move(shape_)), lengths(std::move(lengths_)) {
    if (shape.empty()) throw std::invalid_argument("empty shape");
    if (shape.size() != lengths.size())
        throw std::invalid_argument("shape and lengths disagree in length");
    for (int l : shape)
        if (l < 1) throw std::invalid_argument("shape letters must be >= 1");
}

int AxisPath::dimension() const { return *std::max_element(shape.begin(), shape.end()); }

std::vector<std::vector<int>> AxisPath::blocks() const {
    std::vector<std::vector<int>> b(static_cast<std::size_t>(dimension()));
    for (std::size_t i = 0; i < shape.size(); ++i)
        b[static_cast<std::size_t>(shape[i] - 1)].push_back(static_cast<int>(i));
    return b;
}

TruncatedTensor segment_signature(const std::vector<Rational>& v, int order) {
    TruncatedTensor linear(order);
    if (order >= 1)
        for (std::size_t i = 0; i < v.size(); ++i)
            linear.set(Word({static_cast<int>(i) + 1}), v[i]);
    return exp_truncated(linear);
}

TruncatedTensor signature_pl(const PLPath& path, int order) {
    TruncatedTensor sig = TruncatedTensor::unit(order);
    for (const auto& v : path.steps) sig = tensor_product(sig, segment_signature(v, order));
    return sig;
}

namespace {

std::vector<std::vector<int>> shape_blocks(const std::vector<int>& shape) {
    int d = *std::max_element(shape.begin(), shape.end());
    std::vector<std::vector<int>> b(static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < shape.size(); ++i)
        b[static_cast<std::size_t>(shape[i] - 1)].push_back(static_cast<int>(i));
    return b;
}

// DFS over the non-decreasing index sequences (j_1..j_k), j_l in the block
// of the l-th word letter; each completed sequence contributes
// prod a_{j_l} / prod_l (multiplicity of l)!.
void entry_rec(const std::vector<std::vector<int>>& blocks, const Word& word,
               std::size_t pos, int minj, std::vector<int>& picks,
               MultivariatePolynomial& out, std::size_t nvars) {
    if (pos == word.length()) {
        MultivariatePolynomial::Exponents e(nvars, 0);
        Rational denom = 1;
        int run = 1;
        for (std::size_t i = 0; i < picks.size(); ++i) {
            ++e[static_cast<std::size_t>(picks[i])];
            if (i + 1 < picks.size() && picks[i + 1] == picks[i]) {
                ++run;
            } else {
                for (int f = 2; f <= run; ++f) denom *= f;
                run = 1;
            }
        }
        out.add_term(e, Rational(1) / denom);
        return;
    }
    int letter = word.letters[pos];
    if (letter > static_cast<int>(blocks.size())) return; // letter absent: empty block
    for (int j : blocks[static_cast<std::size_t>(letter - 1)]) {
        if (j < minj) continue;
        picks.push_back(j);
        entry_rec(blocks, word, pos + 1, j, picks, out, nvars);
        picks.pop_back();
    }
}

} // namespace

MultivariatePolynomial axis_signature_entry_polynomial(const std::vector<int>& shape,
                                                       const Word& word) {
    if (shape.empty()) throw std::invalid_argument("empty shape");
    MultivariatePolynomial out(shape.size());
    if (word.empty()) {
        out.add_term(MultivariatePolynomial::Exponents(shape.size(), 0), 1);
        return out;
    }
    auto blocks = shape_blocks(shape);
    std::vector<int> picks;
    entry_rec(blocks, word, 0, 0, picks, out, shape.size());
    return out;
}

Rational axis_signature_entry(const AxisPath& path, const Word& word) {
    return axis_signature_entry_polynomial(path.shape, word).evaluate(path.lengths);
}

namespace {

void words_of_length(int d, int len, std::vector<int>& acc, std::vector<Word>& out) {
    if (len == 0) {
        out.push_back(Word(acc));
        return;
    }
    for (int l = 1; l <= d; ++l) {
        acc.push_back(l);
        words_of_length(d, len - 1, acc, out);
        acc.pop_back();
    }
}

std::vector<Word> level_words(int d, int k) {
    std::vector<Word> out;
    std::vector<int> acc;
    words_of_length(d, k, acc, out);
    return out;
}

} // namespace

TruncatedTensor axis_signature(const AxisPath& path, int k) {
    TruncatedTensor t(k);
    if (k == 0) {
        t.set(Word(), 1);
        return t;
    }
    for (const Word& w : level_words(path.dimension(), k))
        t.set(w, axis_signature_entry(path, w));
    return t;
}

int jacobian_rank_at(const std::vector<int>& shape, int k,
                     const std::vector<Rational>& point) {
    if (shape.empty()) throw std::invalid_argument("empty shape");
    if (point.size() != shape.size())
        throw std::invalid_argument("point arity must match shape length");
    int d = *std::max_element(shape.begin(), shape.end());
    QMatrix jac;
    for (const Word& w : level_words(d, k)) {
        MultivariatePolynomial entry = axis_signature_entry_polynomial(shape, w);
        std::vector<Rational> row(shape.size());
        for (std::size_t i = 0; i < shape.size(); ++i)
            row[i] = entry.derivative(i).evaluate(point);
        jac.push_back(std::move(row));
    }
    return rank(jac);
}

int jacobian_rank(const std::vector<int>& shape, int k, std::uint64_t seed, int trials) {
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        std::vector<Rational> point(shape.size());
        for (auto& x : point) x = Rational(rng.uniform(-1000, 1000));
        best = std::max(best, jacobian_rank_at(shape, k, point));
        if (best == static_cast<int>(shape.size())) break; // cannot grow further
    }
    return best;
}

bool is_defective(const std::vector<int>& shape, int k, std::uint64_t seed, int trials) {
    return jacobian_rank(shape, k, seed, trials) < static_cast<int>(shape.size());
}

FillingResult filling_shape(int d, int k, int max_len, std::uint64_t seed, int trials) {
    if (d < 1 || k < 1 || max_len < 1)
        throw std::invalid_argument("filling_shape: bad arguments");
    FillingResult res;
    res.shape = {1};
    res.rank = jacobian_rank(res.shape, k, seed, trials);
    while (static_cast<int>(res.shape.size()) < max_len) {
        bool grew = false;
        for (int l = 1; l <= d; ++l) {
            std::vector<int> ext = res.shape;
            ext.push_back(l);
            int r = jacobian_rank(ext, k, seed, trials);
            if (r > res.rank) {
                res.shape = std::move(ext);
                res.rank = r;
                grew = true;
                break;
            }
        }
        if (!grew) return res; // stabilized across all single-letter extensions
    }
    // check stabilization at the cap; report exhaustion if it could still grow
    for (int l = 1; l <= d; ++l) {
        std::vector<int> ext = res.shape;
        ext.push_back(l);
        if (jacobian_rank(ext, k, seed, trials) > res.rank) {
            res.exhausted_max_len = true;
            break;
        }
    }
    return res;
}

} // namespace sigtoric
