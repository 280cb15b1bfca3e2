#ifndef SIGTORIC_PATHS_HPP
#define SIGTORIC_PATHS_HPP

#include <cstdint>
#include <vector>

#include "sigtoric/polynomial.hpp"
#include "sigtoric/tensor.hpp"

namespace sigtoric {

// Piecewise-linear path: a list of step vectors in Q^d.
struct PLPath {
    int dimension;
    std::vector<std::vector<Rational>> steps;

    PLPath(int d, std::vector<std::vector<Rational>> s);
};

// Axis-parallel path: each step is lengths[i] * e_{shape[i]}.
struct AxisPath {
    std::vector<int> shape;
    std::vector<Rational> lengths;

    AxisPath(std::vector<int> shape_, std::vector<Rational> lengths_);
    int dimension() const; // max letter of the shape

    // positions (0-based) carrying each letter 1..d
    std::vector<std::vector<int>> blocks() const;
};

// Signature of one linear segment: exp of the degree-1 tensor.
TruncatedTensor segment_signature(const std::vector<Rational>& v, int order);

// Chen product of the segment signatures, left to right.
TruncatedTensor signature_pl(const PLPath& path, int order);

// One signature entry of an axis path from the closed combinatorial sum
// over non-decreasing block-compatible index sequences.
Rational axis_signature_entry(const AxisPath& path, const Word& word);

// The same entry as a polynomial in the step lengths a_1..a_m.
MultivariatePolynomial axis_signature_entry_polynomial(const std::vector<int>& shape,
                                                       const Word& word);

// Level-k slice assembled entrywise (order-k tensor; lower levels zero,
// except k = 0 which is the unit).
TruncatedTensor axis_signature(const AxisPath& path, int k);

// Exact rank of the Jacobian d(sigma^(k))/da at one rational point.
int jacobian_rank_at(const std::vector<int>& shape, int k,
                     const std::vector<Rational>& point);

// Max of jacobian_rank_at over `trials` seeded random integer points with
// coordinates in [-1000, 1000].
int jacobian_rank(const std::vector<int>& shape, int k, std::uint64_t seed,
                  int trials = 3);

// Rank < length of the shape (probabilistic in the same sense as
// jacobian_rank: rank is a max over seeded sample points).
bool is_defective(const std::vector<int>& shape, int k, std::uint64_t seed = 20240109,
                  int trials = 3);

struct FillingResult {
    std::vector<int> shape;
    int rank = 0;
    bool exhausted_max_len = false;
};

// Greedily extend the shape one letter at a time (letters 1..d), keeping
// only extensions that raise the generic rank, until no single-letter
// extension raises it or max_len is reached.
FillingResult filling_shape(int d, int k, int max_len, std::uint64_t seed = 20240109,
                            int trials = 3);

} // namespace sigtoric

#endif
