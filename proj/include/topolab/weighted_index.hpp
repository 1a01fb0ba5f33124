#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "topolab/rng.hpp"

namespace topolab {

/// Dynamic weighted sampling table over dense indices.
///
/// A Fenwick (binary indexed) tree keeps cumulative weights, so appending,
/// reweighting and sampling are all O(log n). Weights must be non-negative
/// and finite; an index is drawn with probability weight / total, and
/// zero-weight indices are never returned.
class WeightedIndex {
public:
    WeightedIndex() = default;

    explicit WeightedIndex(std::size_t capacity) {
        weights_.reserve(capacity);
        tree_.reserve(capacity + 1);
    }

    std::size_t size() const { return weights_.size(); }

    void push_back(double weight) {
        check_weight(weight);
        if (tree_.empty()) tree_.push_back(0.0);  // slot 0 unused, tree is 1-based
        weights_.push_back(0.0);
        const std::size_t i = weights_.size();
        // Fenwick node i covers (i - lowbit(i), i]; seed it with the partial
        // sum already present in that range.
        tree_.push_back(prefix(i - 1) - prefix(i - lowbit(i)));
        increase(i - 1, weight);
    }

    /// weight(i) += delta; the result must stay non-negative.
    void increase(std::size_t i, double delta) {
        if (i >= weights_.size()) throw std::out_of_range("WeightedIndex::increase: bad index");
        check_weight(weights_[i] + delta);
        weights_[i] += delta;
        for (std::size_t j = i + 1; j < tree_.size(); j += lowbit(j)) tree_[j] += delta;
    }

    void set_weight(std::size_t i, double weight) { increase(i, weight - weights_[i]); }

    double weight(std::size_t i) const { return weights_[i]; }

    double total() const { return prefix(weights_.size()); }

    /// Draws index i with probability weight(i) / total().
    /// Throws std::runtime_error when the total weight is zero.
    std::size_t sample(Rng& rng) const {
        const std::size_t n = weights_.size();
        const double sum = total();
        if (!(sum > 0.0)) throw std::runtime_error("WeightedIndex::sample: all weights are zero");

        double remaining = rng.unit() * sum;
        std::size_t pos = 0;
        for (std::size_t step = std::bit_floor(n); step > 0; step >>= 1) {
            const std::size_t next = pos + step;
            if (next <= n && tree_[next] <= remaining) {
                pos = next;
                remaining -= tree_[next];
            }
        }
        // pos counts fully skipped slots. Rounding in the cumulative sums can
        // park the walk on an empty slot boundary; land on a positive weight.
        std::size_t i = pos < n ? pos : n - 1;
        std::size_t start = i;
        while (i < n && weights_[i] <= 0.0) ++i;
        if (i == n) {
            i = start;
            while (weights_[i] <= 0.0) --i;
        }
        return i;
    }

private:
    static void check_weight(double w) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("WeightedIndex: weight must be finite and >= 0");
        }
    }

    static std::size_t lowbit(std::size_t i) { return i & (std::size_t{0} - i); }

    /// Sum of the first `count` weights.
    double prefix(std::size_t count) const {
        double sum = 0.0;
        for (std::size_t j = count; j > 0; j -= lowbit(j)) sum += tree_[j];
        return sum;
    }

    std::vector<double> tree_;     // 1-based; tree_[0] unused
    std::vector<double> weights_;  // raw weights for exact point queries
};

}  // namespace topolab
