#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace otde {

/** K x K counts; at(i, j) = instances of true class i predicted as j. */
class ConfusionMatrix {
public:
    explicit ConfusionMatrix(int num_classes);

    [[nodiscard]] int num_classes() const noexcept { return k_; }
    [[nodiscard]] std::int64_t at(int truth, int predicted) const {
        return counts_[static_cast<std::size_t>(truth * k_ + predicted)];
    }
    void add(int truth, int predicted);

    [[nodiscard]] std::int64_t row_sum(int i) const;
    [[nodiscard]] std::int64_t col_sum(int j) const;
    [[nodiscard]] std::int64_t total() const noexcept { return total_; }

    friend bool operator==(const ConfusionMatrix &, const ConfusionMatrix &) = default;

private:
    int k_;
    std::vector<std::int64_t> counts_;
    std::int64_t total_ = 0;
};

/// Throws LengthMismatch on size mismatch or empty input, LabelOutOfRange when a label is outside [0, K).
[[nodiscard]] ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred, int num_classes);

[[nodiscard]] double ccr(std::span<const int> y_true, std::span<const int> y_pred);
[[nodiscard]] double mae(std::span<const int> y_true, std::span<const int> y_pred);
[[nodiscard]] double one_off(std::span<const int> y_true, std::span<const int> y_pred);

/**
 * Quadratic weighted kappa with weights (i - j)^2 / (K - 1)^2, scaled by
 * weight_scale (which cancels). When the expected weighted disagreement is
 * zero the value is 1 for perfect agreement and 0 otherwise.
 */
[[nodiscard]] double qwk(std::span<const int> y_true, std::span<const int> y_pred, int num_classes);
[[nodiscard]] double qwk(const ConfusionMatrix &confusion, double weight_scale = 1.0);

[[nodiscard]] double ccr(const ConfusionMatrix &confusion);
[[nodiscard]] double mae(const ConfusionMatrix &confusion);
[[nodiscard]] double one_off(const ConfusionMatrix &confusion);

} // namespace otde
