#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace otde {

/**
 * Gaussian-process regressor with a squared-exponential kernel
 * k(u, v) = exp(-|u - v|^2 / (2 l^2)) and a constant prior mean equal to the
 * average observed target.
 */
class GPSurrogate {
public:
    /// Throws SingularKernel if K + noise I stays non-PD after adding up to 1e-6 jitter,
    /// InvalidArgument on non-finite inputs.
    static GPSurrogate fit(std::vector<std::vector<double>> configs, std::vector<double> targets,
                           double length_scale, double noise_variance);

    [[nodiscard]] double predict_mean(std::span<const double> config) const;

    [[nodiscard]] const std::vector<std::vector<double>> &observed_configs() const noexcept { return configs_; }
    [[nodiscard]] const std::vector<double> &observed_targets() const noexcept { return targets_; }
    [[nodiscard]] double length_scale() const noexcept { return length_scale_; }
    [[nodiscard]] double noise_variance() const noexcept { return noise_variance_; }
    [[nodiscard]] double prior_mean() const noexcept { return prior_mean_; }
    /// Diagonal jitter that made the kernel factorisable (0 when none was needed).
    [[nodiscard]] double jitter() const noexcept { return jitter_; }

    [[nodiscard]] double kernel(std::span<const double> u, std::span<const double> v) const;

private:
    GPSurrogate() = default;

    std::vector<std::vector<double>> configs_;
    std::vector<double> targets_;
    double length_scale_ = 1.0;
    double noise_variance_ = 0.0;
    double prior_mean_ = 0.0;
    double jitter_ = 0.0;
    Eigen::VectorXd alpha_; // (K + noise I)^-1 (y - mean)
};

} // namespace otde
