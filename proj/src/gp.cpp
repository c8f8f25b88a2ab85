#include "otde/gp.hpp"

#include "otde/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace otde {

double GPSurrogate::kernel(std::span<const double> u, std::span<const double> v) const {
    double sq = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        sq += d * d;
    }
    return std::exp(-sq / (2.0 * length_scale_ * length_scale_));
}

GPSurrogate GPSurrogate::fit(std::vector<std::vector<double>> configs, std::vector<double> targets,
                             double length_scale, double noise_variance) {
    if (configs.empty() || configs.size() != targets.size()) {
        throw Error(ErrorKind::InvalidArgument, "GP needs one target per observed configuration");
    }
    if (!(length_scale > 0.0) || noise_variance < 0.0) {
        throw Error(ErrorKind::InvalidArgument, "length_scale must be positive and noise_variance nonnegative");
    }
    const std::size_t dim = configs.front().size();
    for (const auto &c : configs) {
        if (c.size() != dim) {
            throw Error(ErrorKind::ShapeMismatch, "configuration vectors differ in size");
        }
        if (!std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); })) {
            throw Error(ErrorKind::InvalidArgument, "configuration vectors must be finite");
        }
    }
    if (!std::all_of(targets.begin(), targets.end(), [](double v) { return std::isfinite(v); })) {
        throw Error(ErrorKind::InvalidArgument, "GP targets must be finite");
    }

    GPSurrogate gp;
    gp.configs_ = std::move(configs);
    gp.targets_ = std::move(targets);
    gp.length_scale_ = length_scale;
    gp.noise_variance_ = noise_variance;
    const auto n = static_cast<Eigen::Index>(gp.targets_.size());
    gp.prior_mean_ = std::accumulate(gp.targets_.begin(), gp.targets_.end(), 0.0) / static_cast<double>(n);

    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            k(i, j) = k(j, i) = gp.kernel(gp.configs_[static_cast<std::size_t>(i)],
                                          gp.configs_[static_cast<std::size_t>(j)]);
        }
    }
    Eigen::VectorXd residual(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        residual(i) = gp.targets_[static_cast<std::size_t>(i)] - gp.prior_mean_;
    }

    double jitter = 0.0;
    while (true) {
        Eigen::MatrixXd a = k;
        a.diagonal().array() += noise_variance + jitter;
        Eigen::LLT<Eigen::MatrixXd> llt(a);
        if (llt.info() == Eigen::Success) {
            gp.alpha_ = llt.solve(residual);
            gp.jitter_ = jitter;
            return gp;
        }
        if (jitter >= 1e-6) {
            throw Error(ErrorKind::SingularKernel, "kernel matrix is not positive definite");
        }
        jitter = jitter == 0.0 ? 1e-12 : jitter * 10.0;
    }
}

double GPSurrogate::predict_mean(std::span<const double> config) const {
    double mean = prior_mean_;
    for (std::size_t i = 0; i < configs_.size(); ++i) {
        mean += kernel(config, configs_[i]) * alpha_(static_cast<Eigen::Index>(i));
    }
    return mean;
}

} // namespace otde
