#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lamai/rng.hpp"

namespace lamai {

using cplx = std::complex<double>;

/// A finite constellation: symbol points with per-point prior probabilities.
///
/// Invariants (checked by finalize()):
///   - priors are non-negative and sum to 1 within 1e-12
///   - points are pairwise distinct
///   - symbol energy Es = sum_a p_a |a|^2 is finite and positive
///
/// Priors are stored explicitly even when uniform so that prior-weighted
/// denoiser formulas need no special casing. Instances are immutable after
/// finalize() and safe to share across threads.
class Constellation {
public:
    Constellation() = default;
    Constellation(std::string name, std::vector<cplx> points, std::vector<double> priors,
                  std::vector<std::uint32_t> labels = {});

    const std::string& name() const { return name_; }
    const std::vector<cplx>& points() const { return points_; }
    const std::vector<double>& priors() const { return priors_; }
    /// Bit labels (Gray-coded for the standard QAM/PSK sets); empty if unset.
    const std::vector<std::uint32_t>& labels() const { return labels_; }

    std::size_t size() const { return points_.size(); }
    cplx point(std::size_t i) const { return points_[i]; }
    double prior(std::size_t i) const { return priors_[i]; }

    /// Es = sum_a p_a |a|^2.
    double energy() const { return energy_; }

    /// Draws a symbol index from the prior distribution.
    std::size_t sample_index(rng::Stream& g) const;

private:
    void finalize();

    std::string name_;
    std::vector<cplx> points_;
    std::vector<double> priors_;
    std::vector<std::uint32_t> labels_;
    std::vector<double> cdf_;
    double energy_ = 0.0;
};

/// First and second central moments of the prior:
/// mean = sum p_a a, variance = sum p_a |a|^2 - |mean|^2.
struct ConstellationMoments {
    cplx mean;
    double variance;
};

ConstellationMoments moments(const Constellation& c);

/// Builds one of the standard uniform-prior sets:
/// BPSK, QPSK, 16-QAM, 64-QAM, 8-PSK. With normalize set, points are scaled
/// so that Es = 1. Throws ConfigError for unknown names.
Constellation make_standard(const std::string& name, bool normalize = true);

/// Minimum-distance slice: argmin_a |z - a|^2, ties broken by lowest index.
std::size_t hard_decision_index(cplx z, const Constellation& c);
cplx hard_decision(cplx z, const Constellation& c);

/// Loads a custom constellation from a JSON array of {re, im, prior}
/// records. Prior may be omitted on all records, in which case the prior is
/// uniform.
Constellation constellation_from_json_text(const std::string& json_text,
                                           const std::string& name = "custom");
Constellation constellation_from_json_file(const std::string& path);

}  // namespace lamai
