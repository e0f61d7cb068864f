#include "lamai/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "lamai/errors.hpp"

namespace lamai {

namespace {

std::uint32_t gray_code(std::uint32_t k) { return k ^ (k >> 1); }

/// Square QAM on the odd-integer grid {-(m-1), ..., -1, +1, ..., +(m-1)}
/// per axis, with per-axis Gray labels interleaved as (re bits | im bits).
Constellation make_square_qam(const std::string& name, unsigned levels_per_axis) {
    const unsigned n = levels_per_axis * levels_per_axis;
    const unsigned bits_per_axis = [&] {
        unsigned b = 0;
        while ((1u << b) < levels_per_axis) ++b;
        return b;
    }();
    std::vector<cplx> pts;
    std::vector<std::uint32_t> labels;
    pts.reserve(n);
    labels.reserve(n);
    for (unsigned i = 0; i < levels_per_axis; ++i) {
        const double re = -static_cast<double>(levels_per_axis - 1) + 2.0 * i;
        for (unsigned j = 0; j < levels_per_axis; ++j) {
            const double im = -static_cast<double>(levels_per_axis - 1) + 2.0 * j;
            pts.emplace_back(re, im);
            labels.push_back((gray_code(i) << bits_per_axis) | gray_code(j));
        }
    }
    return Constellation(name, std::move(pts),
                         std::vector<double>(n, 1.0 / n), std::move(labels));
}

Constellation make_psk(const std::string& name, unsigned n) {
    std::vector<cplx> pts;
    std::vector<std::uint32_t> labels;
    pts.reserve(n);
    labels.reserve(n);
    for (unsigned k = 0; k < n; ++k) {
        const double phi = 2.0 * M_PI * k / n;
        pts.emplace_back(std::cos(phi), std::sin(phi));
        labels.push_back(gray_code(k));
    }
    return Constellation(name, std::move(pts),
                         std::vector<double>(n, 1.0 / n), std::move(labels));
}

}  // namespace

Constellation::Constellation(std::string name, std::vector<cplx> points,
                             std::vector<double> priors,
                             std::vector<std::uint32_t> labels)
    : name_(std::move(name)),
      points_(std::move(points)),
      priors_(std::move(priors)),
      labels_(std::move(labels)) {
    finalize();
}

void Constellation::finalize() {
    if (points_.empty()) throw ConfigError("constellation has no points");
    if (priors_.size() != points_.size())
        throw ConfigError("constellation priors/points size mismatch");
    if (!labels_.empty() && labels_.size() != points_.size())
        throw ConfigError("constellation labels/points size mismatch");

    double sum = 0.0;
    for (double p : priors_) {
        if (!(p >= 0.0)) throw ConfigError("constellation prior is negative or NaN");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw ConfigError("constellation priors do not sum to 1");

    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].real()) || !std::isfinite(points_[i].imag()))
            throw ConfigError("constellation point is not finite");
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j])
                throw ConfigError("constellation points are not pairwise distinct");
    }

    energy_ = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i)
        energy_ += priors_[i] * std::norm(points_[i]);
    if (!(energy_ > 0.0) || !std::isfinite(energy_))
        throw ConfigError("constellation energy must be finite and positive");

    cdf_.resize(priors_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < priors_.size(); ++i) {
        acc += priors_[i];
        cdf_[i] = acc;
    }
    cdf_.back() = 1.0;  // guard against rounding at the top
}

std::size_t Constellation::sample_index(rng::Stream& g) const {
    const double u = rng::uniform01(g);
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::size_t>(it - cdf_.begin());
}

ConstellationMoments moments(const Constellation& c) {
    cplx mean{0.0, 0.0};
    double second = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        mean += c.prior(i) * c.point(i);
        second += c.prior(i) * std::norm(c.point(i));
    }
    return {mean, second - std::norm(mean)};
}

Constellation make_standard(const std::string& name, bool normalize) {
    Constellation c;
    if (name == "BPSK") {
        c = Constellation("BPSK", {cplx(1.0, 0.0), cplx(-1.0, 0.0)}, {0.5, 0.5}, {0u, 1u});
    } else if (name == "QPSK") {
        c = make_square_qam("QPSK", 2);
    } else if (name == "16-QAM") {
        c = make_square_qam("16-QAM", 4);
    } else if (name == "64-QAM") {
        c = make_square_qam("64-QAM", 8);
    } else if (name == "8-PSK") {
        c = make_psk("8-PSK", 8);
    } else {
        throw ConfigError("unknown constellation name: " + name);
    }
    if (!normalize) return c;

    const double scale = 1.0 / std::sqrt(c.energy());
    std::vector<cplx> pts(c.points());
    for (auto& p : pts) p *= scale;
    return Constellation(c.name(), std::move(pts), std::vector<double>(c.priors()),
                         std::vector<std::uint32_t>(c.labels()));
}

std::size_t hard_decision_index(cplx z, const Constellation& c) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double d = std::norm(z - c.point(i));
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

cplx hard_decision(cplx z, const Constellation& c) {
    return c.point(hard_decision_index(z, c));
}

Constellation constellation_from_json_text(const std::string& json_text,
                                           const std::string& name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("constellation JSON parse error: ") + e.what());
    }
    if (!j.is_array() || j.empty())
        throw ConfigError("constellation JSON must be a non-empty array");

    std::vector<cplx> pts;
    std::vector<double> priors;
    std::size_t with_prior = 0;
    for (const auto& rec : j) {
        if (!rec.contains("re") || !rec.contains("im"))
            throw ConfigError("constellation JSON record needs re and im");
        pts.emplace_back(rec.at("re").get<double>(), rec.at("im").get<double>());
        if (rec.contains("prior")) {
            priors.push_back(rec.at("prior").get<double>());
            ++with_prior;
        }
    }
    if (with_prior == 0) {
        priors.assign(pts.size(), 1.0 / pts.size());
    } else if (with_prior != pts.size()) {
        throw ConfigError("constellation JSON: prior must be set on all records or none");
    } else {
        // tolerate small rounding in hand-written files, then renormalize
        double sum = 0.0;
        for (double p : priors) sum += p;
        if (std::abs(sum - 1.0) > 1e-6)
            throw ConfigError("constellation JSON priors do not sum to 1");
        for (double& p : priors) p /= sum;
    }
    return Constellation(name, std::move(pts), std::move(priors));
}

Constellation constellation_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open constellation file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return constellation_from_json_text(ss.str(), path);
}

}  // namespace lamai
