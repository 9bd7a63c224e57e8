#pragma once

#include <string>
#include <variant>
#include <vector>

#include "planreal/geometry.hpp"
#include "planreal/rng.hpp"

namespace planreal {

// Admissible regions for the continuous action parameters. Initial sampling
// is uniform over the region; later iterations use an unclipped Gaussian.

struct AnnulusRegion {
    Vec2 center;
    double r = 0.0;  // inner radius
    double R = 0.0;  // outer radius
};

struct Rect2Region {
    Vec2 center;
    Vec2 size;
};

struct Box3YawRegion {
    Vec3 center;
    Vec3 size;
    double yaw_halfwidth = 0.0;  // yaw sampled in [-halfwidth, +halfwidth]
};

struct YawRegion {
    double center = 0.0;
    double halfwidth = 0.0;
};

struct ParamSpec {
    std::string id;
    std::variant<AnnulusRegion, Rect2Region, Box3YawRegion, YawRegion> region;

    int dim() const;
    std::string kind_name() const;

    /// True when the scalar block satisfies the region constraint h(z) <= 0.
    bool contains(const double* values) const;

    /// Uniform sample over the region (area/volume-uniform), written to out.
    void sample_initial(Rng& rng, double* out) const;
};

struct LayoutEntry {
    std::string spec_id;
    int offset = 0;
    int dim = 0;
};

/// Flattened continuous parameters of a whole plan, concatenated in plan
/// order. The layout records which scalar block belongs to which spec.
struct ParamVector {
    std::vector<double> values;
    std::vector<LayoutEntry> layout;

    int dim() const { return static_cast<int>(values.size()); }
    const double* block(std::size_t layout_index) const {
        return values.data() + layout[layout_index].offset;
    }
};

/// Sampling distribution over a plan's parameter vector.
/// Initial mode draws region-uniform per spec; Gaussian mode draws
/// independent per-scalar normals (never clipped to the regions).
struct DistributionState {
    enum class Mode { Initial, Gaussian };

    Mode mode = Mode::Initial;
    std::vector<const ParamSpec*> specs;  // plan-ordered, defines the layout
    std::vector<double> mean;             // Gaussian mode
    std::vector<double> std;              // Gaussian mode
    std::vector<double> std_floor;

    static DistributionState initial(std::vector<const ParamSpec*> specs, double std_floor_value);

    std::vector<LayoutEntry> layout() const;
    int dim() const;

    ParamVector sample(Rng& rng) const;
};

/// Refit to the elite set: per-scalar mean and population std, floored.
/// A single-sample fit keeps the sample as mean and injects exploration
/// noise instead of collapsing.
DistributionState fit_elites(const std::vector<ParamVector>& elites, const DistributionState& prev,
                             double noise_injection_std);

}  // namespace planreal
