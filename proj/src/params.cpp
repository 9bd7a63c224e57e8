#include "planreal/params.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace planreal {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

int ParamSpec::dim() const {
    struct V {
        int operator()(const AnnulusRegion&) const { return 2; }
        int operator()(const Rect2Region&) const { return 2; }
        int operator()(const Box3YawRegion&) const { return 4; }
        int operator()(const YawRegion&) const { return 1; }
    };
    return std::visit(V{}, region);
}

std::string ParamSpec::kind_name() const {
    struct V {
        std::string operator()(const AnnulusRegion&) const { return "annulus"; }
        std::string operator()(const Rect2Region&) const { return "rect2"; }
        std::string operator()(const Box3YawRegion&) const { return "box3yaw"; }
        std::string operator()(const YawRegion&) const { return "yaw"; }
    };
    return std::visit(V{}, region);
}

bool ParamSpec::contains(const double* v) const {
    if (const auto* a = std::get_if<AnnulusRegion>(&region)) {
        const double rho = (Vec2{v[0], v[1]} - a->center).norm();
        return rho >= a->r - 1e-12 && rho <= a->R + 1e-12;
    }
    if (const auto* r = std::get_if<Rect2Region>(&region)) {
        return std::abs(v[0] - r->center.x) <= 0.5 * r->size.x + 1e-12 &&
               std::abs(v[1] - r->center.y) <= 0.5 * r->size.y + 1e-12;
    }
    if (const auto* b = std::get_if<Box3YawRegion>(&region)) {
        return std::abs(v[0] - b->center.x) <= 0.5 * b->size.x + 1e-12 &&
               std::abs(v[1] - b->center.y) <= 0.5 * b->size.y + 1e-12 &&
               std::abs(v[2] - b->center.z) <= 0.5 * b->size.z + 1e-12 &&
               std::abs(v[3]) <= b->yaw_halfwidth + 1e-12;
    }
    const auto& y = std::get<YawRegion>(region);
    return std::abs(v[0] - y.center) <= y.halfwidth + 1e-12;
}

void ParamSpec::sample_initial(Rng& rng, double* out) const {
    if (const auto* a = std::get_if<AnnulusRegion>(&region)) {
        // Radius by CDF inversion so density is uniform in area.
        const double u = rng.next_double();
        const double rho = std::sqrt(a->r * a->r + u * (a->R * a->R - a->r * a->r));
        const double phi = rng.uniform(-kPi, kPi);
        out[0] = a->center.x + rho * std::cos(phi);
        out[1] = a->center.y + rho * std::sin(phi);
        return;
    }
    if (const auto* r = std::get_if<Rect2Region>(&region)) {
        out[0] = rng.uniform(r->center.x - 0.5 * r->size.x, r->center.x + 0.5 * r->size.x);
        out[1] = rng.uniform(r->center.y - 0.5 * r->size.y, r->center.y + 0.5 * r->size.y);
        return;
    }
    if (const auto* b = std::get_if<Box3YawRegion>(&region)) {
        out[0] = rng.uniform(b->center.x - 0.5 * b->size.x, b->center.x + 0.5 * b->size.x);
        out[1] = rng.uniform(b->center.y - 0.5 * b->size.y, b->center.y + 0.5 * b->size.y);
        out[2] = rng.uniform(b->center.z - 0.5 * b->size.z, b->center.z + 0.5 * b->size.z);
        out[3] = rng.uniform(-b->yaw_halfwidth, b->yaw_halfwidth);
        return;
    }
    const auto& y = std::get<YawRegion>(region);
    out[0] = rng.uniform(y.center - y.halfwidth, y.center + y.halfwidth);
}

DistributionState DistributionState::initial(std::vector<const ParamSpec*> specs,
                                             double std_floor_value) {
    DistributionState d;
    d.mode = Mode::Initial;
    d.specs = std::move(specs);
    d.std_floor.assign(d.dim(), std_floor_value);
    return d;
}

std::vector<LayoutEntry> DistributionState::layout() const {
    std::vector<LayoutEntry> out;
    int offset = 0;
    for (const ParamSpec* s : specs) {
        out.push_back({s->id, offset, s->dim()});
        offset += s->dim();
    }
    return out;
}

int DistributionState::dim() const {
    int n = 0;
    for (const ParamSpec* s : specs) n += s->dim();
    return n;
}

ParamVector DistributionState::sample(Rng& rng) const {
    ParamVector v;
    v.layout = layout();
    v.values.resize(dim());
    if (mode == Mode::Initial) {
        for (std::size_t i = 0; i < specs.size(); ++i) {
            specs[i]->sample_initial(rng, v.values.data() + v.layout[i].offset);
        }
    } else {
        for (int i = 0; i < dim(); ++i) {
            v.values[i] = rng.normal(mean[i], std[i]);
        }
    }
    return v;
}

DistributionState fit_elites(const std::vector<ParamVector>& elites, const DistributionState& prev,
                             double noise_injection_std) {
    if (elites.empty()) throw std::invalid_argument("fit_elites: empty elite set");
    const int dim = elites[0].dim();

    DistributionState next = prev;
    next.mode = DistributionState::Mode::Gaussian;
    next.mean.assign(dim, 0.0);
    next.std.assign(dim, 0.0);
    if (static_cast<int>(next.std_floor.size()) != dim) {
        next.std_floor.assign(dim, prev.std_floor.empty() ? 1e-3 : prev.std_floor[0]);
    }

    const double n = static_cast<double>(elites.size());
    for (const ParamVector& e : elites) {
        for (int i = 0; i < dim; ++i) next.mean[i] += e.values[i];
    }
    for (int i = 0; i < dim; ++i) next.mean[i] /= n;

    if (elites.size() == 1) {
        next.std.assign(dim, noise_injection_std);
        return next;
    }

    // Population (1/n) convention.
    for (const ParamVector& e : elites) {
        for (int i = 0; i < dim; ++i) {
            const double d = e.values[i] - next.mean[i];
            next.std[i] += d * d;
        }
    }
    for (int i = 0; i < dim; ++i) {
        next.std[i] = std::max(std::sqrt(next.std[i] / n), next.std_floor[i]);
    }
    return next;
}

}  // namespace planreal
