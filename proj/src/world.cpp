#include "planreal/world.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace planreal {

const StaticShape* Scenario::find_shape(const std::string& id) const {
    for (const auto& s : shapes)
        if (s.id == id) return &s;
    return nullptr;
}

const MovableObject* Scenario::find_object(const std::string& id) const {
    for (const auto& o : objects)
        if (o.id == id) return &o;
    return nullptr;
}

const ParamSpec* Scenario::find_param(const std::string& id) const {
    for (const auto& p : param_specs)
        if (p.id == id) return &p;
    return nullptr;
}

int Scenario::object_index(const std::string& id) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i].id == id) return static_cast<int>(i);
    return -1;
}

void Scenario::world_bounds(Vec2& lo, Vec2& hi) const {
    lo = {robot_init_position.x, robot_init_position.y};
    hi = lo;
    auto grow = [&](const Vec2& p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    };
    for (const auto& s : shapes) {
        Vec2 slo, shi;
        s.footprint.bounds(slo, shi);
        grow(slo);
        grow(shi);
    }
    for (const auto& o : objects) grow(o.initial_position.xy());
    for (const auto& p : param_specs) {
        if (const auto* a = std::get_if<AnnulusRegion>(&p.region)) {
            grow(a->center - Vec2{a->R, a->R});
            grow(a->center + Vec2{a->R, a->R});
        } else if (const auto* r = std::get_if<Rect2Region>(&p.region)) {
            grow(r->center - r->size * 0.5);
            grow(r->center + r->size * 0.5);
        } else if (const auto* b = std::get_if<Box3YawRegion>(&p.region)) {
            grow(b->center.xy() - b->size.xy() * 0.5);
            grow(b->center.xy() + b->size.xy() * 0.5);
        }
    }
    if (goal.robot_region) {
        grow(goal.robot_region->min());
        grow(goal.robot_region->max());
    }
    const double margin = astar_padding + robot.base_radius + 1.0;
    lo -= Vec2{margin, margin};
    hi += Vec2{margin, margin};
}

void Scenario::validate() {
    std::set<std::string> ids;
    for (auto& s : shapes) {
        if (s.id.empty()) throw ScenarioError("shape with empty id");
        if (!ids.insert(s.id).second) throw ScenarioError("duplicate id: " + s.id);
        if (s.footprint.size() < 3)
            throw ScenarioError("shape '" + s.id + "': footprint needs at least 3 vertices");
        s.footprint.ensure_ccw();
        if (!s.footprint.is_convex())
            throw ScenarioError("shape '" + s.id + "': footprint not convex");
        if (s.footprint.area() <= 1e-9)
            throw ScenarioError("shape '" + s.id + "': footprint degenerate (area <= 1e-9)");
        if (auto* ramp = std::get_if<RampProfile>(&s.height_profile)) {
            const double n = ramp->downhill_dir.norm();
            if (n < 1e-9)
                throw ScenarioError("shape '" + s.id + "': ramp downhill_dir is zero");
            ramp->downhill_dir = ramp->downhill_dir / n;
            if (ramp->h_low > ramp->h_high)
                throw ScenarioError("shape '" + s.id + "': ramp h_low > h_high");
            double s_min = std::numeric_limits<double>::infinity();
            double s_max = -std::numeric_limits<double>::infinity();
            for (const Vec2& v : s.footprint.vertices) {
                const double proj = v.dot(ramp->downhill_dir);
                s_min = std::min(s_min, proj);
                s_max = std::max(s_max, proj);
            }
            if (s_max - s_min < 1e-9)
                throw ScenarioError("shape '" + s.id + "': ramp has zero run");
            ramp->s_min = s_min;
            ramp->s_max = s_max;
        } else if (std::get<ConstantProfile>(s.height_profile).h < 0.0) {
            throw ScenarioError("shape '" + s.id + "': negative height");
        }
    }
    for (const auto& o : objects) {
        if (o.id.empty()) throw ScenarioError("object with empty id");
        if (!ids.insert(o.id).second) throw ScenarioError("duplicate id: " + o.id);
        if (o.half_extents.x <= 0.0 || o.half_extents.y <= 0.0 || o.half_extents.z <= 0.0)
            throw ScenarioError("object '" + o.id + "': half_extents must be positive");
        if (o.mass <= 0.0) throw ScenarioError("object '" + o.id + "': mass must be positive");
        if (o.friction < 0.0) throw ScenarioError("object '" + o.id + "': friction must be >= 0");
        for (const auto& ref : o.rests_on) {
            if (!ids.count(ref))
                throw ScenarioError("object '" + o.id + "': rests_on references unknown id '" +
                                    ref + "'");
        }
    }
    auto positive = [](double v, const char* name) {
        if (v <= 0.0) throw ScenarioError(std::string("robot.") + name + " must be positive");
    };
    positive(robot.base_radius, "base_radius");
    positive(robot.max_base_speed, "max_base_speed");
    positive(robot.max_base_accel, "max_base_accel");
    positive(robot.ee_reach, "ee_reach");
    positive(robot.ee_max_speed, "ee_max_speed");
    positive(robot.grasp_tolerance, "grasp_tolerance");
    positive(robot.success_tolerance, "success_tolerance");
    if (robot.ee_height_min >= robot.ee_height_max)
        throw ScenarioError("robot.ee_height_range must be a nonempty interval");

    std::set<std::string> param_ids;
    for (const auto& p : param_specs) {
        if (!param_ids.insert(p.id).second)
            throw ScenarioError("duplicate param spec id: " + p.id);
        if (const auto* a = std::get_if<AnnulusRegion>(&p.region)) {
            if (!(0.0 < a->r && a->r < a->R))
                throw ScenarioError("param '" + p.id + "': annulus requires 0 < r < R");
        } else if (const auto* r = std::get_if<Rect2Region>(&p.region)) {
            if (r->size.x <= 0.0 || r->size.y <= 0.0)
                throw ScenarioError("param '" + p.id + "': rect2 size must be positive");
        } else if (const auto* b = std::get_if<Box3YawRegion>(&p.region)) {
            if (b->size.x <= 0.0 || b->size.y <= 0.0 || b->size.z <= 0.0)
                throw ScenarioError("param '" + p.id + "': box3yaw size must be positive");
            if (!(b->yaw_halfwidth > 0.0 && b->yaw_halfwidth <= 3.14159265358979323846 + 1e-12))
                throw ScenarioError("param '" + p.id + "': yaw_halfwidth must be in (0, pi]");
        } else {
            const auto& y = std::get<YawRegion>(p.region);
            if (!(y.halfwidth > 0.0 && y.halfwidth <= 3.14159265358979323846 + 1e-12))
                throw ScenarioError("param '" + p.id + "': halfwidth must be in (0, pi]");
        }
    }

    if (goal.robot_region) {
        if (goal.robot_region->size.x <= 0.0 || goal.robot_region->size.y <= 0.0)
            throw ScenarioError("goal.robot_region must have positive area");
    }
    if (goal.object_on_surface) {
        if (!find_object(goal.object_on_surface->object_id))
            throw ScenarioError("goal references unknown object '" +
                                goal.object_on_surface->object_id + "'");
        if (!find_shape(goal.object_on_surface->shape_id))
            throw ScenarioError("goal references unknown shape '" +
                                goal.object_on_surface->shape_id + "'");
    }
    if (goal.object_in_volume) {
        if (!find_object(goal.object_in_volume->object_id))
            throw ScenarioError("goal references unknown object '" +
                                goal.object_in_volume->object_id + "'");
    }
    if (!goal.robot_region && !goal.object_on_surface && !goal.object_in_volume)
        throw ScenarioError("goal must contain at least one clause");

    if (horizon_T <= 0.0) throw ScenarioError("sim.horizon must be positive");
    if (dt <= 0.0) throw ScenarioError("sim.dt must be positive");
    if (dt > 0.05) throw ScenarioError("sim.dt must be <= 0.05 s");
    if (astar_padding < 0.0) throw ScenarioError("sim.astar_padding must be >= 0");
    if (astar_cell <= 0.0) throw ScenarioError("sim.astar_cell must be positive");

    if (sdf_nav(*this, robot_init_position, astar_padding) <= 0.0)
        throw ScenarioError("robot_init collides with a padded obstacle");
}

double sdf_nav(const Scenario& scenario, const Vec2& p, double padding) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : scenario.shapes) {
        if (!s.is_navigation_obstacle) continue;
        best = std::min(best, s.footprint.signed_distance(p) - padding);
    }
    return best;
}

SupportInfo support_query(const Scenario& scenario, const Vec2& p, double z_max) {
    SupportInfo best;  // ground
    for (const auto& s : scenario.shapes) {
        if (!s.footprint.contains(p)) continue;
        const double top = s.top_height_at(p);
        if (top > z_max + 1e-9) continue;
        if (top <= best.support_z) continue;
        best.support_z = top;
        best.shape = &s;
        if (const auto* ramp = std::get_if<RampProfile>(&s.height_profile)) {
            best.downhill = ramp->downhill_dir;
            best.slope_angle = ramp->slope_angle();
        } else {
            best.downhill = {0.0, 0.0};
            best.slope_angle = 0.0;
        }
    }
    return best;
}

}  // namespace planreal
