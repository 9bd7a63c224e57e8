#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "planreal/geometry.hpp"
#include "planreal/params.hpp"

namespace planreal {

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConstantProfile {
    double h = 0.0;
};

/// Linear height field over the footprint: h_high on the uphill edge,
/// h_low on the downhill edge, interpolated along downhill_dir.
struct RampProfile {
    double h_low = 0.0;
    double h_high = 0.0;
    Vec2 downhill_dir;  // unit vector, height decreases along it

    // Extent of the footprint projected on downhill_dir; set on validation.
    double s_min = 0.0;
    double s_max = 0.0;

    double run() const { return s_max - s_min; }
    double slope_angle() const { return std::atan2(h_high - h_low, run()); }
    double height_at(const Vec2& p) const {
        const double s = p.dot(downhill_dir);
        const double t = (s - s_min) / (s_max - s_min);
        return h_high + t * (h_low - h_high);
    }
};

struct StaticShape {
    std::string id;
    ConvexPolygon footprint;
    std::variant<ConstantProfile, RampProfile> height_profile;
    bool is_navigation_obstacle = true;

    bool is_ramp() const { return std::holds_alternative<RampProfile>(height_profile); }
    double top_height_at(const Vec2& p) const {
        if (const auto* c = std::get_if<ConstantProfile>(&height_profile)) return c->h;
        return std::get<RampProfile>(height_profile).height_at(p);
    }
    double max_height() const {
        if (const auto* c = std::get_if<ConstantProfile>(&height_profile)) return c->h;
        return std::get<RampProfile>(height_profile).h_high;
    }
};

struct MovableObject {
    std::string id;
    Vec3 half_extents;
    double mass = 0.0;
    double friction = 0.0;  // coefficient against support surfaces
    Vec3 initial_position;  // center
    std::vector<std::string> rests_on;  // optional scripted support (shape or object ids)
};

struct RobotSpec {
    double base_radius = 0.0;
    double max_base_speed = 0.0;
    double max_base_accel = 0.0;
    double ee_reach = 0.0;  // max horizontal offset of EE from base center
    double ee_height_min = 0.0;
    double ee_height_max = 0.0;
    double ee_max_speed = 0.0;
    double grasp_tolerance = 0.0;   // attachment radius when closing the gripper
    double success_tolerance = 0.0; // epsilon of the in()/ee_in() predicates
};

struct ObjectOnSurfaceGoal {
    std::string object_id;
    std::string shape_id;
};

/// Object center inside a ground-plane rectangle with center below z_max
/// (used for "inside the open box" style goals).
struct ObjectInVolumeGoal {
    std::string object_id;
    Rect2 region;
    double z_max = 0.0;
};

struct GoalSpec {
    std::optional<Rect2> robot_region;
    std::optional<ObjectOnSurfaceGoal> object_on_surface;
    std::optional<ObjectInVolumeGoal> object_in_volume;
};

struct ControllerGains {
    double kp = 2.0;
    double kd = 2.5;
    double ki = 0.0;
    double gamma = 4.0;    // attractor weight
    double damping = 5.0;  // B
    double eta = 2.0;      // repulsor strength
    double d_safe = 0.4;   // repulsor activation distance
    double action_budget = 0.0;  // seconds per action; 0 means horizon_T / k
};

struct Scenario {
    std::vector<StaticShape> shapes;
    std::vector<MovableObject> objects;
    RobotSpec robot;
    Vec2 robot_init_position;
    double robot_init_heading = 0.0;
    std::vector<ParamSpec> param_specs;
    GoalSpec goal;
    double horizon_T = 0.0;
    double dt = 0.0;
    double astar_padding = 0.0;
    double astar_cell = 0.05;
    ControllerGains gains;

    const StaticShape* find_shape(const std::string& id) const;
    const MovableObject* find_object(const std::string& id) const;
    const ParamSpec* find_param(const std::string& id) const;
    int object_index(const std::string& id) const;

    /// World extent covering all geometry, regions and the robot, padded.
    void world_bounds(Vec2& lo, Vec2& hi) const;

    /// Throws ScenarioError naming the violated invariant.
    void validate();
};

struct SupportInfo {
    double support_z = 0.0;
    Vec2 downhill;      // zero for flat tops and ground
    double slope_angle = 0.0;
    const StaticShape* shape = nullptr;  // nullptr means ground
};

/// Signed clearance of point p from the padded navigation obstacles
/// (negative inside a padded footprint, +inf when there are none).
double sdf_nav(const Scenario& scenario, const Vec2& p, double padding);

/// Highest top surface at or below z_max whose footprint contains p;
/// ground (z=0, flat) when no shape qualifies.
SupportInfo support_query(const Scenario& scenario, const Vec2& p, double z_max);

}  // namespace planreal
