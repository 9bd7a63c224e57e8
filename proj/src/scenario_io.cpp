#include "planreal/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace planreal {

using nlohmann::json;

namespace {

Vec2 parse_vec2(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw ScenarioError(where + ": expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Vec3 parse_vec3(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3)
        throw ScenarioError(where + ": expected [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

const json& require(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ScenarioError(where + ": missing field '" + key + "'");
    return *it;
}

Rect2 parse_rect(const json& j, const std::string& where) {
    Rect2 r;
    r.center = parse_vec2(require(j, "center", where), where + ".center");
    r.size = parse_vec2(require(j, "size", where), where + ".size");
    return r;
}

StaticShape parse_shape(const json& j) {
    StaticShape s;
    s.id = require(j, "id", "shapes[]").get<std::string>();
    const std::string where = "shape '" + s.id + "'";
    for (const auto& v : require(j, "footprint", where)) {
        s.footprint.vertices.push_back(parse_vec2(v, where + ".footprint"));
    }
    const json& h = require(j, "height", where);
    const std::string type = require(h, "type", where + ".height").get<std::string>();
    if (type == "constant") {
        s.height_profile = ConstantProfile{require(h, "h", where).get<double>()};
    } else if (type == "ramp") {
        RampProfile r;
        r.h_low = require(h, "h_low", where).get<double>();
        r.h_high = require(h, "h_high", where).get<double>();
        r.downhill_dir = parse_vec2(require(h, "downhill_dir", where), where + ".downhill_dir");
        s.height_profile = r;
    } else {
        throw ScenarioError(where + ": unknown height type '" + type + "'");
    }
    s.is_navigation_obstacle = require(j, "navigation_obstacle", where).get<bool>();
    return s;
}

MovableObject parse_object(const json& j) {
    MovableObject o;
    o.id = require(j, "id", "objects[]").get<std::string>();
    const std::string where = "object '" + o.id + "'";
    o.half_extents = parse_vec3(require(j, "half_extents", where), where + ".half_extents");
    o.mass = require(j, "mass", where).get<double>();
    o.friction = require(j, "friction", where).get<double>();
    o.initial_position = parse_vec3(require(j, "initial_position", where), where + ".initial_position");
    if (j.contains("rests_on")) {
        for (const auto& r : j["rests_on"]) o.rests_on.push_back(r.get<std::string>());
    }
    return o;
}

ParamSpec parse_param(const json& j) {
    ParamSpec p;
    p.id = require(j, "id", "params[]").get<std::string>();
    const std::string where = "param '" + p.id + "'";
    const std::string kind = require(j, "kind", where).get<std::string>();
    if (kind == "annulus") {
        AnnulusRegion a;
        a.center = parse_vec2(require(j, "center", where), where + ".center");
        a.r = require(j, "r", where).get<double>();
        a.R = require(j, "R", where).get<double>();
        p.region = a;
    } else if (kind == "rect2") {
        Rect2Region r;
        r.center = parse_vec2(require(j, "center", where), where + ".center");
        r.size = parse_vec2(require(j, "size", where), where + ".size");
        p.region = r;
    } else if (kind == "box3yaw") {
        Box3YawRegion b;
        b.center = parse_vec3(require(j, "center", where), where + ".center");
        b.size = parse_vec3(require(j, "size", where), where + ".size");
        b.yaw_halfwidth = require(j, "yaw_halfwidth", where).get<double>();
        p.region = b;
    } else if (kind == "yaw") {
        YawRegion y;
        y.center = require(j, "center", where).get<double>();
        y.halfwidth = require(j, "halfwidth", where).get<double>();
        p.region = y;
    } else {
        throw ScenarioError(where + ": unknown kind '" + kind + "'");
    }
    return p;
}

}  // namespace

Scenario load_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario parse error: ") + e.what());
    }

    Scenario sc;
    for (const auto& s : require(j, "shapes", "scenario")) sc.shapes.push_back(parse_shape(s));
    for (const auto& o : require(j, "objects", "scenario")) sc.objects.push_back(parse_object(o));

    const json& r = require(j, "robot", "scenario");
    sc.robot.base_radius = require(r, "base_radius", "robot").get<double>();
    sc.robot.max_base_speed = require(r, "max_base_speed", "robot").get<double>();
    sc.robot.max_base_accel = require(r, "max_base_accel", "robot").get<double>();
    sc.robot.ee_reach = require(r, "ee_reach", "robot").get<double>();
    const json& hr = require(r, "ee_height_range", "robot");
    if (!hr.is_array() || hr.size() != 2)
        throw ScenarioError("robot.ee_height_range: expected [min, max]");
    sc.robot.ee_height_min = hr[0].get<double>();
    sc.robot.ee_height_max = hr[1].get<double>();
    sc.robot.ee_max_speed = require(r, "ee_max_speed", "robot").get<double>();
    sc.robot.grasp_tolerance = require(r, "grasp_tolerance", "robot").get<double>();
    sc.robot.success_tolerance = require(r, "success_tolerance", "robot").get<double>();

    const json& ri = require(j, "robot_init", "scenario");
    sc.robot_init_position = parse_vec2(require(ri, "position", "robot_init"), "robot_init.position");
    sc.robot_init_heading = require(ri, "heading", "robot_init").get<double>();

    for (const auto& p : require(j, "params", "scenario")) sc.param_specs.push_back(parse_param(p));

    const json& g = require(j, "goal", "scenario");
    if (g.contains("robot_region")) sc.goal.robot_region = parse_rect(g["robot_region"], "goal.robot_region");
    if (g.contains("object_on_surface")) {
        const json& os = g["object_on_surface"];
        sc.goal.object_on_surface = ObjectOnSurfaceGoal{
            require(os, "object", "goal.object_on_surface").get<std::string>(),
            require(os, "shape", "goal.object_on_surface").get<std::string>()};
    }
    if (g.contains("object_in_volume")) {
        const json& ov = g["object_in_volume"];
        ObjectInVolumeGoal goal;
        goal.object_id = require(ov, "object", "goal.object_in_volume").get<std::string>();
        goal.region = parse_rect(require(ov, "region", "goal.object_in_volume"), "goal.object_in_volume.region");
        goal.z_max = require(ov, "z_max", "goal.object_in_volume").get<double>();
        sc.goal.object_in_volume = goal;
    }

    const json& sim = require(j, "sim", "scenario");
    sc.horizon_T = require(sim, "horizon", "sim").get<double>();
    sc.dt = require(sim, "dt", "sim").get<double>();
    sc.astar_padding = require(sim, "astar_padding", "sim").get<double>();
    sc.astar_cell = sim.value("astar_cell", 0.05);
    if (sim.contains("controllers")) {
        const json& c = sim["controllers"];
        sc.gains.kp = c.value("kp", sc.gains.kp);
        sc.gains.kd = c.value("kd", sc.gains.kd);
        sc.gains.ki = c.value("ki", sc.gains.ki);
        sc.gains.gamma = c.value("gamma", sc.gains.gamma);
        sc.gains.damping = c.value("damping", sc.gains.damping);
        sc.gains.eta = c.value("eta", sc.gains.eta);
        sc.gains.d_safe = c.value("d_safe", sc.gains.d_safe);
        sc.gains.action_budget = c.value("action_budget", sc.gains.action_budget);
    }

    sc.validate();
    return sc;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_scenario(ss.str());
}

std::string save_scenario(const Scenario& sc) {
    json j;
    j["shapes"] = json::array();
    for (const auto& s : sc.shapes) {
        json js;
        js["id"] = s.id;
        json fp = json::array();
        for (const auto& v : s.footprint.vertices) fp.push_back({v.x, v.y});
        js["footprint"] = fp;
        if (const auto* c = std::get_if<ConstantProfile>(&s.height_profile)) {
            js["height"] = {{"type", "constant"}, {"h", c->h}};
        } else {
            const auto& ramp = std::get<RampProfile>(s.height_profile);
            js["height"] = {{"type", "ramp"},
                            {"h_low", ramp.h_low},
                            {"h_high", ramp.h_high},
                            {"downhill_dir", {ramp.downhill_dir.x, ramp.downhill_dir.y}}};
        }
        js["navigation_obstacle"] = s.is_navigation_obstacle;
        j["shapes"].push_back(js);
    }
    j["objects"] = json::array();
    for (const auto& o : sc.objects) {
        json jo;
        jo["id"] = o.id;
        jo["half_extents"] = {o.half_extents.x, o.half_extents.y, o.half_extents.z};
        jo["mass"] = o.mass;
        jo["friction"] = o.friction;
        jo["initial_position"] = {o.initial_position.x, o.initial_position.y, o.initial_position.z};
        if (!o.rests_on.empty()) jo["rests_on"] = o.rests_on;
        j["objects"].push_back(jo);
    }
    j["robot"] = {{"base_radius", sc.robot.base_radius},
                  {"max_base_speed", sc.robot.max_base_speed},
                  {"max_base_accel", sc.robot.max_base_accel},
                  {"ee_reach", sc.robot.ee_reach},
                  {"ee_height_range", {sc.robot.ee_height_min, sc.robot.ee_height_max}},
                  {"ee_max_speed", sc.robot.ee_max_speed},
                  {"grasp_tolerance", sc.robot.grasp_tolerance},
                  {"success_tolerance", sc.robot.success_tolerance}};
    j["robot_init"] = {{"position", {sc.robot_init_position.x, sc.robot_init_position.y}},
                       {"heading", sc.robot_init_heading}};
    j["params"] = json::array();
    for (const auto& p : sc.param_specs) {
        json jp;
        jp["id"] = p.id;
        if (const auto* a = std::get_if<AnnulusRegion>(&p.region)) {
            jp["kind"] = "annulus";
            jp["center"] = {a->center.x, a->center.y};
            jp["r"] = a->r;
            jp["R"] = a->R;
        } else if (const auto* rr = std::get_if<Rect2Region>(&p.region)) {
            jp["kind"] = "rect2";
            jp["center"] = {rr->center.x, rr->center.y};
            jp["size"] = {rr->size.x, rr->size.y};
        } else if (const auto* b = std::get_if<Box3YawRegion>(&p.region)) {
            jp["kind"] = "box3yaw";
            jp["center"] = {b->center.x, b->center.y, b->center.z};
            jp["size"] = {b->size.x, b->size.y, b->size.z};
            jp["yaw_halfwidth"] = b->yaw_halfwidth;
        } else {
            const auto& y = std::get<YawRegion>(p.region);
            jp["kind"] = "yaw";
            jp["center"] = y.center;
            jp["halfwidth"] = y.halfwidth;
        }
        j["params"].push_back(jp);
    }
    json jg;
    if (sc.goal.robot_region) {
        jg["robot_region"] = {{"center", {sc.goal.robot_region->center.x, sc.goal.robot_region->center.y}},
                              {"size", {sc.goal.robot_region->size.x, sc.goal.robot_region->size.y}}};
    }
    if (sc.goal.object_on_surface) {
        jg["object_on_surface"] = {{"object", sc.goal.object_on_surface->object_id},
                                   {"shape", sc.goal.object_on_surface->shape_id}};
    }
    if (sc.goal.object_in_volume) {
        const auto& ov = *sc.goal.object_in_volume;
        jg["object_in_volume"] = {{"object", ov.object_id},
                                  {"region",
                                   {{"center", {ov.region.center.x, ov.region.center.y}},
                                    {"size", {ov.region.size.x, ov.region.size.y}}}},
                                  {"z_max", ov.z_max}};
    }
    j["goal"] = jg;
    j["sim"] = {{"horizon", sc.horizon_T},
                {"dt", sc.dt},
                {"astar_padding", sc.astar_padding},
                {"astar_cell", sc.astar_cell},
                {"controllers",
                 {{"kp", sc.gains.kp},
                  {"kd", sc.gains.kd},
                  {"ki", sc.gains.ki},
                  {"gamma", sc.gains.gamma},
                  {"damping", sc.gains.damping},
                  {"eta", sc.gains.eta},
                  {"d_safe", sc.gains.d_safe},
                  {"action_budget", sc.gains.action_budget}}}};
    return j.dump(2);
}

}  // namespace planreal
