// SPDX-License-Identifier: MIT
#include "leja/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "leja/errors.hpp"

namespace leja {

std::string fmt_num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json num_json(double v) {
    if (std::isfinite(v)) return v;
    return fmt_num(v);
}

namespace {

double number(const Json& j, const char* what) {
    if (!j.is_number()) throw ValidationError(std::string("set spec: ") + what + " must be a number");
    return j.get<double>();
}

}  // namespace

CompactSet parse_set_spec(const Json& j) {
    if (!j.is_object()) throw ValidationError("set spec: expected a JSON object");
    if (j.contains("intervals")) {
        const auto& iv = j.at("intervals");
        if (!iv.is_array()) throw ValidationError("set spec: \"intervals\" must be an array");
        std::vector<std::pair<double, double>> pairs;
        for (const auto& p : iv) {
            if (!p.is_array() || p.size() != 2) throw ValidationError("set spec: each interval is [lo, hi]");
            pairs.emplace_back(number(p[0], "lo"), number(p[1], "hi"));
        }
        return make_union(pairs);
    }
    if (j.contains("cantor")) {
        const auto& c = j.at("cantor");
        if (!c.is_object() || !c.contains("depth") || !c.contains("ratio"))
            throw ValidationError("set spec: cantor needs depth and ratio");
        if (!c.at("depth").is_number_integer()) throw ValidationError("set spec: cantor depth must be an integer");
        return cantor_approx(c.at("depth").get<int>(), number(c.at("ratio"), "ratio"));
    }
    throw ValidationError("set spec: need \"intervals\" or \"cantor\"");
}

CompactSet parse_set_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("set spec: invalid JSON: ") + e.what());
    }
    return parse_set_spec(j);
}

Json set_to_json(const CompactSet& k) {
    Json arr = Json::array();
    for (const auto& iv : k.intervals()) arr.push_back({iv.lo, iv.hi});
    return Json{{"intervals", arr}};
}

void write_sequence_csv(std::ostream& os, const PointSequence& seq) {
    os << "index,x\n";
    for (std::size_t i = 0; i < seq.points.size(); ++i) os << i << ',' << fmt_num(seq.points[i]) << '\n';
}

Json sequence_to_json(const PointSequence& seq) {
    Json j;
    j["n"] = seq.points.size();
    j["tau"] = seq.tau;
    j["grid_density"] = seq.grid_density;
    j["rng_seed"] = seq.rng_seed;
    Json pts = Json::array(), ratios = Json::array();
    for (double x : seq.points) pts.push_back(num_json(x));
    for (double r : seq.achieved_ratios) ratios.push_back(num_json(r));
    j["points"] = pts;
    j["achieved_ratios"] = ratios;
    return j;
}

void write_profile_csv(std::ostream& os, const std::vector<std::pair<double, double>>& profile) {
    os << "x,lambda(x)\n";
    for (const auto& [x, l] : profile) os << fmt_num(x) << ',' << fmt_num(l) << '\n';
}

void write_bound_csv(std::ostream& os, const BoundReport& rep) {
    os << "delta,G,bound\n";
    for (std::size_t i = 0; i < rep.delta_grid.size(); ++i)
        os << fmt_num(rep.delta_grid[i]) << ',' << fmt_num(rep.G_values[i]) << ',' << fmt_num(rep.bound_values[i])
           << '\n';
}

Json bound_to_json(const BoundReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["tau"] = rep.tau;
    j["best_delta"] = num_json(rep.best_delta);
    j["best_bound"] = num_json(rep.best_bound);
    j["best_log_bound"] = num_json(rep.best_log_bound);
    j["interior"] = rep.interior;
    j["grid_points"] = rep.delta_grid.size();
    return j;
}

Json instance_to_json(const ITauInstance& inst) {
    Json xs = Json::array();
    for (double x : inst.xs()) xs.push_back(x);
    return Json{{"xs", xs}, {"tau", inst.tau()}};
}

ITauInstance instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("xs") || !j.at("xs").is_array())
        throw ValidationError("instance: expected {\"xs\": [...], \"tau\": t}");
    std::vector<double> xs;
    for (const auto& v : j.at("xs")) {
        if (!v.is_number()) throw ValidationError("instance: xs must be numbers");
        xs.push_back(v.get<double>());
    }
    double tau = 1.0;
    if (j.contains("tau")) {
        if (!j.at("tau").is_number()) throw ValidationError("instance: tau must be a number");
        tau = j.at("tau").get<double>();
    }
    return ITauInstance(std::move(xs), tau);
}

std::vector<ITauInstance> instances_from_json(const Json& j) {
    const Json* arr = &j;
    if (j.is_object() && j.contains("instances")) arr = &j.at("instances");
    if (!arr->is_array()) throw ValidationError("instances: expected an array");
    std::vector<ITauInstance> out;
    for (const auto& e : *arr) out.push_back(instance_from_json(e));
    return out;
}

Json itau_result_to_json(const ITauResult& r) {
    return Json{{"log_value", num_json(r.log_value)},
                {"value", num_json(r.value())},
                {"m", r.m},
                {"breakpoints", r.breakpoints}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace leja
