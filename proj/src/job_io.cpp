#include "wgtunnel/job_io.hpp"

#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace wgtunnel {

namespace {

using nlohmann::json;

class Diagnostics {
public:
    void add(std::string msg) { items_.push_back(std::move(msg)); }
    [[nodiscard]] bool empty() const { return items_.empty(); }

    [[noreturn]] void raise() const {
        std::string msg;
        for (const auto& d : items_) {
            if (!msg.empty()) msg += "; ";
            msg += d;
        }
        throw Error(ErrorKind::ConfigInvalid, msg);
    }

private:
    std::vector<std::string> items_;
};

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ConfigInvalid, std::string("malformed JSON: ") + e.what());
    }
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<std::string_view> known, Diagnostics& diag) {
    for (const auto& [key, _] : obj.items()) {
        bool found = false;
        for (auto k : known) found = found || k == key;
        if (!found) diag.add(where + key + ": unknown key");
    }
}

double read_number(const json& obj, const std::string& where, const char* key, bool required,
                   double fallback, Diagnostics& diag) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        if (required) diag.add(where + key + ": missing");
        return fallback;
    }
    if (!it->is_number()) {
        diag.add(where + key + ": expected a number");
        return fallback;
    }
    return it->get<double>();
}

GuideGeometry read_geometry(const json& obj, const std::string& where, Diagnostics& diag) {
    GuideGeometry g;
    if (!obj.is_object()) {
        diag.add(where.empty() ? "geometry: expected an object" : where + ": expected an object");
        return g;
    }
    reject_unknown(obj, where,
                   {"a_m", "b_m", "s_m", "d_m", "L_m", "eps_r", "mu_r", "eps_r_inner", "mu_r_inner"},
                   diag);
    g.a = read_number(obj, where, "a_m", true, 0.0, diag);
    g.b = read_number(obj, where, "b_m", true, 0.0, diag);
    g.s = read_number(obj, where, "s_m", true, 0.0, diag);
    g.d = read_number(obj, where, "d_m", true, 0.0, diag);
    g.length = read_number(obj, where, "L_m", true, 0.0, diag);
    g.eps_r = read_number(obj, where, "eps_r", false, 1.0, diag);
    g.mu_r = read_number(obj, where, "mu_r", false, 1.0, diag);
    g.eps_r_inner = read_number(obj, where, "eps_r_inner", false, 1.0, diag);
    g.mu_r_inner = read_number(obj, where, "mu_r_inner", false, 1.0, diag);
    return g;
}

ModeIndex read_mode(const json& doc, const char* key, Diagnostics& diag) {
    const std::string where = std::string(key) + ".";
    ModeIndex idx;
    const auto it = doc.find(key);
    if (it == doc.end()) {
        diag.add(std::string(key) + ": missing");
        return idx;
    }
    if (!it->is_object()) {
        diag.add(std::string(key) + ": expected an object");
        return idx;
    }
    reject_unknown(*it, where, {"polarization", "m", "n"}, diag);

    const auto pol = it->find("polarization");
    if (pol == it->end()) {
        diag.add(where + "polarization: missing");
    } else if (!pol->is_string() || (*pol != "TE" && *pol != "TM")) {
        diag.add(where + "polarization: expected \"TE\" or \"TM\"");
    } else {
        idx.polarization = *pol == "TE" ? Polarization::TE : Polarization::TM;
    }
    for (const char* k : {"m", "n"}) {
        const auto v = it->find(k);
        int& slot = k[0] == 'm' ? idx.m : idx.n;
        if (v == it->end()) {
            diag.add(where + k + ": missing");
        } else if (!v->is_number_integer()) {
            diag.add(where + k + ": expected an integer");
        } else {
            slot = v->get<int>();
        }
    }
    return idx;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ConfigInvalid, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

SweepJob parse_job(std::string_view text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw Error(ErrorKind::ConfigInvalid, "job: expected a JSON object");

    Diagnostics diag;
    reject_unknown(doc, "",
                   {"geometry", "incident", "inner", "omega_min_rad_per_s", "omega_max_rad_per_s",
                    "points", "grid", "allow_constraint_violation"},
                   diag);

    SweepJob job;
    if (const auto it = doc.find("geometry"); it == doc.end()) {
        diag.add("geometry: missing");
    } else {
        job.geometry = read_geometry(*it, "geometry.", diag);
    }
    job.incident = read_mode(doc, "incident", diag);
    job.inner = read_mode(doc, "inner", diag);
    job.omega_min = read_number(doc, "", "omega_min_rad_per_s", true, 0.0, diag);
    job.omega_max = read_number(doc, "", "omega_max_rad_per_s", true, 0.0, diag);

    if (const auto it = doc.find("points"); it == doc.end()) {
        diag.add("points: missing");
    } else if (!it->is_number_integer()) {
        diag.add("points: expected an integer");
    } else {
        job.points = it->get<int>();
    }

    if (const auto it = doc.find("grid"); it != doc.end()) {
        if (*it == "linear") {
            job.grid = GridKind::Linear;
        } else if (*it == "log") {
            job.grid = GridKind::Log;
        } else {
            diag.add("grid: expected \"linear\" or \"log\"");
        }
    }
    if (const auto it = doc.find("allow_constraint_violation"); it != doc.end()) {
        if (it->is_boolean()) {
            job.allow_constraint_violation = it->get<bool>();
        } else {
            diag.add("allow_constraint_violation: expected true or false");
        }
    }

    // Semantic checks only make sense once the structure is sound.
    if (diag.empty()) {
        for (auto& d : job_diagnostics(job)) diag.add(std::move(d));
    }
    if (!diag.empty()) diag.raise();
    return job;
}

SweepJob load_job(const std::filesystem::path& path) { return parse_job(slurp(path)); }

GuideGeometry parse_geometry(std::string_view text) {
    const json doc = parse_document(text);
    Diagnostics diag;
    GuideGeometry g;
    if (doc.is_object() && doc.contains("geometry")) {
        g = read_geometry(doc["geometry"], "geometry.", diag);
    } else {
        g = read_geometry(doc, "", diag);
    }
    if (diag.empty()) {
        if (const auto err = geometry_error(g)) diag.add("geometry: " + std::string(to_string(*err)));
    }
    if (!diag.empty()) diag.raise();
    return g;
}

GuideGeometry load_geometry(const std::filesystem::path& path) {
    return parse_geometry(slurp(path));
}

}  // namespace wgtunnel
