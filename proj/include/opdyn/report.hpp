#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "opdyn/grid.hpp"

namespace opdyn {

/// One recorded witness. Which slots are meaningful depends on the
/// item; the JSON field names are chosen per kind so a reader can
/// re-evaluate the inequality from the serialized report alone.
struct Witness {
    enum class Kind {
        WeightTriple,   // x_i, x_j, x_d with the two compared weights
        ValuePair,      // two sample points with their f values (monotonicity)
        MidpointTriple, // x_i, x_j, x_d with f(x_i) and the f-midpoint
        DistancePair,   // two realized f-distances with their g values
    };

    Kind kind = Kind::WeightTriple;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    std::optional<double> zeta;  // realized threshold ratio (existence items)

    nlohmann::json to_json() const {
        nlohmann::json j;
        switch (kind) {
            case Kind::WeightTriple:
                j["x_i"] = p1;
                j["x_j"] = p2;
                j["x_d"] = p3;
                j["c_j"] = lhs;
                j["c_d"] = rhs;
                break;
            case Kind::ValuePair:
                j["x_lo"] = p1;
                j["x_hi"] = p2;
                j["f_lo"] = lhs;
                j["f_hi"] = rhs;
                break;
            case Kind::MidpointTriple:
                j["x_i"] = p1;
                j["x_j"] = p2;
                j["x_d"] = p3;
                j["f_i"] = lhs;
                j["midpoint"] = rhs;
                break;
            case Kind::DistancePair:
                j["d_lo"] = p1;
                j["d_hi"] = p2;
                j["g_lo"] = lhs;
                j["g_hi"] = rhs;
                break;
        }
        if (zeta) j["zeta"] = *zeta;
        return j;
    }
};

/// Result of one checked condition item.
struct ItemResult {
    std::string item;                 // e.g. "7a-1", "11c"
    bool pass = true;
    std::uint64_t checked = 0;        // grid tuples meeting the hypothesis
    std::vector<Witness> witnesses;   // violations (universal items) or
                                      // realizing examples (existence items)
    bool existence = false;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["item"] = item;
        j["status"] = pass ? "pass" : "fail";
        j["checked"] = checked;
        j["witnesses"] = nlohmann::json::array();
        for (const auto& w : witnesses) j["witnesses"].push_back(w.to_json());
        return j;
    }
};

/// Per-item pass/fail report produced by the condition checkers.
/// Witness order is deterministic: lexicographic grid order for the
/// triple enumerations, ascending distance for the monotonicity scans.
struct ConditionReport {
    std::string check;                // confirmation | negativity | theorem1 | theorem2
    GridSpec grid;
    double tol = 0.0;
    std::optional<std::string> orientation;  // theorem checks only
    std::vector<ItemResult> items;

    bool all_pass() const {
        for (const auto& it : items) {
            if (!it.pass) return false;
        }
        return true;
    }

    const ItemResult* find(const std::string& id) const {
        for (const auto& it : items) {
            if (it.item == id) return &it;
        }
        return nullptr;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["check"] = check;
        j["grid"] = {{"resolution", grid.resolution},
                     {"exclusion_band", grid.exclusion_band},
                     {"witness_cap", grid.witness_cap},
                     {"tol_strict", grid.tol_strict},
                     {"tol_eq", grid.tol_eq},
                     {"dist_merge_tol", grid.dist_merge_tol}};
        j["tol"] = tol;
        if (orientation) j["orientation"] = *orientation;
        j["all_pass"] = all_pass();
        j["items"] = nlohmann::json::array();
        for (const auto& it : items) j["items"].push_back(it.to_json());
        return j;
    }
};

}  // namespace opdyn
