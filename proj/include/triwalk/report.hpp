#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace triwalk {

/// Outcome of an exhaustive check: how many instances were compared and the
/// first counterexample, if any.
struct CheckReport {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::string counterexample;
    double seconds = 0.0;

    CheckReport() = default;
    explicit CheckReport(std::string n) : name(std::move(n)) {}

    void fail(std::string what) {
        if (passed) counterexample = std::move(what);
        passed = false;
    }
    void merge(const CheckReport& other) {
        checks += other.checks;
        if (!other.passed) fail(other.counterexample);
    }
};

inline nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j{{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"seconds", r.seconds}};
    if (!r.passed) j["counterexample"] = r.counterexample;
    return j;
}

}  // namespace triwalk
