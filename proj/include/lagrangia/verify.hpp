#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagrangia/json_io.hpp"

namespace lagrangia {

struct Assertion {
    std::string id;
    std::string claim;
    bool passed = true;
    Json details = Json::object();
    /// null unless the assertion failed with a concrete witness.
    Json counterexample = nullptr;
};

struct Report {
    std::string command = "verify";
    std::string suite;
    Json inputs = Json::object();
    std::uint64_t seed = 0;
    std::string version;
    std::vector<Assertion> assertions;
    std::optional<double> wall_seconds;

    bool passed() const;
    /// Assertions sorted by id; wall time only when recorded.
    Json to_json() const;
};

struct VerifyParams {
    std::uint64_t seed = 0;
    /// Suite-specific scale knobs; unset means the suite default.
    std::optional<int> n;
    std::optional<int> t;
    std::optional<int> samples;
    int threads = 1;
    bool timing = false;
    bool force_scale = false;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws std::invalid_argument for unknown names.
Report verify(const std::string& suite, const VerifyParams& params = {});

const char* version();

}  // namespace lagrangia
