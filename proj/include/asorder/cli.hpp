#pragma once

// Command layer shared by the binary and the tests: a validated run
// configuration, its JSON round-trip, and the dispatcher that renders
// reports. Identical configurations produce byte-identical output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "asorder/json_io.hpp"

namespace asorder {

struct RunConfig {
    std::string command;  // construct | census | bound | verify | table | sweep
    std::uint64_t p = 0;
    unsigned n = 1;
    std::string a = "1";
    std::string b = "0";
    std::optional<std::string> modulus;  // base-field modulus override
    std::optional<unsigned> s, t;        // explicit budgets for `bound`
    double epsilon = 0.01;
    std::string output = "text";  // or "json"
    unsigned order_guard_bits = 63;
    std::uint64_t enum_cap = 10'000'000;
    std::vector<std::uint64_t> p_list;  // sweep grid
    std::vector<unsigned> n_list;
};

Json config_to_json(const RunConfig& c);
RunConfig config_from_json(const Json& j);

// exit codes: 0 clean, 1 usage or input error, 2 completed with
// consistency flags raised
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace asorder
