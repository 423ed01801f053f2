#pragma once

#include "hurwitz/core.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz::cli {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a sweep found disagreeing engines
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInapplicable = 4;

const std::vector<std::string>& engine_names();  // oracle, tropical, recursion, pruned-tropical, dyck

struct RunConfig {
    std::string engine = "oracle";
    std::string type;
    bool pruned = false;
    std::string pruned_side;  // "", "left" or "right"; empty picks the engine default
    std::optional<std::uint64_t> budget;
    std::string out = ".";
    std::string cache;
    int max_d = 4;
    int max_b = 3;
    std::string report = "json";
};

struct ComputeResult {
    HurwitzType type;
    std::string engine;
    ExactRational value;
    std::optional<std::size_t> objects;  // enumerated objects, for enumerating engines
    std::int64_t elapsed_ms = 0;
    std::uint64_t budget_used = 0;  // oracle steps, enumerated objects, or memo entries
};

// Evaluates one type with the configured engine. Throws ParseError,
// BudgetExceeded or Inapplicable.
ComputeResult compute(const RunConfig& cfg);

// Parses argv (argv[0] is the program name) and runs a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
