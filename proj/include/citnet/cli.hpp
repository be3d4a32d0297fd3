#pragma once

#include "citnet/numeric.hpp"
#include "citnet/weights.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace citnet::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kBadArguments = 2,
    kParseFailure = 3,
    kCyclic = 4,
    kOverflow = 5,
    kIoFailure = 6,
};

enum class Repair { Shrink, Preprint };

struct RunConfig {
    std::string command;  // stats | repair | weights | mainpath | cpm | cut | islands | hits
    std::filesystem::path input;
    std::filesystem::path out_dir = "citnet-out";
    Method method = Method::SPC;
    std::optional<NumericMode> mode;  // unset: log above 10^6 arcs, float otherwise
    double alpha = 1.0;
    std::optional<double> threshold;
    std::size_t k = 1;
    std::optional<std::size_t> K;
    std::optional<Repair> repair;
    std::vector<std::pair<std::size_t, std::size_t>> delete_arcs;  // 1-based (tail, head)
    bool normalize = false;
    bool log = false;
    bool single = false;
    bool jsonl = false;
    std::size_t top = 15;
    double tolerance = 1e-12;
    std::size_t max_iterations = 1000;
};

inline constexpr std::size_t kLogModeArcThreshold = 1000000;
inline constexpr const char* kVersion = "1.0.0";

// Checks parameter ranges; throws ArgumentError.
void validate(const RunConfig& config);

// Runs one command, writing files under config.out_dir and a report to out.
// Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace citnet::cli
