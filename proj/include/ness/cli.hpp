#pragma once
// Command-line surface: load a model instance plus run parameters from a
// JSON config, run one analysis command, and write reproducible CSV/JSON
// artifacts into an output directory.
//
// Exit codes: 0 success; 1 domain or assumption failure; 2 usage, config
// parse, or schema error; 3 numerical failure (band-edge shell, quadrature).

#include <cstdint>
#include <string_view>

namespace ness::cli {

inline constexpr const char* kArtifactVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// FNV-1a 64-bit over raw bytes; stamped into every output header so results
// can be traced back to the exact config file that produced them
std::uint64_t fnv1a64(std::string_view bytes);

// number of worker threads honored by the scan commands: min(NESS_THREADS,
// hardware concurrency), at least 1
int thread_cap();

int run_cli(int argc, const char* const* argv);

}  // namespace ness::cli
