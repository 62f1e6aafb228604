#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lober/densify.hpp"

namespace lober::cli {

enum class Mode { transverse, light };

struct RunConfig {
  Mode mode = Mode::transverse;
  std::filesystem::path c1_path;
  std::filesystem::path c2_path;
  std::filesystem::path rslt_path;
  DensifyConfig densify;
  std::filesystem::path artifacts_dir;
  bool oracle = false;
  std::optional<std::filesystem::path> plot_dir;
  std::uint64_t seed = 0x5eed;
  std::size_t oracle_samples = 1'000'000;
  std::optional<unsigned> workers;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTransversality = 3;

struct UsageError {
  std::string message;
};

/// Parses the main grammar `[-light] <c1> <c2> <rslt> [-DENS <nPass> <nDens>]`
/// with options in any position. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

std::string usage();

/// Runs the tool; args exclude the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `lober fixture ...`: writes a generated curve as Tecplot.
int run_fixture(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lober::cli
