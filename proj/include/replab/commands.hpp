#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "replab/config.hpp"

namespace replab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;  ///< bad config, bad command, model error
inline constexpr int kExitIo = 2;

std::span<const std::string_view> command_names();

std::string usage();

struct DispatchOptions {
  std::string out_dir = ".";
  int threads = 0;  ///< 0 = hardware concurrency
};

/// Runs one command. Results go to `out` and to files under opts.out_dir;
/// diagnostics go to `err`. Returns an exit code and never throws
/// replab::Error.
int dispatch(std::string_view command, const RunConfig& config, const DispatchOptions& opts,
             std::ostream& out, std::ostream& err);

}  // namespace replab
