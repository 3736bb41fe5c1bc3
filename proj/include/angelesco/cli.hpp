#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verification inside the
// command failed (or a numerical refinement gave up), 2 usage or validation
// error, 3 I/O error.

#include "angelesco/precision.hpp"
#include "angelesco/report.hpp"
#include "angelesco/weights.hpp"

#include <string>
#include <vector>

namespace angelesco::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  std::string subcommand;
  WeightParams params;
  bool weights_given = false;  ///< --a or any exponent was passed
  Rational tau{0};
  Rational beta_model{0};      ///< model-check / q-eval beta
  unsigned n = 4, n2 = 0;      ///< n2 = 0 means n2 = n
  std::vector<unsigned long> ladder;
  std::string z = "0";         ///< "re", "re,im" or "re+imi"
  std::string method = "contour";
  unsigned points = 20;
  double radius = 0.25;
  unsigned digits = kDefaultDigits;
  std::string out;
  ReportFormat format = ReportFormat::Json;
};

/// Throws UsageError (with exit code) on bad flags or values; returns an
/// exit code through `early_exit` for --help.
class UsageError : public Error {
 public:
  UsageError(const std::string& what, int code = kExitUsage) : Error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

RunConfig parse_args(int argc, const char* const* argv);
Report run_command(const RunConfig& cfg);
/// Parse, run, emit; never throws.
int run_cli(int argc, const char* const* argv);

/// "1", "1,0.5", "1+0.5i", "-2i".
Complex parse_complex(const std::string& text);
std::vector<unsigned long> parse_ladder(const std::string& text);

}  // namespace angelesco::cli
