#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "g2net/rational.hpp"

namespace g2net {

/// Options of the `eval` subcommand.
struct RunConfig {
  std::string inputPath;  // "-" reads standard input
  enum class RMode { symbolic, kuperberg, numeric } rMode = RMode::symbolic;
  enum class QMode { symbolic, numeric } qMode = QMode::symbolic;
  Rational rValue{0};
  Rational qValue{0};
  bool mirrorFlag = false;
  bool json = false;
  bool stats = false;
};

/// Exit codes: 0 success, 1 evaluation error, 2 parse/validation error,
/// 3 verification failure.
int runCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace g2net
