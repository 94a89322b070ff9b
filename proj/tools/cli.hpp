#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

// args excludes the program name. Results go to --output files or `out`;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Violation {
  std::string kind;
  std::string file;
  std::string detail;
};

struct VerifyRequest {
  std::vector<std::string> graphs;
  std::vector<std::string> reports;
  std::vector<std::string> registers;
  std::vector<std::string> embeds;
  std::string profile;  // hardware profile JSON, optional
  bool strict = false;
  bool lint = false;
};

struct VerifyOutcome {
  int checks = 0;
  std::vector<Violation> violations;
  std::vector<Violation> warnings;  // promoted to violations under strict
};

VerifyOutcome verify(const VerifyRequest& req);
Json verify_outcome_to_json(const VerifyOutcome& v);

}  // namespace backbone::cli
