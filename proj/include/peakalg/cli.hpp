#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "peakalg/json_io.hpp"

namespace peakalg {

enum class Status { Ok, Verified, Violation, Error };

const char* status_name(Status s);
int exit_code(Status s);  // Ok/Verified -> 0, Violation -> 2, Error -> 1

struct CommandResult {
  Status status = Status::Ok;
  Json payload;  // deterministic: no timestamps, lex term order
  std::int64_t elapsed_ms = 0;

  Json to_json() const;
};

enum class Format { JsonOut, Csv, Pretty };

struct CommandOutput {
  CommandResult result;
  std::string rendered;  // what goes to stdout in the requested format
};

CommandResult cmd_expand(const std::string& basis, const std::string& index,
                         const std::string& to);
CommandResult cmd_matrix(int n, const std::string& pair);
CommandResult cmd_verify(const std::string& suite, int max_n);
CommandResult cmd_scan_conjecture(int max_n, int jobs);
CommandResult cmd_pct(const std::string& shape, const std::string& content);
CommandResult cmd_pieri(const std::string& alpha, int s, bool peak);
CommandResult cmd_covers(const std::string& alpha);

std::string render(const CommandResult& r, Format f,
                   const std::string& command);

/* Full argv -> output + exit code; the real main() is a thin wrapper. */
int run_cli(const std::vector<std::string>& args, std::string& out,
            std::string& err);

}  // namespace peakalg
