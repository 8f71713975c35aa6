#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gkz::cli {

enum class OutputFormat { Text, Json };

struct CommandRequest {
  std::string command;     // hull, triangulate, gkz, game, chow, secondary, resultant, discriminant, ea, verify
  std::string input_path;  // empty or "-" reads stdin
  OutputFormat format = OutputFormat::Text;
  bool include_noncoherent = false;
  std::size_t cap = 10;
  std::optional<std::size_t> degree;
};

const std::vector<std::string>& command_names();

/// Exit status: 0 on success, 1 when verify reports FAIL, 2 on input
/// errors (parse errors, cap exceeded, unsupported configuration, ...).
int run(const CommandRequest& request, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs the command.
int main(int argc, char** argv);

}  // namespace gkz::cli
