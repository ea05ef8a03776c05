#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "alcove/core.hpp"

namespace alcove::cli {

enum class Command { Count, Converge, Identities, Saddle };
enum class Format { Json, Csv };

struct RunConfig {
    Command command = Command::Count;
    Family family = Family::AlcoveA;
    StepKind steps = StepKind::Standard;
    int n = 1;
    int m2 = 2;
    Point start;
    std::optional<Point> end;  // free end point when absent
    std::vector<int> ks;
    unsigned precision = 64;   // starting digits of the spectral ladder
    Format format = Format::Json;
    std::string out_path;      // stdout when empty
    // saddle
    std::vector<int> rs;
    int d2 = 0;
    // identities
    int n_max = 3;
};

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// "10", "0:20", "10:200:10" or "4,8,16".
std::vector<int> parse_k_list(const std::string& text);

// Parses argv-style arguments (without the program name), runs the command
// and writes the report.  Returns one of the exit codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// CSV reader matching the writer: header row plus data rows, RFC 4180 quoting.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace alcove::cli
