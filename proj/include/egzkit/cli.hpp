#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "egzkit/egz.hpp"

namespace egzkit::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kDefaultLimit = 1000;

enum class ExitCode : int { Ok = 0, NegativeResult = 1, Usage = 2, Contradiction = 3 };

enum class Status { Ok, Absent, Failed };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Malformed command line or input file.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One invocation's result. `inputs` echoes the normalised request,
/// `payload` holds the subcommand-specific result keys.
struct Report {
  std::string subcommand;
  Status status = Status::Ok;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json payload = nlohmann::json::object();
  std::string version = kVersion;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Payload keys sit at the top level next to version/subcommand/status/inputs.
nlohmann::json to_json(const Report& r);
/// Inverse of to_json. Throws UsageError on a malformed document.
Report report_from_json(const nlohmann::json& j);
std::string render_json(const Report& r);
std::string render_text(const Report& r);

ExitCode exit_code_for(Status s);

/// Comma-separated integers. Throws UsageError naming the 1-based position
/// of the first bad token.
std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what);

/// Sequence from either an inline comma list or a file holding one integer
/// per line ('#' starts a comment; blank lines are skipped). Exactly one
/// source must be given. Elements are reduced mod n.
ResidueSequence parse_sequence_input(std::int64_t modulus, const std::optional<std::string>& inline_list,
                                     const std::optional<std::string>& file);

/// Run `body` and turn its report or exception into output and an exit
/// code. Contradictions go to `err` with the full input echo and exit 3.
int guarded(const std::string& subcommand, const nlohmann::json& inputs, bool json_mode,
            const std::function<Report()>& body, std::ostream& out, std::ostream& err);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egzkit::cli
