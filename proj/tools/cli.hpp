#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace bott::cli {

using Document = nlohmann::ordered_json;

/// Commands accepted by --command (and by the "command" key of batch jobs).
const std::vector<std::string>& command_names();

/// Runs one command on one parsed job document. Throws InputError or
/// ConsistencyError; never touches stdio. With `oracle` set, the result gains
/// an "oracle" member and is otherwise identical.
Document execute(const std::string& command, const nlohmann::json& job, bool oracle);

/// Full command line front end. Returns the process exit code:
/// 0 ok, 1 invalid input, 2 internal consistency failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a result document.
std::string render_table(const Document& doc);

}  // namespace bott::cli
