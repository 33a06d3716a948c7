#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "signet/graph.hpp"
#include "signet/verify.hpp"

namespace signet {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Signed edge list format: header "n m", then m lines "u v s" with s one of
// + or -, 0-indexed vertices, '#' comments. Serialization emits edges sorted
// by (u, v), so parse(serialize(g)) == g.
SignedGraph parse_edge_list(std::istream& in);
SignedGraph parse_edge_list_string(const std::string& text);
SignedGraph load_edge_list(const std::string& path);
std::string serialize_edge_list(const SignedGraph& g);
void save_edge_list(const SignedGraph& g, const std::string& path);

std::string fnv1a_digest(const std::string& bytes);

// Invariant block of the report schema: girth, balance class, exact inertia,
// determinant. `with_meta` adds the timestamp field.
nlohmann::json invariant_report(const SignedGraph& g, bool with_meta);

nlohmann::json enumeration_report_json(const EnumerationReport& rep, bool with_meta);

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace signet
