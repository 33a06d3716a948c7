#include "signet/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "signet/congruence.hpp"
#include "signet/switching.hpp"

namespace signet {

namespace {

std::string timestamp() {
  auto now = std::chrono::system_clock::now();
  auto t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

SignedGraph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<SignedEdge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m)) {
        std::string probe;
        std::istringstream blank(line);
        if (!(blank >> probe)) continue;  // blank or comment line before header
        throw IoError("line " + std::to_string(lineno) + ": expected header \"n m\"");
      }
      if (n < 0 || m < 0) throw IoError("line " + std::to_string(lineno) + ": negative header counts");
      continue;
    }
    long long u, v;
    std::string s;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v >> s))
      throw IoError("line " + std::to_string(lineno) + ": expected \"u v s\"");
    if (s != "+" && s != "-")
      throw IoError("line " + std::to_string(lineno) + ": sign must be + or -");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw IoError("line " + std::to_string(lineno) + ": vertex out of range");
    if (u == v) throw IoError("line " + std::to_string(lineno) + ": self-loop");
    edges.push_back({static_cast<int>(u), static_cast<int>(v), s == "+" ? Sign::plus() : Sign::minus()});
    std::string tail;
    if (ls >> tail) throw IoError("line " + std::to_string(lineno) + ": trailing tokens");
  }
  if (n < 0) throw IoError("missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != m)
    throw IoError("header declares " + std::to_string(m) + " edges, found " +
                  std::to_string(edges.size()));
  try {
    return SignedGraph::from_edge_list(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw IoError(e.what());
  }
}

SignedGraph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

SignedGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_edge_list(in);
}

std::string serialize_edge_list(const SignedGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& e : g.edges())
    os << e.u << " " << e.v << " " << e.sign.symbol() << "\n";
  return os.str();
}

void save_edge_list(const SignedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << serialize_edge_list(g);
}

std::string fnv1a_digest(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json invariant_report(const SignedGraph& g, bool with_meta) {
  nlohmann::json j;
  j["tool"] = "signet";
  j["version"] = kToolVersion;
  j["schema"] = kSchemaVersion;
  j["input_digest"] = fnv1a_digest(serialize_edge_list(g));
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();

  auto gr = girth_and_cycles(g);
  if (gr.girth)
    j["girth"] = *gr.girth;
  else
    j["girth"] = nullptr;

  auto bal = balance(g);
  j["balance"]["balanced"] = bal.balanced;
  if (bal.balanced) {
    std::string theta;
    for (Sign s : bal.theta.vertex_signs) theta.push_back(s.symbol());
    j["balance"]["switching_function"] = theta;
  } else {
    j["balance"]["negative_cycle"] = bal.witness.vertices;
  }

  auto cong = congruent_diagonalize(adjacency_matrix(g));
  j["inertia"]["plus"] = cong.inertia.i_plus;
  j["inertia"]["minus"] = cong.inertia.i_minus;
  j["inertia"]["nullity"] = cong.inertia.nullity;
  j["det"] = cong.det.to_string();
  j["det_sign"] = cong.det.signum();
  if (with_meta) j["meta"]["generated_at"] = timestamp();
  return j;
}

nlohmann::json enumeration_report_json(const EnumerationReport& rep, bool with_meta) {
  nlohmann::json j;
  j["tool"] = "signet";
  j["version"] = kToolVersion;
  j["schema"] = kSchemaVersion;
  j["claim"] = rep.claim;
  j["options"]["girth_min"] = rep.options.girth_min;
  j["options"]["girth_max"] = rep.options.girth_max;
  j["options"]["max_n"] = rep.options.max_n;
  j["options"]["mult_max"] = rep.options.mult_max;
  j["graphs_enumerated"] = rep.graphs_enumerated;
  j["classes_checked"] = rep.classes_checked;
  j["hypothesis_passed"] = rep.hypothesis_passed;
  j["target_hits"] = rep.target_hits;
  j["structural_violations"] = rep.structural_violations;
  j["bounds"] = rep.bounds_note;
  auto cells = nlohmann::json::array();
  for (const auto& [cell, count] : rep.girth_iminus_counts)
    cells.push_back({{"girth", cell.first}, {"i_minus", cell.second}, {"count", count}});
  j["girth_iminus_counts"] = cells;
  if (!rep.selected_reading.empty()) {
    j["selected_reading"] = rep.selected_reading;
    for (const auto& [name, count] : rep.reading_counterexamples)
      j["reading_counterexamples"][name] = count;
  }
  auto ces = nlohmann::json::array();
  for (const auto& ce : rep.counterexamples) {
    nlohmann::json c;
    c["girth"] = ce.girth;
    c["i_minus"] = ce.i_minus;
    c["tagged"] = ce.tagged;
    c["note"] = ce.note;
    c["edge_list"] = serialize_edge_list(ce.graph);
    ces.push_back(std::move(c));
  }
  j["counterexamples"] = ces;
  j["ok"] = rep.ok();
  if (with_meta) {
    j["meta"]["generated_at"] = timestamp();
    j["meta"]["seconds"] = rep.seconds;
  }
  return j;
}

}  // namespace signet
