// signet: exact spectral invariants of signed graphs, family generators, and
// exhaustive desk-scale verification of the classification claims the library
// implements (catalog ids 3.1, 3.2, 3.3; see README).
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "signet/congruence.hpp"
#include "signet/families.hpp"
#include "signet/io.hpp"
#include "signet/predicates.hpp"
#include "signet/switching.hpp"
#include "signet/verify.hpp"

using namespace signet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCounterexample = 3;

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

void emit(const SignedGraph& g, const std::string& out_path, bool quiet) {
  const std::string payload = serialize_edge_list(g);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    save_edge_list(g, out_path);
    if (!quiet) std::cout << "wrote " << out_path << "\n";
  }
}

int run_compute(const std::string& path, bool as_json, bool no_meta) {
  SignedGraph g = path == "-" ? parse_edge_list(std::cin) : load_edge_list(path);
  if (as_json) {
    std::cout << invariant_report(g, !no_meta).dump(2) << "\n";
    return kExitOk;
  }
  auto gr = girth_and_cycles(g);
  if (gr.girth)
    std::cout << "girth " << *gr.girth << "\n";
  else
    std::cout << "girth infinite (forest)\n";
  auto bal = balance(g);
  if (bal.balanced) {
    std::cout << "balance balanced, switching function ";
    for (Sign s : bal.theta.vertex_signs) std::cout << s.symbol();
    std::cout << "\n";
  } else {
    std::cout << "balance unbalanced, negative cycle";
    for (int v : bal.witness.vertices) std::cout << " " << v;
    std::cout << "\n";
  }
  auto cong = congruent_diagonalize(adjacency_matrix(g));
  std::cout << "inertia (" << cong.inertia.i_plus << "," << cong.inertia.i_minus << ","
            << cong.inertia.nullity << ")\n";
  std::cout << "det " << cong.det.to_string() << " (sign "
            << (cong.det.signum() > 0 ? "+" : cong.det.signum() < 0 ? "-" : "0") << ")\n";
  return kExitOk;
}

int report_generated(const SignedGraph& g, const std::string& out_path, bool as_json = false,
                     const std::string& family = "") {
  if (as_json) {
    nlohmann::json j;
    j["tool"] = "signet";
    j["version"] = kToolVersion;
    j["family"] = family;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["i_minus"] = inertia(g).i_minus;
    j["edge_list"] = serialize_edge_list(g);
    if (!out_path.empty()) save_edge_list(g, out_path);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  emit(g, out_path, false);
  std::cout << "i- " << inertia(g).i_minus << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signet: exact signed-graph spectral invariants"};
  app.require_subcommand(1);

  // compute
  std::string compute_path;
  bool compute_json = false, compute_no_meta = false;
  auto* compute = app.add_subcommand("compute", "invariants of a signed edge-list file");
  compute->add_option("file", compute_path, "input file, or - for stdin")->required();
  compute->add_flag("--json", compute_json, "JSON report");
  compute->add_flag("--no-meta", compute_no_meta, "omit the timestamp field");

  // generate
  auto* generate = app.add_subcommand("generate", "emit a family member as an edge list");
  std::string gen_out;
  bool gen_unbalanced = false, gen_json = false;
  std::string gen_reading = "proof";
  generate->add_flag("--json", gen_json, "JSON family record");
  generate->require_subcommand(1);

  auto* g_cycle = generate->add_subcommand("cycle", "signed cycle C_n");
  int cycle_n = 0;
  g_cycle->add_option("n", cycle_n)->required();
  g_cycle->add_flag("--unbalanced", gen_unbalanced);
  g_cycle->add_option("--out", gen_out);

  auto* g_path = generate->add_subcommand("path", "path P_n (all positive)");
  int path_n = 0;
  g_path->add_option("n", path_n)->required();
  g_path->add_option("--out", gen_out);

  auto* g_star = generate->add_subcommand("star", "star K_{1,t}");
  int star_t = 0;
  g_star->add_option("t", star_t)->required();
  g_star->add_option("--out", gen_out);

  auto* g_theta = generate->add_subcommand("theta", "theta graph B(a,b,c), path orders a b c");
  int theta_a = 0, theta_b = 0, theta_c = 0;
  g_theta->add_option("a", theta_a)->required();
  g_theta->add_option("b", theta_b)->required();
  g_theta->add_option("c", theta_c)->required();
  g_theta->add_flag("--unbalanced", gen_unbalanced, "one negative edge on the longest path");
  g_theta->add_option("--out", gen_out);

  auto* g_canon = generate->add_subcommand("canonical", "canonical signed unicyclic graph");
  int canon_girth = 0;
  std::string canon_stars;
  g_canon->add_option("--girth", canon_girth)->required();
  g_canon->add_option("--stars", canon_stars, "position:count pairs, e.g. 0:2,3:1")->required();
  g_canon->add_flag("--unbalanced", gen_unbalanced);
  g_canon->add_option("--out", gen_out);

  auto* g_gamma = generate->add_subcommand("gamma", "parameterized family gamma<id>");
  int gamma_id = 0;
  std::string gamma_pendants;
  int gamma_tail = 1;
  g_gamma->add_option("id", gamma_id, "family id 1-11")->required();
  g_gamma->add_option("--pendants", gamma_pendants, "per-position pendant counts, e.g. 1,0,2");
  g_gamma->add_option("--tail", gamma_tail, "deep pendant count for families 1-3");
  g_gamma->add_option("--reading", gen_reading, "statement | proof side conditions");
  g_gamma->add_option("--out", gen_out);

  auto* g_kjoin = generate->add_subcommand("kjoin", "star center joined into a canonical unicyclic graph");
  std::string kjoin_mode = "cycle", kjoin_stars, kjoin_targets;
  int kjoin_girth = 0, kjoin_leaves = 1;
  g_kjoin->add_option("--mode", kjoin_mode, "pendant (claim 3.2(3)) or cycle (claim 3.3(7))");
  g_kjoin->add_option("--leaves", kjoin_leaves, "star leaf count t");
  g_kjoin->add_option("--girth", kjoin_girth, "girth of the base graph")->required();
  g_kjoin->add_option("--stars", kjoin_stars, "base stars, position:count pairs");
  g_kjoin->add_option("--targets", kjoin_targets, "join targets in the base graph")->required();
  g_kjoin->add_flag("--unbalanced", gen_unbalanced);
  g_kjoin->add_option("--out", gen_out);

  for (auto* sub : generate->get_subcommands(nullptr)) sub->fallthrough();

  // classify
  std::string classify_path, classify_reading = "proof";
  bool classify_json = false, classify_no_meta = false;
  auto* classify = app.add_subcommand("classify", "hypothesis report and family tag");
  classify->add_option("file", classify_path)->required();
  classify->add_option("--reading", classify_reading, "statement | proof");
  classify->add_flag("--json", classify_json);
  classify->add_flag("--no-meta", classify_no_meta);

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive desk-scale check of a claim");
  std::string verify_claim, verify_girth = "", verify_out, verify_reading = "both";
  int verify_max_n = 0, verify_jobs = 1, verify_mult = 3;
  bool verify_json = false, verify_no_meta = false;
  verify->add_option("claim", verify_claim, "3.1, 3.2 or 3.3")->required();
  verify->add_option("--girth", verify_girth, "girth or range a-b");
  verify->add_option("--max-n", verify_max_n, "order bound (0 = claim default)");
  verify->add_option("--mult-max", verify_mult, "star size bound for claim 3.1");
  verify->add_option("--jobs", verify_jobs, "worker threads");
  verify->add_option("--reading", verify_reading, "statement | proof | both (claim 3.3)");
  verify->add_option("--out", verify_out, "write the JSON report here");
  verify->add_flag("--json", verify_json, "print the JSON report");
  verify->add_flag("--no-meta", verify_no_meta, "omit timestamp and runtime");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return run_compute(compute_path, compute_json, compute_no_meta);

    if (*generate) {
      if (*g_cycle) return report_generated(gen_cycle(cycle_n, !gen_unbalanced), gen_out, gen_json, "cycle");
      if (*g_path) return report_generated(gen_path(path_n), gen_out, gen_json, "path");
      if (*g_star) return report_generated(gen_star(star_t), gen_out, gen_json, "star");
      if (*g_theta)
        return report_generated(gen_unbalanced ? gen_theta_unbalanced(theta_a, theta_b, theta_c)
                                               : gen_theta(theta_a, theta_b, theta_c),
                                gen_out, gen_json, "theta");
      auto parse_stars = [](const std::string& text) {
        std::vector<std::pair<int, int>> stars;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          auto colon = item.find(':');
          if (colon == std::string::npos) throw FamilyError("stars: expected position:count");
          stars.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
        }
        return stars;
      };
      if (*g_canon) {
        CanonicalUnicyclicSpec spec{canon_girth, !gen_unbalanced, parse_stars(canon_stars)};
        return report_generated(gen_canonical_unicyclic(spec), gen_out, gen_json, "canonical");
      }
      if (*g_gamma) {
        GammaParams params;
        params.tail = gamma_tail;
        params.pendants = parse_int_list(gamma_pendants);
        auto conv = gen_reading == "statement" ? FamilyConvention::statement : FamilyConvention::proof;
        return report_generated(gen_gamma(gamma_id, params, conv), gen_out, gen_json, "gamma" + std::to_string(gamma_id));
      }
      if (*g_kjoin) {
        SignedGraph base = kjoin_stars.empty()
                               ? gen_cycle(kjoin_girth, !gen_unbalanced)
                               : gen_canonical_unicyclic(
                                     {kjoin_girth, !gen_unbalanced, parse_stars(kjoin_stars)});
        KJoinSpec spec;
        spec.mode = kjoin_mode == "pendant" ? KJoinMode::pendant_attach : KJoinMode::cycle_attach;
        spec.star_leaves = kjoin_leaves;
        spec.targets = parse_int_list(kjoin_targets);
        return report_generated(gen_kjoin_family(spec, base), gen_out, gen_json, "kjoin");
      }
    }

    if (*classify) {
      SignedGraph g = load_edge_list(classify_path);
      auto conv =
          classify_reading == "statement" ? FamilyConvention::statement : FamilyConvention::proof;
      auto hyp = hypothesis_check(g);
      auto deep = thm32_classify(g);
      auto shallow = thm33_classify(g, conv);
      if (classify_json) {
        auto j = invariant_report(g, !classify_no_meta);
        j["classification"]["hypotheses_common"] = hyp.common_ok();
        j["classification"]["qualifies_deep"] = hyp.qualifies_deep();
        j["classification"]["qualifies_shallow"] = hyp.qualifies_shallow();
        j["classification"]["deep_tag"] = family_tag_name(deep.tag);
        j["classification"]["shallow_tag"] = family_tag_name(shallow.tag);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "common hypotheses " << (hyp.common_ok() ? "pass" : "fail") << "\n";
        std::cout << "deep (3.2) tag " << family_tag_name(deep.tag)
                  << (deep.detail.empty() ? "" : " [" + deep.detail + "]") << "\n";
        std::cout << "shallow (3.3) tag " << family_tag_name(shallow.tag)
                  << (shallow.detail.empty() ? "" : " [" + shallow.detail + "]") << "\n";
        std::cout << "exact i- " << inertia(g).i_minus << "\n";
      }
      return kExitOk;
    }

    if (*verify) {
      VerifyOptions opts;
      if (!verify_girth.empty()) {
        auto dash = verify_girth.find('-');
        if (dash == std::string::npos) {
          opts.girth_min = opts.girth_max = std::stoi(verify_girth);
        } else {
          opts.girth_min = std::stoi(verify_girth.substr(0, dash));
          opts.girth_max = std::stoi(verify_girth.substr(dash + 1));
        }
      } else if (verify_claim == "3.1") {
        opts.girth_min = 5;
        opts.girth_max = 9;
      }
      opts.max_n = verify_max_n;
      opts.mult_max = verify_mult;
      opts.jobs = verify_jobs;
      if (verify_reading == "statement")
        opts.reading = VerifyOptions::Reading::statement;
      else if (verify_reading == "proof")
        opts.reading = VerifyOptions::Reading::proof;

      auto rep = verify_theorem(verify_claim, opts);
      auto j = enumeration_report_json(rep, !verify_no_meta);
      if (!verify_out.empty()) {
        std::ofstream out(verify_out);
        if (!out) throw IoError("cannot write " + verify_out);
        out << j.dump(2) << "\n";
      }
      if (verify_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "claim " << rep.claim << ": " << rep.classes_checked << " signed graphs, "
                  << rep.hypothesis_passed << " hypothesis-passing, " << rep.target_hits
                  << " at the target value\n";
        if (!rep.selected_reading.empty()) {
          std::cout << "selected reading: " << rep.selected_reading;
          for (const auto& [name, count] : rep.reading_counterexamples)
            std::cout << "  [" << name << ": " << count << " counterexamples]";
          std::cout << "\n";
        }
        std::cout << rep.bounds_note << "\n";
        if (rep.structural_violations > 0)
          std::cout << "STRUCTURAL VIOLATIONS: " << rep.structural_violations << "\n";
        if (rep.counterexamples.empty()) {
          std::cout << "no counterexamples\n";
        } else {
          std::cout << rep.counterexamples.size() << " counterexample(s):\n";
          for (const auto& ce : rep.counterexamples) std::cout << "  " << ce.note << "\n";
        }
      }
      return rep.ok() ? kExitOk : kExitCounterexample;
    }
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const FamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
