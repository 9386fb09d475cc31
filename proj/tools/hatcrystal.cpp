// Command line front end: truncated crystal graph dumps, the verification
// suite, the doubling embedding into the two-component crystal, and format
// conversion for saved graphs. Exit codes: 0 success, 1 failed verification,
// 2 bad configuration or input data, 3 file I/O failure.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hatcrystal/harness.hpp"

namespace {

using namespace hatcrystal;

struct CliConfig {
  std::string model = "binf";
  int e = 6;
  int ell = 3;
  std::vector<int> charge = {0};
  int depth = 4;
  std::string format = "dot";
  std::string out;
  std::string in;
  std::string profile;
  std::string check;
  bool allow_l2 = false;
  int hw_depth = 6;
  int star_depth = 3;
  int word_len = 4;
  int prefix_len = 2;
  int random_words = 100;
  unsigned seed = 1u;
};

void require_ell(int ell, bool allow_l2) {
  if (ell < 3 && !allow_l2)
    throw std::invalid_argument("ell must be at least 3 (pass --allow-l2 to override)");
}

std::string join_counts(const std::vector<size_t>& counts) {
  std::string s;
  for (size_t t = 0; t < counts.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(counts[t]);
  }
  return s;
}

int cmd_graph(const CliConfig& c) {
  CrystalGraph g;
  if (c.model == "binf") {
    g = bfs_generate(BinfModel(IndexSet(c.e)), c.depth).graph;
  } else if (c.model == "hw") {
    g = bfs_generate(HwModel(IndexSet(c.e), c.charge), c.depth).graph;
  } else if (c.model == "hat-binf") {
    require_ell(c.ell, c.allow_l2);
    g = bfs_generate(hat_binf_model(c.ell, c.allow_l2), c.depth).graph;
  } else {
    require_ell(c.ell, c.allow_l2);
    g = bfs_generate(hat_hw_model(c.ell, c.charge.front(), c.allow_l2), c.depth).graph;
  }
  std::string out = c.out.empty() ? "graph." + c.format : c.out;
  write_file(out, c.format == "json" ? to_json(g) : to_dot(g));
  std::cout << "layer sizes " << join_counts(g.layer_counts()) << "\n";
  std::cout << "vertices " << g.vertices.size() << " edges " << g.edges.size() << "\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_verify(const CliConfig& c) {
  require_ell(c.ell, c.allow_l2);
  if (!c.check.empty()) {
    CheckParams p;
    p.ell = c.ell;
    p.allow_l2 = c.allow_l2;
    p.depth = c.depth;
    p.hw_depth = c.hw_depth;
    p.star_depth = c.star_depth;
    p.word_len = c.word_len;
    p.prefix_len = c.prefix_len;
    p.random_words = c.random_words;
    p.seed = c.seed;
    CheckResult r = run_check(c.check, p);
    if (!r.detail.empty()) std::cout << r.detail << "\n";
    std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
    return r.pass ? 0 : 1;
  }
  SuiteReport rep = run_suite(c.profile);
  std::cout << to_json_lines(rep);
  std::cout << summary_table(rep);
  return rep.all_pass() ? 0 : 1;
}

int cmd_iota(const CliConfig& c, const std::vector<int>& letters) {
  require_ell(c.ell, c.allow_l2);
  Multipartition mp = iota_image(c.ell, letters, c.allow_l2);
  HAuto h(c.ell, c.allow_l2);
  std::cout << HwModel::mp_to_string(mp) << "  h-fixed: " << (h.is_fixed(mp) ? "true" : "false")
            << "\n";
  return 0;
}

int cmd_export(const CliConfig& c) {
  CrystalGraph g = graph_from_json(read_file(c.in));
  std::string out = c.out;
  if (out.empty()) out = std::filesystem::path(c.in).replace_extension(c.format).string();
  if (out == c.in) throw std::invalid_argument("export: output would overwrite input; pass --out");
  write_file(out, c.format == "json" ? to_json(g) : to_dot(g));
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  std::vector<int> letters;

  CLI::App app{"folded crystal toolkit"};
  app.require_subcommand(1);

  CLI::App* graph = app.add_subcommand("graph", "generate a truncated crystal graph");
  graph->add_option("--model", cfg.model, "crystal model")
      ->check(CLI::IsMember({"binf", "hw", "hat-binf", "hat-hw"}));
  graph->add_option("--e", cfg.e, "quantum characteristic for unfolded models");
  graph->add_option("--ell", cfg.ell, "level for folded models (characteristic 2*ell)");
  graph->add_option("--charge", cfg.charge, "multicharge for highest-weight models")
      ->delimiter(',');
  graph->add_option("--depth", cfg.depth, "truncation depth")->check(CLI::NonNegativeNumber);
  graph->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", cfg.out, "output path (default graph.<format>)");
  graph->add_flag("--allow-l2", cfg.allow_l2, "permit ell = 2");

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--profile", cfg.profile, "run a full suite profile")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--check", cfg.check, "run a single named check")
      ->check(CLI::IsMember(check_names()));
  verify->add_option("--ell", cfg.ell, "level (characteristic 2*ell)");
  verify->add_option("--depth", cfg.depth, "free crystal truncation depth");
  verify->add_option("--hw-depth", cfg.hw_depth, "highest-weight truncation depth");
  verify->add_option("--star-depth", cfg.star_depth, "starred operator truncation depth");
  verify->add_option("--word-len", cfg.word_len, "exhaustive word length");
  verify->add_option("--prefix-len", cfg.prefix_len, "exhaustive prefix length");
  verify->add_option("--random-words", cfg.random_words, "number of random words");
  verify->add_option("--seed", cfg.seed, "random word seed");
  verify->add_flag("--allow-l2", cfg.allow_l2, "permit ell = 2");

  CLI::App* iota = app.add_subcommand("iota", "doubling embedding of a lowering path");
  iota->add_option("--ell", cfg.ell, "level (characteristic 2*ell)");
  iota->add_flag("--allow-l2", cfg.allow_l2, "permit ell = 2");
  iota->add_option("letters", letters, "lowering path letters mod ell");

  CLI::App* exp = app.add_subcommand("export", "convert a saved graph between formats");
  exp->add_option("--in", cfg.in, "input graph in json form")->required();
  exp->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--out", cfg.out, "output path (default input with new extension)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (!cfg.profile.empty() && !cfg.check.empty())
        throw std::invalid_argument("choose either --profile or --check, not both");
      if (cfg.profile.empty() && cfg.check.empty()) cfg.profile = "quick";
      return cmd_verify(cfg);
    }
    if (graph->parsed()) return cmd_graph(cfg);
    if (iota->parsed()) return cmd_iota(cfg, letters);
    return cmd_export(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
