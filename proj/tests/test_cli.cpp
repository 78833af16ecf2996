#include "doctest.h"

#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = szt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("szt_cli_" + name);
  std::ofstream(p) << body;
  return p.string();
}

const std::string one_edge = R"({"kind":"node","children":{"kind":"finite","items":[{"kind":"leaf"}]}})";
const std::string vee = R"({"parent":[null,0,0,1,1]})";

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"tree", "rank", "--ordinal", "w^(2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "w^(2)+1\n");

  r = run({"szlenk", "index", "--ordinal", "w", "--epsilon", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "w+1\n");

  auto s = temp_file("s.json", one_edge), t = temp_file("t.json", vee);
  r = run({"factor", "subtree", "--source", s, "--target", t, "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"equal\":true") != std::string::npos);
}

TEST_CASE("text and json forms") {
  auto r = run({"--json", "tree", "rank", "--ordinal", "w+1"});
  CHECK(r.out == "{\"rank\":\"w+2\"}\n");
  r = run({"ordinal", "cmp", "--a", "w*2", "--b", "w+5"});
  CHECK(r.out == ">\n");
  r = run({"ordinal", "mul", "--a", "w+1", "--n", "3"});
  CHECK(r.out == "w*3+1\n");
  r = run({"ordinal", "doubling", "--ordinal", "w*3+1", "--alpha", "1"});
  CHECK(r.out == "2\n");
  // ε at or above 1 separates nothing.
  r = run({"szlenk", "index", "--ordinal", "w^(2)", "--epsilon", "3/2"});
  CHECK(r.out == "1\n");
  r = run({"szlenk", "run", "--ordinal", "2", "--epsilon", "1/2", "--levels", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.front() == '[');
  r = run({"tree", "dot", "--ordinal", "1", "--depth", "1", "--width", "2"});
  CHECK(r.out.rfind("digraph", 0) == 0);
}

TEST_CASE("usage errors exit 1 and name the flag") {
  auto r = run({"szlenk", "index", "--ordinal", "w", "--epsilon", "0.5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--epsilon") != std::string::npos);

  r = run({"tree", "rank", "--ordinal", "w^(1)+w^(2)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--ordinal") != std::string::npos);

  r = run({"fdlab", "kk", "--seed", "1", "--c", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--c") != std::string::npos);

  r = run({"tree", "rank", "--node", "[0]"});
  CHECK(r.code == 1);
  r = run({"tree", "rank", "--ordinal", "w", "--tree", vee});
  CHECK(r.code == 1);
  r = run({"vec", "chain", "--ordinal", "w", "--vector", R"({"entries":[{"node":[0,0],"value":"1"}]})"});
  CHECK(r.code == 1);
  r = run({"ordinal", "fundseq", "--ordinal", "w", "--n", "-1"});
  CHECK(r.code == 1);
  r = run({"nosuch"});
  CHECK(r.code == 1);
  r = run({});
  CHECK(r.code == 1);
  r = run({"check", "module=nosuch"});
  CHECK(r.code == 1);
  r = run({"factor", "subtree", "--source", "/nonexistent/s.json", "--target", vee});
  CHECK(r.code == 1);
  CHECK(r.err.find("--source") != std::string::npos);

  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("szlenk") != std::string::npos);
}

TEST_CASE("verification failures exit 2") {
  // Five nodes do not embed into a single edge.
  auto r = run({"factor", "subtree", "--source", vee, "--target", one_edge});
  CHECK(r.code == 1);
  // Both nodes onto the root is rejected before any composition.
  r = run({"factor", "subtree", "--source", one_edge, "--target", vee, "--phi", "0,0", "--check"});
  CHECK(r.code == 1);
  CHECK(r.err.find("--phi") != std::string::npos);
  // Skipping a level still preserves the order.
  r = run({"factor", "subtree", "--source", one_edge, "--target", vee, "--phi", "0,3", "--check"});
  CHECK(r.code == 0);

  // Witness with δ above what the vectors allow.
  std::string w = R"({"delta":"2","space":"l1","x":[["1","0"],["0","1"]],"xstar":[["1","0"],["0","1"]],"diag":["1","1"]})";
  r = run({"factor", "witness", "--tree", R"({"parent":[null,0]})", "--witness", w});
  CHECK(r.code == 2);
  CHECK(r.out.find("\"valid\":false") != std::string::npos);

  r = run({"ordinal", "add", "--a", "w", "--b", "1", "--oracle"});
  CHECK(r.code == 0);
}

TEST_CASE("check subcommand") {
  auto r = run({"check", "module=topology", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("[PASS] 12", 0) == 0);
  r = run({"--json", "check", "module=factor"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("deterministic output") {
  std::vector<std::vector<std::string>> cmds = {
      {"--json", "fdlab", "lower", "--seed", "11"},
      {"--json", "fdlab", "kk", "--seed", "12", "--c", "5/4"},
      {"--json", "szlenk", "trace", "--ordinal", "w", "--epsilon", "1/4", "--levels", "w+1"},
      {"--json", "factor", "build", "--tree", vee},
      {"check", "module=vectors", "--seed", "5"},
  };
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    // Timings differ between runs; compare everything else.
    auto strip = [](std::string s) {
      auto p = s.find(" s");
      while (p != std::string::npos) {
        auto q = s.rfind(", ", p);
        s.erase(q, p + 2 - q);
        p = s.find(" s", q);
      }
      return s;
    };
    CHECK(strip(a.out) == strip(b.out));
  }
}

TEST_CASE("command table covers every module operation") {
  // Kept by hand from the module interfaces, not derived from the table.
  const std::vector<std::string> operations = {
      "ordinal::cmp",
      "ordinal::add",
      "ordinal::mul",
      "ordinal::nat_mul",
      "ordinal::omega_pow",
      "ordinal::classify",
      "ordinal::fund_seq",
      "ordinal::leading_alpha",
      "ordinal::doubling_exponent",
      "ordinal::order_type_oracle",
      "tree::leq",
      "tree::height",
      "tree::blossom",
      "tree::rank_node",
      "tree::rank_tree",
      "tree::derive",
      "tree::is_max",
      "tree::enumerate_compatible",
      "tree::induced_wellorder",
      "tree::embed",
      "tree::full_subtree",
      "tree::omega_code",
      "tree::truncate",
      "tree::star",
      "topology::wedge_member",
      "topology::is_isolated",
      "topology::cb_derive",
      "topology::cb_rank",
      "topology::check_closed_downward",
      "topology::check_embedding_continuity",
      "topology::compactness_report",
      "vectors::l1_norm",
      "vectors::sigma_apply",
      "vectors::sup_norm",
      "vectors::sigma0_apply",
      "vectors::james_norm",
      "vectors::chain_inequality_check",
      "vectors::eps_separated",
      "vectors::delta_net_check",
      "factor::verify_witness",
      "factor::witness_to_factorization",
      "factor::factorization_to_witness",
      "factor::subtree_factorization",
      "factor::verify_branch_witness",
      "szlenk::build_model",
      "szlenk::szlenk_derive",
      "szlenk::szlenk_index",
      "szlenk::level_set",
      "szlenk::spoindex_check",
      "szlenk::halving_schedule",
      "fdlab::sphere_net",
      "fdlab::lowerlemma_check",
      "fdlab::annihilator",
      "fdlab::kk_norm",
  };
  std::set<std::string> covered;
  for (const auto& c : szt::cli::command_table()) covered.insert(c.operations.begin(), c.operations.end());
  for (const auto& op : operations) {
    INFO(op);
    CHECK(covered.count(op) == 1);
  }

  const std::set<std::string> required = {
      "ordinal add",  "ordinal mul",    "ordinal cmp",    "ordinal fundseq", "ordinal alpha",   "ordinal doubling",
      "tree build",   "tree rank",      "tree derive",    "tree embed",      "tree enumerate",  "tree truncate",
      "tree dot",     "topology cb",    "topology compact", "vec sigma",     "vec james",       "vec chain",
      "factor witness", "factor build", "factor subtree", "szlenk index",    "szlenk trace",    "szlenk schedule",
      "szlenk spoindex", "fdlab lower", "fdlab kk",       "check"};
  std::set<std::string> names;
  for (const auto& c : szt::cli::command_table()) names.insert(c.name);
  for (const auto& n : required) {
    INFO(n);
    CHECK(names.count(n) == 1);
  }
}

TEST_CASE("every table example runs") {
  for (const auto& c : szt::cli::command_table()) {
    auto r = run(c.example);
    INFO(c.name, " ", r.err);
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
    CHECK(r.out.back() == '\n');
  }
}
