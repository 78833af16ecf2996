#include "cli.hpp"

#include "CLI11.hpp"
#include "criteria.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "szt/json_io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace szt::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string flag_error(const char* flag, const std::exception& e) { return std::string(flag) + ": " + e.what(); }

Rational rational_arg(const std::string& v, const char* flag) {
  try {
    return parse_rational(v);
  } catch (const std::exception& e) {
    throw UsageError(flag_error(flag, e));
  }
}

Ordinal ordinal_arg(const std::string& v, const char* flag) {
  try {
    return parse_ordinal(v);
  } catch (const std::exception& e) {
    throw UsageError(flag_error(flag, e));
  }
}

std::size_t natural_arg(const std::string& v, const char* flag) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 18)
    throw UsageError(std::string(flag) + ": expected a natural number, got '" + v + "'");
  return std::stoull(v);
}

Json json_arg(const std::string& v, const char* flag) {
  std::string text = v;
  if (v.empty() || (v.front() != '{' && v.front() != '[')) {
    std::ifstream in(v);
    if (!in) throw UsageError(std::string(flag) + ": cannot open '" + v + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag_error(flag, e));
  }
}

NodeId path_arg(const std::string& v, const char* flag) {
  try {
    return node_from_json(Json::parse(v));
  } catch (const std::exception& e) {
    throw UsageError(flag_error(flag, e));
  }
}

std::vector<std::string> split(const std::string& v) {
  std::vector<std::string> parts;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

std::vector<std::size_t> naturals_arg(const std::string& v, const char* flag) {
  std::vector<std::size_t> out;
  for (const auto& p : split(v)) out.push_back(natural_arg(p, flag));
  return out;
}

std::vector<Rational> rationals_arg(const std::string& v, const char* flag) {
  std::vector<Rational> out;
  for (const auto& p : split(v)) out.push_back(rational_arg(p, flag));
  return out;
}

template <typename F>
auto with_flag(const char* flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag_error(flag, e));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(flag_error(flag, e));
  }
}

std::string cmp_symbol(Ordering o) { return o == Ordering::less ? "<" : o == Ordering::equal ? "=" : ">"; }

Json paths_json(const std::vector<NodeId>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(to_json(p));
  return j;
}

Json indices_json(const std::vector<std::size_t>& xs) {
  Json j = Json::array();
  for (auto x : xs) j.push_back(x);
  return j;
}

// Everything the parser fills in. Subcommands share fields; only one runs.
struct Args {
  bool json = false;
  std::string a, b, n, count, ordinal, alpha;
  bool oracle = false;
  std::string tree, offset, stride, chain, node, xi, depth = "3", width = "3", budget = "16", psi, base;
  bool compatible = false, forest = false, zero = false, step = false, check = false;
  std::string source, target, wedge, set, vector, vectors, targets, epsilon, delta, norm = "sup", max_support;
  std::string witness, op, vstar, phi, trees, thresholds, levels, instance, seed, max_dim = "6", samples = "200", c;
  std::string check_target = "all";
};

TreeExpr load_tree(const Args& a) {
  if (a.ordinal.empty() == a.tree.empty()) throw UsageError("give exactly one of --ordinal and --tree");
  TreeExpr T = a.tree.empty() ? blossom(ordinal_arg(a.ordinal, "--ordinal"))
                              : with_flag("--tree", [&] {
                                  Json j = json_arg(a.tree, "--tree");
                                  if (j.contains("parent")) return to_expr(fintree_from_json(j).tree);
                                  return tree_from_json(j);
                                });
  if (!a.offset.empty() || !a.stride.empty()) {
    std::size_t o = a.offset.empty() ? 0 : natural_arg(a.offset, "--offset");
    std::size_t s = a.stride.empty() ? 1 : natural_arg(a.stride, "--stride");
    T = with_flag("--stride", [&] { return full_subtree(T, o, s); });
  }
  return T;
}

PathTree load_fintree(const std::string& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string(flag) + " is required");
  return with_flag(flag, [&] { return fintree_from_json(json_arg(v, flag)); });
}

std::string dump(const Json& j) { return j.dump(); }

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& argv);

 private:
  void define(CLI::App& app);
  CLI::App* sub(CLI::App* parent, const char* name, const char* help, std::function<int()> action);
  void tree_flags(CLI::App* s);

  // Prints text normally, the JSON document under --json.
  int emit(const std::string& text, const Json& j, int code = 0) {
    out_ << (args_.json ? dump(j) : text) << "\n";
    return code;
  }
  int emit(const Json& j, int code = 0) { return emit(dump(j), j, code); }

  int ordinal_add();
  int ordinal_mul();
  int ordinal_cmp();
  int ordinal_fundseq();
  int ordinal_alpha();
  int ordinal_doubling();
  int tree_build();
  int tree_rank();
  int tree_derive();
  int tree_embed();
  int tree_enumerate();
  int tree_truncate();
  int tree_dot();
  int topology_cb();
  int topology_compact();
  int topology_wedge();
  int topology_closed();
  int vec_sigma();
  int vec_james();
  int vec_chain();
  int vec_separated();
  int factor_witness();
  int factor_build();
  int factor_subtree();
  int factor_glue();
  int factor_basis();
  int szlenk_index_cmd();
  int szlenk_trace();
  int szlenk_schedule();
  int szlenk_spoindex();
  int szlenk_level();
  int fdlab_lower();
  int fdlab_kk();
  int check_cmd();

  std::ostream& out_;
  std::ostream& err_;
  Args args_;
  std::function<int()> action_;
};

CLI::App* Runner::sub(CLI::App* parent, const char* name, const char* help, std::function<int()> action) {
  CLI::App* s = parent->add_subcommand(name, help);
  s->fallthrough();
  s->callback([this, action] { action_ = action; });
  return s;
}

void Runner::tree_flags(CLI::App* s) {
  s->add_option("--ordinal", args_.ordinal, "use blossom(ordinal)");
  s->add_option("--tree", args_.tree, "tree JSON, inline or a file");
  s->add_option("--offset", args_.offset, "full subtree selection offset");
  s->add_option("--stride", args_.stride, "full subtree selection stride");
}

void Runner::define(CLI::App& app) {
  Args& a = args_;
  app.add_flag("--json", a.json, "machine-readable output");
  app.require_subcommand(1);

  auto* ord = app.add_subcommand("ordinal", "ordinal arithmetic in Cantor normal form")->require_subcommand(1);
  ord->fallthrough();
  auto* s = sub(ord, "add", "a + b", [this] { return ordinal_add(); });
  s->add_option("--a", a.a)->required();
  s->add_option("--b", a.b)->required();
  s->add_flag("--oracle", a.oracle, "compare with the order-type oracle");
  s = sub(ord, "mul", "a * b, or a * n for a natural n", [this] { return ordinal_mul(); });
  s->add_option("--a", a.a)->required();
  s->add_option("--b", a.b);
  s->add_option("--n", a.n);
  s->add_flag("--oracle", a.oracle, "compare with the order-type oracle");
  s = sub(ord, "cmp", "compare a and b", [this] { return ordinal_cmp(); });
  s->add_option("--a", a.a)->required();
  s->add_option("--b", a.b)->required();
  s = sub(ord, "fundseq", "fundamental sequence terms", [this] { return ordinal_fundseq(); });
  s->add_option("--ordinal", a.ordinal)->required();
  s->add_option("--n", a.n, "first index (default 0)");
  s->add_option("--count", a.count, "number of terms (default 1)");
  s = sub(ord, "alpha", "leading exponent", [this] { return ordinal_alpha(); });
  s->add_option("--ordinal", a.ordinal)->required();
  s = sub(ord, "doubling", "least N with xi <= w^alpha 2^N + 1", [this] { return ordinal_doubling(); });
  s->add_option("--ordinal", a.ordinal)->required();
  s->add_option("--alpha", a.alpha, "defaults to the leading exponent");

  auto* tr = app.add_subcommand("tree", "trees, ranks and derivations")->require_subcommand(1);
  tr->fallthrough();
  s = sub(tr, "build", "print tree JSON", [this] { return tree_build(); });
  tree_flags(s);
  s->add_option("--chain", a.chain, "a chain of n nodes instead");
  s = sub(tr, "rank", "rank of the tree or of one node", [this] { return tree_rank(); });
  tree_flags(s);
  s->add_option("--node", a.node, "node path such as [0,2]");
  s = sub(tr, "derive", "derived tree T^(xi) on a window", [this] { return tree_derive(); });
  tree_flags(s);
  s->add_option("--xi", a.xi)->required();
  s->add_option("--node", a.node);
  s->add_option("--depth", a.depth);
  s->add_option("--width", a.width);
  s = sub(tr, "embed", "embed a finite tree", [this] { return tree_embed(); });
  tree_flags(s);
  s->add_option("--source", a.source, "finite tree JSON")->required();
  s = sub(tr, "enumerate", "breadth-first compatible enumeration", [this] { return tree_enumerate(); });
  tree_flags(s);
  s->add_option("--budget", a.budget);
  s->add_option("--psi", a.psi, "nodes whose root chains are listed in turn (finite trees)");
  s->add_flag("--compatible", a.compatible, "compatible order of a finite tree");
  s = sub(tr, "truncate", "finite window of the tree", [this] { return tree_truncate(); });
  tree_flags(s);
  s->add_option("--depth", a.depth);
  s->add_option("--width", a.width);
  s = sub(tr, "dot", "DOT export of a window", [this] { return tree_dot(); });
  tree_flags(s);
  s->add_option("--depth", a.depth);
  s->add_option("--width", a.width);

  auto* top = app.add_subcommand("topology", "coarse wedge topology")->require_subcommand(1);
  top->fallthrough();
  s = sub(top, "cb", "Cantor-Bendixson rank and heights", [this] { return topology_cb(); });
  tree_flags(s);
  s->add_option("--node", a.node);
  s->add_option("--base", a.base, "derivation level of the ambient space");
  s = sub(top, "compact", "compactness report", [this] { return topology_compact(); });
  tree_flags(s);
  s->add_flag("--forest", a.forest, "use the forest below the root");
  s = sub(top, "wedge", "wedge neighbourhood membership", [this] { return topology_wedge(); });
  tree_flags(s);
  s->add_option("--wedge", a.wedge, "t=<path>;exclude=<path>,...")->required();
  s->add_option("--node", a.node)->required();
  s = sub(top, "closed", "closedness certificate for a node set", [this] { return topology_closed(); });
  s->add_option("--tree", a.tree, "finite tree JSON")->required();
  s->add_option("--set", a.set, "node indices in the set, comma separated");

  auto* vec = app.add_subcommand("vec", "vectors on trees")->require_subcommand(1);
  vec->fallthrough();
  s = sub(vec, "sigma", "apply the summing operator", [this] { return vec_sigma(); });
  tree_flags(s);
  s->add_option("--vector", a.vector)->required();
  s->add_flag("--zero", a.zero, "the variant vanishing at the root");
  s = sub(vec, "james", "James tree norm", [this] { return vec_james(); });
  tree_flags(s);
  s->add_option("--vector", a.vector)->required();
  s->add_option("--max-support", a.max_support);
  s = sub(vec, "chain", "sup <= J <= l1", [this] { return vec_chain(); });
  tree_flags(s);
  s->add_option("--vector", a.vector)->required();
  s = sub(vec, "separated", "separation and net checks", [this] { return vec_separated(); });
  tree_flags(s);
  s->add_option("--vectors", a.vectors, "array of vectors")->required();
  s->add_option("--epsilon", a.epsilon)->required();
  s->add_option("--norm", a.norm, "l1 or sup");
  s->add_flag("--step", a.step, "compare the summing operator images");
  s->add_option("--targets", a.targets, "array of vectors the net must cover");
  s->add_option("--delta", a.delta);

  auto* fac = app.add_subcommand("factor", "factorizations of summing operators")->require_subcommand(1);
  fac->fallthrough();
  s = sub(fac, "witness", "verify a biorthogonal witness", [this] { return factor_witness(); });
  s->add_option("--tree", a.tree, "finite tree JSON")->required();
  s->add_option("--witness", a.witness, "defaults to the canonical witness");
  s = sub(fac, "build", "factorization from a witness and back", [this] { return factor_build(); });
  s->add_option("--tree", a.tree, "finite tree JSON")->required();
  s->add_option("--witness", a.witness);
  s->add_option("--operator", a.op, "operator X -> Y; defaults to Sigma_T");
  s->add_option("--vstar", a.vstar, "functionals on Y; lifted when absent");
  s = sub(fac, "subtree", "factor Sigma_S through Sigma_T", [this] { return factor_subtree(); });
  s->add_option("--source", a.source)->required();
  s->add_option("--target", a.target)->required();
  s->add_option("--phi", a.phi, "node of T for each node of S; greedy when absent");
  s->add_flag("--check", a.check, "exit 2 unless the composition equals Sigma_S");
  s = sub(fac, "glue", "glued tree and branch witness", [this] { return factor_glue(); });
  s->add_option("--trees", a.trees, "array of finite trees")->required();
  s->add_option("--thresholds", a.thresholds, "one rational per branch")->required();
  s = sub(fac, "basis", "basis constant of a vector sequence", [this] { return factor_basis(); });
  s->add_option("--vectors", a.vectors, "array of vectors")->required();
  s->add_option("--norm", a.norm, "l1 or sup");

  auto* sz = app.add_subcommand("szlenk", "Szlenk derivations on the tree model")->require_subcommand(1);
  sz->fallthrough();
  s = sub(sz, "index", "Szlenk index of the model", [this] { return szlenk_index_cmd(); });
  tree_flags(s);
  s->add_option("--epsilon", a.epsilon)->required();
  s = sub(sz, "trace", "survivor sets level by level", [this] { return szlenk_trace(); });
  s->alias("run");
  tree_flags(s);
  s->add_option("--epsilon", a.epsilon)->required();
  s->add_option("--levels", a.levels)->required();
  s = sub(sz, "schedule", "halving schedule step", [this] { return szlenk_schedule(); });
  s->add_option("--ordinal", a.ordinal)->required();
  s->add_option("--epsilon", a.epsilon)->required();
  s->add_option("--n", a.n)->required();
  s = sub(sz, "spoindex", "index arithmetic for the operator", [this] { return szlenk_spoindex(); });
  tree_flags(s);
  s = sub(sz, "level", "level set against the derived tree", [this] { return szlenk_level(); });
  tree_flags(s);
  s->add_option("--epsilon", a.epsilon)->required();
  s->add_option("--xi", a.xi)->required();
  s->add_option("--depth", a.depth);
  s->add_option("--width", a.width);
  s->add_option("--node", a.node, "also print the model point of this node");

  auto* fd = app.add_subcommand("fdlab", "finite-dimensional checks")->require_subcommand(1);
  fd->fallthrough();
  s = sub(fd, "lower", "lower bound margin on one instance", [this] { return fdlab_lower(); });
  s->add_option("--instance", a.instance, "instance JSON");
  s->add_option("--seed", a.seed, "random instance");
  s->add_option("--max-dim", a.max_dim);
  s->add_option("--samples", a.samples, "net sampling checks");
  s = sub(fd, "kk", "renorming value and bounds", [this] { return fdlab_kk(); });
  s->add_option("--instance", a.instance, "instance JSON");
  s->add_option("--seed", a.seed, "random instance");
  s->add_option("--max-dim", a.max_dim);
  s->add_option("--c", a.c, "constant c > 1 as p/q")->required();

  s = sub(&app, "check", "run acceptance criteria", [this] { return check_cmd(); });
  s->add_option("target", a.check_target, "all or module=<name>");
  s->add_option("--seed", a.seed);
}

int Runner::run(const std::vector<std::string>& argv) {
  CLI::App app{"Trees, ordinals and Szlenk index computations", "szt"};
  define(app);
  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out_, err_);
    return code == 0 ? 0 : 1;
  }
  try {
    return action_();
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << "\n";
    return 1;
  }
}

// ---- ordinal

int Runner::ordinal_add() {
  Ordinal x = ordinal_arg(args_.a, "--a"), y = ordinal_arg(args_.b, "--b");
  Ordinal s = add(x, y);
  Json j{{"a", to_string(x)}, {"b", to_string(y)}, {"sum", to_string(s)}};
  if (args_.oracle) {
    Ordinal o = with_flag("--oracle", [&] { return order_type_oracle(x, y, OracleOp::add); });
    j["oracle"] = to_string(o);
    j["agree"] = o == s;
    return emit(to_string(s), j, o == s ? 0 : 2);
  }
  return emit(to_string(s), j);
}

int Runner::ordinal_mul() {
  Ordinal x = ordinal_arg(args_.a, "--a");
  if (args_.b.empty() == args_.n.empty()) throw UsageError("give exactly one of --b and --n");
  if (!args_.n.empty()) {
    std::size_t k = natural_arg(args_.n, "--n");
    if (k == 0) throw UsageError("--n: must be positive");
    Ordinal p = nat_mul(x, BigInt(static_cast<unsigned long>(k)));
    return emit(to_string(p), Json{{"a", to_string(x)}, {"n", k}, {"product", to_string(p)}});
  }
  Ordinal y = ordinal_arg(args_.b, "--b");
  Ordinal p = mul(x, y);
  Json j{{"a", to_string(x)}, {"b", to_string(y)}, {"product", to_string(p)}};
  if (args_.oracle) {
    Ordinal o = with_flag("--oracle", [&] { return order_type_oracle(x, y, OracleOp::mul); });
    j["oracle"] = to_string(o);
    j["agree"] = o == p;
    return emit(to_string(p), j, o == p ? 0 : 2);
  }
  return emit(to_string(p), j);
}

int Runner::ordinal_cmp() {
  Ordinal x = ordinal_arg(args_.a, "--a"), y = ordinal_arg(args_.b, "--b");
  Ordering o = cmp(x, y);
  Json j{{"a", to_string(x)}, {"b", to_string(y)}, {"cmp", cmp_symbol(o)}};
  // The gap d with min + d = max.
  j["difference"] = to_string(o == Ordering::greater ? left_subtract(y, x) : left_subtract(x, y));
  return emit(cmp_symbol(o), j);
}

int Runner::ordinal_fundseq() {
  Ordinal x = ordinal_arg(args_.ordinal, "--ordinal");
  std::size_t first = args_.n.empty() ? 0 : natural_arg(args_.n, "--n");
  std::size_t count = args_.count.empty() ? 1 : natural_arg(args_.count, "--count");
  OrdinalClass c = classify(x);
  const char* kind = c.kind == OrdinalClass::Kind::zero ? "zero" : c.kind == OrdinalClass::Kind::successor ? "successor" : "limit";
  Json terms = Json::array();
  std::string text;
  for (std::size_t i = 0; i < count; ++i) {
    Ordinal t = with_flag("--ordinal", [&] { return fund_seq(x, first + i); });
    terms.push_back(to_string(t));
    text += (i ? "\n" : "") + to_string(t);
  }
  Json j{{"ordinal", to_string(x)}, {"class", kind}, {"successor", to_string(successor(x))}};
  if (c.kind == OrdinalClass::Kind::successor) j["predecessor"] = to_string(predecessor(x));
  j["first"] = first;
  j["terms"] = std::move(terms);
  return emit(text, j);
}

int Runner::ordinal_alpha() {
  Ordinal x = ordinal_arg(args_.ordinal, "--ordinal");
  Ordinal al = with_flag("--ordinal", [&] { return leading_alpha(x); });
  Json j{{"ordinal", to_string(x)}, {"alpha", to_string(al)}, {"omega_power", to_string(omega_pow(al))}};
  return emit(to_string(al), j);
}

int Runner::ordinal_doubling() {
  Ordinal x = ordinal_arg(args_.ordinal, "--ordinal");
  Ordinal al = args_.alpha.empty() ? with_flag("--ordinal", [&] { return leading_alpha(x); })
                                   : ordinal_arg(args_.alpha, "--alpha");
  unsigned long N = with_flag("--alpha", [&] { return doubling_exponent(x, al); });
  return emit(std::to_string(N), Json{{"ordinal", to_string(x)}, {"alpha", to_string(al)}, {"N", N}});
}

// ---- tree

int Runner::tree_build() {
  TreeExpr T;
  if (!args_.chain.empty()) {
    std::size_t n = natural_arg(args_.chain, "--chain");
    if (n == 0) throw UsageError("--chain: must be positive");
    T = chain_tree(n);
  } else {
    T = load_tree(args_);
  }
  return emit(to_json(T));
}

int Runner::tree_rank() {
  TreeExpr T = load_tree(args_);
  if (!args_.node.empty()) {
    NodeId t = path_arg(args_.node, "--node");
    Ordinal r = with_flag("--node", [&] { return rank_node(T, t); });
    return emit(to_string(r), Json{{"node", to_json(t)}, {"rank", to_string(r)}, {"height", height(T, t)}});
  }
  Ordinal r = rank_tree(T);
  return emit(to_string(r), Json{{"rank", to_string(r)}});
}

int Runner::tree_derive() {
  TreeExpr T = load_tree(args_);
  Ordinal xi = ordinal_arg(args_.xi, "--xi");
  DerivedView v = derive(T, xi);
  Json j{{"level", to_string(xi)}, {"empty", v.empty()}};
  if (!args_.node.empty()) {
    NodeId t = path_arg(args_.node, "--node");
    bool in = v.contains(t);
    j["node"] = to_json(t);
    j["in_view"] = in;
    if (in) j["maximal"] = is_max(T, v, t);
    return emit(in ? "in" : "out", j);
  }
  auto window = truncate(T, natural_arg(args_.depth, "--depth"), natural_arg(args_.width, "--width"));
  std::vector<NodeId> in, top;
  for (const auto& p : window.paths)
    if (v.contains(p)) {
      in.push_back(p);
      if (is_max(T, v, p)) top.push_back(p);
    }
  j["nodes"] = paths_json(in);
  j["maximal"] = paths_json(top);
  return emit(j);
}

int Runner::tree_embed() {
  PathTree S = load_fintree(args_.source, "--source");
  TreeExpr s = to_expr(S.tree);
  TreeExpr target;
  Embedding phi;
  if (!args_.ordinal.empty() && args_.tree.empty() && args_.offset.empty() && args_.stride.empty()) {
    Ordinal xi = ordinal_arg(args_.ordinal, "--ordinal");
    target = blossom(xi);
    phi = with_flag("--source", [&] { return embed(s, xi); });
  } else {
    target = load_tree(args_);
    phi = with_flag("--source", [&] { return embed_into(s, target); });
  }
  Json pairs = Json::array();
  for (const auto& [from, to] : phi) pairs.push_back(Json::array({to_json(from), to_json(to)}));
  std::string why = verify::check_embedding(s, target, phi);
  ContinuityReport cont = check_embedding_continuity(phi, s, target);
  Json j{{"embedding", std::move(pairs)}, {"valid", why.empty()}, {"continuous", cont.continuous}};
  if (!why.empty()) j["detail"] = why;
  if (!cont.continuous) j["continuity_detail"] = cont.detail;
  return emit(j, why.empty() && cont.continuous ? 0 : 2);
}

int Runner::tree_enumerate() {
  if (!args_.psi.empty() || args_.compatible) {
    PathTree P = load_fintree(args_.tree, "--tree");
    Json j;
    if (args_.compatible) j["compatible_order"] = indices_json(compatible_order(P.tree));
    if (!args_.psi.empty()) {
      auto psi = naturals_arg(args_.psi, "--psi");
      j["wellorder"] = indices_json(with_flag("--psi", [&] { return induced_wellorder(P.tree, psi); }));
    }
    return emit(j);
  }
  TreeExpr T = load_tree(args_);
  std::size_t budget = natural_arg(args_.budget, "--budget");
  auto nodes = with_flag("--budget", [&] { return enumerate_compatible(T, budget); });
  return emit(Json{{"nodes", paths_json(nodes)}});
}

int Runner::tree_truncate() {
  TreeExpr T = load_tree(args_);
  auto tr = truncate(T, natural_arg(args_.depth, "--depth"), natural_arg(args_.width, "--width"));
  Json elided = Json::array();
  for (bool e : tr.elided) elided.push_back(e);
  Json j{{"tree", to_json(tr.tree)}, {"paths", paths_json(tr.paths)}, {"elided", std::move(elided)}};
  return emit(j);
}

int Runner::tree_dot() {
  TreeExpr T = load_tree(args_);
  std::string dot = to_dot(T, natural_arg(args_.depth, "--depth"), natural_arg(args_.width, "--width"));
  if (!dot.empty() && dot.back() == '\n') dot.pop_back();
  return emit(dot, Json{{"dot", dot}});
}

// ---- topology

int Runner::topology_cb() {
  TreeExpr T = load_tree(args_);
  Ordinal base = args_.base.empty() ? Ordinal() : ordinal_arg(args_.base, "--base");
  Ordinal r = cb_rank(T);
  Subspace V(T, base, 0UL);
  CbStep step = cb_derive(V);
  Json j{{"cb_rank", to_string(r)},
         {"space", V.descriptor()},
         {"derived", step.result.descriptor()},
         {"derived_downward_closed", step.downward_closed}};
  if (!args_.node.empty()) {
    NodeId t = path_arg(args_.node, "--node");
    if (!V.contains(t)) throw UsageError("--node: " + to_string(t) + " is not in the space");
    j["node"] = to_json(t);
    j["height"] = to_string(cb_height(T, t, base));
    j["reach"] = to_string(cb_reach(T, t, base));
    j["isolated"] = is_isolated(V, t);
  }
  return emit(to_string(r), j);
}

int Runner::topology_compact() {
  CompactnessReport r;
  if (!args_.tree.empty() && args_.offset.empty() && args_.stride.empty()) {
    Json j = json_arg(args_.tree, "--tree");
    if (j.contains("parent") && !args_.forest) {
      r = compactness_report(with_flag("--tree", [&] { return fintree_from_json(j).tree; }));
      return emit(to_json(r));
    }
  }
  TreeExpr T = load_tree(args_);
  r = args_.forest ? compactness_report(star(T)) : compactness_report(T);
  return emit(to_json(r));
}

int Runner::topology_wedge() {
  TreeExpr T = load_tree(args_);
  WedgeNbhd w = with_flag("--wedge", [&] { return parse_wedge(args_.wedge); });
  NodeId x = path_arg(args_.node, "--node");
  bool in = with_flag("--wedge", [&] { return wedge_member(T, w, x); });
  return emit(in ? "true" : "false", Json{{"wedge", to_string(w)}, {"node", to_json(x)}, {"member", in}});
}

int Runner::topology_closed() {
  PathTree P = load_fintree(args_.tree, "--tree");
  std::vector<bool> in(P.tree.size(), false);
  for (auto i : args_.set.empty() ? std::vector<std::size_t>{} : naturals_arg(args_.set, "--set")) {
    if (i >= P.tree.size()) throw UsageError("--set: node " + std::to_string(i) + " out of range");
    in[i] = true;
  }
  bool closed = check_closed_downward(P.tree, in);
  return emit(closed ? "true" : "false", Json{{"closed", closed}});
}

// ---- vec

int Runner::vec_sigma() {
  TreeExpr T = load_tree(args_);
  SuppVec v = with_flag("--vector", [&] { return suppvec_from_json(json_arg(args_.vector, "--vector"), T); });
  StepFn f = args_.zero ? with_flag("--zero", [&] { return sigma0_apply(v); }) : sigma_apply(v);
  Json j = to_json(f);
  j["sup"] = to_json(sup_norm(f));
  j["l1_of_input"] = to_json(l1_norm(v));
  j["sup_of_input"] = to_json(sup_norm(v));
  return emit(j);
}

int Runner::vec_james() {
  TreeExpr T = load_tree(args_);
  SuppVec v = with_flag("--vector", [&] { return suppvec_from_json(json_arg(args_.vector, "--vector"), T); });
  std::size_t cap = args_.max_support.empty() ? kDefaultJamesSupport : natural_arg(args_.max_support, "--max-support");
  JamesNorm jn = with_flag("--max-support", [&] { return james_norm(v, cap); });
  Json fam = Json::array();
  for (const auto& tr : jn.family) fam.push_back(paths_json(tr));
  Json j{{"squared", to_json(jn.squared)}, {"lower", jn.value.lo}, {"upper", jn.value.hi}, {"family", std::move(fam)}};
  j["interval_traces"] = interval_traces(v).size();
  return emit(to_string(jn.squared), j);
}

int Runner::vec_chain() {
  TreeExpr T = load_tree(args_);
  SuppVec v = with_flag("--vector", [&] { return suppvec_from_json(json_arg(args_.vector, "--vector"), T); });
  ChainCheck c = chain_inequality_check(v);
  Json j{{"holds", c.holds},        {"sup", to_json(c.sup)},          {"james_squared", to_json(c.james_squared)},
         {"l1", to_json(c.l1)},     {"lower_gap", to_json(c.lower_gap)}, {"upper_gap", to_json(c.upper_gap)}};
  return emit(j, c.holds ? 0 : 2);
}

int Runner::vec_separated() {
  TreeExpr T = load_tree(args_);
  auto read_all = [&](const std::string& v, const char* flag) {
    Json arr = json_arg(v, flag);
    if (!arr.is_array()) throw UsageError(std::string(flag) + ": expected an array of vectors");
    std::vector<SuppVec> out;
    for (const auto& item : arr) out.push_back(with_flag(flag, [&] { return suppvec_from_json(item, T); }));
    return out;
  };
  auto pts = read_all(args_.vectors, "--vectors");
  Rational eps = rational_arg(args_.epsilon, "--epsilon");
  NormTag tag = with_flag("--norm", [&] { return parse_norm_tag(args_.norm); });
  if (tag == NormTag::l2) throw UsageError("--norm: vectors on trees carry l1 or sup");
  VecNorm n = tag == NormTag::l1 ? VecNorm::l1 : VecNorm::sup;
  Json j;
  if (args_.step) {
    std::vector<StepFn> imgs;
    for (const auto& p : pts) imgs.push_back(sigma_apply(p));
    j["separated"] = with_flag("--norm", [&] { return eps_separated(imgs, eps, n); });
  } else {
    j["separated"] = eps_separated(pts, eps, n);
  }
  if (!args_.targets.empty()) {
    if (args_.delta.empty()) throw UsageError("--targets needs --delta");
    j["net"] = delta_net_check(pts, read_all(args_.targets, "--targets"), rational_arg(args_.delta, "--delta"), n);
  }
  return emit(j);
}

// ---- factor

int Runner::factor_witness() {
  PathTree P = load_fintree(args_.tree, "--tree");
  bool canonical = args_.witness.empty();
  Witness w = canonical ? canonical_witness(P.tree)
                        : with_flag("--witness", [&] { return witness_from_json(json_arg(args_.witness, "--witness")); });
  WitnessReport r = with_flag("--witness", [&] { return verify_witness(P.tree, w); });
  Json j{{"valid", r.valid}};
  if (!r.valid) j["detail"] = r.detail;
  if (r.t != FinTree::npos) j["pair"] = Json::array({r.t, r.s});
  if (canonical) j["witness"] = to_json(w);
  return emit(j, r.valid ? 0 : 2);
}

int Runner::factor_build() {
  PathTree P = load_fintree(args_.tree, "--tree");
  const FinTree& T = P.tree;
  Witness w = args_.witness.empty()
                  ? canonical_witness(T)
                  : with_flag("--witness", [&] { return witness_from_json(json_arg(args_.witness, "--witness")); });
  RatOperator top = args_.op.empty()
                        ? RatOperator{sigma_matrix(T), NormTag::l1, NormTag::sup}
                        : with_flag("--operator", [&] { return operator_from_json(json_arg(args_.op, "--operator")); });
  WitnessReport wr = with_flag("--witness", [&] { return verify_witness(T, w); });
  if (!wr.valid) return emit(Json{{"valid", false}, {"detail", wr.detail}}, 2);
  std::vector<std::vector<Rational>> vstar;
  if (args_.vstar.empty()) {
    auto lifted = with_flag("--operator", [&] { return lift_functionals(top, w.xstar); });
    if (!lifted) return emit(Json{{"valid", false}, {"detail", "functionals do not lift through the operator"}}, 2);
    vstar = *lifted;
  } else {
    Json arr = json_arg(args_.vstar, "--vstar");
    if (!arr.is_array()) throw UsageError("--vstar: expected an array of vectors");
    for (const auto& v : arr) vstar.push_back(with_flag("--vstar", [&] { return rvec_from_json(v); }));
  }
  Factorization f;
  try {
    f = witness_to_factorization(T, w, top, vstar);
  } catch (const std::invalid_argument& e) {
    return emit(Json{{"valid", false}, {"detail", e.what()}}, 2);
  }
  Json j{{"valid", true}, {"U", to_json(f.U)}, {"V", to_json(f.V)}};
  j["norm_U"] = to_json(operator_norm(f.U));
  j["norm_V"] = to_json(operator_norm(f.V));
  int code = 0;
  if (w.space != NormTag::l2 && top.codomain != NormTag::l2) {
    Witness back = factorization_to_witness(T, f.U, f.V, top);
    WitnessReport br = verify_witness(T, back);
    Rational need = 1 / (operator_norm(f.U) * operator_norm(f.V));
    bool ok = br.valid && back.delta >= need;
    j["roundtrip"] = Json{{"valid", ok}, {"delta", to_json(back.delta)}, {"bound", to_json(need)}};
    if (!ok) code = 2;
  }
  return emit(j, code);
}

int Runner::factor_subtree() {
  PathTree S = load_fintree(args_.source, "--source");
  PathTree T = load_fintree(args_.target, "--target");
  std::vector<std::size_t> phi;
  if (!args_.phi.empty()) {
    phi = naturals_arg(args_.phi, "--phi");
  } else {
    auto scode = omega_code(S.tree), tcode = omega_code(T.tree);
    std::map<NodeId, std::size_t> index;
    for (std::size_t i = 0; i < tcode.size(); ++i) index[tcode[i]] = i;
    Embedding e = with_flag("--source", [&] { return embed_into(to_expr(S.tree), to_expr(T.tree)); });
    for (const auto& p : scode) phi.push_back(index.at(e.at(p)));
  }
  SubtreeFactorization f = with_flag("--phi", [&] { return subtree_factorization(S.tree, T.tree, phi); });
  Json norms{{"A", to_json(operator_norm(f.A))},
             {"U", to_json(operator_norm(f.U))},
             {"V", to_json(operator_norm(f.V))},
             {"B", to_json(operator_norm(f.B))}};
  Json j{{"equal", f.equal}, {"phi", indices_json(phi)}, {"norms", std::move(norms)}, {"composition", to_json(f.composition)}};
  return emit(j, args_.check && !f.equal ? 2 : 0);
}

int Runner::factor_glue() {
  Json arr = json_arg(args_.trees, "--trees");
  if (!arr.is_array()) throw UsageError("--trees: expected an array of trees");
  std::vector<FinTree> family;
  for (const auto& t : arr) family.push_back(with_flag("--trees", [&] { return fintree_from_json(t).tree; }));
  auto th = rationals_arg(args_.thresholds, "--thresholds");
  GluedTree G = with_flag("--trees", [&] { return glue(family); });
  BranchWitness w = with_flag("--thresholds", [&] { return canonical_branch_witness(G, th); });
  BranchReport r = verify_branch_witness(G, w);
  Json j{{"size", G.tree.size()}, {"branches", G.branches}, {"tree", to_json(G.tree)}, {"valid", r.valid}};
  if (!r.valid) j["detail"] = r.detail;
  return emit(j, r.valid ? 0 : 2);
}

int Runner::factor_basis() {
  Json arr = json_arg(args_.vectors, "--vectors");
  if (!arr.is_array()) throw UsageError("--vectors: expected an array of vectors");
  std::vector<std::vector<Rational>> xs;
  for (const auto& v : arr) xs.push_back(with_flag("--vectors", [&] { return rvec_from_json(v); }));
  NormTag tag = with_flag("--norm", [&] { return parse_norm_tag(args_.norm); });
  Rational k = with_flag("--vectors", [&] { return basis_constant(xs, tag); });
  return emit(to_string(k), Json{{"basis_constant", to_json(k)}});
}

// ---- szlenk

int Runner::szlenk_index_cmd() {
  TreeExpr T = load_tree(args_);
  Rational eps = rational_arg(args_.epsilon, "--epsilon");
  if (eps <= 0) throw UsageError("--epsilon: must be positive");
  DualModel m = build_model(T);
  Ordinal idx = szlenk_index(m, eps);
  Json j{{"index", to_string(idx)},
         {"epsilon", to_json(eps)},
         {"separation_checked", m.separation_checked},
         {"after_one_step", szlenk_derive(m, eps).survivors.descriptor()}};
  return emit(to_string(idx), j);
}

int Runner::szlenk_trace() {
  TreeExpr T = load_tree(args_);
  Rational eps = rational_arg(args_.epsilon, "--epsilon");
  if (eps <= 0) throw UsageError("--epsilon: must be positive");
  Ordinal levels = ordinal_arg(args_.levels, "--levels");
  return emit(to_json(trace(build_model(T), eps, levels)));
}

int Runner::szlenk_schedule() {
  Ordinal z = ordinal_arg(args_.ordinal, "--ordinal");
  Rational eps = rational_arg(args_.epsilon, "--epsilon");
  std::size_t n = natural_arg(args_.n, "--n");
  HalvingStep h = with_flag("--epsilon", [&] { return halving_schedule(z, eps, n); });
  return emit(Json{{"epsilon", to_json(h.epsilon)}, {"level", to_string(h.level)}});
}

int Runner::szlenk_spoindex() {
  TreeExpr T = load_tree(args_);
  SpoIndexReport r = with_flag("--tree", [&] { return spoindex_check(T); });
  Json j{{"rho", to_string(r.rho)},
         {"alpha", to_string(r.alpha)},
         {"rho_times_omega", to_string(r.rho_times_omega)},
         {"omega_alpha_plus_one", to_string(r.omega_alpha_plus_one)},
         {"equal", r.equal},
         {"rho_successor", r.rho_successor},
         {"rho_above_omega_alpha", r.rho_above_omega_alpha},
         {"model_lower_bound", to_string(r.model_lower_bound)}};
  return emit(j, r.equal ? 0 : 2);
}

int Runner::szlenk_level() {
  TreeExpr T = load_tree(args_);
  Rational eps = rational_arg(args_.epsilon, "--epsilon");
  Ordinal xi = ordinal_arg(args_.xi, "--xi");
  DualModel m = build_model(T);
  Subspace s = with_flag("--epsilon", [&] { return level_set(m, eps, xi); });
  auto cert = level_set_certificate(m, eps, xi, natural_arg(args_.depth, "--depth"), natural_arg(args_.width, "--width"));
  Json j{{"xi", to_string(xi)}, {"survivors", s.descriptor()}, {"equal", cert.equal}, {"checked", cert.checked},
         {"mismatches", paths_json(cert.mismatches)}};
  if (!args_.node.empty()) {
    NodeId t = path_arg(args_.node, "--node");
    if (!T.contains(t)) throw UsageError("--node: " + to_string(t) + " is not in the tree");
    j["point"] = to_json(model_point(T, t));
  }
  return emit(j, cert.equal ? 0 : 2);
}

// ---- fdlab

int Runner::fdlab_lower() {
  if (args_.instance.empty() == args_.seed.empty()) throw UsageError("give exactly one of --instance and --seed");
  FdInstance inst = args_.instance.empty()
                        ? random_fd_instance(natural_arg(args_.seed, "--seed"), natural_arg(args_.max_dim, "--max-dim"))
                        : with_flag("--instance", [&] { return fd_instance_from_json(json_arg(args_.instance, "--instance")); });
  LowerLemmaReport r = run_lower_instance(inst, natural_arg(args_.samples, "--samples"));
  bool ok = r.preconditions_ok && (r.exact ? r.margin_exact >= 0 : r.margin >= -kFdTolerance);
  Json j{{"instance", to_json(inst)}, {"report", to_json(r)}, {"ok", ok}};
  return emit(j, ok ? 0 : 2);
}

int Runner::fdlab_kk() {
  if (args_.instance.empty() == args_.seed.empty()) throw UsageError("give exactly one of --instance and --seed");
  KkInstance inst = args_.instance.empty()
                        ? random_kk_instance(natural_arg(args_.seed, "--seed"), natural_arg(args_.max_dim, "--max-dim"))
                        : with_flag("--instance", [&] { return kk_instance_from_json(json_arg(args_.instance, "--instance")); });
  Rational c = rational_arg(args_.c, "--c");
  if (c <= 1) throw UsageError("--c: must exceed 1");
  Json j{{"instance", to_json(inst)}, {"c", to_json(c)}};
  bool ok;
  if (inst.model.exact()) {
    Rational base = vec_norm(inst.xstar, inst.model.dual_norm());
    Rational v = with_flag("--instance", [&] { return kk_norm(inst.model, inst.xstar, inst.chain, c); });
    ok = base <= v && v <= c * base;
    j["norm"] = to_json(base);
    j["kk"] = to_json(v);
  } else {
    DVec x = to_double(inst.xstar);
    double base = norm_of(x, inst.model.dual_norm());
    double v = with_flag("--instance", [&] { return kk_norm(inst.model, x, inst.chain, c.get_d()); });
    ok = base - 1e-12 <= v && v <= c.get_d() * base + 1e-12;
    j["norm"] = base;
    j["kk"] = v;
  }
  j["within_bounds"] = ok;
  return emit(j, ok ? 0 : 2);
}

// ---- check

int Runner::check_cmd() {
  std::uint64_t seed = args_.seed.empty() ? 1 : natural_arg(args_.seed, "--seed");
  std::vector<int> ids;
  const std::string& t = args_.check_target;
  if (t == "all") {
    for (int i = 1; i <= verify::kCriterionCount; ++i) ids.push_back(i);
  } else if (t.rfind("module=", 0) == 0) {
    ids = with_flag("target", [&] { return verify::criteria_for_module(t.substr(7)); });
  } else {
    throw UsageError("target: expected all or module=<name>, got '" + t + "'");
  }
  Json arr = Json::array();
  std::string text;
  bool ok = true;
  for (int id : ids) {
    auto r = verify::run_criterion(id, seed);
    ok = ok && r.pass;
    text += (text.empty() ? "" : "\n") + verify::format_line(r);
    arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}});
  }
  return emit(text, arr, ok ? 0 : 2);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner r(out, err);
  return r.run(args);
}

const std::vector<CommandInfo>& command_table() {
  static const std::string s_tree = R"({"kind":"node","children":{"kind":"finite","items":[{"kind":"leaf"}]}})";
  static const std::string t_tree = R"({"parent":[null,0,0,1,1]})";
  static const std::string vec = R"({"entries":[{"node":[3],"value":"1/2"},{"node":[3,1],"value":"-1"}]})";
  static const std::vector<CommandInfo> table = {
      {"ordinal add", {"ordinal::parse_ordinal", "ordinal::add", "ordinal::to_string", "ordinal::order_type_oracle"},
       {"ordinal", "add", "--a", "w+1", "--b", "w", "--oracle"}},
      {"ordinal mul", {"ordinal::mul", "ordinal::nat_mul"}, {"ordinal", "mul", "--a", "w+1", "--b", "w*2", "--oracle"}},
      {"ordinal cmp", {"ordinal::cmp", "ordinal::left_subtract"}, {"ordinal", "cmp", "--a", "w", "--b", "w^(2)"}},
      {"ordinal fundseq", {"ordinal::fund_seq", "ordinal::classify", "ordinal::successor", "ordinal::predecessor"},
       {"ordinal", "fundseq", "--ordinal", "w^(2)", "--n", "1", "--count", "3"}},
      {"ordinal alpha", {"ordinal::leading_alpha", "ordinal::omega_pow"}, {"ordinal", "alpha", "--ordinal", "w^(2)*3+1"}},
      {"ordinal doubling", {"ordinal::doubling_exponent"}, {"ordinal", "doubling", "--ordinal", "w*3+1"}},
      {"tree build", {"tree::blossom", "tree::full_subtree", "tree::chain_tree"},
       {"tree", "build", "--ordinal", "w", "--offset", "1", "--stride", "2"}},
      {"tree rank", {"tree::rank_tree", "tree::rank_node", "tree::height"}, {"tree", "rank", "--ordinal", "w^(2)"}},
      {"tree derive", {"tree::derive", "tree::is_max"}, {"tree", "derive", "--ordinal", "3", "--xi", "1"}},
      {"tree embed", {"tree::embed", "tree::embed_into", "topology::check_embedding_continuity"},
       {"tree", "embed", "--ordinal", "3", "--source", t_tree}},
      {"tree enumerate", {"tree::enumerate_compatible"}, {"tree", "enumerate", "--ordinal", "w", "--budget", "6"}},
      {"tree enumerate --psi", {"tree::induced_wellorder", "factor::compatible_order"},
       {"tree", "enumerate", "--tree", t_tree, "--psi", "4,2,3", "--compatible"}},
      {"tree truncate", {"tree::truncate", "tree::omega_code", "tree::from_expr", "tree::to_expr"},
       {"tree", "truncate", "--ordinal", "2", "--depth", "2", "--width", "2"}},
      {"tree dot", {"tree::to_dot"}, {"tree", "dot", "--ordinal", "1", "--depth", "1", "--width", "2"}},
      {"topology cb",
       {"topology::cb_rank", "topology::cb_height", "topology::cb_reach", "topology::is_isolated", "topology::cb_derive"},
       {"topology", "cb", "--ordinal", "w", "--node", "[2]"}},
      {"topology compact", {"topology::compactness_report", "tree::star"},
       {"topology", "compact", "--ordinal", "w", "--forest"}},
      {"topology wedge", {"topology::parse_wedge", "topology::wedge_member", "tree::leq"},
       {"topology", "wedge", "--ordinal", "w", "--wedge", "t=[];exclude=[0]", "--node", "[1]"}},
      {"topology closed", {"topology::check_closed_downward"},
       {"topology", "closed", "--tree", t_tree, "--set", "0,1"}},
      {"vec sigma", {"vectors::sigma_apply", "vectors::sigma0_apply", "vectors::l1_norm", "vectors::sup_norm"},
       {"vec", "sigma", "--ordinal", "w", "--vector", vec, "--zero"}},
      {"vec james", {"vectors::james_norm", "vectors::interval_traces"},
       {"vec", "james", "--ordinal", "w", "--vector", vec}},
      {"vec chain", {"vectors::chain_inequality_check"}, {"vec", "chain", "--ordinal", "w", "--vector", vec}},
      {"vec separated", {"vectors::eps_separated", "vectors::delta_net_check"},
       {"vec", "separated", "--ordinal", "w", "--vectors", "[" + vec + "]", "--epsilon", "1/2", "--targets",
        "[" + vec + "]", "--delta", "1"}},
      {"factor witness", {"factor::canonical_witness", "factor::verify_witness"},
       {"factor", "witness", "--tree", t_tree}},
      {"factor build",
       {"factor::sigma_matrix", "factor::operator_norm", "factor::lift_functionals", "factor::witness_to_factorization",
        "factor::factorization_to_witness"},
       {"factor", "build", "--tree", t_tree}},
      {"factor subtree", {"factor::subtree_factorization", "tree::omega_code"},
       {"factor", "subtree", "--source", s_tree, "--target", t_tree, "--check"}},
      {"factor glue", {"factor::glue", "factor::canonical_branch_witness", "factor::verify_branch_witness"},
       {"factor", "glue", "--trees", "[" + s_tree + "," + t_tree + "]", "--thresholds", "1/2,1/3"}},
      {"factor basis", {"factor::basis_constant"},
       {"factor", "basis", "--vectors", R"([["1","0"],["1","1"]])", "--norm", "sup"}},
      {"szlenk index", {"szlenk::build_model", "szlenk::szlenk_index", "szlenk::szlenk_derive"},
       {"szlenk", "index", "--ordinal", "w", "--epsilon", "1/2"}},
      {"szlenk trace", {"szlenk::trace"}, {"szlenk", "trace", "--ordinal", "w", "--epsilon", "1/2", "--levels", "w+1"}},
      {"szlenk schedule", {"szlenk::halving_schedule"},
       {"szlenk", "schedule", "--ordinal", "w+1", "--epsilon", "1/2", "--n", "2"}},
      {"szlenk spoindex", {"szlenk::spoindex_check"}, {"szlenk", "spoindex", "--ordinal", "w*2"}},
      {"szlenk level", {"szlenk::level_set", "szlenk::level_set_certificate", "szlenk::model_point"},
       {"szlenk", "level", "--ordinal", "w", "--epsilon", "1/2", "--xi", "2", "--node", "[3,0]"}},
      {"fdlab lower",
       {"fdlab::random_fd_instance", "fdlab::materialize", "fdlab::sphere_net", "fdlab::net_sampling_gap",
        "fdlab::annihilator", "fdlab::restricted_sup", "fdlab::lowerlemma_check"},
       {"fdlab", "lower", "--seed", "3"}},
      {"fdlab kk", {"fdlab::random_kk_instance", "fdlab::kk_norm", "fdlab::dual_distance", "fdlab::check_chain_increasing"},
       {"fdlab", "kk", "--seed", "4", "--c", "3/2"}},
      {"check", {"verify::run_criterion"}, {"check", "module=tree", "--seed", "2"}},
  };
  return table;
}

}  // namespace szt::cli
