#include "szt/json_io.hpp"

#include <map>
#include <stdexcept>

namespace szt {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t natural(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(std::string(what) + " must be a natural number");
  return j.get<std::size_t>();
}

Json generator_to_json(const ChildGen& g) {
  Json j;
  switch (g.kind) {
    case ChildGen::Kind::finite: {
      j["kind"] = "finite";
      Json items = Json::array();
      for (const auto& c : g.finite.items) items.push_back(to_json(c));
      j["items"] = std::move(items);
      break;
    }
    case ChildGen::Kind::blossom:
      j["kind"] = "blossom";
      j["ordinal"] = to_string(g.blossom.xi);
      break;
    case ChildGen::Kind::subselect:
      j["kind"] = "subselect";
      j["offset"] = g.subselect.offset;
      j["stride"] = g.subselect.stride;
      if (g.subselect.recursive) j["recursive"] = true;
      j["inner"] = generator_to_json(*g.subselect.inner);
      break;
  }
  return j;
}

ChildGen generator_from_json(const Json& j) {
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "finite") {
    const Json& items = field(j, "items");
    if (!items.is_array()) bad("\"items\" must be an array");
    std::vector<TreeExpr> kids;
    for (const auto& c : items) kids.push_back(tree_from_json(c));
    return ChildGen::of_items(std::move(kids));
  }
  if (kind == "blossom") return ChildGen::of_blossom(parse_ordinal(field(j, "ordinal").get<std::string>()));
  if (kind == "subselect") {
    auto inner = std::make_shared<const ChildGen>(generator_from_json(field(j, "inner")));
    bool rec = j.contains("recursive") && j["recursive"].get<bool>();
    return ChildGen::of_subselect(inner, natural(field(j, "offset"), "offset"), natural(field(j, "stride"), "stride"),
                                  rec);
  }
  bad("unknown generator kind '" + kind + "'");
}

NormTag norm_from_json(const Json& j) {
  if (!j.is_string()) bad("norm must be a string");
  return parse_norm_tag(j.get<std::string>());
}

std::vector<RVec> rvecs_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of vectors");
  std::vector<RVec> out;
  for (const auto& v : j) out.push_back(rvec_from_json(v));
  return out;
}

Json rvecs_to_json(const std::vector<RVec>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  bad("rationals are written as \"p/q\" strings, got " + j.dump());
}

Json to_json(const NodeId& t) {
  Json j = Json::array();
  for (auto k : t) j.push_back(k);
  return j;
}

NodeId node_from_json(const Json& j) {
  if (!j.is_array()) bad("a node is an array of naturals, got " + j.dump());
  NodeId t;
  for (const auto& k : j) t.push_back(natural(k, "path index"));
  return t;
}

Json to_json(const TreeExpr& T) {
  Json j;
  if (T.is_leaf()) {
    j["kind"] = "leaf";
    return j;
  }
  j["kind"] = "node";
  j["children"] = generator_to_json(T.children());
  return j;
}

TreeExpr tree_from_json(const Json& j) {
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "leaf") return TreeExpr::leaf();
  if (kind == "node") return TreeExpr::node(generator_from_json(field(j, "children")));
  bad("unknown tree kind '" + kind + "'");
}

Json to_json(const FinTree& T) {
  Json p = Json::array();
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (T.parent(i) == FinTree::npos)
      p.push_back(nullptr);
    else
      p.push_back(T.parent(i));
  }
  Json j;
  j["parent"] = std::move(p);
  return j;
}

PathTree fintree_from_json(const Json& j) {
  if (j.is_object() && j.contains("parent")) {
    const Json& p = j["parent"];
    if (!p.is_array()) bad("\"parent\" must be an array");
    std::vector<std::size_t> parent;
    for (const auto& x : p) parent.push_back(x.is_null() ? FinTree::npos : natural(x, "parent"));
    FinTree T(std::move(parent));
    auto paths = omega_code(T);
    return PathTree{std::move(T), std::move(paths)};
  }
  return from_expr(tree_from_json(j));
}

Json to_json(const SuppVec& v) {
  Json e = Json::array();
  for (const auto& [t, x] : v.entries()) e.push_back(Json{{"node", to_json(t)}, {"value", to_json(x)}});
  return Json{{"entries", std::move(e)}};
}

SuppVec suppvec_from_json(const Json& j, const TreeExpr& ambient) {
  SuppVec v(ambient);
  const Json& e = field(j, "entries");
  if (!e.is_array()) bad("\"entries\" must be an array");
  for (const auto& item : e) {
    NodeId t = node_from_json(field(item, "node"));
    if (!ambient.contains(t)) bad("node " + to_string(t) + " is not in the tree");
    v.set(t, rational_from_json(field(item, "value")));
  }
  return v;
}

Json to_json(const StepFn& f) {
  Json regions = Json::array();
  for (const auto& r : f.regions()) {
    Json ex = Json::array();
    for (const auto& e : r.excluded) ex.push_back(to_json(e));
    regions.push_back(Json{{"apex", to_json(r.apex)}, {"exclude", std::move(ex)}, {"value", to_json(r.value)}});
  }
  return Json{{"regions", std::move(regions)}};
}

Json to_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

std::vector<Rational> rvec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const RatMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const RatOperator& op) {
  Json e = Json::array();
  for (std::size_t i = 0; i < op.rows(); ++i)
    for (std::size_t k = 0; k < op.cols(); ++k)
      if (op.m(i, k) != 0) e.push_back(Json::array({i, k, to_string(op.m(i, k))}));
  Json j;
  j["rows"] = op.rows();
  j["cols"] = op.cols();
  j["entries"] = std::move(e);
  j["norm_pair"] = to_string(op.domain) + "_to_" + to_string(op.codomain);
  return j;
}

RatOperator operator_from_json(const Json& j) {
  std::size_t rows = natural(field(j, "rows"), "rows"), cols = natural(field(j, "cols"), "cols");
  RatOperator op{RatMatrix(rows, cols), NormTag::l1, NormTag::sup};
  const Json& e = field(j, "entries");
  if (!e.is_array()) bad("\"entries\" must be an array");
  for (const auto& item : e) {
    if (!item.is_array() || item.size() != 3) bad("operator entries are [i, j, \"p/q\"]");
    std::size_t r = natural(item[0], "row"), c = natural(item[1], "column");
    if (r >= rows || c >= cols) bad("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range");
    op.m(r, c) = rational_from_json(item[2]);
  }
  if (j.contains("norm_pair")) {
    std::string pair = j["norm_pair"].get<std::string>();
    auto pos = pair.find("_to_");
    if (pos == std::string::npos) bad("norm_pair must look like l1_to_sup");
    op.domain = parse_norm_tag(pair.substr(0, pos));
    op.codomain = parse_norm_tag(pair.substr(pos + 4));
  }
  return op;
}

Json to_json(const Witness& w) {
  Json j;
  j["delta"] = to_json(w.delta);
  j["space"] = to_string(w.space);
  j["x"] = rvecs_to_json(w.x);
  j["xstar"] = rvecs_to_json(w.xstar);
  j["diag"] = to_json(w.diag);
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.delta = rational_from_json(field(j, "delta"));
  w.space = norm_from_json(field(j, "space"));
  w.x = rvecs_from_json(field(j, "x"));
  w.xstar = rvecs_from_json(field(j, "xstar"));
  w.diag = rvec_from_json(field(j, "diag"));
  return w;
}

Json to_json(const std::vector<TraceLevel>& trace) {
  Json j = Json::array();
  for (const auto& lv : trace) {
    Json removed = Json::array();
    for (const auto& t : lv.removed_sample) removed.push_back(to_json(t));
    j.push_back(Json{{"xi", to_string(lv.xi)}, {"survivors", lv.survivors}, {"removed_sample", std::move(removed)}});
  }
  return j;
}

Json to_json(const CompactnessReport& r) {
  Json j{{"chain_complete", r.chain_complete}, {"min_finite", r.min_finite}, {"compact", r.compact}};
  if (!r.chain_reason.empty()) j["chain_reason"] = r.chain_reason;
  if (!r.min_reason.empty()) j["min_reason"] = r.min_reason;
  return j;
}

Json to_json(const FdInstance& inst) {
  Json j;
  j["dim"] = inst.model.dim;
  j["norm"] = inst.model.norm == NormTag::sup ? "linf" : to_string(inst.model.norm);
  j["nu"] = to_json(inst.nu);
  j["F"] = rvecs_to_json(inst.F);
  j["seed"] = inst.seed;
  return j;
}

FdInstance fd_instance_from_json(const Json& j) {
  FdInstance inst;
  inst.model.dim = natural(field(j, "dim"), "dim");
  inst.model.norm = norm_from_json(field(j, "norm"));
  validate(inst.model);
  inst.nu = rational_from_json(field(j, "nu"));
  if (inst.nu <= 0) bad("nu must be positive");
  inst.F = rvecs_from_json(field(j, "F"));
  for (const auto& f : inst.F)
    if (f.size() != inst.model.dim) bad("F vectors must have length dim");
  inst.seed = j.contains("seed") ? natural(j["seed"], "seed") : 0;
  return inst;
}

Json to_json(const LowerLemmaReport& r) {
  Json j;
  j["preconditions_ok"] = r.preconditions_ok;
  j["failures"] = r.failures;
  j["exact"] = r.exact;
  j["net_size"] = r.net_size;
  if (r.exact) {
    j["sup"] = to_json(r.sup_exact);
    j["xnorm"] = to_json(r.xnorm_exact);
    j["margin"] = to_json(r.margin_exact);
  } else {
    j["sup"] = r.sup;
    j["xnorm"] = r.xnorm;
    j["margin"] = r.margin;
  }
  return j;
}

Json to_json(const KkInstance& inst) {
  Json chain = Json::array();
  for (const auto& B : inst.chain) chain.push_back(rvecs_to_json(B));
  Json j;
  j["dim"] = inst.model.dim;
  j["norm"] = inst.model.norm == NormTag::sup ? "linf" : to_string(inst.model.norm);
  j["chain"] = std::move(chain);
  j["xstar"] = to_json(inst.xstar);
  return j;
}

KkInstance kk_instance_from_json(const Json& j) {
  KkInstance inst;
  inst.model.dim = natural(field(j, "dim"), "dim");
  inst.model.norm = norm_from_json(field(j, "norm"));
  validate(inst.model);
  const Json& chain = field(j, "chain");
  if (!chain.is_array()) bad("\"chain\" must be an array of bases");
  for (const auto& B : chain) inst.chain.push_back(rvecs_from_json(B));
  inst.xstar = rvec_from_json(field(j, "xstar"));
  if (inst.xstar.size() != inst.model.dim) bad("xstar must have length dim");
  return inst;
}

}  // namespace szt
