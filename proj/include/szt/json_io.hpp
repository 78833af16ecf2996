#pragma once

// JSON forms of the library objects. Rationals travel as "p/q" strings and
// ordinals as CNF strings; readers throw std::invalid_argument on bad input.

#include "szt/factor.hpp"
#include "szt/fdlab.hpp"
#include "szt/szlenk.hpp"
#include "szt/topology.hpp"
#include "szt/vectors.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace szt {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// Accepts "p/q" strings and JSON integers, never floats.
Rational rational_from_json(const Json& j);

Json to_json(const NodeId& t);
NodeId node_from_json(const Json& j);

/// {"kind":"leaf"} or {"kind":"node","children":<generator>}.
Json to_json(const TreeExpr& T);
TreeExpr tree_from_json(const Json& j);

/// {"parent":[null,0,0,...]}
Json to_json(const FinTree& T);
/// Accepts the parent form or a finite tree expression; paths are the
/// canonical codes for the former and the expression paths for the latter.
PathTree fintree_from_json(const Json& j);

Json to_json(const SuppVec& v);
SuppVec suppvec_from_json(const Json& j, const TreeExpr& ambient);
Json to_json(const StepFn& f);

Json to_json(const std::vector<Rational>& v);
std::vector<Rational> rvec_from_json(const Json& j);
Json to_json(const RatMatrix& m);  // dense rows

/// {"rows","cols","entries":[[i,j,"p/q"],...],"norm_pair":"l1_to_sup"}
Json to_json(const RatOperator& op);
RatOperator operator_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const std::vector<TraceLevel>& trace);
Json to_json(const CompactnessReport& r);

Json to_json(const FdInstance& inst);
FdInstance fd_instance_from_json(const Json& j);
Json to_json(const LowerLemmaReport& r);

/// {"dim","norm","chain":[[vector,...],...],"xstar":[...]}
Json to_json(const KkInstance& inst);
KkInstance kk_instance_from_json(const Json& j);

}  // namespace szt
