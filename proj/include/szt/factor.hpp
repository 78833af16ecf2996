#pragma once

// Exact factorization of summing operators on finite trees. Node i of a
// FinTree is coordinate i everywhere; Sigma_T has entry (t,s) = [s <= t].

#include "szt/fintree.hpp"
#include "szt/matrix.hpp"
#include "szt/norms.hpp"
#include "szt/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace szt {

struct RatOperator {
  RatMatrix m;
  NormTag domain = NormTag::l1;
  NormTag codomain = NormTag::sup;

  std::size_t rows() const { return m.rows(); }
  std::size_t cols() const { return m.cols(); }
};

/// Operator norm for pairs with an l1 domain (largest column norm) or a sup
/// codomain (largest dual row norm). Other pairs throw std::domain_error.
Rational operator_norm(const RatOperator& op);

RatMatrix sigma_matrix(const FinTree& T);

struct Witness {
  Rational delta;
  NormTag space = NormTag::l1;
  std::vector<std::vector<Rational>> x;
  std::vector<std::vector<Rational>> xstar;
  std::vector<Rational> diag;
};

/// x_t = e_t, x_t* = indicator of the ancestors of t, delta = 1.
Witness canonical_witness(const FinTree& T);

struct WitnessReport {
  bool valid = true;
  std::string detail;
  // Offending pair (t,s) for pairing failures, npos otherwise.
  std::size_t t = FinTree::npos;
  std::size_t s = FinTree::npos;
};

/// Malformed maps throw std::invalid_argument.
WitnessReport verify_witness(const FinTree& T, const Witness& w);

struct Factorization {
  RatOperator U;  // l1(T) -> X
  RatOperator V;  // Y -> l_inf(T)
};

/// vstar[t] is a functional on Y with vstar[t] * Top = xstar[t] and dual
/// norm <= 1. Throws std::invalid_argument when the witness fails or the
/// functionals do not fit, std::logic_error if the composition misses Sigma_T.
Factorization witness_to_factorization(const FinTree& T, const Witness& w, const RatOperator& Top,
                                       const std::vector<std::vector<Rational>>& vstar);

/// Minimal l2 norm functionals v on Y with v * Top = xstar[t], or nullopt when
/// some xstar[t] is outside the row space of Top.
std::optional<std::vector<std::vector<Rational>>> lift_functionals(const RatOperator& Top,
                                                                   const std::vector<std::vector<Rational>>& xstar);

/// Requires V Top U = Sigma_T; throws std::invalid_argument naming the first
/// failing basis vector, or when some U e_s vanishes. X and Y must carry l1
/// or sup norms.
Witness factorization_to_witness(const FinTree& T, const RatOperator& U, const RatOperator& V,
                                 const RatOperator& Top);

struct SubtreeFactorization {
  RatOperator A, U, V, B;
  RatMatrix composition;  // B V Sigma_T U A
  bool equal = false;     // composition == Sigma_S
};

/// phi[s] is the node of T assigned to s. Throws std::invalid_argument naming a
/// violating pair when phi is not an order embedding.
SubtreeFactorization subtree_factorization(const FinTree& S, const FinTree& T, const std::vector<std::size_t>& phi);

/// The tree {root} u union of {n} x T_n minus its root.
struct GluedTree {
  FinTree tree;  // root is node 0
  std::vector<std::size_t> branch;  // npos at the root
  std::vector<std::size_t> local;   // node of the branch tree
  std::size_t branches = 0;
};
GluedTree glue(const std::vector<FinTree>& family);

/// Entry k of x, xstar, diag belongs to glued node k + 1.
struct BranchWitness {
  NormTag space = NormTag::l1;
  std::vector<std::vector<Rational>> x;
  std::vector<std::vector<Rational>> xstar;
  std::vector<Rational> diag;
  std::vector<Rational> thresholds;  // one strict lower bound per branch
};

BranchWitness canonical_branch_witness(const GluedTree& G, const std::vector<Rational>& thresholds);

struct BranchReport {
  bool valid = true;
  std::string detail;
  std::size_t branch = FinTree::npos;
};
BranchReport verify_branch_witness(const GluedTree& G, const BranchWitness& w);

/// max over l of the norm of the projection sum a_i x_i -> sum_{i<=l} a_i x_i
/// on the span of the (independent) columns xs, for l1 or sup ambient norms.
/// Found by walking the vertices of the unit ball of the span.
Rational basis_constant(const std::vector<std::vector<Rational>>& xs, NormTag n);

/// Nodes of T in an order compatible with the tree order, taken from
/// enumerate_compatible on the path form of T.
std::vector<std::size_t> compatible_order(const FinTree& T);

}  // namespace szt
