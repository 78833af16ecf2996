#pragma once

// Independent reference computations used to cross-check the library. None of
// these call the structural rank, the greedy embedding, or the branch-and-bound
// search they are compared against.

#include "szt/fintree.hpp"
#include "szt/tree.hpp"
#include "szt/vectors.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace szt::verify {

/// Random recursive tree on n nodes: node i > 0 hangs below a uniform j < i.
FinTree random_fintree(std::mt19937_64& rng, std::size_t n);

/// Stage at which each node disappears when maximal nodes are stripped
/// repeatedly.
std::vector<std::size_t> leaf_stripping_ranks(const FinTree& T);

/// levels[k][i] tells whether node i survives k stripping steps; the last
/// level is the first empty one.
std::vector<std::vector<bool>> iterated_derivations(const FinTree& T);

/// Empty when phi is total on S, maps root to root, is an order isomorphism
/// onto its image, and the image is downwards closed in target; otherwise a
/// description of the first failure.
std::string check_embedding(const TreeExpr& S, const TreeExpr& target, const Embedding& phi);

/// James norm squared by brute force: every set partition of the support is
/// tried, and a partition counts when each block is a chain that contains every
/// support node lying between its least and greatest element.
Rational james_squared_exhaustive(const SuppVec& v);

}  // namespace szt::verify
