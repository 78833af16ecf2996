#pragma once

// Random instance generators for the factorization and model checks. They
// build objects by construction so that validity is known in advance.

#include "szt/factor.hpp"

#include <random>
#include <vector>

namespace szt::verify {

Rational random_small_rational(std::mt19937_64& rng, long span = 5, long max_den = 4);

/// Random invertible n x n rational matrix.
RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n);

/// A witness built as x_s = M e_s / |M e_s|, x_t* = Sigma_row(t) D M^-1.
Witness random_witness(std::mt19937_64& rng, const FinTree& T, NormTag space);

struct FactorableInstance {
  Witness witness;
  RatOperator top;
  std::vector<std::vector<Rational>> vstar;
};
/// Random invertible operator X -> Y (Y carries sup) and a witness whose
/// functionals are v_t* o T with |v_t*|_1 <= 1.
FactorableInstance random_factorable(std::mt19937_64& rng, const FinTree& T, NormTag space);

struct RandomEmbedding {
  FinTree source;
  std::vector<std::size_t> phi;
};
/// A random node set inside one cone of T, with the induced tree order.
RandomEmbedding random_subtree_embedding(std::mt19937_64& rng, const FinTree& T);

/// Empty when every pairing <x_t*,x_s> follows the triangular pattern with
/// the common diagonal value >= delta; independent of verify_witness.
std::string witness_pattern_failure(const FinTree& T, const Witness& w);

}  // namespace szt::verify
