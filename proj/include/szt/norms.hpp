#pragma once

// Norm tags shared by the exact factorization code and the finite-dimensional
// lab. A functional on a tagged space carries the dual tag.

#include "szt/rational.hpp"

#include <string>
#include <vector>

namespace szt {

enum class NormTag { l1, sup, l2 };

std::string to_string(NormTag n);
NormTag parse_norm_tag(const std::string& s);

/// The dual norm tag (l1 <-> sup, l2 <-> l2).
NormTag dual(NormTag n);

/// Exact norm; l2 throws std::domain_error unless the norm is rational.
Rational vec_norm(const std::vector<Rational>& v, NormTag n);
/// ||v|| <= bound, exact for every tag.
bool norm_at_most(const std::vector<Rational>& v, NormTag n, const Rational& bound);

}  // namespace szt
