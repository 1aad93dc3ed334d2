#pragma once

#include <cstddef>

#include "zpcheck/complex.hpp"

namespace zpcheck {

// Binomial identity g_i * multiplier_i = g_j * multiplier_j between two generators of I,
// read in the free polynomial ring. degree is the degree of either side.
struct RelationAmongRelations {
  std::size_t i;
  std::size_t j;
  SquarefreeMonomial multiplier_i;
  SquarefreeMonomial multiplier_j;
  int degree;
};

SquarefreeMonomial lcm_support(const SquarefreeMonomial& a, const SquarefreeMonomial& b);

struct MinimalRelation {
  int degree;
  RelationAmongRelations witness;
};

// Smallest degree of a relation among relations. Any common multiple of g_i and g_j is a
// multiple of their lcm, so the minimum is 2 * min_{i<j} |supp g_i u supp g_j|.
// Ties go to the lexicographically first (i, j). Throws NoRelationsError when |I| < 2.
MinimalRelation min_relation_degree(const FaceRingPresentation& f);

}  // namespace zpcheck
