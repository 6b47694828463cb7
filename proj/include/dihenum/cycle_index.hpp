#pragma once

// Exact cycle-index polynomials and the two substitutions that turn them into
// counts: constant substitution (orbit totals) and the subset inventory whose
// x^k coefficient counts orbit classes of weight-k subsets. Variables keep
// their part (rotations vs reflections) so the inventory can weight a pair as
// two elements; erasing parts is only done for printing and cross-checks.

#include <map>
#include <string>
#include <utility>

#include "dihenum/actions.hpp"
#include "dihenum/bigint.hpp"

namespace dihenum {

enum class IndexMethod { Direct, Closed };

struct CycleIndex {
  /// (part, cycle length) -> exponent; omitted variables have exponent 0.
  using Monomial = std::map<std::pair<Part, int>, int>;

  long long group_order = 1;  // the 1/|G| normalizer
  std::map<Monomial, BigInt> terms;  // integer masses; they sum to group_order

  bool operator==(const CycleIndex&) const = default;
};

/// Sparse exact-integer polynomial in one variable; no zero coefficients kept.
struct UnivariatePolynomial {
  std::map<int, BigInt> coefficients;

  bool operator==(const UnivariatePolynomial&) const = default;
  int degree() const {
    return coefficients.empty() ? -1 : coefficients.rbegin()->first;
  }
};

struct PartWeights {
  int rotations = 1;
  int reflections = 1;
};

/// Direct: one monomial per automorphism, from traced cycle decompositions.
/// Closed: one monomial per automorphism class, from the gcd formulas.
/// The two must be equal term by term.
CycleIndex cycle_index(const DihedralGroup& group, ActionKind kind,
                       IndexMethod method);

/// Substitute every variable by m: the number of orbits of colorings of the
/// action set with m colors. Throws NonIntegerResult on a failed exactness
/// assertion (implementation bug).
BigInt evaluate_constant(const CycleIndex& index, int colors);

/// Substitute x_{part,d} by 1 + x^(d * weight(part)) and expand. The x^k
/// coefficient counts orbit classes of subsets of total weight k.
UnivariatePolynomial subset_polynomial(const CycleIndex& index,
                                       PartWeights weights);

BigInt coefficient(const UnivariatePolynomial& q, int k);

/// Canonical rendering with parts erased, e.g.
/// "(1/6)*[x1^5 + 2*x1^2*x3 + 3*x1*x2^2]": terms by descending x1 exponent,
/// ties by lexicographic (length, exponent) sequence; factors by ascending
/// length.
std::string to_string(const CycleIndex& index);

}  // namespace dihenum
