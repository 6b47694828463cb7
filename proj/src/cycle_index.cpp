#include "dihenum/cycle_index.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "dihenum/counting.hpp"

namespace dihenum {

namespace {

CycleIndex::Monomial monomial_of(const PartitionedCycleType& type) {
  CycleIndex::Monomial m;
  for (const auto& [len, count] : type.rotation_cycles)
    m[{Part::Rotations, len}] = count;
  for (const auto& [len, count] : type.reflection_cycles)
    m[{Part::Reflections, len}] = count;
  return m;
}

}  // namespace

CycleIndex cycle_index(const DihedralGroup& group, ActionKind kind,
                       IndexMethod method) {
  CycleIndex index;
  index.group_order = static_cast<long long>(group.p) * (group.p - 1);
  if (method == IndexMethod::Direct) {
    for (const auto& a : all_automorphisms(group))
      index.terms[monomial_of(cycle_type_direct(a, group, kind))] += 1;
  } else {
    // One representative per class of equal cycle type: the identity, one
    // pure translation (x p-1), and each scale != 1 with shift 0 (x p).
    index.terms[monomial_of(cycle_type_closed({1, 0}, group, kind))] += 1;
    index.terms[monomial_of(cycle_type_closed({1, 1}, group, kind))] +=
        group.p - 1;
    for (int s = 2; s < group.p; ++s)
      index.terms[monomial_of(cycle_type_closed({s, 0}, group, kind))] +=
          group.p;
  }
  return index;
}

BigInt evaluate_constant(const CycleIndex& index, int colors) {
  BigInt total = 0;
  for (const auto& [monomial, mass] : index.terms) {
    int cycles = 0;
    for (const auto& [var, exponent] : monomial) cycles += exponent;
    BigInt value = 1;
    for (int i = 0; i < cycles; ++i) value *= colors;
    total += mass * value;
  }
  return exact_div(total, index.group_order);
}

UnivariatePolynomial subset_polynomial(const CycleIndex& index,
                                       PartWeights weights) {
  std::vector<BigInt> total;  // dense, indexed by degree
  for (const auto& [monomial, mass] : index.terms) {
    std::vector<BigInt> term{mass};
    for (const auto& [var, exponent] : monomial) {
      const auto& [part, length] = var;
      const int step =
          length * (part == Part::Rotations ? weights.rotations
                                            : weights.reflections);
      // term *= (1 + x^step)^exponent
      std::vector<BigInt> next(term.size() + step * exponent);
      for (size_t d = 0; d < term.size(); ++d) {
        if (term[d] == 0) continue;
        for (int j = 0; j <= exponent; ++j)
          next[d + step * j] += term[d] * binomial(exponent, j);
      }
      term = std::move(next);
    }
    if (term.size() > total.size()) total.resize(term.size());
    for (size_t d = 0; d < term.size(); ++d) total[d] += term[d];
  }

  UnivariatePolynomial result;
  for (size_t d = 0; d < total.size(); ++d)
    if (total[d] != 0)
      result.coefficients[static_cast<int>(d)] =
          exact_div(total[d], index.group_order);
  return result;
}

BigInt coefficient(const UnivariatePolynomial& q, int k) {
  auto it = q.coefficients.find(k);
  return it == q.coefficients.end() ? BigInt(0) : it->second;
}

std::string to_string(const CycleIndex& index) {
  // Erase parts and re-merge.
  std::map<std::map<int, int>, BigInt> erased;
  for (const auto& [monomial, mass] : index.terms) {
    std::map<int, int> lengths;
    for (const auto& [var, exponent] : monomial) lengths[var.second] += exponent;
    erased[lengths] += mass;
  }

  using Term = std::pair<std::map<int, int>, BigInt>;
  std::vector<Term> terms(erased.begin(), erased.end());
  auto x1_exponent = [](const std::map<int, int>& m) {
    auto it = m.find(1);
    return it == m.end() ? 0 : it->second;
  };
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    int ea = x1_exponent(a.first), eb = x1_exponent(b.first);
    if (ea != eb) return ea > eb;
    return a.first < b.first;
  });

  std::ostringstream out;
  out << "(1/" << index.group_order << ")*[";
  bool first_term = true;
  for (const auto& [lengths, mass] : terms) {
    if (!first_term) out << " + ";
    first_term = false;
    bool first_factor = true;
    if (mass != 1) {
      out << mass.str();
      first_factor = false;
    }
    for (const auto& [length, exponent] : lengths) {
      if (!first_factor) out << "*";
      first_factor = false;
      out << "x" << length;
      if (exponent != 1) out << "^" << exponent;
    }
  }
  out << "]";
  return out.str();
}

}  // namespace dihenum
