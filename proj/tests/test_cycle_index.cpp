#include <doctest.h>

#include "dihenum/counting.hpp"
#include "dihenum/cycle_index.hpp"

using namespace dihenum;

namespace {

std::vector<int> odd_primes_up_to(int limit) {
  std::vector<int> primes;
  for (int p = 3; p <= limit; p += 2)
    if (is_odd_prime(p)) primes.push_back(p);
  return primes;
}

BigInt coefficient_mass(const CycleIndex& index) {
  BigInt sum = 0;
  for (const auto& [monomial, mass] : index.terms) sum += mass;
  return sum;
}

}  // namespace

TEST_CASE("canonical rendering at p=3") {
  DihedralGroup d6(3);
  CHECK(to_string(cycle_index(d6, ActionKind::Digraph, IndexMethod::Closed)) ==
        "(1/6)*[x1^5 + 2*x1^2*x3 + 3*x1*x2^2]");
  CHECK(to_string(cycle_index(d6, ActionKind::Graph, IndexMethod::Closed)) ==
        "(1/6)*[x1^4 + 3*x1^2*x2 + 2*x1*x3]");
}

TEST_CASE("direct and closed construction agree term by term") {
  for (int p : odd_primes_up_to(31)) {
    DihedralGroup g(p);
    for (auto kind : {ActionKind::Digraph, ActionKind::Graph}) {
      const auto direct = cycle_index(g, kind, IndexMethod::Direct);
      const auto closed = cycle_index(g, kind, IndexMethod::Closed);
      CHECK(direct == closed);
      CHECK(coefficient_mass(direct) == direct.group_order);
      CHECK(direct.group_order == static_cast<long long>(p) * (p - 1));
    }
  }
}

TEST_CASE("every monomial covers each part exactly") {
  for (int p : {3, 5, 7, 13}) {
    DihedralGroup g(p);
    for (auto kind : {ActionKind::Digraph, ActionKind::Graph}) {
      const int rotations =
          kind == ActionKind::Digraph ? p - 1 : (p - 1) / 2;
      for (const auto& [monomial, mass] :
           cycle_index(g, kind, IndexMethod::Direct).terms) {
        int rot_degree = 0, refl_degree = 0;
        for (const auto& [var, exponent] : monomial)
          (var.first == Part::Rotations ? rot_degree : refl_degree) +=
              var.second * exponent;
        CHECK(rot_degree == rotations);
        CHECK(refl_degree == p);
        CHECK(mass > 0);
      }
    }
  }
}

TEST_CASE("constant substitution counts orbits") {
  DihedralGroup d6(3);
  const auto digraph = cycle_index(d6, ActionKind::Digraph, IndexMethod::Closed);
  const auto graph = cycle_index(d6, ActionKind::Graph, IndexMethod::Closed);
  CHECK(evaluate_constant(digraph, 2) == 12);
  CHECK(evaluate_constant(graph, 2) == 8);
  CHECK(evaluate_constant(digraph, 1) == 1);
  CHECK(evaluate_constant(graph, 1) == 1);
}

TEST_CASE("subset inventory at p=3") {
  DihedralGroup d6(3);
  const auto digraph = cycle_index(d6, ActionKind::Digraph, IndexMethod::Closed);
  const auto inventory = subset_polynomial(digraph, {1, 1});
  CHECK(coefficient(inventory, 2) == 3);
  for (int k = 0; k <= 5; ++k)
    CHECK(coefficient(inventory, k) ==
          std::vector<int>{1, 2, 3, 3, 2, 1}[k]);

  const auto graph = cycle_index(d6, ActionKind::Graph, IndexMethod::Closed);
  const auto weighted = subset_polynomial(graph, {2, 1});
  CHECK(weighted.degree() == 5);
  for (int k = 0; k <= 5; ++k)
    CHECK(coefficient(weighted, k) ==
          std::vector<int>{1, 1, 2, 2, 1, 1}[k]);
}

TEST_CASE("coefficient lookups outside the support are zero") {
  UnivariatePolynomial q;
  q.coefficients[0] = 1;
  q.coefficients[2] = 3;
  CHECK(coefficient(q, 2) == 3);
  CHECK(coefficient(q, -1) == 0);
  CHECK(coefficient(q, 7) == 0);
}

TEST_CASE("inventory properties across the prime range") {
  for (int p : odd_primes_up_to(31)) {
    DihedralGroup g(p);
    for (auto kind : {ActionKind::Digraph, ActionKind::Graph}) {
      const auto index = cycle_index(g, kind, IndexMethod::Closed);
      const auto inventory = subset_polynomial(index, {1, 1});
      const int n = point_count(g, kind);
      CHECK(inventory.degree() == n);
      CHECK(coefficient(inventory, 0) == 1);

      // Setting x = 1 recovers the two-color orbit total.
      BigInt sum = 0;
      for (const auto& [k, c] : inventory.coefficients) {
        CHECK(c > 0);
        sum += c;
      }
      CHECK(sum == evaluate_constant(index, 2));

      // Complementation is an orbit bijection.
      for (int k = 0; k <= n; ++k)
        CHECK(coefficient(inventory, k) == coefficient(inventory, n - k));
    }
  }
}
