#pragma once

// Closed-form isomorphism counts for Cayley digraphs and Cayley graphs on
// D_2p, together with the small exact-arithmetic helpers they need. Every
// count is an arbitrary-precision integer and every internal division is
// checked exact. The Polya substitutions (cycle_index.hpp) and the
// brute-force oracle (oracle.hpp) recompute these numbers by independent
// routes; tests pin all three together.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dihenum/actions.hpp"
#include "dihenum/bigint.hpp"

namespace dihenum {

class DegreeOutOfRange : public std::invalid_argument {
 public:
  DegreeOutOfRange(int k, int max)
      : std::invalid_argument("degree " + std::to_string(k) +
                              " outside [0, " + std::to_string(max) + "]") {}
};

long long totient(long long n);
std::vector<long long> divisors(long long n);  // ascending
BigInt binomial(long long n, long long k);     // 0 outside 0 <= k <= n

/// Total Cayley digraphs on D_2p up to isomorphism.
BigInt count_digraphs(int p);
/// Circulant digraphs of order p up to isomorphism (the disconnected classes
/// of rotation-only connection sets).
BigInt count_circulant_digraphs(int p);
/// Connected Cayley digraphs on D_2p up to isomorphism.
BigInt count_connected_digraphs(int p);

/// Cayley digraphs on D_2p of out-degree k up to isomorphism, 0 <= k <= 2p-1.
BigInt count_digraphs_by_outdegree(int p, int k);
/// Circulant digraphs of order p with out-degree k, 0 <= k <= p-1.
BigInt count_circulant_digraphs_by_outdegree(int p, int k);
/// Connected Cayley digraphs on D_2p of out-degree k, 0 <= k <= 2p-1.
BigInt count_connected_digraphs_by_outdegree(int p, int k);

/// Total Cayley graphs (inverse-closed connection sets) on D_2p.
BigInt count_graphs(int p);
/// Circulant graphs of order p up to isomorphism.
BigInt count_circulant_graphs(int p);
/// Connected Cayley graphs on D_2p up to isomorphism.
BigInt count_connected_graphs(int p);

/// Cayley graphs on D_2p of valency k up to isomorphism, 0 <= k <= 2p-1.
/// No closed form exists; computed from the weighted subset inventory of the
/// graph-action cycle index (a rotation pair weighs 2, a reflection 1).
BigInt count_graphs_by_valency(int p, int k);

enum class CountFilter { All, Connected };
enum class CountMethod { ClosedForm, Polya, Oracle };

std::string to_string(ActionKind kind);
std::string to_string(CountFilter filter);
std::string to_string(CountMethod method);

/// One counting result in presentable form.
struct CountReport {
  int p = 0;
  ActionKind kind = ActionKind::Digraph;
  CountFilter filter = CountFilter::All;
  std::optional<std::map<int, BigInt>> by_degree;
  BigInt total = 0;
  CountMethod method = CountMethod::ClosedForm;
};

/// JSON object with big integers as decimal strings.
std::string to_json(const CountReport& report);
/// Header plus rows, '\n' line endings. Reports with by_degree render as
/// "k,count" rows; totals as a single "p,kind,filter,method,total" row.
std::string to_csv(const CountReport& report);

}  // namespace dihenum
