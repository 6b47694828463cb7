#pragma once

// Brute-force ground truth: sweep every connection set as a bitmask over the
// action points, keep the sets that are the lexicographic minimum of their
// automorphism orbit, and tally. Orbit counting equals isomorphism counting
// on these groups, so the sweep independently reproduces every closed-form
// and substitution count at small p.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dihenum/actions.hpp"
#include "dihenum/bigint.hpp"

namespace dihenum {

class TooLarge : public std::runtime_error {
 public:
  TooLarge(int p, ActionKind kind, int limit)
      : std::runtime_error("p=" + std::to_string(p) + " exceeds the " +
                           (kind == ActionKind::Digraph ? "digraph" : "graph") +
                           " sweep guard (p <= " + std::to_string(limit) +
                           "); pass force to override") {}
};

/// A connection set as a bitmask in the order of points(group, kind); the
/// identity is not representable. Bit i of a Graph-kind mask selects a whole
/// inverse pair while i is a rotation point.
struct ConnectionSet {
  std::uint64_t bits = 0;

  auto operator<=>(const ConnectionSet&) const = default;
};

struct OracleReport {
  int p = 0;
  ActionKind kind = ActionKind::Digraph;
  std::uint64_t orbit_count = 0;
  std::map<int, std::uint64_t> by_size;  // |S| in group elements
  std::uint64_t connected_count = 0;
  std::map<int, std::uint64_t> connected_by_size;
  double elapsed_seconds = 0.0;
};

/// Lexicographically least bitmask in the automorphism orbit of `set`.
ConnectionSet canonical_form(ConnectionSet set, const DihedralGroup& group,
                             ActionKind kind);

/// Image of `set` under one automorphism, elementwise.
ConnectionSet permute_set(const Automorphism& a, ConnectionSet set,
                          const DihedralGroup& group, ActionKind kind);

/// Full sweep of the 2^n connection sets. Guard: p <= 13 (Digraph),
/// p <= 17 (Graph) unless force. workers == 0 picks the hardware count;
/// DIHEDRAL_ENUM_THREADS > 0 caps it either way.
OracleReport enumerate_orbits(const DihedralGroup& group, ActionKind kind,
                              bool force = false, unsigned workers = 0);

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch, or a summary when passing
};

struct VerificationReport {
  int p = 0;
  ActionKind kind = ActionKind::Digraph;
  std::vector<VerificationCheck> checks;
  double elapsed_seconds = 0.0;

  bool all_pass() const;
};

/// Run the sweep and compare every tally against the closed forms and the
/// cycle-index substitutions.
VerificationReport verify(const DihedralGroup& group, ActionKind kind,
                          bool force = false, unsigned workers = 0);

/// Worker count after applying the DIHEDRAL_ENUM_THREADS cap (0 = auto).
unsigned resolve_worker_count(unsigned requested);

}  // namespace dihenum
