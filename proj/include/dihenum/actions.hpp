#pragma once

// The two permutation actions of Aut(D_2p) used for counting:
//  - Digraph: on the 2p-1 non-identity elements;
//  - Graph:   on the (p-1)/2 inverse pairs {r^i, r^-i} plus the p reflections
//             (inverse-closed sets are unions of these).
// Cycle types come two ways: by tracing the permutation (direct) and from
// gcd formulas (closed); the two are equivalence-tested against each other.

#include <map>
#include <vector>

#include "dihenum/dihedral.hpp"

namespace dihenum {

enum class ActionKind { Digraph, Graph };

enum class Part { Rotations, Reflections };

/// Rotations: exponent i, 1 <= i <= p-1 (Digraph) or pair label
/// 1 <= i <= (p-1)/2 (Graph). Reflections: 0 <= j <= p-1 in both.
struct ActionPoint {
  Part part = Part::Rotations;
  int index = 0;

  auto operator<=>(const ActionPoint&) const = default;
};

/// Cycle-length multiplicities of one automorphism, kept per part.
struct PartitionedCycleType {
  std::map<int, int> rotation_cycles;
  std::map<int, int> reflection_cycles;

  bool operator==(const PartitionedCycleType&) const = default;

  /// b_k over the whole action set.
  std::map<int, int> merged() const;
};

int point_count(const DihedralGroup& group, ActionKind kind);

/// Rotations ascending, then reflections ascending. This order defines the
/// bit layout of oracle connection sets.
std::vector<ActionPoint> points(const DihedralGroup& group, ActionKind kind);

ActionPoint permute(const Automorphism& a, const ActionPoint& x,
                    const DihedralGroup& group, ActionKind kind);

/// Cycle type by disjoint-cycle decomposition of permute(a, .).
PartitionedCycleType cycle_type_direct(const Automorphism& a,
                                       const DihedralGroup& group,
                                       ActionKind kind);

/// Cycle type from the gcd closed forms; no permutation is traced.
PartitionedCycleType cycle_type_closed(const Automorphism& a,
                                       const DihedralGroup& group,
                                       ActionKind kind);

}  // namespace dihenum
