#include "dihenum/actions.hpp"

#include <cassert>
#include <numeric>

namespace dihenum {

std::map<int, int> PartitionedCycleType::merged() const {
  std::map<int, int> out = rotation_cycles;
  for (const auto& [len, count] : reflection_cycles) out[len] += count;
  return out;
}

int point_count(const DihedralGroup& group, ActionKind kind) {
  return kind == ActionKind::Digraph ? 2 * group.p - 1 : (3 * group.p - 1) / 2;
}

std::vector<ActionPoint> points(const DihedralGroup& group, ActionKind kind) {
  std::vector<ActionPoint> out;
  out.reserve(point_count(group, kind));
  int max_rot = kind == ActionKind::Digraph ? group.p - 1 : (group.p - 1) / 2;
  for (int i = 1; i <= max_rot; ++i) out.push_back({Part::Rotations, i});
  for (int j = 0; j < group.p; ++j) out.push_back({Part::Reflections, j});
  return out;
}

ActionPoint permute(const Automorphism& a, const ActionPoint& x,
                    const DihedralGroup& group, ActionKind kind) {
  const int p = group.p;
  if (x.part == Part::Reflections)
    return {Part::Reflections,
            static_cast<int>((static_cast<long long>(a.scale) * x.index + a.shift) % p)};
  int image = static_cast<int>(static_cast<long long>(a.scale) * x.index % p);
  // A pair {r^i, r^-i} is labeled by its representative in [1, (p-1)/2].
  if (kind == ActionKind::Graph && image > (p - 1) / 2) image = p - image;
  return {Part::Rotations, image};
}

PartitionedCycleType cycle_type_direct(const Automorphism& a,
                                       const DihedralGroup& group,
                                       ActionKind kind) {
  const auto pts = points(group, kind);
  std::map<ActionPoint, int> index_of;
  for (size_t n = 0; n < pts.size(); ++n) index_of.emplace(pts[n], n);

  PartitionedCycleType type;
  std::vector<bool> visited(pts.size(), false);
  for (size_t start = 0; start < pts.size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    size_t at = start;
    while (!visited[at]) {
      visited[at] = true;
      ++length;
      at = index_of.at(permute(a, pts[at], group, kind));
    }
    auto& bucket = pts[start].part == Part::Rotations ? type.rotation_cycles
                                                      : type.reflection_cycles;
    bucket[length] += 1;
  }
  return type;
}

PartitionedCycleType cycle_type_closed(const Automorphism& a,
                                       const DihedralGroup& group,
                                       ActionKind kind) {
  const int p = group.p;
  const int rot_points = kind == ActionKind::Digraph ? p - 1 : (p - 1) / 2;
  PartitionedCycleType type;

  if (a.scale == 1) {
    type.rotation_cycles[1] = rot_points;
    if (a.shift == 0)
      type.reflection_cycles[1] = p;  // identity fixes everything
    else
      type.reflection_cycles[p] = 1;  // one p-cycle of reflections
    return type;
  }

  // The cycle structure of (scale, shift) matches (scale, 0) for every shift.
  const int log = discrete_log(a.scale, primitive_root(p), p);
  const int g = std::gcd(log, p - 1);  // (p-1)/g = order of scale in Z_p^x
  if (kind == ActionKind::Digraph) {
    type.rotation_cycles[(p - 1) / g] = g;
  } else {
    // Pairs collapse i and -i, halving the cycle length when -1 is a power.
    const int g2 = std::gcd(2 * log, p - 1);
    type.rotation_cycles[(p - 1) / g2] = g2 / 2;
  }
  type.reflection_cycles[1] = 1;  // the reflection fixed by the affine map
  type.reflection_cycles[(p - 1) / g] += g;
  return type;
}

}  // namespace dihenum
