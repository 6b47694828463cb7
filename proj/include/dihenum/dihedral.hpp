#pragma once

// The dihedral group D_2p = <r, f | r^p = f^2 = e, f r f = r^-1> for an odd
// prime p, its automorphism group Aut(D_2p) = Z_p^x |x Z_p, and connectivity
// of connection sets. Everything here is a pure function over small values.

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dihenum {

class NotOddPrime : public std::invalid_argument {
 public:
  explicit NotOddPrime(long long p)
      : std::invalid_argument("not an odd prime: " + std::to_string(p)) {}
};

class IdentityInSet : public std::invalid_argument {
 public:
  IdentityInSet()
      : std::invalid_argument("connection set must not contain the identity") {}
};

bool is_odd_prime(long long n);

struct DihedralGroup {
  explicit DihedralGroup(int p);  // throws NotOddPrime
  int p;
  int order() const { return 2 * p; }
};

/// An element r^exponent (rotation) or r^exponent * f (reflection),
/// exponent in [0, p).
struct GroupElement {
  bool reflection = false;
  int exponent = 0;

  auto operator<=>(const GroupElement&) const = default;

  bool is_identity() const { return !reflection && exponent == 0; }
  static GroupElement identity() { return {}; }
  static GroupElement rotation(int i) { return {false, i}; }
  static GroupElement reflection_at(int j) { return {true, j}; }
};

/// The map r^i -> r^(scale*i), r^j f -> r^(scale*j + shift) f.
/// Invariant: scale in [1, p-1], shift in [0, p-1].
struct Automorphism {
  int scale = 1;
  int shift = 0;

  auto operator<=>(const Automorphism&) const = default;

  static Automorphism identity() { return {}; }
};

GroupElement multiply(const GroupElement& g, const GroupElement& h,
                      const DihedralGroup& group);
GroupElement invert(const GroupElement& g, const DihedralGroup& group);

GroupElement apply_automorphism(const Automorphism& a, const GroupElement& g,
                                const DihedralGroup& group);

/// compose(a, b) acts as a after b.
Automorphism compose(const Automorphism& a, const Automorphism& b,
                     const DihedralGroup& group);

/// All p(p-1) automorphisms, scale-major then shift, ascending.
std::vector<Automorphism> all_automorphisms(const DihedralGroup& group);

/// All 2p elements, rotations first, ascending exponent.
std::vector<GroupElement> all_elements(const DihedralGroup& group);

/// Closure of S u {e} under multiplication.
std::set<GroupElement> generated_subgroup(const std::set<GroupElement>& s,
                                          const DihedralGroup& group);

/// True iff <S> = D_2p. S must not contain the identity (IdentityInSet).
/// Constant-time characterization: S is disconnected exactly when it contains
/// no reflection, or consists of a single reflection. Cross-checked against
/// the subgroup closure in debug builds.
bool is_connected(const std::set<GroupElement>& s, const DihedralGroup& group);

/// Least k >= 1 with s^k = 1 (mod p); divides p-1.
int multiplicative_order(int s, int p);

/// Smallest generator of Z_p^x.
int primitive_root(int p);

/// The unique e in [0, p-2] with z^e = s (mod p), z a primitive root.
int discrete_log(int s, int z, int p);

}  // namespace dihenum
