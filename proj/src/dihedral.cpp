#include "dihenum/dihedral.hpp"

#include <cassert>

namespace dihenum {

namespace {

int mod(long long v, int p) {
  int r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

}  // namespace

bool is_odd_prime(long long n) {
  if (n < 3 || n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

DihedralGroup::DihedralGroup(int p_) : p(p_) {
  if (!is_odd_prime(p)) throw NotOddPrime(p);
}

GroupElement multiply(const GroupElement& g, const GroupElement& h,
                      const DihedralGroup& group) {
  // r^a f^e * r^b f^d = r^(a + b) f^d   when e = 0
  //                   = r^(a - b) f^(1+d) when e = 1   (f r^b = r^-b f)
  long long b = g.reflection ? -static_cast<long long>(h.exponent) : h.exponent;
  return {g.reflection != h.reflection, mod(g.exponent + b, group.p)};
}

GroupElement invert(const GroupElement& g, const DihedralGroup& group) {
  if (g.reflection) return g;  // reflections are involutions
  return {false, mod(-g.exponent, group.p)};
}

GroupElement apply_automorphism(const Automorphism& a, const GroupElement& g,
                                const DihedralGroup& group) {
  assert(a.scale % group.p != 0);
  long long e = static_cast<long long>(a.scale) * g.exponent;
  if (g.reflection) e += a.shift;
  return {g.reflection, mod(e, group.p)};
}

Automorphism compose(const Automorphism& a, const Automorphism& b,
                     const DihedralGroup& group) {
  // (a o b)(r^j f) = a(r^(b.scale*j + b.shift) f)
  //                = r^(a.scale*b.scale*j + a.scale*b.shift + a.shift) f
  return {mod(static_cast<long long>(a.scale) * b.scale, group.p),
          mod(static_cast<long long>(a.scale) * b.shift + a.shift, group.p)};
}

std::vector<Automorphism> all_automorphisms(const DihedralGroup& group) {
  std::vector<Automorphism> out;
  out.reserve(static_cast<size_t>(group.p) * (group.p - 1));
  for (int s = 1; s < group.p; ++s)
    for (int t = 0; t < group.p; ++t) out.push_back({s, t});
  return out;
}

std::vector<GroupElement> all_elements(const DihedralGroup& group) {
  std::vector<GroupElement> out;
  out.reserve(2 * static_cast<size_t>(group.p));
  for (int i = 0; i < group.p; ++i) out.push_back({false, i});
  for (int j = 0; j < group.p; ++j) out.push_back({true, j});
  return out;
}

std::set<GroupElement> generated_subgroup(const std::set<GroupElement>& s,
                                          const DihedralGroup& group) {
  std::set<GroupElement> closure{GroupElement::identity()};
  closure.insert(s.begin(), s.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElement> members(closure.begin(), closure.end());
    for (const auto& a : members)
      for (const auto& b : members)
        grew |= closure.insert(multiply(a, b, group)).second;
  }
  return closure;
}

bool is_connected(const std::set<GroupElement>& s, const DihedralGroup& group) {
  int rotations = 0, reflections = 0;
  for (const auto& g : s) {
    if (g.is_identity()) throw IdentityInSet();
    (g.reflection ? reflections : rotations)++;
  }
  bool connected = reflections >= 1 && (rotations >= 1 || reflections >= 2);
  assert(connected ==
         (generated_subgroup(s, group).size() ==
          static_cast<size_t>(group.order())));
  return connected;
}

int multiplicative_order(int s, int p) {
  assert(s >= 1 && s < p);
  int k = 1;
  long long acc = s;
  while (acc % p != 1) {
    acc = acc % p * s;
    ++k;
  }
  return k;
}

int primitive_root(int p) {
  for (int z = 2; z < p; ++z)
    if (multiplicative_order(z, p) == p - 1) return z;
  return 1;  // p == 3 handled by the loop; unreachable for odd primes
}

int discrete_log(int s, int z, int p) {
  long long acc = 1;
  for (int e = 0; e < p - 1; ++e) {
    if (acc == s) return e;
    acc = acc * z % p;
  }
  assert(false && "z is not a primitive root");
  return -1;
}

}  // namespace dihenum
