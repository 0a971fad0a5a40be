#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "floerlink/errors.hpp"

namespace floerlink {

// Lattice point in Z^k, true (not doubled) coordinates.
using LatticePoint = std::vector<int>;

/// Nonempty subset of the component index set {0,...,n-1}, as a bitmask.
struct SublinkId {
  unsigned mask = 0;

  int arity() const;
  bool contains(int i) const { return (mask >> i) & 1u; }
  static SublinkId full(int n) { return {(1u << n) - 1u}; }
  auto operator<=>(const SublinkId&) const = default;
};

/// Finitely supported symmetric lattice function (the h' of one sublink).
struct HPrimeTable {
  int arity = 1;
  std::map<LatticePoint, long long> support;  // no stored zeros

  long long at(const LatticePoint& s) const;
  bool is_symmetric() const;  // value at -s equals value at s
  int support_radius() const; // max |coordinate| over the support, 0 if empty
  long long sum() const;

  bool operator==(const HPrimeTable&) const = default;
};

/// Full model of the H-function of an algebraically split link: one finitely
/// supported h' table per nonempty sublink. H, h and h' are reconstructed
/// exactly at any lattice point, with the unknot baseline H_O supplying the
/// behaviour at infinity.
struct HModel {
  enum class Provenance { FromAlexander, Manual };

  int n = 1;
  std::map<unsigned, HPrimeTable> tables;  // keyed by sublink bitmask
  Provenance provenance = Provenance::Manual;

  const HPrimeTable& table(SublinkId id) const;
  int support_radius() const;  // max over all tables
};

struct Violation {
  std::string axiom;    // short id of the violated condition
  LatticePoint witness;
  std::string detail;
};

/// H-function of the unknot: max(0, -s).
long long unknot_H(long long s);

/// H(s) = sum over nonempty sublinks I of h'_I(s_I) + sum_i H_O(s_i).
long long eval_H(const HModel& m, const LatticePoint& s);

/// h(s) = H(s) - sum_i H_O(s_i).
long long eval_h(const HModel& m, const LatticePoint& s);

/// h'(s): the full-sublink table entry (0 off support).
long long eval_h_prime(const HModel& m, const LatticePoint& s);

/// Model of the sublink L_I (restriction of the tables to subsets of I).
HModel restrict_sublink(const HModel& m, SublinkId I);

/// Check the H-function axioms pointwise on the box [-r, r]^n.
/// Returns the (possibly empty) list of violations.
std::vector<Violation> validate(const HModel& m, int box_radius);

/// Sum of eval_h over all of Z^n; finite exactly when every proper-sublink
/// table is empty (e.g. Brunnian models), and this is checked.
long long total_h(const HModel& m);

}  // namespace floerlink
