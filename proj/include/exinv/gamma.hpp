#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace exinv::gamma {

/// Mapping-class arithmetic for the two dimensions in play: Z_28 in
/// dimension 7 and Z_8128 (+) Z_2 in dimension 15. All arithmetic is exact.
enum class Dim { d7, d15 };

inline long cyclic_modulus(Dim d) { return d == Dim::d7 ? 28 : 8128; }

struct GammaElement {
  Dim dim = Dim::d7;
  long cyclic = 0;  // canonical residue mod 28 or mod 8128
  int bit = 0;      // Z_2 component; always 0 in dimension 7

  friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

GammaElement make7(long n);
GammaElement make15(long n, int bit);

GammaElement add(const GammaElement& a, const GammaElement& b);
GammaElement neg(const GammaElement& a);
/// k-fold sum (the group is written additively).
GammaElement scale(const GammaElement& a, long k);

/// Class of the generating exotic diffeomorphism: 1, resp. (1, 0).
GammaElement generator(Dim d);

/// Undetermined-behaviour switch for conjugation-by-the-antipode on the Z_2
/// complement in dimension 15: either it fixes (0,1)/(4064,1) or swaps them;
/// no explicit representative decides it, so both candidates are carried.
enum class TauMode { zero, swap_unknown };

struct ConjugationResult {
  GammaElement value;
  std::optional<GammaElement> alternate;  // set iff the action is undetermined

  bool determined() const { return !alternate.has_value(); }
};

/// Conjugation by the antipodal map on classes: negation on the cyclic part;
/// on bit-1 classes in dimension 15 the result is ambiguous unless the mode
/// pins it.
ConjugationResult antipodal_conjugation(const GammaElement& g, TauMode mode = TauMode::swap_unknown);

/// All h with target = 2h + tau, tau ranging over the values allowed for h's
/// Z_2 component under the given mode. Exhaustive enumeration over the whole
/// group; empty for the generator in both dimensions.
std::vector<GammaElement> solve_conjugacy_obstruction(Dim d, const GammaElement& target,
                                                      TauMode mode = TauMode::swap_unknown);

struct QuotientReport {
  long subgroup_order;         // subgroup generated by all elements of order 2
  long quotient_order;
  long generator_image_order;  // order of the generator's image in the quotient
};

/// Quotient by the 2-torsion-generated subgroup: Z_14 in dimension 7 and
/// Z_4064 in dimension 15, computed by enumeration rather than assumed.
QuotientReport two_torsion_quotient(Dim d);

/// Parity class of rho_k: even classes are conjugate to the antipodal map,
/// odd ones to rho_1.
int rho_parity(long k);

struct Census {
  int total_components;
  int orientation_preserving;
  int orientation_reversing;
  std::vector<long> fixed_classes;                 // per half
  std::vector<std::pair<long, long>> orbit_pairs;  // per half
};

/// Component bookkeeping for the dimension-7 case: 28 + 28 components, the
/// conjugation action fixing {0, 14} in each half and pairing n with 28 - n.
Census component_census();

}  // namespace exinv::gamma
