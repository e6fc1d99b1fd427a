#pragma once

/// Partition-indexed constructions for the classical families: the index set
/// B(lambda) with its derived component-group basis, the chi_s character
/// lifts, spin-group extras, and the type A character weights.

#include <string>
#include <vector>

#include "orbitlift/linalg.hpp"

namespace orbitlift {

/// All partitions of N, weakly decreasing, largest part first.
std::vector<std::vector<int>> partitions_of(int n);

/// Parity validity: eps=0 needs every even part with even multiplicity,
/// eps=1 every odd part with even multiplicity.
bool valid_partition(int eps, const std::vector<int>& parts);

/// One character lift chi_s in fundamental coordinates.
struct ChiWeight {
  int s = 0;        // element of E cup O
  long sigma_s = 0; // flag dimension sigma(s)
  long d_s = 0;     // block size sigma(s) - sigma(s+1)
  IVec weight;      // fundamental coordinates
};

/// One extra representation of the spin cover.
struct SpinRep {
  IVec weight;   // highest weight, fundamental coordinates
  IVec minimal;  // minimal-length variant of the same restriction
  long dim = 0;
};

/// A nilpotent orbit of a classical group, encoded by its partition.
/// eps=0 is the orthogonal case (type B for odd N, D for even), eps=1 the
/// symplectic case (type C, with the conventional appended zero part).
class PartitionOrbit {
 public:
  PartitionOrbit(int eps, std::vector<int> parts);

  int eps = 0;
  std::vector<int> parts;  // weakly decreasing, positive
  int N = 0;               // sum of the parts
  int n = 0;               // rank, N/2 rounded down
  char family = 0;         // 'B', 'C', or 'D'
  std::vector<int> lam;    // parts, plus the appended zero in type C
  int k = 0;               // length of lam

  // Component-group bookkeeping (1-based part indices).
  std::vector<int> b_set;   // {j : lam_j > lam_{j+1}, lam_j parity != eps}
  int kmax = 0;             // largest element of b_set, 0 if empty
  std::vector<int> btilde;  // b_set minus kmax; |A(e)| = 2^|btilde|
  int m = 0;                // |btilde| + 1

  long sigma(int s) const;    // sum over lam_j >= s of (lam_j - s)/2 + 1
  long d_count(int s) const;  // number of lam_j >= s with lam_j == s mod 2

  /// E cup O: the even part sizes down to 2 and the odd sizes down to 3,
  /// merged in decreasing order.
  std::vector<int> eo() const;
  /// The subset of eo() where the weight formula is valid (sigma(s) != n in
  /// type B, sigma(s) outside {n-1, n} in type D).
  std::vector<int> xi() const;

  IVec chi_window_e(int s) const;      // 1 on e-positions sigma(s+1)+1..sigma(s)
  IVec e_to_fund(const IVec& mu) const;
  IVec chi_formula_fund(int s) const;  // pi_{sigma(s)} - pi_{sigma(s+1)}
  /// chi_s in fundamental coordinates; both derivations above must agree,
  /// which holds exactly on xi().
  IVec chi_fund(int s) const;
  std::vector<ChiWeight> chi_weights() const;

  /// chi_S = sum over j in S of chi_{lam_j}; S must lie inside btilde.
  IVec lift_character(const std::vector<int>& s_subset) const;

  /// Value of chi_s on the diagonal involution b_k (k a 1-based part index):
  /// -1 iff lam_k >= s and lam_k == s mod 2. Derived by counting basis
  /// vectors and checked against that closed form.
  int evaluate_generator(int s, int k) const;
  /// Value on btilde_k = b_k b_{k'} with k' the next larger element of b_set.
  int evaluate_generator_tilde(int s, int k) const;

  /// Weighted Dynkin diagram in the family's standard node order.
  IVec dynkin() const;
  bool very_even() const;   // type D with all parts even
  IVec dynkin_partner() const;  // the other very even diagram

  /// Extra representations of the spin cover, empty with a reason when the
  /// cover adds nothing (type C, or a repeated odd part).
  std::vector<SpinRep> spin_representations(std::string* reason = nullptr) const;
};

/// Weighted Dynkin diagram of a type A partition (l - 1 labels).
IVec dynkin_a(int l, const std::vector<int>& parts);

long partition_gcd(const std::vector<int>& parts);

/// Fundamental coordinates of the canonical lift of the j-th character of
/// A(e) = Z/d for a partition of l. Equals pi_{jq} (q = l/d) whenever node
/// jq of the weighted diagram is nonzero.
IVec type_a_weight(int l, const std::vector<int>& parts, long j);

/// The d lifts, j = 0..d-1 (j = 0 is the zero weight).
std::vector<IVec> type_a_lifts(int l, const std::vector<int>& parts);

}  // namespace orbitlift
