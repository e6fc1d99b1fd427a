#ifndef ORBITLIFT_LIFTING_HPP
#define ORBITLIFT_LIFTING_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitlift/balacarter.hpp"

namespace orbitlift {

// ---------- cyclotomic values ----------

/// Coefficients of the d-th cyclotomic polynomial, ascending degree.
std::vector<long> cyclotomic_poly(int d);

/// Sum of xi^a over exps, xi a primitive d-th root of unity, reduced through
/// the cyclotomic polynomial; nullopt when the value is irrational.
std::optional<long> reduce_cyclotomic(long d, const std::vector<long>& exps);

/// Exact element sum_i xi^{a_i} of Z[xi], stored as residue counts mod d.
class CyclotomicTrace {
 public:
  CyclotomicTrace(long d, const std::vector<long>& exps);

  long order() const { return d_; }
  long terms() const { return total_; }  // number of exponents = dim V
  const std::vector<long>& counts() const { return counts_; }
  /// The reduced integer value when the element is rational.
  std::optional<long> integer() const { return integer_; }
  std::string str() const;

  bool operator==(const CyclotomicTrace& o) const;
  bool operator!=(const CyclotomicTrace& o) const { return !(*this == o); }

 private:
  long d_;
  long total_;
  std::vector<long> counts_;
  std::optional<long> integer_;
};

// ---------- error kinds ----------

/// Weight not dominant for the orbit's Levi.
class NotLeviDominant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
/// Weight whose L-representation is not a single Weyl-orbit of weights.
class NotMinuscule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
/// No residue solves the congruence: the weight does not descend.
class NoIntegralResidue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// Several residues solve it, which contradicts the torsion data.
class AmbiguousResidue : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------- weight orbits, descent, characters ----------

/// W_L-orbit of an L-dominant weight (fundamental coordinates) on the orbit
/// with dominant diagram dom.  Breadth-first closure under the Levi simple
/// reflections, returned sorted.  Verifies the minuscule certificate
/// lambda(beta_vee) in {-1,0,1} for every beta in Phi_L.
std::vector<IVec> weight_orbit(const RootSystem& rs, const IVec& dom,
                               const IVec& lam_fund);

/// Whether every weight of the orbit, pulled back through the inverse of
/// word, lies in the rational span of the subsystem nodes.
bool descends(const RootSystem& rs, const std::vector<int>& nodes,
              const std::vector<int>& word, const std::vector<IVec>& orbit_fund);

/// For each orbit weight mu, the unique a in [0,d) with
/// w^{-1}(mu) - a*tau in the integer span of the node vectors, where
/// dtau_fund = d*tau in fundamental coordinates.  Throws NoIntegralResidue /
/// AmbiguousResidue.
std::vector<long> character_exponents(const RootSystem& rs,
                                      const std::vector<int>& nodes,
                                      const std::vector<int>& word,
                                      const std::vector<IVec>& orbit_fund,
                                      long d, const IVec& dtau_fund);

/// d*tau_J of the adjoint-lattice torsion data in fundamental coordinates.
IVec adjoint_dtau_fund(const RootSystem& rs, const TorsionData& td);

/// Torsion of (weight lattice)/(Z-span of nodes) via Smith normal form, with
/// an integral generator in fundamental coordinates.  Requires cyclic torsion.
struct ScTorsion {
  long d;
  IVec tau_fund;
};
ScTorsion weight_lattice_torsion(const RootSystem& rs,
                                 const std::vector<int>& nodes);

// ---------- representation analysis ----------

/// Trace of one deduplicated class parameter; value empty when the weight
/// fails descent on that class.
struct ClassTrace {
  std::string name;
  bool trivial;
  long d;
  int multiplicity;
  std::optional<CyclotomicTrace> value;
};

struct LiftResult {
  IVec dom;
  IVec lambda;                     // fundamental coordinates
  long dim;                        // size of the weight orbit
  bool lifts;                      // descends on every class parameter
  std::vector<ClassTrace> traces;  // class_parameters display order
  std::string identified;          // "trivial"/"sign"/"standard" when matched
};

/// Full character vector of V_lambda over the orbit's class parameters,
/// computed per catalog pair and checked for consistency across pairs that
/// share a (name, trivial) key.
LiftResult identify_representation(const RootSystem& rs, const IVec& dom,
                                   const IVec& lam_fund);

/// Human label from a complete integer trace vector: "trivial", "sign"
/// (1-dimensional, some trace -1), "standard" (the 2-dimensional class-3
/// pattern), else "".
std::string identify_name(const std::vector<ClassTrace>& traces, long dim);

/// Display name and order of A(e) from the class-parameter count of an
/// exceptional orbit (1, S2, S3, S4, S5); empty / 0 when the count is not one
/// of the symmetric-group patterns.
std::string component_group_name(int nclasses);
long component_group_order(int nclasses);

// ---------- minimal lifts ----------

struct SearchResult {
  IVec lambda;
  Q norm2;
  LiftResult lift;
};

/// Smallest L-dominant root-lattice weight, minuscule for L, whose traces
/// reduce to the integer vector target (class display order); norm measured
/// by the invariant form, ties broken toward the lexicographically largest
/// fundamental coordinates.  bound is the largest squared norm enumerated;
/// throws std::runtime_error when no weight within the bound matches.
SearchResult minimal_lift_search(const RootSystem& rs, const IVec& dom,
                                 const IVec& target, const Q& bound);

// ---------- the simply-connected analysis ----------

/// Index of the root lattice in the weight lattice.
long lattice_index(const RootSystem& rs);

/// Whether a fundamental weight lies in the root lattice.
bool fw_in_root_lattice(const RootSystem& rs, int node);

/// Whether the center of the simply-connected cover has nontrivial image in
/// the component group taken in the semisimple part of the centralizer.
/// Computed from the saturation of the orbit's Bala-Carter node span.
bool central_image_nontrivial(const RootSystem& rs, const IVec& dom);

struct SimplyConnectedReport {
  IVec dom;
  struct Node {
    int node;             // diagram index, 0-based
    bool in_root_lattice; // the fundamental weight of this node
    bool descends;        // pi_node passes the rational test on every pair
    // For nodes outside the root lattice only: the multiple m*pi_node
    // (m = lattice index) and whether its trace is 1 on every class.
    std::optional<bool> multiple_trivial;
  };
  std::vector<Node> nodes;  // one entry per nonzero diagram node
  long multiple;            // lattice index (3 for E6, 2 for E7, else 1)
  bool central_nontrivial;  // see central_image_nontrivial
};

/// Per-node descent and lattice data for one orbit of an exceptional group.
SimplyConnectedReport simply_connected_report(const RootSystem& rs,
                                              const IVec& dom);

}  // namespace orbitlift

#endif
