#ifndef ORBITLIFT_BALACARTER_HPP
#define ORBITLIFT_BALACARTER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitlift/rootdata.hpp"

namespace orbitlift {

/// Root subsystem spanned by a subset of the extended simple roots.  Node
/// values 0..n-1 are the simple roots; the value n denotes the affine node,
/// i.e. the lowest root -theta.
class Subsystem {
 public:
  Subsystem(const RootSystem& rs, std::vector<int> nodes);

  const RootSystem* rs;
  std::vector<int> nodes;  // ascending; rs->n means the affine node
  int k;

  std::vector<IVec> vroot;  // node vectors in simple-root coordinates
  std::vector<IVec> vfund;  // the same in fundamental-weight coordinates
  std::vector<std::vector<long>> pairing;  // <J_r, J_c^vee>

  struct JRoot {
    IVec root;  // simple-root coordinates
    IVec jc;    // coordinates over the subsystem nodes
  };
  std::vector<JRoot> phi;  // all ambient roots in the integer span of J

  std::vector<std::vector<int>> comps;  // connected components, node indices

  bool has_affine() const;

  /// Rational coordinates of a vector (fundamental-weight coords) over the
  /// subsystem nodes, or nullopt if outside the span.
  std::optional<QVec> coords_q(const QVec& fund) const;
  bool in_qspan(const IVec& fund) const;
  bool in_zspan(const IVec& fund) const;

  struct CompType {
    char family;
    int rank;
    bool tilde;  // all component roots short in a two-length ambient system
  };
  CompType comp_type(const std::vector<int>& comp) const;

  /// Name of one component under a {0,2} labeling of the whole subsystem,
  /// e.g. "A2", "~A1", "C3(a1)", "E8(b6)".
  std::string comp_name(const std::vector<int>& comp, const IVec& labels) const;
  long comp_orbit_dim(const std::vector<int>& comp, const IVec& labels) const;

  /// Canonical display name of the pair: component names sorted and collapsed
  /// by multiplicity ("2A2"); the empty subsystem is "0".
  std::string pair_name(const IVec& labels) const;

 private:
  int z_index(const std::vector<int>& comp, const IVec& labels, char family) const;
  std::map<int, std::vector<long>> distinguished_dims_by_z(
      const std::vector<int>& comp) const;
  bool comp_supported(const JRoot& r, const std::vector<int>& comp) const;

  std::optional<LinSolver> solver_;
  std::optional<SpanTester> span_;
};

const Subsystem& get_subsystem(const RootSystem& rs, const std::vector<int>& nodes);

/// One distinguished {0,2}-labeling of a subsystem, with the solved Dynkin
/// element, the dominant ambient diagram it maps to, and a dominating word.
struct Labeling {
  IVec labels;             // one entry per subsystem node
  QVec h1;                 // simple-coroot coordinates
  IVec dom;                // dominant diagram labels of the ambient orbit
  std::vector<int> word;   // word taking h1 to the dominant element
};

/// All distinguished labelings: every {0,2} assignment whose 0- and
/// 2-eigenspace root counts satisfy rank + #(t=0) = #(t=2) on each component.
std::vector<Labeling> enumerate_distinguished(const Subsystem& ss);

struct PairEntry {
  std::vector<int> nodes;
  IVec labels;
  QVec h1;
  std::vector<int> word;
};

/// Orbit diagram -> all pairs mapping onto it.  include_affine=false walks
/// subsets of the plain diagram (Bala-Carter orbit classification);
/// include_affine=true walks proper subsets of the extended diagram
/// (pseudo-Levi pairs, one per component-group class with duplicates).
using PairCatalog = std::map<IVec, std::vector<PairEntry>>;
const PairCatalog& pair_catalog(const RootSystem& rs, bool include_affine);

struct TorsionData {
  long d;         // order of the torsion of the adjoint lattice quotient
  QVec tau_root;  // generator, simple-root coordinates (denominators d)
};
TorsionData torsion_data(const RootSystem& rs, const std::vector<int>& nodes);

/// Greedy domination acting directly on diagram labels.
std::pair<IVec, std::vector<int>> dominate_labels(const RootSystem& rs, QVec t);

long orbit_dim(const RootSystem& rs, const IVec& dom);
std::vector<int> levi_nodes(const IVec& dom);

/// Ordering on subsystem names: components compared by rank (descending) and
/// family, mirroring the order used to assemble the names themselves.
bool name_less(const std::string& a, const std::string& b);

/// One component-group conjugacy-class parameter of an orbit: pseudo-Levi
/// pairs grouped by (name, trivial), with a representative pair kept.
struct ClassParameter {
  std::string name;
  bool trivial;  // d == 1, i.e. the class of the identity
  long d;
  QVec tau_root;
  std::vector<int> nodes;
  IVec labels;
  QVec h1;
  std::vector<int> word;
  int multiplicity;  // how many catalog pairs share this key
};
std::vector<ClassParameter> class_parameters(const RootSystem& rs, const IVec& dom);

/// Orbit names computed from the Bala-Carter pairs (primes added to the two
/// duplicate names in E7/E8); used to validate the shipped name table.
std::map<IVec, std::string> computed_orbit_names(const RootSystem& rs);

/// The shipped static name table for one root system (diagram -> name).
const std::map<IVec, std::string>& orbit_name_table(const RootSystem& rs);

struct OrbitRecord {
  IVec dom;          // dominant diagram labels
  std::string name;
  long dim;
  int nclasses;      // number of class parameters
};
/// All nilpotent orbits, sorted by (dimension, diagram).
const std::vector<OrbitRecord>& orbit_catalog(const RootSystem& rs);

}  // namespace orbitlift

#endif
