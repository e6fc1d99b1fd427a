#pragma once

// Shared fixtures for the unit and acceptance suites: subset enumeration, an
// independent re-derivation of the partition-orbit properties, and the frozen
// descent scope for the outside-lattice nodes of E6.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbitlift/classical.hpp"
#include "orbitlift/rootdata.hpp"

namespace testsupport {

using orbitlift::IVec;
using orbitlift::PartitionOrbit;
using orbitlift::QVec;

inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& base) {
  std::vector<std::vector<int>> out;
  const int t = static_cast<int>(base.size());
  for (int mask = 0; mask < (1 << t); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < t; ++i)
      if (mask & (1 << i)) s.push_back(base[i]);
    out.push_back(s);
  }
  return out;
}

inline std::string parts_str(const std::vector<int>& parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i)
    s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

// Every combinatorial property of one partition orbit, re-derived from
// scratch: the component rank against a direct distinct-size count, the flag
// dimensions, the window exclusions, generator restrictions and their
// multiplicativity, triviality and identification of the chi_s, injectivity
// of the subset lifts, pairwise orthogonality, and the spin dimension count.
// Returns the number of elementary comparisons; failures are appended as
// text.
inline long check_partition(const PartitionOrbit& po,
                            std::vector<std::string>& fails) {
  long nch = 0;
  auto chk = [&](bool ok, const std::string& what) {
    ++nch;
    if (!ok) fails.push_back(parts_str(po.parts) + " eps=" +
                             std::to_string(po.eps) + ": " + what);
  };

  // Component rank against the distinct part sizes.
  {
    std::set<int> odds, evens;
    for (int p : po.parts) (p % 2 ? odds : evens).insert(p);
    long want = po.family == 'C'
                    ? static_cast<long>(evens.size())
                    : std::max<long>(static_cast<long>(odds.size()) - 1, 0);
    chk(static_cast<long>(po.btilde.size()) == want,
        "component rank vs distinct sizes");
  }

  const std::vector<int> allso = po.eo();
  for (int s : allso)
    chk(po.sigma(s) - po.sigma(s + 1) == po.d_count(s) && po.d_count(s) >= 1,
        "sigma step at s=" + std::to_string(s));
  for (size_t i = 0; i + 1 < allso.size(); ++i)
    chk(po.sigma(allso[i]) < po.sigma(allso[i + 1]),
        "sigma not decreasing between sizes");

  std::set<int> xi(po.xi().begin(), po.xi().end());
  for (int j : po.btilde)
    chk(xi.count(po.lam[j - 1]) > 0,
        "needed size outside the valid window, j=" + std::to_string(j));

  // The two chi derivations agree exactly on the valid window.
  for (int s : allso) {
    if (xi.count(s)) {
      bool ok = true;
      try {
        po.chi_fund(s);
      } catch (const std::exception&) {
        ok = false;
      }
      chk(ok, "chi derivations disagree at s=" + std::to_string(s));
    } else {
      chk(po.e_to_fund(po.chi_window_e(s)) != po.chi_formula_fund(s),
          "window exclusion not real at s=" + std::to_string(s));
    }
  }

  for (int j : po.btilde)
    for (int k : po.btilde)
      chk(po.evaluate_generator_tilde(po.lam[j - 1], k) == (j == k ? -1 : 1),
          "restriction at j=" + std::to_string(j) + " k=" + std::to_string(k));

  const auto subs = subsets_of(po.btilde);
  for (const auto& s_set : subs)
    for (int k : po.btilde) {
      int v = 1;
      for (int j : s_set) v *= po.evaluate_generator_tilde(po.lam[j - 1], k);
      bool in = std::find(s_set.begin(), s_set.end(), k) != s_set.end();
      chk(v == (in ? -1 : 1), "multiplicativity at k=" + std::to_string(k));
    }

  const bool have_b = !po.b_set.empty();
  const int lkm = have_b ? po.lam[po.kmax - 1] : 0;
  for (int s : allso)
    if (xi.count(s) && (s % 2 == po.eps || (have_b && s <= lkm)))
      for (int k : po.btilde)
        chk(po.evaluate_generator_tilde(s, k) == 1,
            "triviality at s=" + std::to_string(s));

  for (int s : allso) {
    if (!xi.count(s) || s % 2 == po.eps) continue;
    int kk = 0;
    for (int t : po.b_set)
      if (po.lam[t - 1] >= s) kk = std::max(kk, t);
    if (kk == 0) continue;
    for (int k : po.btilde)
      chk(po.evaluate_generator_tilde(s, k) ==
              po.evaluate_generator_tilde(po.lam[kk - 1], k),
          "identification at s=" + std::to_string(s));
  }

  {
    std::set<IVec> seen;
    for (const auto& s_set : subs) seen.insert(po.lift_character(s_set));
    chk(seen.size() == subs.size(), "subset lifts not distinct");
  }

  if (po.n >= 2 && !(po.family == 'D' && po.n < 3)) {
    const auto& rs = orbitlift::get_root_system(po.family, po.n);
    std::vector<QVec> vecs;
    for (int s : po.xi())
      vecs.push_back(rs.root_coords(orbitlift::to_q(po.chi_fund(s))));
    for (size_t a = 0; a < vecs.size(); ++a)
      for (size_t b = a + 1; b < vecs.size(); ++b)
        chk(rs.form(vecs[a], vecs[b]) == 0, "chi pair not orthogonal");
  }

  {
    std::string reason;
    const auto reps = po.spin_representations(&reason);
    if (!reps.empty()) {
      long tot = 1L << po.btilde.size();
      for (const auto& r : reps) tot += r.dim * r.dim;
      chk(tot == (1L << po.m), "spin dimension count");
    } else if (reason.empty()) {
      fails.push_back(parts_str(po.parts) + ": no spin reps and no reason");
    }
  }
  return nch;
}

// The full classical sweep used by the property suite: every valid partition
// of the given family/parity in the stated total-size range.
struct ClassicalCase {
  char family;
  int eps;
  int n_min;
  int n_lo;  // total size range, inclusive
  int n_hi;
  int step;
};

inline const std::vector<ClassicalCase>& classical_sweep() {
  static const std::vector<ClassicalCase> cases = {
      {'B', 0, 2, 5, 15, 2},
      {'C', 1, 2, 4, 16, 2},
      {'D', 0, 3, 6, 16, 2},
  };
  return cases;
}

// E6 orbits whose outside-lattice nonzero nodes all pass the rational
// descent test (exactly the orbits where the center of the cover survives
// into the component group of the semisimple centralizer part), and the
// orbits where every such node fails, with the failing nodes (0-based).
struct E6Scope {
  std::string name;
  IVec dom;
  std::vector<int> outside_nodes;  // outside-lattice nonzero nodes, 0-based
};

inline const std::vector<E6Scope>& e6_descending_orbits() {
  static const std::vector<E6Scope> v = {
      {"2A2", {2, 0, 0, 0, 0, 2}, {0, 5}},
      {"2A2+A1", {1, 0, 0, 1, 0, 1}, {0, 5}},
      {"A5", {2, 1, 1, 0, 1, 2}, {0, 2, 4, 5}},
      {"E6", {2, 2, 2, 2, 2, 2}, {0, 2, 4, 5}},
      {"E6(a1)", {2, 2, 2, 0, 2, 2}, {0, 2, 4, 5}},
      {"E6(a3)", {2, 0, 0, 2, 0, 2}, {0, 5}},
  };
  return v;
}

inline const std::vector<E6Scope>& e6_blocked_orbits() {
  static const std::vector<E6Scope> v = {
      {"2A1", {1, 0, 0, 0, 0, 1}, {0, 5}},
      {"A2+A1", {1, 1, 0, 0, 0, 1}, {0, 5}},
      {"A2+2A1", {0, 0, 1, 0, 1, 0}, {2, 4}},
      {"A3", {1, 2, 0, 0, 0, 1}, {0, 5}},
      {"A3+A1", {0, 1, 1, 0, 1, 0}, {2, 4}},
      {"A4", {2, 2, 0, 0, 0, 2}, {0, 5}},
      {"A4+A1", {1, 1, 1, 0, 1, 1}, {0, 2, 4, 5}},
      {"D5", {2, 2, 0, 2, 0, 2}, {0, 5}},
      {"D5(a1)", {1, 2, 1, 0, 1, 1}, {0, 2, 4, 5}},
  };
  return v;
}

}  // namespace testsupport
