#include "orbitlift/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace orbitlift {

// ---------- cyclotomic values ----------

namespace {

// Exact polynomial division, used only where the remainder is known to vanish.
std::vector<long> poly_div(std::vector<long> a, const std::vector<long>& b) {
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (size_t i = a.size() - b.size() + 1; i-- > 0;) {
    long c = a[i + b.size() - 1] / b.back();
    require(c * b.back() == a[i + b.size() - 1], "poly_div: inexact quotient");
    q[i] = c;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (long x : a) require(x == 0, "poly_div: nonzero remainder");
  return q;
}

}  // namespace

std::vector<long> cyclotomic_poly(int d) {
  static std::map<int, std::vector<long>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  require(d >= 1, "cyclotomic_poly: d must be positive");
  // x^d - 1 divided by the cyclotomic polynomials of the proper divisors.
  std::vector<long> poly(d + 1, 0);
  poly[0] = -1;
  poly[d] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) poly = poly_div(std::move(poly), cyclotomic_poly(e));
  return cache.emplace(d, std::move(poly)).first->second;
}

std::optional<long> reduce_cyclotomic(long d, const std::vector<long>& exps) {
  require(d >= 1, "reduce_cyclotomic: d must be positive");
  if (d == 1) return static_cast<long>(exps.size());
  std::vector<long> c(d, 0);
  for (long a : exps) ++c[((a % d) + d) % d];
  const std::vector<long> ph = cyclotomic_poly(static_cast<int>(d));
  const long deg = static_cast<long>(ph.size()) - 1;
  for (long i = static_cast<long>(c.size()) - 1; i >= deg; --i) {
    long f = c[i];
    if (f == 0) continue;
    for (long j = 0; j < static_cast<long>(ph.size()); ++j)
      c[i - deg + j] -= f * ph[j];
  }
  for (long i = 1; i < deg; ++i)
    if (c[i] != 0) return std::nullopt;
  return c[0];
}

CyclotomicTrace::CyclotomicTrace(long d, const std::vector<long>& exps)
    : d_(d), total_(static_cast<long>(exps.size())), counts_(d, 0) {
  require(d >= 1, "CyclotomicTrace: d must be positive");
  for (long a : exps) ++counts_[((a % d) + d) % d];
  integer_ = reduce_cyclotomic(d, exps);
}

std::string CyclotomicTrace::str() const {
  if (integer_) return std::to_string(*integer_);
  std::ostringstream out;
  bool first = true;
  for (long a = 0; a < d_; ++a) {
    if (counts_[a] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (a == 0) {
      out << counts_[a];
      continue;
    }
    if (counts_[a] != 1) out << counts_[a] << "*";
    out << "z" << d_ << "^" << a;
  }
  if (first) out << "0";
  return out.str();
}

bool CyclotomicTrace::operator==(const CyclotomicTrace& o) const {
  return d_ == o.d_ && counts_ == o.counts_;
}

// ---------- weight orbits, descent, characters ----------

std::vector<IVec> weight_orbit(const RootSystem& rs, const IVec& dom,
                               const IVec& lam_fund) {
  const int n = rs.n;
  require(static_cast<int>(dom.size()) == n &&
              static_cast<int>(lam_fund.size()) == n,
          "weight_orbit: rank mismatch");
  const std::vector<int> lev = levi_nodes(dom);
  for (int i : lev)
    if (lam_fund[i] < 0)
      throw NotLeviDominant("weight (" + std::to_string(lam_fund[i]) +
                            " at node " + std::to_string(i + 1) +
                            ") is not dominant for the orbit's Levi");

  // Minuscule certificate over Phi_L.
  std::vector<bool> in_lev(n, false);
  for (int i : lev) in_lev[i] = true;
  for (const auto& b : rs.pos) {
    bool supported = true;
    for (int i = 0; i < n && supported; ++i)
      if (b[i] != 0 && !in_lev[i]) supported = false;
    if (!supported) continue;
    QVec cw = rs.coroot(b);
    Q val = 0;
    for (int j = 0; j < n; ++j)
      if (lam_fund[j] != 0 && cw[j] != 0) val += Q(lam_fund[j]) * cw[j];
    if (val < -1 || val > 1)
      throw NotMinuscule("weight pairs to " + val.get_str() +
                         " on a Levi coroot; the representation has "
                         "multiplicities");
  }

  std::set<IVec> seen{lam_fund};
  std::vector<IVec> frontier{lam_fund};
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const IVec& mu : frontier) {
      for (int i : lev) {
        IVec m2 = mu;
        rs.reflect_fund_inplace(i, m2);
        if (seen.insert(m2).second) next.push_back(m2);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool descends(const RootSystem& rs, const std::vector<int>& nodes,
              const std::vector<int>& word, const std::vector<IVec>& orbit_fund) {
  const Subsystem& ss = get_subsystem(rs, nodes);
  const std::vector<int> winv = RootSystem::inverse_word(word);
  for (const IVec& mu : orbit_fund) {
    IVec v = rs.apply_word_fund(winv, mu);
    if (ss.k == 0) {
      for (long x : v)
        if (x != 0) return false;
      continue;
    }
    if (!ss.in_qspan(v)) return false;
  }
  return true;
}

std::vector<long> character_exponents(const RootSystem& rs,
                                      const std::vector<int>& nodes,
                                      const std::vector<int>& word,
                                      const std::vector<IVec>& orbit_fund,
                                      long d, const IVec& dtau_fund) {
  const int n = rs.n;
  require(d >= 1 && static_cast<int>(dtau_fund.size()) == n,
          "character_exponents: bad torsion data");
  const Subsystem& ss = get_subsystem(rs, nodes);
  const std::vector<int> winv = RootSystem::inverse_word(word);
  std::vector<long> exps;
  exps.reserve(orbit_fund.size());
  IVec u(n);
  for (const IVec& mu : orbit_fund) {
    IVec v = rs.apply_word_fund(winv, mu);
    long found = -1;
    for (long a = 0; a < d; ++a) {
      bool integral = true;
      for (int i = 0; i < n && integral; ++i) {
        long w = d * v[i] - a * dtau_fund[i];
        if (w % d != 0) integral = false;
        else u[i] = w / d;
      }
      if (!integral) continue;
      bool member;
      if (ss.k == 0) {
        member = std::all_of(u.begin(), u.end(), [](long x) { return x == 0; });
      } else {
        member = ss.in_zspan(u);
      }
      if (member) {
        if (found >= 0)
          throw AmbiguousResidue("two residues solve the congruence (d=" +
                                 std::to_string(d) + ")");
        found = a;
      }
    }
    if (found < 0)
      throw NoIntegralResidue("no residue mod " + std::to_string(d) +
                              " solves the congruence; the weight does not "
                              "descend on this pair");
    exps.push_back(found);
  }
  return exps;
}

IVec adjoint_dtau_fund(const RootSystem& rs, const TorsionData& td) {
  QVec scaled(rs.n);
  for (int i = 0; i < rs.n; ++i) scaled[i] = td.tau_root[i] * td.d;
  auto root = to_i(scaled);
  require(root.has_value(), "adjoint_dtau_fund: d*tau not integral");
  return rs.fund_coords_int(*root);
}

ScTorsion weight_lattice_torsion(const RootSystem& rs,
                                 const std::vector<int>& nodes) {
  const int n = rs.n;
  const int k = static_cast<int>(nodes.size());
  if (k == 0) return {1, IVec(n, 0)};
  const Subsystem& ss = get_subsystem(rs, nodes);
  ZMat m(n, ZVec(k, 0));
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) m[r][c] = ss.vfund[c][r];
  Snf snf = smith_normal_form(std::move(m));
  int big = -1;
  for (int i = 0; i < std::min(n, k); ++i) {
    if (snf.d[i][i] == 0) continue;
    Z a = abs(snf.d[i][i]);
    if (a > 1) {
      require(big < 0, "weight_lattice_torsion: torsion is not cyclic");
      big = i;
    }
  }
  if (big < 0) return {1, IVec(n, 0)};
  Z dv = abs(snf.d[big][big]);
  require(dv.fits_slong_p(), "weight_lattice_torsion: torsion order overflow");
  IVec tau(n);
  for (int r = 0; r < n; ++r) {
    require(snf.uinv[r][big].fits_slong_p(),
            "weight_lattice_torsion: generator overflow");
    tau[r] = snf.uinv[r][big].get_si();
  }
  return {dv.get_si(), tau};
}

// ---------- representation analysis ----------

LiftResult identify_representation(const RootSystem& rs, const IVec& dom,
                                   const IVec& lam_fund) {
  const PairCatalog& cat = pair_catalog(rs, true);
  auto it = cat.find(dom);
  require(it != cat.end(), "identify_representation: unknown orbit diagram");
  const std::vector<IVec> orbit = weight_orbit(rs, dom, lam_fund);

  std::map<std::pair<std::string, bool>, std::optional<CyclotomicTrace>> seen;
  for (const PairEntry& pe : it->second) {
    const Subsystem& ss = get_subsystem(rs, pe.nodes);
    const std::string name = ss.pair_name(pe.labels);
    const TorsionData td = torsion_data(rs, pe.nodes);
    const std::pair<std::string, bool> key{name, td.d == 1};
    std::optional<CyclotomicTrace> val;
    if (descends(rs, pe.nodes, pe.word, orbit)) {
      std::vector<long> exps = character_exponents(
          rs, pe.nodes, pe.word, orbit, td.d, adjoint_dtau_fund(rs, td));
      val.emplace(td.d, exps);
    }
    auto prev = seen.find(key);
    if (prev == seen.end()) {
      seen.emplace(key, std::move(val));
    } else {
      require(prev->second.has_value() == val.has_value() &&
                  (!val.has_value() || *prev->second == *val),
              "identify_representation: equal-named pairs disagree on " + name);
    }
  }

  LiftResult res;
  res.dom = dom;
  res.lambda = lam_fund;
  res.dim = static_cast<long>(orbit.size());
  res.lifts = true;
  for (const ClassParameter& cp : class_parameters(rs, dom)) {
    const auto& val = seen.at({cp.name, cp.trivial});
    if (!val) res.lifts = false;
    res.traces.push_back({cp.name, cp.trivial, cp.d, cp.multiplicity, val});
  }
  if (res.lifts) res.identified = identify_name(res.traces, res.dim);
  return res;
}

std::string identify_name(const std::vector<ClassTrace>& traces, long dim) {
  std::vector<long> ints;
  for (const ClassTrace& t : traces) {
    if (!t.value || !t.value->integer()) return "";
    ints.push_back(*t.value->integer());
  }
  if (dim == 1) {
    bool all_one = std::all_of(ints.begin(), ints.end(),
                               [](long v) { return v == 1; });
    return all_one ? "trivial" : "sign";
  }
  if (dim == 2 && traces.size() == 3) {
    // The two-dimensional irreducible of S3: 0 on the order-2 class, -1 on
    // the order-3 class.
    long on2 = 99, on3 = 99;
    for (size_t i = 0; i < traces.size(); ++i) {
      if (traces[i].d == 2) on2 = ints[i];
      if (traces[i].d == 3) on3 = ints[i];
    }
    if (on2 == 0 && on3 == -1) return "standard";
  }
  return "";
}

std::string component_group_name(int nclasses) {
  switch (nclasses) {
    case 1: return "1";
    case 2: return "S2";
    case 3: return "S3";
    case 5: return "S4";
    case 7: return "S5";
    default: return "";
  }
}

long component_group_order(int nclasses) {
  switch (nclasses) {
    case 1: return 1;
    case 2: return 2;
    case 3: return 6;
    case 5: return 24;
    case 7: return 120;
    default: return 0;
  }
}

// ---------- minimal lifts ----------

SearchResult minimal_lift_search(const RootSystem& rs, const IVec& dom,
                                 const IVec& target, const Q& bound) {
  const int n = rs.n;
  const std::vector<ClassParameter> cps = class_parameters(rs, dom);
  require(target.size() == cps.size(),
          "minimal_lift_search: target length must match the class count");
  const std::vector<int> lev = levi_nodes(dom);
  std::vector<bool> in_lev(n, false);
  for (int i : lev) in_lev[i] = true;

  // Gram matrix of the fundamental weights.
  QMat gram(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = rs.form(rs.fw[i], rs.fw[j]);

  // Coordinate box: c_i^2 * (alpha_i, alpha_i) <= 4 * bound by Cauchy-Schwarz.
  IVec box(n, 0);
  for (int i = 0; i < n; ++i) {
    long b = 0;
    while (Q((b + 1) * (b + 1)) * 2 * rs.sym[i] <= 4 * bound) ++b;
    box[i] = b;
  }

  // Coroots of the Levi's positive roots, for the minuscule pre-check.
  std::vector<QVec> lev_coroots;
  for (const auto& r : rs.pos) {
    bool supported = true;
    for (int i = 0; i < n && supported; ++i)
      if (r[i] != 0 && !in_lev[i]) supported = false;
    if (supported) lev_coroots.push_back(rs.coroot(r));
  }

  bool have = false;
  SearchResult best;
  IVec c(n);
  for (int i = 0; i < n; ++i) c[i] = in_lev[i] ? 0 : -box[i];
  for (;;) {
    Q norm2 = 0;
    for (int i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      norm2 += Q(c[i] * c[i]) * gram[i][i];
      for (int j = i + 1; j < n; ++j)
        if (c[j] != 0) norm2 += 2 * Q(c[i] * c[j]) * gram[i][j];
    }
    if (norm2 <= bound && (!have || norm2 < best.norm2 ||
                           (norm2 == best.norm2 && c > best.lambda))) {
      bool minuscule = true;
      for (const QVec& cw : lev_coroots) {
        Q val = 0;
        for (int j = 0; j < n; ++j)
          if (c[j] != 0 && cw[j] != 0) val += Q(c[j]) * cw[j];
        if (val < -1 || val > 1) {
          minuscule = false;
          break;
        }
      }
      // Only root-lattice weights are characters of the adjoint torus.
      bool integral = minuscule;
      if (integral) {
        QVec rc(n, 0);
        for (int i = 0; i < n; ++i)
          if (c[i] != 0)
            for (int j = 0; j < n; ++j) rc[j] += Q(c[i]) * rs.fw[i][j];
        for (int j = 0; j < n && integral; ++j)
          if (rc[j].get_den() != 1) integral = false;
      }
      if (integral) {
        LiftResult lr = identify_representation(rs, dom, c);
        bool match = lr.lifts;
        for (size_t t = 0; match && t < lr.traces.size(); ++t) {
          const auto& v = lr.traces[t].value;
          match = v && v->integer() && *v->integer() == target[t];
        }
        if (match) {
          best = {c, norm2, std::move(lr)};
          have = true;
        }
      }
    }
    // Advance the odometer.
    int i = n - 1;
    while (i >= 0 && c[i] == box[i]) {
      c[i] = in_lev[i] ? 0 : -box[i];
      --i;
    }
    if (i < 0) break;
    ++c[i];
  }
  if (!have)
    throw std::runtime_error(
        "minimal_lift_search: no matching weight with squared norm <= " +
        bound.get_str());
  return best;
}

// ---------- the simply-connected analysis ----------

long lattice_index(const RootSystem& rs) {
  static std::map<std::pair<char, int>, long> cache;
  auto key = std::make_pair(rs.family, rs.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ZMat m(rs.n, ZVec(rs.n));
  for (int i = 0; i < rs.n; ++i)
    for (int j = 0; j < rs.n; ++j) m[i][j] = rs.cartan[i][j];
  Z det = 1;
  for (const Z& dv : smith_normal_form(std::move(m)).divisors()) det *= abs(dv);
  require(det.fits_slong_p(), "lattice_index: overflow");
  return cache.emplace(key, det.get_si()).first->second;
}

bool fw_in_root_lattice(const RootSystem& rs, int node) {
  require(node >= 0 && node < rs.n, "fw_in_root_lattice: node out of range");
  for (const Q& x : rs.fw[node])
    if (x.get_den() != 1) return false;
  return true;
}

namespace {

// Membership tester for the root lattice in fundamental coordinates.
const SpanTester& root_lattice_span(const RootSystem& rs) {
  static std::map<std::pair<char, int>, SpanTester> cache;
  auto key = std::make_pair(rs.family, rs.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<IVec> cols;
  for (int j = 0; j < rs.n; ++j) {
    IVec col(rs.n);
    for (int r = 0; r < rs.n; ++r) col[r] = rs.cartan[j][r];
    cols.push_back(std::move(col));
  }
  return cache.emplace(key, SpanTester(cols, rs.n)).first->second;
}

// Class of an integral weight in the cyclic quotient by the root lattice,
// expressed as a multiple of the class of the generator node's weight.
long weight_class(const RootSystem& rs, const SpanTester& span, int gen,
                  long p, IVec x) {
  for (long k = 0; k < p; ++k) {
    if (span.contains_z(x)) return k;
    x[gen] -= 1;
  }
  require(false, "weight_class: no representative found");
  return -1;
}

}  // namespace

bool central_image_nontrivial(const RootSystem& rs, const IVec& dom) {
  const long p = lattice_index(rs);
  if (p == 1) return false;
  require(p == 2 || p == 3,
          "central_image_nontrivial: prime cyclic quotient expected");
  const SpanTester& span = root_lattice_span(rs);
  int gen = -1;
  for (int i = 0; i < rs.n && gen < 0; ++i)
    if (!fw_in_root_lattice(rs, i)) gen = i;
  require(gen >= 0, "central_image_nontrivial: no generator node");

  const PairCatalog& cat = pair_catalog(rs, false);
  auto it = cat.find(dom);
  require(it != cat.end(), "central_image_nontrivial: unknown orbit diagram");
  const std::vector<int>& nodes = it->second.front().nodes;
  const int k = static_cast<int>(nodes.size());
  if (k == 0) return false;

  // Saturation of the node span inside the weight lattice: the first rank
  // columns of U^{-1} from the Smith form of the node-column matrix.
  ZMat m(rs.n, ZVec(k, 0));
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < rs.n; ++r) m[r][c] = rs.cartan[nodes[c]][r];
  Snf snf = smith_normal_form(std::move(m));
  require(snf.rank == k, "central_image_nontrivial: dependent nodes");
  for (int i = 0; i < k; ++i) {
    IVec b(rs.n);
    for (int r = 0; r < rs.n; ++r) {
      require(snf.uinv[r][i].fits_slong_p(),
              "central_image_nontrivial: overflow");
      b[r] = snf.uinv[r][i].get_si();
    }
    if (weight_class(rs, span, gen, p, std::move(b)) % p != 0) return true;
  }
  return false;
}

SimplyConnectedReport simply_connected_report(const RootSystem& rs,
                                              const IVec& dom) {
  SimplyConnectedReport rep;
  rep.dom = dom;
  rep.multiple = lattice_index(rs);
  rep.central_nontrivial = central_image_nontrivial(rs, dom);

  const PairCatalog& cat = pair_catalog(rs, true);
  auto it = cat.find(dom);
  require(it != cat.end(), "simply_connected_report: unknown orbit diagram");
  const auto& pairs = it->second;

  for (int i = 0; i < rs.n; ++i) {
    if (dom[i] == 0) continue;
    SimplyConnectedReport::Node nd;
    nd.node = i;
    nd.in_root_lattice = fw_in_root_lattice(rs, i);
    IVec unit(rs.n, 0);
    unit[i] = 1;
    const std::vector<IVec> orb1 = weight_orbit(rs, dom, unit);
    nd.descends = true;
    for (const PairEntry& pe : pairs)
      if (!descends(rs, pe.nodes, pe.word, orb1)) {
        nd.descends = false;
        break;
      }
    if (!nd.in_root_lattice && (rep.multiple == 2 || rep.multiple == 3)) {
      IVec scaled(rs.n, 0);
      scaled[i] = rep.multiple;
      const std::vector<IVec> orbm = weight_orbit(rs, dom, scaled);
      bool trivial = true;
      for (const PairEntry& pe : pairs) {
        if (!descends(rs, pe.nodes, pe.word, orbm)) {
          trivial = false;
          break;
        }
        const TorsionData td = torsion_data(rs, pe.nodes);
        std::vector<long> exps = character_exponents(
            rs, pe.nodes, pe.word, orbm, td.d, adjoint_dtau_fund(rs, td));
        for (long a : exps)
          if (a % td.d != 0) {
            trivial = false;
            break;
          }
        if (!trivial) break;
      }
      nd.multiple_trivial = trivial;
    }
    rep.nodes.push_back(std::move(nd));
  }
  return rep;
}

}  // namespace orbitlift
