#include "orbitlift/balacarter.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <sstream>
#include <tuple>

#include "orbitlift/embedded.hpp"

namespace orbitlift {

Subsystem::Subsystem(const RootSystem& r, std::vector<int> nodes_)
    : rs(&r), nodes(std::move(nodes_)) {
  k = static_cast<int>(nodes.size());
  const int n = rs->n;
  for (int nd : nodes) {
    require(nd >= 0 && nd <= n, "Subsystem: node out of range");
    IVec v(n, 0);
    if (nd == n) {
      for (int i = 0; i < n; ++i) v[i] = -rs->theta[i];
    } else {
      v[nd] = 1;
    }
    vroot.push_back(v);
    vfund.push_back(rs->fund_coords_int(v));
  }
  if (k > 0) {
    std::vector<QVec> cols;
    for (const auto& v : vfund) cols.push_back(to_q(v));
    solver_.emplace(cols);
    span_.emplace(vfund, n);
  }

  // All roots lying in the integer span of the nodes, with their coordinates.
  if (k > 0) {
    for (const auto& b : rs->roots) {
      auto x = solver_->solve(to_q(rs->fund_coords_int(b)));
      if (!x) continue;
      auto xi = to_i(*x);
      if (!xi) continue;
      phi.push_back({b, *xi});
    }
  }

  // pairing[r][c] = <J_r, J_c^vee> = sum_{i,j} (J_r)_i A[i][j] (J_c^vee)_j.
  pairing.assign(k, std::vector<long>(k, 0));
  for (int c = 0; c < k; ++c) {
    QVec cw = rs->coroot(vroot[c]);
    for (int r = 0; r < k; ++r) {
      Q val = 0;
      for (int i = 0; i < rs->n; ++i) {
        if (vroot[r][i] == 0) continue;
        Q row = 0;
        for (int j = 0; j < rs->n; ++j)
          if (cw[j] != 0) row += Q(rs->cartan[i][j]) * cw[j];
        val += Q(vroot[r][i]) * row;
      }
      require(val.get_den() == 1, "Subsystem: non-integral pairing");
      pairing[r][c] = val.get_num().get_si();
    }
  }

  // Connected components of the pairing graph.
  std::vector<bool> seen(k, false);
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < k; ++v)
        if (!seen[v] && pairing[u][v] != 0) {
          seen[v] = true;
          comp.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
}

bool Subsystem::has_affine() const {
  return !nodes.empty() && nodes.back() == rs->n;
}

std::optional<QVec> Subsystem::coords_q(const QVec& fund) const {
  if (k == 0) {
    for (const auto& x : fund)
      if (x != 0) return std::nullopt;
    return QVec{};
  }
  return solver_->solve(fund);
}

bool Subsystem::in_qspan(const IVec& fund) const {
  if (k == 0) {
    for (long x : fund)
      if (x != 0) return false;
    return true;
  }
  return span_->contains_q(fund);
}

bool Subsystem::in_zspan(const IVec& fund) const {
  if (k == 0) {
    for (long x : fund)
      if (x != 0) return false;
    return true;
  }
  return span_->contains_z(fund);
}

bool Subsystem::comp_supported(const JRoot& r, const std::vector<int>& comp) const {
  bool any = false;
  for (int i : comp) any = any || r.jc[i] != 0;
  if (!any) return false;
  for (int i = 0; i < k; ++i) {
    if (r.jc[i] == 0) continue;
    if (std::find(comp.begin(), comp.end(), i) == comp.end()) return false;
  }
  return true;
}

Subsystem::CompType Subsystem::comp_type(const std::vector<int>& comp) const {
  const int kk = static_cast<int>(comp.size());
  QVec norms(kk);
  for (int i = 0; i < kk; ++i) norms[i] = rs->norm2(to_q(vroot[comp[i]]));
  Q long2 = 0;
  std::vector<Q> distinct;
  for (const auto& b : rs->pos) {
    Q nb = rs->norm2(to_q(b));
    long2 = std::max(long2, nb);
    if (std::find(distinct.begin(), distinct.end(), nb) == distinct.end())
      distinct.push_back(nb);
  }
  bool tilde = distinct.size() > 1;
  for (const auto& x : norms) tilde = tilde && x < long2;
  if (kk == 1) return {'A', 1, tilde};

  std::map<std::pair<int, int>, long> bonds;
  std::vector<int> deg(kk, 0);
  for (int r = 0; r < kk; ++r)
    for (int c = r + 1; c < kk; ++c) {
      long m = pairing[comp[r]][comp[c]] * pairing[comp[c]][comp[r]];
      if (m != 0) {
        bonds[{r, c}] = m;
        ++deg[r];
        ++deg[c];
      }
    }
  long mx = 0;
  for (const auto& [e, m] : bonds) mx = std::max(mx, m);
  if (mx == 3) return {'G', 2, tilde};
  if (mx == 2) {
    Q top = norms[0];
    for (const auto& x : norms) top = std::max(top, x);
    int nlong = 0;
    for (const auto& x : norms)
      if (x == top) ++nlong;
    int nshort = kk - nlong;
    if (kk == 2) return {'B', 2, tilde};
    if (kk == 4 && nlong == 2) return {'F', 4, tilde};
    if (nshort == 1) return {'B', kk, tilde};
    require(nlong == 1, "comp_type: unrecognized two-length component");
    return {'C', kk, tilde};
  }
  int maxdeg = *std::max_element(deg.begin(), deg.end());
  if (maxdeg <= 2) return {'A', kk, tilde};
  int br = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
  std::vector<int> arms;
  auto bonded = [&](int a, int b) {
    return bonds.count({std::min(a, b), std::max(a, b)}) != 0;
  };
  for (int s = 0; s < kk; ++s) {
    if (!bonded(s, br)) continue;
    int len = 1, prev = br, cur = s;
    for (;;) {
      int nxt = -1;
      for (int t = 0; t < kk && nxt < 0; ++t)
        if (t != prev && t != cur && bonded(t, cur)) nxt = t;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() >= 2 && arms[0] == 1 && arms[1] == 1) return {'D', kk, tilde};
  require(arms.size() >= 2 && arms[0] == 1 && arms[1] == 2,
          "comp_type: unrecognized branched component");
  return {'E', kk, tilde};
}

int Subsystem::z_index(const std::vector<int>& comp, const IVec& labels,
                       char family) const {
  std::vector<int> use = comp;
  if (family == 'B') {
    Q mx = 0;
    for (int i : comp) mx = std::max(mx, rs->norm2(to_q(vroot[i])));
    use.clear();
    for (int i : comp)
      if (rs->norm2(to_q(vroot[i])) == mx) use.push_back(i);
  }
  int z = 0;
  for (int i : use)
    if (labels[i] == 0) ++z;
  return z;
}

long Subsystem::comp_orbit_dim(const std::vector<int>& comp,
                               const IVec& labels) const {
  long nroots = 0, z0 = 0;
  for (const auto& r : phi) {
    if (!comp_supported(r, comp)) continue;
    ++nroots;
    long t = 0;
    for (int i = 0; i < k; ++i) t += r.jc[i] * labels[i];
    if (t == 0) ++z0;
  }
  return nroots - z0;
}

std::map<int, std::vector<long>> Subsystem::distinguished_dims_by_z(
    const std::vector<int>& comp) const {
  char family = comp_type(comp).family;
  const int kk = static_cast<int>(comp.size());
  std::map<int, std::vector<long>> out;
  for (long mask = 0; mask < (1L << kk); ++mask) {
    IVec lab(k, 0);
    for (int idx = 0; idx < kk; ++idx)
      lab[comp[idx]] = ((mask >> (kk - 1 - idx)) & 1) ? 2 : 0;
    long nroots = 0, r0 = 0, r2 = 0;
    for (const auto& r : phi) {
      if (!comp_supported(r, comp)) continue;
      ++nroots;
      long t = 0;
      for (int i = 0; i < k; ++i) t += r.jc[i] * lab[i];
      if (t == 0) ++r0;
      else if (t == 2) ++r2;
    }
    if (kk + r0 == r2) out[z_index(comp, lab, family)].push_back(nroots - r0);
  }
  return out;
}

std::string Subsystem::comp_name(const std::vector<int>& comp,
                                 const IVec& labels) const {
  CompType ct = comp_type(comp);
  int z = z_index(comp, labels, ct.family);
  std::string base = std::string(ct.tilde ? "~" : "") + ct.family +
                     std::to_string(ct.rank);
  if (z == 0) return base;
  auto dims = distinguished_dims_by_z(comp);
  auto it = dims.find(z);
  require(it != dims.end(), "comp_name: no labelings at this zero count");
  std::vector<long> group = it->second;
  std::sort(group.rbegin(), group.rend());
  long mydim = comp_orbit_dim(comp, labels);
  auto pos = std::find(group.begin(), group.end(), mydim);
  require(pos != group.end(), "comp_name: dimension not found");
  char letter = "abcdef"[pos - group.begin()];
  return base + "(" + letter + std::to_string(z) + ")";
}

namespace {

struct CompKey {
  long negrk;
  int famord;
  int tilde;
  char fam;
  std::string suf;

  bool operator<(const CompKey& o) const {
    return std::tie(negrk, famord, tilde, fam, suf) <
           std::tie(o.negrk, o.famord, o.tilde, o.fam, o.suf);
  }
  bool operator==(const CompKey& o) const {
    return std::tie(negrk, famord, tilde, fam, suf) ==
           std::tie(o.negrk, o.famord, o.tilde, o.fam, o.suf);
  }
};

int family_order(char fam) {
  switch (fam) {
    case 'E': return 0;
    case 'D': return 1;
    case 'F': return 0;
    case 'C': return 2;
    case 'B': return 2;
    case 'G': return 0;
    case 'A': return 3;
  }
  require(false, "family_order: bad family");
  return 0;
}

CompKey comp_key(const std::string& nm) {
  size_t p = 0;
  bool tilde = p < nm.size() && nm[p] == '~';
  if (tilde) ++p;
  require(p < nm.size() && std::isalpha(static_cast<unsigned char>(nm[p])),
          "comp_key: bad component name " + nm);
  char fam = nm[p++];
  size_t q = p;
  while (q < nm.size() && std::isdigit(static_cast<unsigned char>(nm[q]))) ++q;
  require(q > p, "comp_key: missing rank in " + nm);
  long rk = std::stol(nm.substr(p, q - p));
  std::string suf;
  if (q < nm.size()) {
    require(nm[q] == '(' && nm.back() == ')', "comp_key: bad suffix in " + nm);
    suf = nm.substr(q + 1, nm.size() - q - 2);
  }
  return {-rk, family_order(fam), tilde ? 1 : 0, fam, suf};
}

// Expand a full name ("2A2+A1", "0") into its per-component keys.
std::vector<CompKey> name_keys(const std::string& name) {
  std::vector<CompKey> keys;
  if (name == "0" || name.empty()) return keys;
  size_t start = 0;
  while (start <= name.size()) {
    size_t end = name.find('+', start);
    std::string part = name.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    size_t p = 0;
    long mult = 1;
    if (p < part.size() && std::isdigit(static_cast<unsigned char>(part[p]))) {
      size_t q = p;
      while (q < part.size() && std::isdigit(static_cast<unsigned char>(part[q])))
        ++q;
      mult = std::stol(part.substr(p, q - p));
      p = q;
    }
    CompKey ck = comp_key(part.substr(p));
    for (long i = 0; i < mult; ++i) keys.push_back(ck);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return keys;
}

}  // namespace

bool name_less(const std::string& a, const std::string& b) {
  auto ka = name_keys(a), kb = name_keys(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

std::string Subsystem::pair_name(const IVec& labels) const {
  std::vector<std::string> names;
  for (const auto& comp : comps) names.push_back(comp_name(comp, labels));
  std::sort(names.begin(), names.end(), [](const std::string& x, const std::string& y) {
    return comp_key(x) < comp_key(y);
  });
  std::string out;
  size_t i = 0;
  while (i < names.size()) {
    size_t j = i;
    while (j < names.size() && names[j] == names[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += names[i];
    i = j;
  }
  return out.empty() ? "0" : out;
}

const Subsystem& get_subsystem(const RootSystem& rs, const std::vector<int>& nodes) {
  using Key = std::tuple<char, int, std::vector<int>>;
  static std::map<Key, std::unique_ptr<Subsystem>> cache;
  Key key{rs.family, rs.n, nodes};
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Subsystem>(rs, nodes)).first;
  return *it->second;
}

std::vector<Labeling> enumerate_distinguished(const Subsystem& ss) {
  const RootSystem& rs = *ss.rs;
  std::vector<Labeling> out;
  if (ss.k == 0) {
    out.push_back({IVec{}, QVec(rs.n, 0), IVec(rs.n, 0), {}});
    return out;
  }
  const int k = ss.k;
  for (long mask = 0; mask < (1L << k); ++mask) {
    IVec lab(k);
    for (int pos = 0; pos < k; ++pos)
      lab[pos] = ((mask >> (k - 1 - pos)) & 1) ? 2 : 0;
    // Distinguished test per component: rank + #(t=0) = #(t=2) over the
    // component-supported part of Phi_J.
    bool ok = true;
    for (const auto& comp : ss.comps) {
      long r0 = 0, r2 = 0;
      for (const auto& r : ss.phi) {
        bool inside = true, touches = false;
        for (int i = 0; i < k && inside; ++i) {
          if (r.jc[i] == 0) continue;
          bool member =
              std::find(comp.begin(), comp.end(), i) != comp.end();
          inside = member;
          touches = touches || member;
        }
        if (!inside || !touches) continue;
        long t = 0;
        for (int i = 0; i < k; ++i) t += r.jc[i] * lab[i];
        if (t == 0) ++r0;
        else if (t == 2) ++r2;
      }
      if (static_cast<long>(comp.size()) + r0 != r2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    // Solve <J_r, h1> = lab_r for h1 in the coroot span of the nodes.
    QMat m(k, QVec(k));
    QVec rhs(k);
    for (int r = 0; r < k; ++r) {
      rhs[r] = lab[r];
      for (int c = 0; c < k; ++c) m[r][c] = ss.pairing[r][c];
    }
    QVec x = gauss_solve(std::move(m), std::move(rhs));
    QVec h1(rs.n, 0);
    for (int c = 0; c < k; ++c) {
      if (x[c] == 0) continue;
      QVec cw = rs.coroot(ss.vroot[c]);
      for (int i = 0; i < rs.n; ++i) h1[i] += x[c] * cw[i];
    }
    auto [dom, word] = dominate_labels(rs, rs.diagram_labels(h1));
    out.push_back({std::move(lab), std::move(h1), std::move(dom), std::move(word)});
  }
  return out;
}

const PairCatalog& pair_catalog(const RootSystem& rs, bool include_affine) {
  using Key = std::tuple<char, int, bool>;
  static std::map<Key, std::unique_ptr<PairCatalog>> cache;
  Key key{rs.family, rs.n, include_affine};
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto cat = std::make_unique<PairCatalog>();
  const int total_nodes = rs.n + (include_affine ? 1 : 0);
  for (long mask = 0; mask < (1L << total_nodes); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < total_nodes; ++i)
      if ((mask >> i) & 1) nodes.push_back(i);
    if (include_affine && static_cast<int>(nodes.size()) == total_nodes)
      continue;  // proper subsets of the extended diagram only
    const Subsystem& ss = get_subsystem(rs, nodes);
    for (auto& lb : enumerate_distinguished(ss))
      (*cat)[lb.dom].push_back({nodes, lb.labels, lb.h1, lb.word});
  }
  it = cache.emplace(key, std::move(cat)).first;
  return *it->second;
}

TorsionData torsion_data(const RootSystem& rs, const std::vector<int>& nodes) {
  bool aff = !nodes.empty() && nodes.back() == rs.n;
  std::vector<long> ms;
  for (int i = 0; i < rs.n; ++i)
    if (std::find(nodes.begin(), nodes.end(), i) == nodes.end())
      ms.push_back(rs.marks[i]);
  if (!aff) ms.push_back(1);
  long d = 0;
  for (long m : ms) d = std::gcd(d, m);
  require(d >= 1, "torsion_data: empty complement");
  QVec tau(rs.n, 0);
  for (int i = 0; i < rs.n; ++i)
    if (std::find(nodes.begin(), nodes.end(), i) == nodes.end())
      tau[i] += Q(rs.marks[i]) / d;
  if (!aff)
    for (int i = 0; i < rs.n; ++i) tau[i] -= Q(rs.marks[i]) / d;
  return {d, tau};
}

std::pair<IVec, std::vector<int>> dominate_labels(const RootSystem& rs, QVec t) {
  std::vector<int> word;
  const int n = rs.n;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < n && neg < 0; ++i)
      if (t[i] < 0) neg = i;
    if (neg < 0) break;
    Q ti = t[neg];
    for (int kk = 0; kk < n; ++kk) t[kk] -= ti * rs.cartan[kk][neg];
    word.push_back(neg);
  }
  std::reverse(word.begin(), word.end());
  auto ti = to_i(t);
  require(ti.has_value(), "dominate_labels: non-integral dominant labels");
  return {*ti, word};
}

long orbit_dim(const RootSystem& rs, const IVec& dom) {
  long n0 = 0, n1 = 0;
  for (const auto& b : rs.roots) {
    long v = 0;
    for (int i = 0; i < rs.n; ++i) v += b[i] * dom[i];
    if (v == 0) ++n0;
    else if (v == 1) ++n1;
  }
  return static_cast<long>(rs.roots.size()) - n0 - n1;
}

std::vector<int> levi_nodes(const IVec& dom) {
  std::vector<int> out;
  for (size_t i = 0; i < dom.size(); ++i)
    if (dom[i] == 0) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<ClassParameter> class_parameters(const RootSystem& rs, const IVec& dom) {
  const PairCatalog& cat = pair_catalog(rs, true);
  auto it = cat.find(dom);
  require(it != cat.end(), "class_parameters: unknown orbit diagram");
  std::vector<ClassParameter> out;
  for (const auto& pe : it->second) {
    const Subsystem& ss = get_subsystem(rs, pe.nodes);
    std::string name = ss.pair_name(pe.labels);
    TorsionData td = torsion_data(rs, pe.nodes);
    bool trivial = td.d == 1;
    auto match = std::find_if(out.begin(), out.end(), [&](const ClassParameter& c) {
      return c.name == name && c.trivial == trivial;
    });
    if (match != out.end()) {
      require(match->d == td.d, "class_parameters: inconsistent torsion order");
      ++match->multiplicity;
      continue;
    }
    out.push_back({name, trivial, td.d, td.tau_root, pe.nodes, pe.labels, pe.h1,
                   pe.word, 1});
  }
  std::sort(out.begin(), out.end(), [](const ClassParameter& a, const ClassParameter& b) {
    if (a.trivial != b.trivial) return a.trivial;
    if (a.d != b.d) return a.d > b.d;
    if (a.name != b.name) return name_less(a.name, b.name);
    return false;
  });
  return out;
}

std::map<IVec, std::string> computed_orbit_names(const RootSystem& rs) {
  const PairCatalog& cat = pair_catalog(rs, false);
  std::map<IVec, std::string> names;
  for (const auto& [dom, entries] : cat) {
    std::string got;
    for (const auto& pe : entries) {
      const Subsystem& ss = get_subsystem(rs, pe.nodes);
      std::string nm = ss.pair_name(pe.labels);
      if (got.empty()) got = nm;
      else require(got == nm, "computed_orbit_names: conflicting names");
    }
    names[dom] = got;
  }
  // Disambiguate duplicate names: the smaller orbit gets '', the larger '.
  std::map<std::string, std::vector<IVec>> by_name;
  for (const auto& [dom, nm] : names) by_name[nm].push_back(dom);
  for (const auto& [nm, doms] : by_name) {
    if (doms.size() == 1) continue;
    require(doms.size() == 2, "computed_orbit_names: more than two duplicates");
    long d0 = orbit_dim(rs, doms[0]), d1 = orbit_dim(rs, doms[1]);
    require(d0 != d1, "computed_orbit_names: duplicate names of equal dimension");
    const IVec& small = d0 < d1 ? doms[0] : doms[1];
    const IVec& big = d0 < d1 ? doms[1] : doms[0];
    names[small] = nm + "''";
    names[big] = nm + "'";
  }
  return names;
}

const std::map<IVec, std::string>& orbit_name_table(const RootSystem& rs) {
  static std::map<std::string, std::map<IVec, std::string>> cache;
  std::string want = std::string(1, rs.family) + std::to_string(rs.n);
  auto it = cache.find(want);
  if (it != cache.end()) return it->second;

  std::map<IVec, std::string> table;
  std::istringstream in(embedded_orbit_names_tsv());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string type, diagram, name;
    require(static_cast<bool>(std::getline(ls, type, '\t')) &&
                static_cast<bool>(std::getline(ls, diagram, '\t')) &&
                static_cast<bool>(std::getline(ls, name, '\t')),
            "orbit_name_table: malformed line: " + line);
    if (type != want) continue;
    IVec dom;
    std::istringstream ds(diagram);
    std::string tok;
    while (std::getline(ds, tok, ',')) dom.push_back(std::stol(tok));
    require(static_cast<int>(dom.size()) == rs.n,
            "orbit_name_table: diagram rank mismatch: " + line);
    table[dom] = name;
  }
  return cache.emplace(want, std::move(table)).first->second;
}

const std::vector<OrbitRecord>& orbit_catalog(const RootSystem& rs) {
  using Key = std::pair<char, int>;
  static std::map<Key, std::vector<OrbitRecord>> cache;
  Key key{rs.family, rs.n};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const PairCatalog& cat = pair_catalog(rs, false);
  const auto& table = orbit_name_table(rs);
  std::vector<OrbitRecord> out;
  for (const auto& [dom, entries] : cat) {
    std::string name;
    auto nit = table.find(dom);
    if (nit != table.end()) {
      name = nit->second;
    } else {
      // Fall back to the diagram string when the table has no entry.
      for (size_t i = 0; i < dom.size(); ++i)
        name += (i ? "," : "") + std::to_string(dom[i]);
    }
    out.push_back({dom, name, orbit_dim(rs, dom),
                   static_cast<int>(class_parameters(rs, dom).size())});
  }
  std::sort(out.begin(), out.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.dom < b.dom;
  });
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace orbitlift
