#include "orbitlift/goldens.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "orbitlift/embedded.hpp"

namespace orbitlift {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s, int lineno) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty())
    throw std::runtime_error("golden data line " + std::to_string(lineno) +
                             ": bad integer '" + s + "'");
  return v;
}

IVec parse_ivec(const std::string& s, int lineno) {
  IVec out;
  for (const std::string& f : split(s, ',')) out.push_back(parse_long(f, lineno));
  return out;
}

std::string vec_str(const IVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// Class names compare as multisets of '+'-joined components: the reference
// tables order the summands of a composite name both ways ("A1+C3(a1)" vs
// the computed "C3(a1)+A1").
std::string norm_class_name(const std::string& nm) {
  std::vector<std::string> parts = split(nm, '+');
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "+";
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<GoldenRow> parse_goldens(const std::string& tsv) {
  std::vector<GoldenRow> rows;
  std::istringstream in(tsv);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 7)
      throw std::runtime_error("golden data line " + std::to_string(lineno) +
                               ": expected 7 tab-separated fields, got " +
                               std::to_string(f.size()));
    GoldenRow row;
    row.group = f[0];
    row.orbit = f[1];
    row.diagram = parse_ivec(f[2], lineno);
    row.gtype = f[3];
    row.rep = f[4];
    for (const std::string& w : split(f[5], ';'))
      row.weights.push_back(parse_ivec(w, lineno));
    for (const std::string& e : split(f[6], ' ')) {
      if (e.empty()) continue;
      size_t colon = e.rfind(':');
      if (colon == std::string::npos)
        throw std::runtime_error("golden data line " + std::to_string(lineno) +
                                 ": expected CLASS:TRACE, got '" + e + "'");
      GoldenExpect ge;
      std::string cls = e.substr(0, colon);
      if (cls == "*") {
        ge.wildcard = true;
      } else {
        ge.cls = cls;
      }
      ge.trace = parse_long(e.substr(colon + 1), lineno);
      row.expect.push_back(ge);
    }
    for (long x : row.diagram)
      if (x < 0 || x > 2)
        throw std::runtime_error("golden data line " + std::to_string(lineno) +
                                 ": diagram label outside {0,1,2}");
    if (row.weights.empty() || row.expect.empty())
      throw std::runtime_error("golden data line " + std::to_string(lineno) +
                               ": empty weights or expectations");
    row.lineno = lineno;
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = parse_goldens(embedded_goldens_tsv());
  return rows;
}

std::string check_golden_row(const GoldenRow& row) {
  const RootSystem& rs = get_root_system(parse_type(row.group));
  for (const IVec& w : row.weights) {
    LiftResult lr;
    try {
      lr = identify_representation(rs, row.diagram, w);
    } catch (const std::exception& e) {
      return "weight " + vec_str(w) + ": " + e.what();
    }
    // Collect integer traces per class, display order.
    std::vector<std::pair<std::string, long>> got;
    for (const ClassTrace& t : lr.traces) {
      if (!t.value)
        return "weight " + vec_str(w) + " does not descend on class " + t.name;
      if (!t.value->integer())
        return "weight " + vec_str(w) + ": non-integer trace " +
               t.value->str() + " on class " + t.name;
      got.emplace_back(t.name, *t.value->integer());
    }
    // Literal expectations consume every class of that name.
    std::vector<bool> used(got.size(), false);
    for (const GoldenExpect& ge : row.expect) {
      if (ge.wildcard) continue;
      bool any = false;
      const std::string want_cls = norm_class_name(ge.cls);
      for (size_t i = 0; i < got.size(); ++i) {
        if (norm_class_name(got[i].first) != want_cls) continue;
        if (used[i])
          return "class " + ge.cls + " matched twice in expectations";
        if (got[i].second != ge.trace)
          return "weight " + vec_str(w) + ": class " + ge.cls + " has trace " +
                 std::to_string(got[i].second) + ", expected " +
                 std::to_string(ge.trace);
        used[i] = true;
        any = true;
      }
      if (!any) return "no class named " + ge.cls + " was computed";
    }
    // Wildcards must use up the remaining classes as a multiset.
    std::multiset<long> want, have;
    for (const GoldenExpect& ge : row.expect)
      if (ge.wildcard) want.insert(ge.trace);
    for (size_t i = 0; i < got.size(); ++i)
      if (!used[i]) have.insert(got[i].second);
    if (want != have) {
      std::string detail = "weight " + vec_str(w) + ": remaining traces {";
      for (long v : have) detail += std::to_string(v) + " ";
      detail += "} do not match wildcards {";
      for (long v : want) detail += std::to_string(v) + " ";
      return detail + "}";
    }
  }
  return "";
}

namespace {

// The two-dimensional example orbit in E6: descent data recomputed and
// compared against the published weight-by-weight values.
std::string check_example_descent() {
  const RootSystem& rs = get_root_system({'E', 6});
  const IVec dom{0, 0, 0, 2, 0, 0};
  const PairCatalog& cat = pair_catalog(rs, true);
  auto it = cat.find(dom);
  if (it == cat.end()) return "orbit diagram not in the catalog";
  const PairEntry* bc = nullptr;
  for (const PairEntry& pe : it->second)
    if (pe.nodes == std::vector<int>{1, 2, 3, 4}) bc = &pe;
  if (!bc) return "no pair with nodes {a2,a3,a4,a5}";
  for (size_t i = 0; i < bc->nodes.size(); ++i) {
    bool want_zero = (bc->nodes[i] == 3);
    if ((bc->labels[i] == 0) != want_zero)
      return "unexpected labeling " + vec_str(bc->labels);
  }
  if (bc->h1 != to_q(IVec{0, 4, 4, 6, 4, 0}))
    return "unexpected Dynkin element on the pair";

  const IVec w2{0, 1, 0, 0, 0, 0};
  std::vector<IVec> orbit = weight_orbit(rs, dom, w2);
  if (orbit != std::vector<IVec>{{0, -1, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0}})
    return "unexpected weight orbit of the node-2 weight";

  const Subsystem& ss = get_subsystem(rs, bc->nodes);
  const std::vector<int> winv = RootSystem::inverse_word(bc->word);
  const std::map<IVec, IVec> images{
      {{0, 1, 0, 0, 0, 0}, {0, 1, 1, 2, 1, 0}},
      {{0, -1, 0, 1, 0, 0}, {0, 1, 1, 1, 1, 0}}};
  for (const auto& [mu, want_root] : images) {
    IVec v = rs.apply_word_fund(winv, mu);
    if (!ss.in_zspan(v))
      return "transported weight " + vec_str(mu) + " is outside the J-lattice";
    QVec root = rs.root_coords(to_q(v));
    auto root_i = to_i(root);
    if (!root_i || *root_i != want_root)
      return "transported weight of " + vec_str(mu) + " is not " +
             vec_str(want_root);
  }
  if (!descends(rs, bc->nodes, bc->word, orbit))
    return "descent test failed on the pair";
  return "";
}

// The same orbit's traces: the standard representation of S3.
std::string check_example_traces() {
  const RootSystem& rs = get_root_system({'E', 6});
  const IVec dom{0, 0, 0, 2, 0, 0};
  LiftResult lr = identify_representation(rs, dom, {0, 1, 0, 0, 0, 0});
  if (lr.dim != 2) return "dimension " + std::to_string(lr.dim) + ", wanted 2";
  if (!lr.lifts) return "weight reported as not descending";
  if (lr.traces.size() != 3)
    return std::to_string(lr.traces.size()) + " classes, wanted 3";
  const ClassTrace& t0 = lr.traces[0];
  if (!t0.trivial || t0.name != "D4(a1)" || !t0.value->integer() ||
      *t0.value->integer() != 2)
    return "trivial class mismatch";
  const ClassTrace& t1 = lr.traces[1];
  if (t1.name != "3A2" || t1.d != 3 || !t1.value->integer() ||
      *t1.value->integer() != -1)
    return "3A2 class mismatch";
  if (t1.value->counts()[1] != 1 || t1.value->counts()[2] != 1)
    return "3A2 exponents are not {1, 2} mod 3";
  const ClassTrace& t2 = lr.traces[2];
  if (t2.name != "A3+2A1" || t2.d != 2 || !t2.value->integer() ||
      *t2.value->integer() != 0)
    return "A3+2A1 class mismatch";
  if (lr.identified != "standard")
    return "identified as '" + lr.identified + "', wanted 'standard'";
  return "";
}

}  // namespace

VerifyReport verify_all() {
  VerifyReport rep;
  auto add = [&](const std::string& label, const std::string& detail) {
    VerifyReport::Line line;
    line.label = label;
    line.pass = detail.empty();
    line.detail = detail;
    if (line.pass) ++rep.passed;
    else ++rep.failed;
    rep.lines.push_back(std::move(line));
  };
  add("E6 D4(a1) worked example: descent", check_example_descent());
  add("E6 D4(a1) worked example: traces", check_example_traces());
  for (const GoldenRow& row : golden_rows())
    add(row.group + " " + row.orbit + " " + row.gtype + " " + row.rep,
        check_golden_row(row));
  return rep;
}

}  // namespace orbitlift
