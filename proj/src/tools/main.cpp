// Command-line front end: orbit listings, lift analysis, classical partition
// constructions, golden-table verification, and table emission.

#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "orbitlift/balacarter.hpp"
#include "orbitlift/classical.hpp"
#include "orbitlift/goldens.hpp"
#include "orbitlift/lifting.hpp"
#include "cliutil.hpp"

namespace {

using namespace orbitlift;
namespace ocli = orbitlift::cli;
using njson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const RootSystem& system_for(const std::string& type) {
  std::pair<char, int> t;
  try {
    t = parse_type(type);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (t.second > 8)
    throw UsageError("ranks above 8 are not supported: " + type);
  return get_root_system(t);
}

std::string type_name(const RootSystem& rs) {
  return std::string(1, rs.family) + std::to_string(rs.n);
}

const OrbitRecord& resolve_orbit(const RootSystem& rs, const std::string& spec) {
  const auto& cat = orbit_catalog(rs);
  for (const auto& rec : cat)
    if (rec.name == spec) return rec;
  if (auto v = ocli::parse_int_list(spec);
      v && static_cast<int>(v->size()) == rs.n) {
    for (const auto& rec : cat)
      if (rec.dom == *v) return rec;
  }
  throw UsageError("unknown orbit '" + spec + "' in " + type_name(rs) +
                   " (give a name from `orbits` or a diagram like 0,1,0)");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---------------------------------------------------------------- orbits ----

struct OrbitExtra {
  std::string partition;  // classical families only
  long aorder = 0;        // |A(e)|, 0 when unknown
};

std::map<IVec, OrbitExtra> orbit_extras(const RootSystem& rs) {
  std::map<IVec, OrbitExtra> out;
  auto pstr = [](const std::vector<int>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s;
  };
  if (rs.family == 'A') {
    int l = rs.n + 1;
    for (const auto& parts : partitions_of(l))
      out.emplace(dynkin_a(l, parts), OrbitExtra{pstr(parts), partition_gcd(parts)});
  } else if (rs.family == 'B' || rs.family == 'C' || rs.family == 'D') {
    int eps = rs.family == 'C' ? 1 : 0;
    int total = 2 * rs.n + (rs.family == 'B' ? 1 : 0);
    for (const auto& parts : partitions_of(total)) {
      if (!valid_partition(eps, parts)) continue;
      PartitionOrbit po(eps, parts);
      long order = 1L << po.btilde.size();
      out.emplace(po.dynkin(), OrbitExtra{pstr(parts), order});
      if (po.very_even())
        out.emplace(po.dynkin_partner(), OrbitExtra{pstr(parts), order});
    }
  }
  return out;
}

int run_orbits(const std::string& type, const std::string& format) {
  const RootSystem& rs = system_for(type);
  const auto& cat = orbit_catalog(rs);
  const auto extras = orbit_extras(rs);
  bool classical = !extras.empty();
  auto order_of = [&](const OrbitRecord& rec) -> long {
    if (classical) {
      auto it = extras.find(rec.dom);
      return it == extras.end() ? 0 : it->second.aorder;
    }
    return component_group_order(rec.nclasses);
  };
  auto partition_of = [&](const OrbitRecord& rec) -> std::string {
    auto it = extras.find(rec.dom);
    return it == extras.end() ? "" : it->second.partition;
  };

  if (format == "json") {
    njson arr = njson::array();
    for (const auto& rec : cat) {
      njson row;
      row["name"] = rec.name;
      row["diagram"] = rec.dom;
      row["dim"] = rec.dim;
      row["classes"] = rec.nclasses;
      long ao = order_of(rec);
      if (ao > 0) row["component_order"] = ao;
      if (classical) row["partition"] = partition_of(rec);
      arr.push_back(row);
    }
    njson top;
    top["group"] = type_name(rs);
    top["orbits"] = arr;
    std::cout << top.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "name,diagram,dim,classes,component_order"
              << (classical ? ",partition" : "") << "\n";
    for (const auto& rec : cat) {
      long ao = order_of(rec);
      std::cout << csv_field(rec.name) << "," << ocli::join_ints(rec.dom, " ")
                << "," << rec.dim << "," << rec.nclasses << ","
                << (ao > 0 ? std::to_string(ao) : "");
      if (classical) std::cout << "," << csv_field(partition_of(rec));
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << "nilpotent orbits of " << type_name(rs) << " (" << cat.size()
            << ")\n";
  size_t name_w = 4, dia_w = 7;
  for (const auto& rec : cat) {
    name_w = std::max(name_w, rec.name.size());
    dia_w = std::max(dia_w, ocli::diagram_layout(rs, rec.dom).size());
  }
  std::cout << std::left << std::setw(static_cast<int>(name_w) + 2) << "name"
            << std::setw(static_cast<int>(dia_w) + 2) << "diagram"
            << std::right << std::setw(5) << "dim" << std::setw(8) << "|A(e)|";
  if (classical) std::cout << "  partition";
  std::cout << "\n";
  for (const auto& rec : cat) {
    long ao = order_of(rec);
    std::cout << std::left << std::setw(static_cast<int>(name_w) + 2)
              << rec.name << std::setw(static_cast<int>(dia_w) + 2)
              << ocli::diagram_layout(rs, rec.dom) << std::right << std::setw(5)
              << rec.dim << std::setw(8) << (ao > 0 ? std::to_string(ao) : "?");
    if (classical) std::cout << "  " << partition_of(rec);
    std::cout << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ lift ----

njson trace_json(const ClassTrace& t, const ClassParameter& cp,
                 const RootSystem& rs) {
  njson row;
  row["name"] = t.name;
  row["trivial"] = t.trivial;
  row["d"] = t.d;
  row["pairs"] = t.multiplicity;
  njson nodes = njson::array();
  for (int nd : cp.nodes) nodes.push_back(nd == rs.n ? 0 : nd + 1);
  row["nodes"] = nodes;
  row["descends"] = t.value.has_value();
  if (t.value) {
    row["value"] = t.value->str();
    if (t.value->integer()) row["trace"] = *t.value->integer();
  }
  return row;
}

void print_lift_text(const RootSystem& rs, const OrbitRecord& rec,
                     const IVec& lam, const LiftResult& lr) {
  const auto cps = class_parameters(rs, rec.dom);
  std::cout << "group: " << type_name(rs) << "\n";
  std::cout << "orbit: " << rec.name << "  (diagram "
            << ocli::diagram_layout(rs, rec.dom) << ", dim " << rec.dim
            << ")\n";
  std::cout << "weight: " << ocli::format_weight(lam) << " = ("
            << ocli::join_ints(lam, ",") << ")\n";
  std::cout << "dim V = " << lr.dim << "\n";
  std::cout << "descends to A(e): " << (lr.lifts ? "yes" : "no") << "\n";
  for (size_t i = 0; i < lr.traces.size(); ++i) {
    const ClassTrace& t = lr.traces[i];
    std::cout << "  class " << t.name << (t.trivial ? " [trivial," : " [")
              << " d=" << t.d << ", pairs=" << t.multiplicity << ", J="
              << ocli::nodes_label(rs, cps[i].nodes) << "]: "
              << (t.value ? "trace " + t.value->str() : "no descent") << "\n";
  }
  if (!lr.identified.empty())
    std::cout << "identified: " << lr.identified << "\n";
}

njson lift_json(const RootSystem& rs, const OrbitRecord& rec, const IVec& lam,
                const LiftResult& lr) {
  const auto cps = class_parameters(rs, rec.dom);
  njson top;
  top["group"] = type_name(rs);
  top["orbit"] = rec.name;
  top["diagram"] = rec.dom;
  top["weight"] = lam;
  top["dim"] = lr.dim;
  top["lifts"] = lr.lifts;
  if (!lr.identified.empty()) top["identified"] = lr.identified;
  njson classes = njson::array();
  for (size_t i = 0; i < lr.traces.size(); ++i)
    classes.push_back(trace_json(lr.traces[i], cps[i], rs));
  top["classes"] = classes;
  return top;
}

void print_lift_csv(const RootSystem& rs, const OrbitRecord& rec,
                    const LiftResult& lr) {
  const auto cps = class_parameters(rs, rec.dom);
  std::cout << "class,trivial,d,pairs,nodes,descends,trace\n";
  for (size_t i = 0; i < lr.traces.size(); ++i) {
    const ClassTrace& t = lr.traces[i];
    std::cout << csv_field(t.name) << "," << (t.trivial ? 1 : 0) << "," << t.d
              << "," << t.multiplicity << ","
              << ocli::nodes_label(rs, cps[i].nodes) << ","
              << (t.value ? 1 : 0) << ","
              << (t.value ? t.value->str() : "") << "\n";
  }
}

std::vector<long> target_vector(const std::string& spec,
                                const std::vector<ClassParameter>& cps) {
  std::vector<long> target;
  if (spec == "trivial") {
    target.assign(cps.size(), 1);
    return target;
  }
  if (spec == "sign") {
    if (cps.size() != 2 && cps.size() != 3)
      throw UsageError(
          "named target 'sign' needs a 2- or 3-class component group; pass an "
          "explicit trace vector instead");
    for (const auto& cp : cps) target.push_back(cp.d == 2 ? -1 : 1);
    return target;
  }
  if (spec == "standard") {
    if (cps.size() != 3)
      throw UsageError("named target 'standard' needs a 3-class group");
    for (const auto& cp : cps)
      target.push_back(cp.trivial ? 2 : (cp.d == 3 ? -1 : 0));
    return target;
  }
  auto v = ocli::parse_int_list(spec);
  if (!v || v->size() != cps.size())
    throw UsageError("target must be 'trivial', 'sign', 'standard', or " +
                     std::to_string(cps.size()) + " comma-separated traces");
  return *v;
}

Q parse_bound(const std::string& s) {
  try {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Q(std::stol(s));
    Q num(std::stol(s.substr(0, slash)));
    Q den(std::stol(s.substr(slash + 1)));
    require(den != 0, "zero denominator");
    return num / den;
  } catch (const std::exception&) {
    throw UsageError("cannot parse --bound '" + s + "' (use 2 or 10/3)");
  }
}

int run_sc_report(const RootSystem& rs, const OrbitRecord& rec,
                  const std::string& format) {
  if (rs.family != 'E' && rs.family != 'F' && rs.family != 'G')
    throw UsageError("the simply-connected analysis covers exceptional types");
  SimplyConnectedReport rep = simply_connected_report(rs, rec.dom);
  if (format == "json") {
    njson top;
    top["group"] = type_name(rs);
    top["orbit"] = rec.name;
    top["diagram"] = rec.dom;
    top["lattice_index"] = rep.multiple;
    top["central_image_nontrivial"] = rep.central_nontrivial;
    njson nodes = njson::array();
    for (const auto& nd : rep.nodes) {
      njson row;
      row["node"] = nd.node + 1;
      row["weight_in_root_lattice"] = nd.in_root_lattice;
      row["descends"] = nd.descends;
      if (nd.multiple_trivial)
        row["multiple_trivial"] = *nd.multiple_trivial;
      nodes.push_back(row);
    }
    top["nodes"] = nodes;
    std::cout << top.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "node,weight_in_root_lattice,descends,multiple_trivial\n";
    for (const auto& nd : rep.nodes)
      std::cout << (nd.node + 1) << "," << nd.in_root_lattice << ","
                << nd.descends << ","
                << (nd.multiple_trivial ? std::to_string(*nd.multiple_trivial)
                                        : "")
                << "\n";
    return 0;
  }
  std::cout << "group: " << type_name(rs) << "\norbit: " << rec.name
            << "  (diagram " << ocli::diagram_layout(rs, rec.dom) << ")\n";
  std::cout << "weight lattice index over the root lattice: " << rep.multiple
            << "\n";
  std::cout << "central image in A(e) nontrivial: "
            << (rep.central_nontrivial ? "yes" : "no") << "\n";
  for (const auto& nd : rep.nodes) {
    std::cout << "  node a" << nd.node + 1 << ": weight in root lattice: "
              << (nd.in_root_lattice ? "yes" : "no")
              << "; descends: " << (nd.descends ? "yes" : "no");
    if (nd.multiple_trivial)
      std::cout << "; " << rep.multiple << "*w trivial on all classes: "
                << (*nd.multiple_trivial ? "yes" : "no");
    std::cout << "\n";
  }
  return 0;
}

int run_lift(const std::string& type, const std::string& orbit_spec,
             const std::string& weight_str, const std::string& lattice,
             const std::string& find, const std::string& bound_str,
             const std::string& format) {
  const RootSystem& rs = system_for(type);
  const OrbitRecord& rec = resolve_orbit(rs, orbit_spec);
  if (lattice == "simply-connected") {
    if (!weight_str.empty() || !find.empty())
      throw UsageError("--lattice simply-connected takes no weight or --find");
    return run_sc_report(rs, rec, format);
  }
  if (!find.empty()) {
    if (!weight_str.empty())
      throw UsageError("give either a weight or --find, not both");
    const auto cps = class_parameters(rs, rec.dom);
    std::vector<long> target = target_vector(find, cps);
    Q bound = parse_bound(bound_str.empty() ? "2" : bound_str);
    SearchResult found;
    try {
      found = minimal_lift_search(rs, rec.dom, target, bound);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    if (format == "json") {
      njson top = lift_json(rs, rec, found.lambda, found.lift);
      top["norm2"] = found.norm2.get_str();
      std::cout << top.dump(2) << "\n";
    } else {
      std::cout << "minimal lift for target '" << find << "': "
                << ocli::format_weight(found.lambda) << "  (squared norm "
                << found.norm2.get_str() << ")\n";
      if (format == "csv") print_lift_csv(rs, rec, found.lift);
      else print_lift_text(rs, rec, found.lambda, found.lift);
    }
    return 0;
  }
  if (weight_str.empty())
    throw UsageError(
        "lift needs a weight (e.g. w2), or --find TARGET, or --lattice "
        "simply-connected");
  IVec lam;
  try {
    lam = ocli::parse_weight(weight_str, rs.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const Q& coord : rs.root_coords(to_q(lam)))
    if (coord.get_den() != 1)
      throw UsageError(
          "weight " + ocli::format_weight(lam) +
          " lies outside the root lattice, so its traces on the adjoint-"
          "lattice class parameters are undefined; scale it into the lattice "
          "(the index is " + std::to_string(lattice_index(rs)) +
          ") or use --lattice simply-connected for the per-node report");
  LiftResult lr;
  try {
    lr = identify_representation(rs, rec.dom, lam);
  } catch (const NotLeviDominant& e) {
    throw UsageError(std::string("weight rejected: ") + e.what());
  } catch (const NotMinuscule& e) {
    throw UsageError(std::string("weight rejected: ") + e.what());
  }
  if (format == "json") std::cout << lift_json(rs, rec, lam, lr).dump(2) << "\n";
  else if (format == "csv") print_lift_csv(rs, rec, lr);
  else print_lift_text(rs, rec, lam, lr);
  return 0;
}

// ------------------------------------------------------------- classical ----

int run_type_a(const std::vector<int>& parts, const std::string& format) {
  int l = 0;
  for (int p : parts) l += p;
  if (l < 2 || l > 9)
    throw UsageError("type A partitions are supported for 2 <= l <= 9");
  long d = partition_gcd(parts);
  long q = l / d;
  IVec dom = dynkin_a(l, parts);
  std::vector<IVec> lifts = type_a_lifts(l, parts);
  if (format == "json") {
    njson top;
    top["group"] = "A" + std::to_string(l - 1);
    njson pj = njson::array();
    for (int p : parts) pj.push_back(p);
    top["partition"] = pj;
    top["d"] = d;
    top["q"] = q;
    top["diagram"] = dom;
    njson ws = njson::array();
    for (const IVec& w : lifts) ws.push_back(w);
    top["weights"] = ws;
    std::cout << top.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "j,weight\n";
    for (size_t j = 0; j < lifts.size(); ++j)
      std::cout << j << "," << ocli::format_weight(lifts[j]) << "\n";
    return 0;
  }
  std::cout << "type A" << l - 1 << ", partition (";
  for (size_t i = 0; i < parts.size(); ++i)
    std::cout << (i ? "," : "") << parts[i];
  std::cout << ")\n";
  std::cout << "A(e) = Z/" << d << " (d = gcd, q = " << q << ")\n";
  std::cout << "diagram: " << ocli::join_ints(dom, " ") << "\n";
  for (size_t j = 0; j < lifts.size(); ++j)
    std::cout << "  character " << j << ": " << ocli::format_weight(lifts[j])
              << "\n";
  return 0;
}

int run_classical(const std::string& eps_str, const std::string& part_str,
                  const std::string& format) {
  auto pv = ocli::parse_int_list(part_str);
  if (!pv) throw UsageError("cannot parse partition '" + part_str + "'");
  std::vector<int> parts;
  for (long x : *pv) {
    if (x < 1) throw UsageError("partition parts must be positive");
    parts.push_back(static_cast<int>(x));
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  if (eps_str == "A" || eps_str == "a") return run_type_a(parts, format);
  if (eps_str != "0" && eps_str != "1")
    throw UsageError("epsilon must be 0 (orthogonal), 1 (symplectic), or A");
  int eps = eps_str == "1" ? 1 : 0;
  if (!valid_partition(eps, parts))
    throw UsageError(
        "partition fails the parity rule (eps=0 needs even parts with even "
        "multiplicity, eps=1 odd parts with even multiplicity)");
  PartitionOrbit po(eps, parts);
  if (po.n < 2) throw UsageError("rank below 2 is not supported");
  if (po.family == 'D' && po.n < 3)
    throw UsageError("type D needs rank at least 3");

  std::string reason;
  const auto spin = po.spin_representations(&reason);
  auto subsets = [&]() {
    std::vector<std::vector<int>> out;
    int t = static_cast<int>(po.btilde.size());
    for (int mask = 0; mask < (1 << t); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < t; ++i)
        if (mask & (1 << i)) s.push_back(po.btilde[i]);
      out.push_back(s);
    }
    return out;
  }();

  if (format == "json") {
    njson top;
    top["group"] = std::string(1, po.family) + std::to_string(po.n);
    njson pj = njson::array();
    for (int p : po.parts) pj.push_back(p);
    top["partition"] = pj;
    top["epsilon"] = po.eps;
    top["B"] = po.b_set;
    top["k_max"] = po.kmax;
    top["B_tilde"] = po.btilde;
    top["m"] = po.m;
    top["component_order"] = 1L << po.btilde.size();
    top["diagram"] = po.dynkin();
    if (po.very_even()) top["partner_diagram"] = po.dynkin_partner();
    njson chis = njson::array();
    for (const ChiWeight& cw : po.chi_weights()) {
      njson row;
      row["s"] = cw.s;
      row["sigma"] = cw.sigma_s;
      row["block"] = cw.d_s;
      row["weight"] = cw.weight;
      chis.push_back(row);
    }
    top["chi"] = chis;
    njson lifts = njson::array();
    for (const auto& s : subsets) {
      njson row;
      row["S"] = s;
      row["weight"] = po.lift_character(s);
      lifts.push_back(row);
    }
    top["lifts"] = lifts;
    if (spin.empty()) {
      top["spin"] = nullptr;
      top["spin_reason"] = reason;
    } else {
      njson sj = njson::array();
      for (const SpinRep& sr : spin) {
        njson row;
        row["weight"] = sr.weight;
        row["minimal"] = sr.minimal;
        row["dim"] = sr.dim;
        sj.push_back(row);
      }
      top["spin"] = sj;
    }
    std::cout << top.dump(2) << "\n";
    return 0;
  }

  auto set_str = [](const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i)
      out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  if (format == "csv") {
    std::cout << "section,key,value\n";
    std::cout << "info,group," << po.family << po.n << "\n";
    std::cout << "info,B," << csv_field(set_str(po.b_set)) << "\n";
    std::cout << "info,B_tilde," << csv_field(set_str(po.btilde)) << "\n";
    std::cout << "info,m," << po.m << "\n";
    std::cout << "info,component_order," << (1L << po.btilde.size()) << "\n";
    std::cout << "info,diagram," << ocli::join_ints(po.dynkin(), " ") << "\n";
    if (po.very_even())
      std::cout << "info,partner_diagram,"
                << ocli::join_ints(po.dynkin_partner(), " ") << "\n";
    for (const ChiWeight& cw : po.chi_weights())
      std::cout << "chi,s=" << cw.s << ","
                << ocli::format_weight(cw.weight) << "\n";
    for (const auto& s : subsets)
      std::cout << "lift," << csv_field(set_str(s)) << ","
                << ocli::format_weight(po.lift_character(s)) << "\n";
    if (spin.empty()) {
      std::cout << "spin,none," << csv_field(reason) << "\n";
    } else {
      for (const SpinRep& sr : spin)
        std::cout << "spin," << ocli::format_weight(sr.weight) << ",dim "
                  << sr.dim << " minimal " << ocli::format_weight(sr.minimal)
                  << "\n";
    }
    return 0;
  }

  std::cout << "type " << po.family << po.n << ", partition (";
  for (size_t i = 0; i < po.parts.size(); ++i)
    std::cout << (i ? "," : "") << po.parts[i];
  std::cout << "), eps=" << po.eps << "\n";
  std::cout << "B = " << set_str(po.b_set) << ", k_max = " << po.kmax
            << ", B_tilde = " << set_str(po.btilde) << ", m = " << po.m
            << ", |A(e)| = " << (1L << po.btilde.size()) << "\n";
  std::cout << "diagram: " << ocli::join_ints(po.dynkin(), " ") << "\n";
  if (po.very_even())
    std::cout << "partner diagram: " << ocli::join_ints(po.dynkin_partner(), " ")
              << "  (very even orbit)\n";
  std::cout << "chi weights:\n";
  for (const ChiWeight& cw : po.chi_weights())
    std::cout << "  s=" << cw.s << ": sigma=" << cw.sigma_s << ", block="
              << cw.d_s << ", chi = " << ocli::format_weight(cw.weight) << "\n";
  std::cout << "lifts (subsets of B_tilde):\n";
  for (const auto& s : subsets)
    std::cout << "  S=" << set_str(s) << " -> "
              << ocli::format_weight(po.lift_character(s)) << "\n";
  if (spin.empty()) {
    std::cout << "spin extras: none (" << reason << ")\n";
  } else {
    std::cout << "spin extras:\n";
    for (const SpinRep& sr : spin)
      std::cout << "  " << ocli::format_weight(sr.weight) << "  dim " << sr.dim
                << "  (minimal variant " << ocli::format_weight(sr.minimal)
                << ")\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify ----

int run_verify(const std::string& format) {
  VerifyReport rep = verify_all();
  if (format == "json") {
    njson top;
    njson lines = njson::array();
    for (const auto& line : rep.lines) {
      njson row;
      row["label"] = line.label;
      row["pass"] = line.pass;
      if (!line.pass) row["detail"] = line.detail;
      lines.push_back(row);
    }
    top["checks"] = lines;
    top["passed"] = rep.passed;
    top["failed"] = rep.failed;
    std::cout << top.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "status,label,detail\n";
    for (const auto& line : rep.lines)
      std::cout << (line.pass ? "PASS" : "FAIL") << ","
                << csv_field(line.label) << "," << csv_field(line.detail)
                << "\n";
  } else {
    for (const auto& line : rep.lines) {
      std::cout << (line.pass ? "PASS " : "FAIL ") << line.label;
      if (!line.pass) std::cout << ": " << line.detail;
      std::cout << "\n";
    }
    std::cout << rep.passed + rep.failed << " checks: " << rep.passed
              << " passed, " << rep.failed << " failed\n";
  }
  return rep.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- tables ----

int run_tables(const std::string& type, const std::string& format) {
  const RootSystem& rs = system_for(type);
  std::string group = type_name(rs);
  std::vector<const GoldenRow*> rows;
  for (const GoldenRow& row : golden_rows())
    if (row.group == group) rows.push_back(&row);
  if (rows.empty())
    throw UsageError("no embedded tables for " + group +
                     " (tables cover G2, F4, E6, E7, E8)");
  auto expect_str = [](const GoldenRow& row) {
    std::string out;
    for (size_t i = 0; i < row.expect.size(); ++i) {
      const GoldenExpect& ge = row.expect[i];
      if (i) out += " ";
      out += (ge.wildcard ? "*" : ge.cls) + ":" + std::to_string(ge.trace);
    }
    return out;
  };
  auto weights_str = [](const GoldenRow& row) {
    std::string out;
    for (size_t i = 0; i < row.weights.size(); ++i) {
      if (i) out += ";";
      out += ocli::format_weight(row.weights[i]);
    }
    return out;
  };
  if (format == "json") {
    njson arr = njson::array();
    for (const GoldenRow* row : rows) {
      njson j;
      j["group"] = row->group;
      j["orbit"] = row->orbit;
      j["diagram"] = row->diagram;
      j["type"] = row->gtype;
      j["rep"] = row->rep;
      njson ws = njson::array();
      for (const IVec& w : row->weights) ws.push_back(w);
      j["weights"] = ws;
      njson ej = njson::array();
      for (const GoldenExpect& ge : row->expect) {
        njson e;
        e["class"] = ge.wildcard ? "*" : ge.cls;
        e["trace"] = ge.trace;
        ej.push_back(e);
      }
      j["expect"] = ej;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  if (format == "csv") {
    std::cout << "group,orbit,diagram,type,rep,weights,expect\n";
    for (const GoldenRow* row : rows)
      std::cout << row->group << "," << csv_field(row->orbit) << ","
                << ocli::join_ints(row->diagram, " ") << "," << row->gtype
                << "," << csv_field(row->rep) << "," << weights_str(*row)
                << "," << csv_field(expect_str(*row)) << "\n";
    return 0;
  }
  size_t orbit_w = 5, rep_w = 3, wt_w = 7;
  for (const GoldenRow* row : rows) {
    orbit_w = std::max(orbit_w, row->orbit.size());
    rep_w = std::max(rep_w, row->rep.size());
    wt_w = std::max(wt_w, weights_str(*row).size());
  }
  std::cout << "tables for " << group << " (" << rows.size() << " rows)\n";
  for (const GoldenRow* row : rows)
    std::cout << std::left << std::setw(static_cast<int>(orbit_w) + 2)
              << row->orbit << std::setw(5) << row->gtype
              << std::setw(static_cast<int>(rep_w) + 2) << row->rep
              << std::setw(static_cast<int>(wt_w) + 2) << weights_str(*row)
              << expect_str(*row) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lifting analysis for local systems on nilpotent orbits"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
  };

  std::string orb_type;
  auto* c_orbits = app.add_subcommand("orbits", "List the nilpotent orbits");
  c_orbits->add_option("type", orb_type, "Cartan type, e.g. E6 or B3")
      ->required();
  add_format(c_orbits);

  std::string lift_type, lift_orbit, lift_weight, lift_lattice = "adjoint";
  std::string lift_find, lift_bound;
  auto* c_lift = app.add_subcommand(
      "lift", "Analyze the descent of a Levi weight to A(e)");
  c_lift->add_option("type", lift_type, "Cartan type")->required();
  c_lift->add_option("orbit", lift_orbit, "Orbit name or diagram")->required();
  c_lift->add_option("weight", lift_weight,
                     "Weight: w4, w2-w7, 3w1, 0, or coordinates");
  c_lift->add_option("--lattice", lift_lattice, "Character lattice")
      ->check(CLI::IsMember({"adjoint", "simply-connected"}))
      ->capture_default_str();
  c_lift->add_option("--find", lift_find,
                     "Search the minimal lift of a target character "
                     "(trivial, sign, standard, or a trace vector)");
  c_lift->add_option("--bound", lift_bound,
                     "Squared-norm bound for --find (default 2)");
  add_format(c_lift);

  std::string cls_eps, cls_parts;
  auto* c_classical = app.add_subcommand(
      "classical", "Partition constructions for classical groups");
  c_classical->add_option("epsilon", cls_eps, "0 (orthogonal), 1 (symplectic), or A")
      ->required();
  c_classical->add_option("partition", cls_parts, "Partition, e.g. 5,3")
      ->required();
  add_format(c_classical);

  auto* c_verify =
      app.add_subcommand("verify", "Recompute all embedded golden tables");
  add_format(c_verify);

  std::string tbl_type;
  auto* c_tables = app.add_subcommand("tables", "Print the embedded tables");
  c_tables->add_option("type", tbl_type, "Cartan type")->required();
  add_format(c_tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_orbits) return run_orbits(orb_type, format);
    if (*c_lift)
      return run_lift(lift_type, lift_orbit, lift_weight, lift_lattice,
                      lift_find, lift_bound, format);
    if (*c_classical) return run_classical(cls_eps, cls_parts, format);
    if (*c_verify) return run_verify(format);
    if (*c_tables) return run_tables(tbl_type, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
