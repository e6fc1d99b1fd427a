#pragma once

/// Small parsing and formatting helpers for the command-line tool, kept
/// header-only so the test suite can exercise them directly.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitlift/rootdata.hpp"

namespace orbitlift::cli {

/// Comma-separated integer list ("0,1,-2"); nullopt when the shape is wrong.
inline std::optional<IVec> parse_int_list(const std::string& s) {
  IVec out;
  std::string cur;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      if (cur.empty()) return std::nullopt;
      try {
        size_t pos = 0;
        out.push_back(std::stol(cur, &pos));
        if (pos != cur.size()) return std::nullopt;
      } catch (const std::exception&) {
        return std::nullopt;
      }
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(s[i]))) {
      cur += s[i];
    }
  }
  return out;
}

/// Weight expressions: "w4", "w2-w7", "3w1", "w1+2w3-w6", "0", or a plain
/// comma-separated coordinate vector. Result is in fundamental coordinates
/// of rank n. Throws std::invalid_argument on bad syntax.
inline IVec parse_weight(const std::string& s, int n) {
  if (s.find(',') != std::string::npos) {
    auto v = parse_int_list(s);
    if (!v || static_cast<int>(v->size()) != n)
      throw std::invalid_argument("weight vector must have " +
                                  std::to_string(n) + " entries: '" + s + "'");
    return *v;
  }
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  IVec out(n, 0);
  if (t == "0") return out;
  size_t i = 0;
  auto bad = [&]() {
    throw std::invalid_argument("cannot parse weight '" + s +
                                "' (use forms like w4, w2-w7, 3w1, or 0)");
  };
  bool first = true;
  while (i < t.size()) {
    long sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = (t[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      bad();
    }
    first = false;
    long coef = 1;
    size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i > start) coef = std::stol(t.substr(start, i - start));
    if (i >= t.size() || t[i] != 'w') bad();
    ++i;
    start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i == start) bad();
    long idx = std::stol(t.substr(start, i - start));
    if (idx < 1 || idx > n)
      throw std::invalid_argument("weight index w" + std::to_string(idx) +
                                  " out of range 1.." + std::to_string(n));
    out[idx - 1] += sign * coef;
  }
  return out;
}

/// Render fundamental coordinates in the same syntax ("w4", "w2-w7", ...).
inline std::string format_weight(const IVec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    long c = v[i];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? "-" : "+";
    }
    long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += "w" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

inline std::string join_ints(const IVec& v, const char* sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

/// Diagram labels in the printed row layout: E types show the branch node
/// after a slash ("0 0 2 0 0 / 0"), all other families a single row.
inline std::string diagram_layout(const RootSystem& rs, const IVec& dom) {
  if (rs.family != 'E') return join_ints(dom, " ");
  std::string top, bottom = std::to_string(dom[1]);
  for (int i = 0; i < rs.n; ++i) {
    if (i == 1) continue;
    if (!top.empty()) top += " ";
    top += std::to_string(dom[i]);
  }
  return top + " / " + bottom;
}

/// Node label for messages: simple nodes are a1..an, the affine node a0.
inline std::string node_label(const RootSystem& rs, int node) {
  return node == rs.n ? "a0" : "a" + std::to_string(node + 1);
}

inline std::string nodes_label(const RootSystem& rs,
                               const std::vector<int>& nodes) {
  std::string out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += " ";
    out += node_label(rs, nodes[i]);
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace orbitlift::cli
