#include "orbitlift/classical.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace orbitlift {

namespace {

void partitions_rec(int n, int mx, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = std::min(n, mx); first >= 1; --first) {
    cur.push_back(first);
    partitions_rec(n - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
  require(n >= 0, "partitions_of: negative argument");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

bool valid_partition(int eps, const std::vector<int>& parts) {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  for (const auto& [p, m] : mult) {
    if (eps == 0 && p % 2 == 0 && m % 2 != 0) return false;
    if (eps == 1 && p % 2 == 1 && m % 2 != 0) return false;
  }
  return true;
}

PartitionOrbit::PartitionOrbit(int eps_, std::vector<int> parts_)
    : eps(eps_), parts(std::move(parts_)) {
  require(eps == 0 || eps == 1, "PartitionOrbit: eps must be 0 or 1");
  require(!parts.empty(), "PartitionOrbit: empty partition");
  for (size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] >= 1, "PartitionOrbit: parts must be positive");
    require(i == 0 || parts[i - 1] >= parts[i],
            "PartitionOrbit: parts must be weakly decreasing");
    N += parts[i];
  }
  if (!valid_partition(eps, parts))
    throw std::invalid_argument(
        "PartitionOrbit: partition fails the parity rule");
  n = N / 2;
  lam = parts;
  if (eps == 1) {
    require(N % 2 == 0, "PartitionOrbit: symplectic N must be even");
    family = 'C';
    lam.push_back(0);  // the conventional appended zero part
  } else {
    family = (N % 2 != 0) ? 'B' : 'D';
  }
  k = static_cast<int>(lam.size());
  for (int j = 1; j <= k; ++j) {
    if (eps == 1 && j == k) {
      b_set.push_back(j);  // the zero part always closes B in type C
      continue;
    }
    int next = (j < k) ? lam[j] : 0;
    if (lam[j - 1] > next && lam[j - 1] % 2 != eps) b_set.push_back(j);
  }
  kmax = b_set.empty() ? 0 : *std::max_element(b_set.begin(), b_set.end());
  for (int j : b_set)
    if (j != kmax) btilde.push_back(j);
  m = static_cast<int>(btilde.size()) + 1;
  if (eps == 1) require(lam[kmax - 1] == 0, "PartitionOrbit: internal");
}

long PartitionOrbit::sigma(int s) const {
  long out = 0;
  for (int lj : lam)
    if (lj >= s) out += (lj - s) / 2 + 1;
  return out;
}

long PartitionOrbit::d_count(int s) const {
  long out = 0;
  for (int lj : lam)
    if (lj >= s && (lj - s) % 2 == 0) ++out;
  return out;
}

std::vector<int> PartitionOrbit::eo() const {
  int max_even = 0, max_odd = 0;
  for (int p : lam) {
    if (p > 0 && p % 2 == 0) max_even = std::max(max_even, p);
    if (p % 2 == 1) max_odd = std::max(max_odd, p);
  }
  std::vector<int> out;
  for (int s = max_even; s >= 2; s -= 2) out.push_back(s);
  for (int s = max_odd; s >= 3; s -= 2) out.push_back(s);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

std::vector<int> PartitionOrbit::xi() const {
  std::vector<int> out;
  for (int s : eo()) {
    long sg = sigma(s);
    if (family == 'B' && sg == n) continue;
    if (family == 'D' && (sg == n - 1 || sg == n)) continue;
    out.push_back(s);
  }
  return out;
}

IVec PartitionOrbit::chi_window_e(int s) const {
  long a = sigma(s + 1), b = sigma(s);
  require(b > a, "chi_window_e: empty window");
  IVec mu(n, 0);
  for (long i = a; i < b; ++i) mu[i] = 1;
  return mu;
}

IVec PartitionOrbit::e_to_fund(const IVec& mu) const {
  require(static_cast<int>(mu.size()) == n, "e_to_fund: rank mismatch");
  IVec c(n - 1);
  for (int i = 0; i + 1 < n; ++i) c[i] = mu[i] - mu[i + 1];
  if (family == 'B') {
    c.push_back(2 * mu[n - 1]);
  } else if (family == 'C') {
    c.push_back(mu[n - 1]);
  } else {
    c[n - 2] = mu[n - 2] - mu[n - 1];
    c.push_back(mu[n - 2] + mu[n - 1]);
  }
  return c;
}

IVec PartitionOrbit::chi_formula_fund(int s) const {
  IVec c(n, 0);
  long sg = sigma(s), sg1 = sigma(s + 1);
  c[sg - 1] += 1;
  if (sg1 > 0) c[sg1 - 1] -= 1;
  return c;
}

IVec PartitionOrbit::chi_fund(int s) const {
  IVec w = e_to_fund(chi_window_e(s));
  IVec f = chi_formula_fund(s);
  require(w == f, "chi_fund: the two derivations disagree (s outside Xi)");
  return f;
}

std::vector<ChiWeight> PartitionOrbit::chi_weights() const {
  std::vector<ChiWeight> out;
  for (int s : xi())
    out.push_back({s, sigma(s), sigma(s) - sigma(s + 1), chi_fund(s)});
  return out;
}

IVec PartitionOrbit::lift_character(const std::vector<int>& s_subset) const {
  IVec c(n, 0);
  for (int j : s_subset) {
    require(std::find(btilde.begin(), btilde.end(), j) != btilde.end(),
            "lift_character: index outside btilde");
    IVec chi = chi_fund(lam[j - 1]);
    for (int i = 0; i < n; ++i) c[i] += chi[i];
  }
  return c;
}

int PartitionOrbit::evaluate_generator(int s, int kk) const {
  require(kk >= 1 && kk <= k, "evaluate_generator: index out of range");
  int lk = lam[kk - 1];
  int cnt = 0;
  for (int i = 1; i <= lk; ++i)
    if (lk + 2 - 2 * i == s) ++cnt;
  int val = (cnt % 2 != 0) ? -1 : 1;
  int closed = (lk >= s && (lk - s) % 2 == 0) ? -1 : 1;
  require(val == closed, "evaluate_generator: counting vs closed form");
  return val;
}

int PartitionOrbit::evaluate_generator_tilde(int s, int kk) const {
  int kp = 0;
  for (int t : b_set)
    if (t > kk && (kp == 0 || t < kp)) kp = t;
  require(kp != 0, "evaluate_generator_tilde: index has no successor in B");
  return evaluate_generator(s, kk) * evaluate_generator(s, kp);
}

IVec PartitionOrbit::dynkin() const {
  std::vector<int> nonneg;
  for (int lj : parts)
    for (int i = 1; i <= lj; ++i)
      if (lj + 1 - 2 * i >= 0) nonneg.push_back(lj + 1 - 2 * i);
  std::sort(nonneg.begin(), nonneg.end(), std::greater<int>());
  require(static_cast<int>(nonneg.size()) >= n, "dynkin: internal");
  IVec lab(n);
  for (int i = 0; i + 1 < n; ++i) lab[i] = nonneg[i] - nonneg[i + 1];
  if (family == 'B') {
    lab[n - 1] = nonneg[n - 1];
  } else if (family == 'C') {
    lab[n - 1] = 2 * nonneg[n - 1];
  } else {
    lab[n - 2] = nonneg[n - 2] - nonneg[n - 1];
    lab[n - 1] = nonneg[n - 2] + nonneg[n - 1];
  }
  for (long x : lab)
    require(x == 0 || x == 1 || x == 2, "dynkin: label outside {0,1,2}");
  return lab;
}

bool PartitionOrbit::very_even() const {
  return family == 'D' &&
         std::all_of(parts.begin(), parts.end(),
                     [](int p) { return p % 2 == 0; });
}

IVec PartitionOrbit::dynkin_partner() const {
  require(very_even(), "dynkin_partner: only very even orbits have one");
  IVec d = dynkin();
  std::swap(d[n - 2], d[n - 1]);
  return d;
}

std::vector<SpinRep> PartitionOrbit::spin_representations(
    std::string* reason) const {
  auto fail = [&](const char* why) {
    if (reason) *reason = why;
    return std::vector<SpinRep>{};
  };
  if (eps != 0) return fail("type C has no spin cover case");
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  for (const auto& [p, c] : mult)
    if (p % 2 == 1 && c > 1) return fail("odd part with multiplicity > 1");
  if (reason) reason->clear();

  const IVec dia = dynkin();
  auto fw = [&](int i) {
    IVec w(n, 0);
    w[i - 1] = 1;
    return w;
  };
  std::vector<std::pair<IVec, long>> base;
  int cap;
  if (family == 'B') {
    require(m % 2 == 1, "spin_representations: internal (type B parity)");
    base.emplace_back(fw(n), 1L << ((m - 1) / 2));
    cap = n - 1;
  } else if (m == 1) {
    require(very_even(), "spin_representations: internal (m=1)");
    int sel = (dia[n - 1] != 0) ? n : n - 1;
    require(dia[sel - 1] != 0 && dia[(sel == n ? n - 1 : n) - 1] == 0,
            "spin_representations: internal (terminal labels)");
    base.emplace_back(fw(sel), 1);
    cap = n - 2;
  } else {
    require(m % 2 == 0, "spin_representations: internal (type D parity)");
    long dim = 1L << (m / 2 - 1);
    base.emplace_back(fw(n - 1), dim);
    base.emplace_back(fw(n), dim);
    cap = n - 2;
  }
  int big = 0;
  for (int i = 1; i <= cap; ++i)
    if (dia[i - 1] != 0) big = i;
  std::vector<SpinRep> out;
  for (auto& [w, dim] : base) {
    IVec mini = w;
    if (big != 0) mini[big - 1] -= 1;
    out.push_back({std::move(w), std::move(mini), dim});
  }
  return out;
}

IVec dynkin_a(int l, const std::vector<int>& parts) {
  require(l >= 2, "dynkin_a: need l >= 2");
  require(std::accumulate(parts.begin(), parts.end(), 0) == l,
          "dynkin_a: parts must sum to l");
  std::vector<int> exps;
  for (int lj : parts)
    for (int i = 1; i <= lj; ++i) exps.push_back(lj + 1 - 2 * i);
  std::sort(exps.begin(), exps.end(), std::greater<int>());
  IVec lab(l - 1);
  for (int i = 0; i + 1 < l; ++i) lab[i] = exps[i] - exps[i + 1];
  return lab;
}

long partition_gcd(const std::vector<int>& parts) {
  long d = 0;
  for (int p : parts) d = std::gcd(d, static_cast<long>(p));
  return d;
}

IVec type_a_weight(int l, const std::vector<int>& parts, long j) {
  const long d = partition_gcd(parts);
  require(j >= 0 && j < d, "type_a_weight: character index out of range");
  std::set<int> chosen;
  for (int parity = 0; parity <= 1; ++parity) {
    std::set<int, std::greater<int>> size_set;
    for (int p : parts)
      if (p % 2 == parity) size_set.insert(p);
    if (size_set.empty()) continue;
    std::vector<int> sizes(size_set.begin(), size_set.end());
    sizes.push_back(0);
    for (size_t t = 0; t + 1 < sizes.size(); ++t) {
      int st = sizes[t], st1 = sizes[t + 1];
      // Exponent values between consecutive distinct sizes of this parity.
      std::vector<int> ring;
      for (int v = st - 1; v > -st; v -= 2)
        if (std::abs(v) > st1 - 1) ring.push_back(v);
      long need = j * (st - st1) / d;
      require(need * d == j * (st - st1), "type_a_weight: inexact ring share");
      require(need <= static_cast<long>(ring.size()),
              "type_a_weight: ring overflow");
      for (long r = 0; r < need; ++r) chosen.insert(ring[r]);
    }
  }
  std::vector<int> vals;
  for (int p : parts)
    for (int i = 0; i < p; ++i) vals.push_back(p - 1 - 2 * i);
  std::sort(vals.begin(), vals.end(), std::greater<int>());
  std::vector<int> c;
  for (int v : vals) c.push_back(chosen.count(v) ? 1 : 0);
  IVec out(l - 1);
  for (int i = 0; i + 1 < l; ++i) out[i] = c[i] - c[i + 1];
  return out;
}

std::vector<IVec> type_a_lifts(int l, const std::vector<int>& parts) {
  const long d = partition_gcd(parts);
  std::vector<IVec> out;
  for (long j = 0; j < d; ++j) out.push_back(type_a_weight(l, parts, j));
  return out;
}

}  // namespace orbitlift
