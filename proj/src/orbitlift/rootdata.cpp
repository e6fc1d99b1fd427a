#include "orbitlift/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbitlift {

namespace {

std::vector<IVec> build_cartan(char fam, int n) {
  std::vector<IVec> a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j, long aij = -1, long aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (fam) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -2, -1);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 2, n - 1, -1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E': {
      const int chain[7] = {0, 2, 3, 4, 5, 6, 7};
      for (int i = 0; i + 1 < n - 1; ++i) edge(chain[i], chain[i + 1]);
      edge(1, 3);
      break;
    }
    case 'F':
      edge(0, 1);
      edge(1, 2, -2, -1);
      edge(2, 3);
      break;
    case 'G':
      edge(0, 1, -1, -3);
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
  return a;
}

void check_rank(char fam, int n) {
  bool ok = false;
  switch (fam) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 3; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument(std::string("unsupported type ") + fam +
                                std::to_string(n));
}

}  // namespace

RootSystem::RootSystem(char fam, int rank) : family(fam), n(rank) {
  check_rank(fam, rank);
  cartan = build_cartan(fam, rank);

  // Symmetrizer: sym[j]*cartan[i][j] = sym[i]*cartan[j][i]; max entry 1.
  std::vector<bool> have(n, false);
  sym.assign(n, 0);
  sym[0] = 1;
  have[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && cartan[i][j] != 0 && have[i] && !have[j]) {
          sym[j] = sym[i] * Q(cartan[j][i]) / Q(cartan[i][j]);
          have[j] = true;
          changed = true;
        }
  }
  Q mx = sym[0];
  for (const auto& x : sym) mx = std::max(mx, x);
  for (auto& x : sym) x /= mx;

  // Positive roots: close the simples under all simple reflections.
  std::set<IVec> seen;
  std::vector<IVec> frontier;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const auto& b : frontier)
      for (int j = 0; j < n; ++j) {
        IVec r = b;
        r[j] -= pair_root(b, j);
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  for (const auto& r : seen) {
    bool nonneg = true;
    for (long c : r) nonneg = nonneg && c >= 0;
    long h = std::accumulate(r.begin(), r.end(), 0L);
    if (nonneg && h > 0) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const IVec& a, const IVec& b) {
    long ha = std::accumulate(a.begin(), a.end(), 0L);
    long hb = std::accumulate(b.begin(), b.end(), 0L);
    return ha != hb ? ha < hb : a < b;
  });
  roots = pos;
  for (const auto& r : pos) {
    IVec m(r.size());
    for (size_t i = 0; i < r.size(); ++i) m[i] = -r[i];
    roots.push_back(m);
  }

  theta = pos.back();
  long top = std::accumulate(theta.begin(), theta.end(), 0L);
  int count = 0;
  for (const auto& r : pos)
    if (std::accumulate(r.begin(), r.end(), 0L) == top) ++count;
  require(count == 1, "highest root not unique");
  marks = theta;

  QMat aq(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) aq[i][j] = cartan[i][j];
  cartan_inv = mat_inv(aq);
  fw.resize(n);
  for (int i = 0; i < n; ++i) fw[i] = cartan_inv[i];
}

long RootSystem::pair_root(const IVec& beta, int j) const {
  long s = 0;
  for (int i = 0; i < n; ++i) s += beta[i] * cartan[i][j];
  return s;
}

Q RootSystem::pair_root_q(const QVec& beta, int j) const {
  Q s = 0;
  for (int i = 0; i < n; ++i)
    if (beta[i] != 0) s += beta[i] * cartan[i][j];
  return s;
}

Q RootSystem::form(const QVec& a, const QVec& b) const {
  // (alpha_i, alpha_j) = sym[j] * cartan[i][j]
  Q s = 0;
  for (int j = 0; j < n; ++j) {
    if (b[j] == 0) continue;
    s += pair_root_q(a, j) * sym[j] * b[j];
  }
  return s;
}

Q RootSystem::norm2(const QVec& mu) const { return form(mu, mu); }

long RootSystem::norm2_int2(const IVec& mu) const {
  Q v = 2 * norm2(to_q(mu));
  require(v.get_den() == 1, "norm2_int2: not half-integral");
  return v.get_num().get_si();
}

QVec RootSystem::coroot(const IVec& beta) const {
  Q db = norm2(to_q(beta)) / 2;
  QVec out(n);
  for (int i = 0; i < n; ++i) out[i] = beta[i] * sym[i] / db;
  return out;
}

Q RootSystem::alpha_of(int i, const QVec& h) const {
  Q s = 0;
  for (int j = 0; j < n; ++j)
    if (h[j] != 0) s += h[j] * cartan[i][j];
  return s;
}

QVec RootSystem::diagram_labels(const QVec& h) const {
  QVec out(n);
  for (int i = 0; i < n; ++i) out[i] = alpha_of(i, h);
  return out;
}

QVec RootSystem::reflect_weight(int i, QVec mu) const {
  mu[i] -= pair_root_q(mu, i);
  return mu;
}

QVec RootSystem::reflect_coweight(int i, QVec h) const {
  h[i] -= alpha_of(i, h);
  return h;
}

void RootSystem::reflect_fund_inplace(int i, IVec& mu) const {
  long c = mu[i];
  if (c == 0) return;
  for (int k = 0; k < n; ++k) mu[k] -= c * cartan[i][k];
}

QVec RootSystem::apply_word_weight(const std::vector<int>& word, QVec mu) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    mu = reflect_weight(*it, std::move(mu));
  return mu;
}

QVec RootSystem::apply_word_coweight(const std::vector<int>& word, QVec h) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    h = reflect_coweight(*it, std::move(h));
  return h;
}

IVec RootSystem::apply_word_fund(const std::vector<int>& word, IVec mu) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    reflect_fund_inplace(*it, mu);
  return mu;
}

std::pair<QVec, std::vector<int>> RootSystem::dominate_coweight(QVec h) const {
  std::vector<int> word;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < n && neg < 0; ++i)
      if (alpha_of(i, h) < 0) neg = i;
    if (neg < 0) break;
    h = reflect_coweight(neg, std::move(h));
    word.push_back(neg);  // built back-to-front, reversed below
  }
  std::reverse(word.begin(), word.end());
  return {h, word};
}

QVec RootSystem::fund_coords(const QVec& mu_root) const {
  QVec out(n);
  for (int j = 0; j < n; ++j) out[j] = pair_root_q(mu_root, j);
  return out;
}

IVec RootSystem::fund_coords_int(const IVec& mu_root) const {
  IVec out(n);
  for (int j = 0; j < n; ++j) out[j] = pair_root(mu_root, j);
  return out;
}

QVec RootSystem::root_coords(const QVec& mu_fund) const {
  QVec out(n, 0);
  for (int i = 0; i < n; ++i) {
    if (mu_fund[i] == 0) continue;
    for (int j = 0; j < n; ++j) out[j] += mu_fund[i] * cartan_inv[i][j];
  }
  return out;
}

Q RootSystem::norm2_fund(const IVec& mu_fund) const {
  return norm2(root_coords(to_q(mu_fund)));
}

std::vector<int> RootSystem::inverse_word(std::vector<int> word) {
  std::reverse(word.begin(), word.end());
  return word;
}

const RootSystem& get_root_system(char family, int rank) {
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
  auto key = std::make_pair(family, rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<RootSystem>(family, rank)).first;
  return *it->second;
}

int coxeter_number(char family, int rank) {
  switch (family) {
    case 'A': return rank + 1;
    case 'B':
    case 'C': return 2 * rank;
    case 'D': return 2 * rank - 2;
    case 'E': return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    case 'F': return 12;
    case 'G': return 6;
  }
  throw std::invalid_argument("unknown family");
}

std::pair<char, int> parse_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type name: " + s);
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad type name: " + s);
  int rank = std::stoi(s.substr(1));
  check_rank(fam, rank);  // throws for unsupported combinations
  return {fam, rank};
}

}  // namespace orbitlift
