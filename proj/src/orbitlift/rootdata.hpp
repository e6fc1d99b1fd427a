#ifndef ORBITLIFT_ROOTDATA_HPP
#define ORBITLIFT_ROOTDATA_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbitlift/linalg.hpp"

namespace orbitlift {

/// Simple root system of a given family and rank (A n>=1, B n>=2, C n>=2,
/// D n>=3, E 6..8, F 4, G 2), Bourbaki numbering, 0-indexed nodes.
///
/// Conventions:
///   cartan[i][j] = <alpha_i, alpha_j^vee>.
///   Weights live in simple-root coordinates (QVec/IVec over the alpha_i) or
///   fundamental-weight coordinates; coweights in simple-coroot coordinates.
///   s_i(mu) = mu - <mu, alpha_i^vee> alpha_i;  s_i(h) = h - alpha_i(h) alpha_i^vee.
///   A Weyl word acts with its leftmost letter applied last.
class RootSystem {
 public:
  RootSystem(char family, int rank);

  char family;
  int n;
  std::vector<IVec> cartan;
  QVec sym;                  // symmetrizer d_i, normalized so long roots get 1
  std::vector<IVec> pos;     // positive roots, simple-root coords, by height
  std::vector<IVec> roots;   // positive then negative
  IVec theta;                // highest root
  IVec marks;                // coefficients of theta over the simple roots
  QMat cartan_inv;
  std::vector<QVec> fw;      // fundamental weights in simple-root coords

  int npos() const { return static_cast<int>(pos.size()); }

  long pair_root(const IVec& beta, int j) const;
  Q pair_root_q(const QVec& beta, int j) const;

  /// Invariant form with long roots of squared length 2.
  Q form(const QVec& a, const QVec& b) const;
  Q norm2(const QVec& mu) const;
  long norm2_int2(const IVec& mu) const;  // 2*(mu,mu), always integral

  /// beta^vee in simple-coroot coordinates.
  QVec coroot(const IVec& beta) const;

  /// alpha_i(h) for h in simple-coroot coordinates.
  Q alpha_of(int i, const QVec& h) const;
  QVec diagram_labels(const QVec& h) const;

  QVec reflect_weight(int i, QVec mu) const;
  QVec reflect_coweight(int i, QVec h) const;
  /// Same reflection acting on fundamental-weight coordinates (stays integral).
  void reflect_fund_inplace(int i, IVec& mu) const;

  QVec apply_word_weight(const std::vector<int>& word, QVec mu) const;
  QVec apply_word_coweight(const std::vector<int>& word, QVec h) const;
  IVec apply_word_fund(const std::vector<int>& word, IVec mu) const;

  /// Greedy domination: repeatedly apply the smallest simple reflection with
  /// alpha_i(h) < 0.  Returns the dominant representative and a word w such
  /// that applying w to the input gives the dominant element.
  std::pair<QVec, std::vector<int>> dominate_coweight(QVec h) const;

  QVec fund_coords(const QVec& mu_root) const;
  IVec fund_coords_int(const IVec& mu_root) const;
  QVec root_coords(const QVec& mu_fund) const;
  Q norm2_fund(const IVec& mu_fund) const;

  /// The inverse of a word is the reversed word.
  static std::vector<int> inverse_word(std::vector<int> word);
};

const RootSystem& get_root_system(char family, int rank);
inline const RootSystem& get_root_system(const std::pair<char, int>& t) {
  return get_root_system(t.first, t.second);
}

int coxeter_number(char family, int rank);

/// Parse a type name like "E6" or "b3" into (family, rank).  Throws
/// std::invalid_argument on malformed input or unsupported rank.
std::pair<char, int> parse_type(const std::string& s);

}  // namespace orbitlift

#endif
