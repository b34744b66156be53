// Generalized Cartan matrices, real roots, and minimal coset representatives
// of W / W_J for Kac-Moody Weyl groups.
//
// Conventions. Nodes are 0-based. Roots are integer vectors in the simple-root
// basis, and a_ij = <alpha_j, alpha_i^vee>, so
//   s_i(v) = v - (sum_j a_ij v_j) alpha_i.
// Weyl group elements are words (s_{w[0]} s_{w[1]} ... ), applied right to
// left. Cosets wW_J are identified by w(lambda) - lambda for lambda = sum of
// the fundamental weights off J, whose stabilizer is exactly W_J.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkm/polyring.hpp"

namespace gkm::coxeter {

using Vec = std::vector<long long>;
using Word = std::vector<int>;

struct InvalidCartanMatrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParabolic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(std::vector<std::vector<long long>> entries) : a_(std::move(entries)) {
    const std::size_t n = a_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a_[i].size() != n) throw InvalidCartanMatrix("Cartan matrix must be square");
      if (a_[i][i] != 2) throw InvalidCartanMatrix("diagonal entry a_" + std::to_string(i) + std::to_string(i) + " must be 2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a_[i][j] > 0) throw InvalidCartanMatrix("off-diagonal entries must be <= 0");
        if ((a_[i][j] == 0) != (a_[j][i] == 0))
          throw InvalidCartanMatrix("a_ij = 0 must imply a_ji = 0 (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
      }
    }
  }

  std::size_t size() const { return a_.size(); }
  long long operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const std::vector<std::vector<long long>>& entries() const { return a_; }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::vector<std::vector<long long>> a_;
};

inline void check_index(const CartanMatrix& a, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= a.size())
    throw std::out_of_range("simple index " + std::to_string(i) + " out of range");
}

inline void check_parabolic(const CartanMatrix& a, const std::set<int>& parabolic) {
  for (int j : parabolic)
    if (j < 0 || static_cast<std::size_t>(j) >= a.size())
      throw InvalidParabolic("parabolic node " + std::to_string(j) + " is not a node of the Cartan matrix");
}

/// <v, alpha_i^vee> for v in the root basis.
inline long long coroot_pairing(const CartanMatrix& a, int i, const Vec& v) {
  long long s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a(i, j) * v[j];
  return s;
}

inline Vec reflect(const CartanMatrix& a, int i, Vec v) {
  check_index(a, i);
  v[i] -= coroot_pairing(a, i, v);
  return v;
}

inline Vec simple_root(std::size_t n, int i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

inline long long height(const Vec& v) {
  long long h = 0;
  for (auto c : v) h += c;
  return h;
}

/// A positive real root beta = s_{word[0]} ... s_{word[k-1]} (alpha_simple).
struct Root {
  Vec coords;
  Word word;
  int simple = 0;

  long long height() const { return coxeter::height(coords); }
};

/// All positive real roots of height <= h, ordered by (height, coords).
///
/// Every positive non-simple real root has a simple reflection lowering its
/// height, so the search never needs to leave the height ball.
inline std::vector<Root> real_roots(const CartanMatrix& a, long long h) {
  const std::size_t n = a.size();
  std::map<Vec, Root> found;
  std::vector<Vec> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Root r{simple_root(n, static_cast<int>(i)), {}, static_cast<int>(i)};
    if (h >= 1) {
      frontier.push_back(r.coords);
      found.emplace(r.coords, std::move(r));
    }
  }
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        Vec s = reflect(a, static_cast<int>(i), v);
        if (std::any_of(s.begin(), s.end(), [](long long c) { return c < 0; })) continue;
        if (height(s) > h || found.count(s)) continue;
        const Root& parent = found.at(v);
        Root r{s, {static_cast<int>(i)}, parent.simple};
        r.word.insert(r.word.end(), parent.word.begin(), parent.word.end());
        found.emplace(s, std::move(r));
        next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> out;
  for (auto& [k, r] : found) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    const auto hx = x.height(), hy = y.height();
    return hx != hy ? hx < hy : x.coords < y.coords;
  });
  return out;
}

/// Word for the reflection r_beta = u s_i u^{-1}.
inline Word reflection_word(const Root& beta) {
  Word w = beta.word;
  w.push_back(beta.simple);
  w.insert(w.end(), beta.word.rbegin(), beta.word.rend());
  return w;
}

struct CosetRep {
  Word word;
  std::size_t length() const { return word.size(); }
  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

inline bool coset_order(const CosetRep& x, const CosetRep& y) {
  return x.length() != y.length() ? x.length() < y.length() : x.word < y.word;
}

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += '.';
    s += std::to_string(w[k]);
  }
  return s;
}

inline Word word_from_string(const std::string& s) {
  Word w;
  if (s == "e" || s.empty()) return w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto dot = s.find('.', pos);
    const std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed word '" + s + "'");
    w.push_back(std::stoi(tok));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return w;
}

/// The weight lambda - sum_j d_j alpha_j, with lambda fixed and given by its
/// coroot pairings.
class OrbitPoint {
 public:
  OrbitPoint(const CartanMatrix& a, Vec lambda) : a_(&a), lambda_(std::move(lambda)), d_(a.size(), 0) {}
  OrbitPoint(const CartanMatrix& a, Vec lambda, Vec offset)
      : a_(&a), lambda_(std::move(lambda)), d_(std::move(offset)) {}

  long long pairing(int i) const {
    long long s = lambda_[i];
    for (std::size_t j = 0; j < a_->size(); ++j) s -= (*a_)(i, j) * d_[j];
    return s;
  }

  OrbitPoint& apply(int i) {
    check_index(*a_, i);
    d_[i] += pairing(i);
    return *this;
  }

  /// Applies s_{w[0]} ... s_{w[k-1]}, rightmost first.
  OrbitPoint& apply(const Word& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) apply(*it);
    return *this;
  }

  const Vec& offset() const { return d_; }

 private:
  const CartanMatrix* a_;
  Vec lambda_;
  Vec d_;
};

inline Vec base_weight(const CartanMatrix& a, const std::set<int>& parabolic) {
  Vec lambda(a.size(), 1);
  for (int j : parabolic) lambda[j] = 0;
  return lambda;
}

/// Minimal coset representatives of W / W_J up to a length cutoff, with
/// lookup by orbit key.
class CosetEnumeration {
 public:
  CosetEnumeration(const CartanMatrix& a, std::set<int> parabolic, std::size_t max_length)
      : a_(a), parabolic_(std::move(parabolic)) {
    check_parabolic(a_, parabolic_);
    lambda_ = base_weight(a_, parabolic_);
    check_stabilizer();

    std::vector<Vec> shell{Vec(a_.size(), 0)};
    add(shell.front());
    for (std::size_t len = 1; len <= max_length && !shell.empty(); ++len) {
      std::vector<Vec> next;
      for (const auto& key : shell) {
        for (std::size_t i = 0; i < a_.size(); ++i) {
          OrbitPoint p = point(key);
          if (p.pairing(static_cast<int>(i)) <= 0) continue;  // same or shorter coset
          p.apply(static_cast<int>(i));
          if (index_.count(p.offset())) continue;
          add(p.offset());
          next.push_back(p.offset());
        }
      }
      shell = std::move(next);
    }
    std::vector<std::size_t> perm(reps_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return coset_order(reps_[x], reps_[y]); });
    std::vector<CosetRep> reps;
    std::vector<Vec> keys;
    for (auto p : perm) {
      reps.push_back(reps_[p]);
      keys.push_back(keys_[p]);
    }
    reps_ = std::move(reps);
    keys_ = std::move(keys);
    index_.clear();
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
  }

  const CartanMatrix& cartan() const { return a_; }
  const std::set<int>& parabolic() const { return parabolic_; }
  const Vec& base() const { return lambda_; }
  const std::vector<CosetRep>& reps() const { return reps_; }
  const std::vector<Vec>& keys() const { return keys_; }

  std::optional<std::size_t> find(const Vec& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Vec key_of(const Word& w) const { return OrbitPoint(a_, lambda_).apply(w).offset(); }

  /// Lexicographically smallest reduced word of the minimal representative
  /// of the coset with the given key: repeatedly strip the smallest left
  /// descent, i.e. the smallest i with <w lambda, alpha_i^vee> < 0.
  Word canonical_word(const Vec& key) const {
    Word w;
    Vec cur = key;
    for (;;) {
      OrbitPoint p = point(cur);
      int descent = -1;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (p.pairing(static_cast<int>(i)) < 0) {
          descent = static_cast<int>(i);
          break;
        }
      }
      if (descent < 0) break;
      w.push_back(descent);
      p.apply(descent);
      cur = p.offset();
    }
    if (std::any_of(cur.begin(), cur.end(), [](long long c) { return c != 0; }))
      throw std::logic_error("orbit key did not reduce to the base point");
    return w;
  }

 private:
  OrbitPoint point(const Vec& key) const { return OrbitPoint(a_, lambda_, key); }

  void add(const Vec& key) {
    index_.emplace(key, reps_.size());
    keys_.push_back(key);
    reps_.push_back({canonical_word(key)});
  }

  void check_stabilizer() const {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const bool fixes = OrbitPoint(a_, lambda_).pairing(static_cast<int>(i)) == 0;
      if (fixes != (parabolic_.count(static_cast<int>(i)) != 0))
        throw std::logic_error("base weight stabilizer differs from the parabolic subgroup");
    }
  }

  CartanMatrix a_;
  std::set<int> parabolic_;
  Vec lambda_;
  std::vector<CosetRep> reps_;
  std::vector<Vec> keys_;
  std::map<Vec, std::size_t> index_;
};

inline std::vector<CosetRep> enumerate_cosets(const CartanMatrix& a, const std::set<int>& parabolic,
                                              std::size_t max_length) {
  return CosetEnumeration(a, parabolic, max_length).reps();
}

/// Minimal representative of [r_beta w], or nullopt when r_beta w lies in wW_J.
inline std::optional<CosetRep> reflection_of_root(const CartanMatrix& a, const Root& beta, const CosetRep& w,
                                                  const std::set<int>& parabolic) {
  check_parabolic(a, parabolic);
  const CosetEnumeration probe(a, parabolic, 0);
  const Vec before = probe.key_of(w.word);
  Word rw = reflection_word(beta);
  rw.insert(rw.end(), w.word.begin(), w.word.end());
  const Vec after = probe.key_of(rw);
  if (after == before) return std::nullopt;
  return CosetRep{probe.canonical_word(after)};
}

// ---------------------------------------------------------------------------
// Named Cartan matrices

/// Finite type X_n (A, B, C, D, G2). Long/short conventions follow Kac:
/// B_n has a_{n,n-1} = -2, C_n is its transpose, G2 = [[2,-1],[-3,2]].
inline CartanMatrix finite_cartan(char family, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto link = [&](int i, int j) { m[i][j] = m[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw std::invalid_argument("B_n/C_n need n >= 2");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (family == 'B')
        m[n - 1][n - 2] = -2;
      else
        m[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("G only exists in rank 2");
      m[0][1] = -1;
      m[1][0] = -3;
      break;
    default:
      throw std::invalid_argument(std::string("unsupported finite type ") + family);
  }
  return CartanMatrix(std::move(m));
}

/// Diagonal symmetrizer eps with eps_i a_ij = eps_j a_ji (eps_i proportional
/// to (alpha_i, alpha_i)); nullopt when the matrix is not symmetrizable.
inline std::optional<std::vector<Rational>> symmetrizer(const CartanMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::optional<Rational>> eps(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (eps[start]) continue;
    eps[start] = Rational(1);
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a(i, j) == 0) continue;
        const Rational e = *eps[i] * Rational(a(i, j)) / Rational(a(j, i));
        if (!eps[j]) {
          eps[j] = e;
          stack.push_back(j);
        } else if (*eps[j] != e) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Rational> out;
  for (auto& e : eps) out.push_back(*e);
  return out;
}

/// Untwisted affine matrix X_n^(1): node 0 is the affine node alpha_0 = delta - theta.
inline CartanMatrix untwisted_affine(const CartanMatrix& finite) {
  const std::size_t n = finite.size();
  const auto eps = symmetrizer(finite);
  if (!eps) throw InvalidCartanMatrix("finite Cartan matrix is not symmetrizable");
  // highest root: the unique root of maximal height
  const auto roots = real_roots(finite, 1000);
  const Vec& theta = roots.back().coords;
  // (theta, theta) and (alpha_k, alpha_k) in the normalization (alpha_i, alpha_j) = eps_i a_ij
  Rational tt = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tt += Rational(theta[i] * theta[j]) * (*eps)[i] * Rational(finite(i, j));

  std::vector<std::vector<long long>> m(n + 1, std::vector<long long>(n + 1, 0));
  m[0][0] = 2;
  for (std::size_t j = 0; j < n; ++j) {
    // a_{j+1,0} = <alpha_0, alpha_j^vee> = -<theta, alpha_j^vee>
    m[j + 1][0] = -coroot_pairing(finite, static_cast<int>(j), theta);
    // a_{0,j+1} = <alpha_j, alpha_0^vee> = -2 (alpha_j, theta) / (theta, theta)
    Rational ip = 0;
    for (std::size_t k = 0; k < n; ++k) ip += (*eps)[j] * Rational(finite(j, k)) * Rational(theta[k]);
    const Rational v = -2 * ip / tt;
    if (!is_integer(v)) throw std::logic_error("non-integral affine Cartan entry");
    m[0][j + 1] = static_cast<long long>(numerator(v));
    for (std::size_t k = 0; k < n; ++k) m[j + 1][k + 1] = finite(j, k);
  }
  return CartanMatrix(std::move(m));
}

/// Parses "A2", "B3", "G2", and aliases "SU(n)" = A_{n-1}, "Sp(n)" = C_n,
/// "Spin(2n+1)" = B_n, "Spin(2n)" = D_n.
inline CartanMatrix finite_cartan_by_name(const std::string& name) {
  auto paren = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return std::nullopt;
    return std::stoi(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
  };
  try {
    if (auto k = paren("SU")) return finite_cartan('A', *k - 1);
    if (auto k = paren("Sp")) return finite_cartan('C', *k);
    if (auto k = paren("Spin")) return *k % 2 ? finite_cartan('B', (*k - 1) / 2) : finite_cartan('D', *k / 2);
    if (name.size() >= 2 && std::isupper(static_cast<unsigned char>(name[0])))
      return finite_cartan(name[0], std::stoi(name.substr(1)));
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("unsupported type '" + name + "'");
}

}  // namespace gkm::coxeter
