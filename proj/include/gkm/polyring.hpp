// Exact sparse multivariate polynomials over Q with integrality certificates,
// and the linear-form primitives (exact division, coprimality, congruence
// solving) that GKM computations reduce to.
//
// Variables are x1..xk. Monomials are iterated in graded lexicographic order,
// largest first, which is also the printing order.
#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gkm/linalg.hpp"

namespace gkm {

enum class CoefficientMode { Z, Q };

inline std::string to_string(CoefficientMode m) { return m == CoefficientMode::Z ? "Z" : "Q"; }

inline CoefficientMode parse_mode(std::string_view s) {
  if (s == "Z" || s == "z") return CoefficientMode::Z;
  if (s == "Q" || s == "q") return CoefficientMode::Q;
  throw std::invalid_argument("unknown coefficient mode '" + std::string(s) + "' (expected Z or Q)");
}

struct ZeroWeightError : std::invalid_argument {
  ZeroWeightError() : std::invalid_argument("zero weight used as a divisor or edge label") {}
};

struct PolynomialParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Integer linear form sum_i c_i x_{i+1} on the torus Lie algebra.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}
  Weight(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
  }

  std::size_t rank() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
  }

  /// gcd of the entries (0 for the zero weight).
  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return g;
  }

  bool is_primitive() const { return content() == 1; }

  Weight operator-() const {
    Weight w = *this;
    for (auto& c : w.coeffs_) c = -c;
    return w;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
    Weight r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

  friend bool operator==(const Weight&, const Weight&) = default;

  /// True iff a and b are proportional over Q (zero vectors count as collinear).
  friend bool collinear(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = i + 1; j < a.rank(); ++j)
        if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
  }

 private:
  std::vector<Integer> coeffs_;
};

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

/// Strict "greater in graded lex" on exponent vectors; shorter vectors are
/// padded with zeros.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned ai = i < a.size() ? a[i] : 0;
      const unsigned bi = i < b.size() ? b[i] : 0;
      if (ai != bi) return ai > bi;
    }
    return false;
  }
};

/// All exponent vectors of total degree d in n variables, largest first.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(n, 0);
  // recursive fill, first coordinate descending gives grlex-descending order
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Number of monomials of degree d in n variables; 0 for negative d.
inline std::size_t monomial_count(std::size_t n, long d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  // C(d + n - 1, n - 1)
  Integer r = 1;
  for (std::size_t i = 1; i < n; ++i) r = r * (d + i) / i;
  return static_cast<std::size_t>(r);
}

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exponent(nvars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    Polynomial p(nvars);
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  static Polynomial monomial(Exponent e, const Rational& c) {
    Polynomial p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
  }

  /// Degree-1 embedding of a weight.
  static Polynomial from_weight(const Weight& w) {
    Polynomial p(w.rank());
    for (std::size_t i = 0; i < w.rank(); ++i) {
      if (w[i] == 0) continue;
      Exponent e(w.rank(), 0);
      e[i] = 1;
      p.terms_.emplace(std::move(e), Rational(w[i]));
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  long degree() const { return terms_.empty() ? -1 : static_cast<long>(total_degree(terms_.begin()->first)); }

  /// Zero counts as homogeneous of every degree.
  bool is_homogeneous(long d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return static_cast<long>(total_degree(t.first)) == d; });
  }

  bool is_homogeneous() const { return terms_.empty() || is_homogeneous(degree()); }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(padded(e, nvars_));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Exponent(nvars_, 0)); }

  bool is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
  }

  /// lcm of coefficient denominators.
  Integer denominator_lcm() const {
    Integer l = 1;
    for (const auto& [e, c] : terms_) l = boost::multiprecision::lcm(l, denominator(c));
    return l;
  }

  Polynomial homogeneous_component(unsigned d) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
  }

  /// Same polynomial viewed in at least n variables.
  Polynomial extended(std::size_t n) const {
    if (n <= nvars_) return *this;
    Polynomial r(n);
    for (const auto& [e, c] : terms_) r.terms_.emplace(padded(e, n), c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& b) {
    if (b.nvars_ > nvars_) *this = extended(b.nvars_);
    for (const auto& [e, c] : b.terms_) add_term(padded(e, nvars_), c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& b) {
    if (b.nvars_ > nvars_) *this = extended(b.nvars_);
    for (const auto& [e, c] : b.terms_) add_term(padded(e, nvars_), -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.nvars_, b.nvars_);
    Polynomial r(n);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(n, 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }

  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend Polynomial scale(const Rational& c, const Polynomial& a) {
    if (c == 0) return Polynomial(a.nvars_);
    Polynomial r = a;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
  }

  Polynomial pow(unsigned n) const {
    Polynomial r = constant(nvars_, 1);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [e, c] : a.terms_)
      if (b.coefficient(e) != c) return false;
    return true;
  }

  std::string str() const;

 private:
  static Exponent padded(const Exponent& e, std::size_t n) {
    if (e.size() == n) return e;
    Exponent r(std::max(n, e.size()), 0);
    std::copy(e.begin(), e.end(), r.begin());
    return r;
  }

  void add_term(Exponent e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

inline std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << to_string(mag) << '*' << mono;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial out(nvars_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
      skip();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw PolynomialParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg +
                               " in '" + std::string(s_) + "'");
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial term(int sign) {
    Rational coeff = sign;
    Exponent e(nvars_, 0);
    bool have_factor = false;
    for (;;) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Rational c(integer());
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          Integer d = integer();
          if (d == 0) fail("zero denominator");
          c /= Rational(d);
        }
        coeff *= c;
      } else if (peek() == 'x') {
        ++pos_;
        const Integer idx = integer();
        if (idx < 1) fail("variable indices start at 1");
        const auto i = static_cast<std::size_t>(idx) - 1;
        if (i >= e.size()) {
          if (nvars_ != 0) fail("variable x" + idx.str() + " exceeds rank " + std::to_string(nvars_));
          e.resize(i + 1, 0);
        }
        unsigned p = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          p = static_cast<unsigned>(integer());
        }
        e[i] += p;
      } else {
        fail("expected coefficient or variable");
      }
      have_factor = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    return Polynomial::monomial(std::move(e), coeff);
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the printing grammar, e.g. "3*x1^2*x2 - 1/2*x3 + 4". With nvars = 0
/// the variable count is inferred from the highest index seen.
inline Polynomial parse_polynomial(std::string_view s, std::size_t nvars = 0) {
  Polynomial p = detail::PolyParser(s, nvars).parse();
  return p.extended(nvars);
}

/// Exact quotient p / w, or nullopt when w does not divide p.
///
/// Long division in the variable x_j of the first nonzero coefficient of w;
/// the remainder is free of x_j and equals p evaluated on the hyperplane w = 0,
/// so w | p iff it vanishes.
inline std::optional<Polynomial> divide_by_weight(const Polynomial& p, const Weight& w) {
  if (w.is_zero()) throw ZeroWeightError();
  const std::size_t n = std::max(p.nvars(), w.rank());
  std::size_t j = 0;
  while (w[j] == 0) ++j;
  const Rational lead(w[j]);
  const Polynomial divisor = Polynomial::from_weight(w).extended(n);

  Polynomial rem = p.extended(n);
  Polynomial quotient(n);
  for (;;) {
    // pick the term with the largest x_j exponent
    const Exponent* best = nullptr;
    Rational best_coeff;
    for (const auto& [e, c] : rem.terms()) {
      if (e[j] > 0 && (best == nullptr || e[j] > (*best)[j])) {
        best = &e;
        best_coeff = c;
      }
    }
    if (best == nullptr) break;
    Exponent qe = *best;
    --qe[j];
    const Polynomial qt = Polynomial::monomial(std::move(qe), best_coeff / lead);
    rem -= qt * divisor;
    quotient += qt;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient;
}

/// Q-mode: no two weights proportional. Z-mode: additionally every weight is
/// primitive; for primitive integral linear forms coprimality in Z[x] is
/// exactly non-collinearity.
inline bool pairwise_coprime(const std::vector<Weight>& ws, CoefficientMode mode) {
  for (const auto& w : ws)
    if (w.is_zero()) throw ZeroWeightError();
  if (mode == CoefficientMode::Z) {
    for (const auto& w : ws)
      if (!w.is_primitive()) return false;
  }
  for (std::size_t a = 0; a < ws.size(); ++a)
    for (std::size_t b = a + 1; b < ws.size(); ++b)
      if (collinear(ws[a], ws[b])) return false;
  return true;
}

struct Congruence {
  Weight modulus;
  Polynomial residue;
};

enum class CongruenceStatus { Unique, NoSolution, NonUnique, NonIntegral };

inline std::string to_string(CongruenceStatus s) {
  switch (s) {
    case CongruenceStatus::Unique: return "Unique";
    case CongruenceStatus::NoSolution: return "NoSolution";
    case CongruenceStatus::NonUnique: return "NonUnique";
    case CongruenceStatus::NonIntegral: return "NonIntegral";
  }
  return "?";
}

struct CongruenceResult {
  CongruenceStatus status = CongruenceStatus::NoSolution;
  /// The solution (Unique / NonIntegral) or one particular solution (NonUnique).
  Polynomial solution;
  /// Dimension of the space of homogeneous degree-d solutions (NonUnique only).
  std::size_t solution_dim = 0;

  bool ok() const { return status == CongruenceStatus::Unique; }
};

/// Finds homogeneous h of degree d with h = p_i (mod alpha_i) for every
/// constraint, as an exact linear system in the coefficients of h and of the
/// witnesses g_i with h - p_i = alpha_i * g_i.
inline CongruenceResult solve_congruences(const std::vector<Congruence>& constraints, unsigned d,
                                          std::size_t nvars, CoefficientMode mode = CoefficientMode::Q) {
  for (const auto& c : constraints) {
    if (c.modulus.is_zero()) throw ZeroWeightError();
    if (!c.residue.is_homogeneous(static_cast<long>(d)))
      throw std::invalid_argument("congruence residue '" + c.residue.str() + "' is not homogeneous of degree " +
                                  std::to_string(d));
    nvars = std::max({nvars, c.modulus.rank(), c.residue.nvars()});
  }

  const auto top = monomials_of_degree(nvars, d);
  const auto low = d > 0 ? monomials_of_degree(nvars, d - 1) : std::vector<Exponent>{};
  std::map<Exponent, std::size_t, GrlexGreater> row_of;
  for (std::size_t i = 0; i < top.size(); ++i) row_of.emplace(top[i], i);

  const std::size_t nh = top.size();
  const std::size_t ncols = nh + constraints.size() * low.size();
  const std::size_t nrows = constraints.size() * top.size();
  linalg::Matrix a(nrows, ncols);
  std::vector<Rational> rhs(nrows);

  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const auto& [alpha, residue] = constraints[k];
    const std::size_t r0 = k * top.size();
    for (std::size_t m = 0; m < nh; ++m) {
      a(r0 + m, m) = 1;
      rhs[r0 + m] = residue.coefficient(top[m]);
    }
    // - alpha * g_k
    for (std::size_t g = 0; g < low.size(); ++g) {
      const std::size_t col = nh + k * low.size() + g;
      for (std::size_t v = 0; v < alpha.rank(); ++v) {
        if (alpha[v] == 0) continue;
        Exponent e = low[g];
        e.resize(nvars, 0);
        ++e[v];
        a(r0 + row_of.at(e), col) -= Rational(alpha[v]);
      }
    }
  }

  CongruenceResult out;
  out.solution = Polynomial(nvars);
  const auto sol = linalg::solve(a, rhs);
  if (!sol) {
    out.status = CongruenceStatus::NoSolution;
    return out;
  }
  for (std::size_t m = 0; m < nh; ++m) out.solution += Polynomial::monomial(top[m], sol->particular[m]);

  // dimension of the nullspace projected onto the h coordinates
  linalg::Matrix proj(sol->nullspace.size(), nh);
  for (std::size_t r = 0; r < sol->nullspace.size(); ++r)
    for (std::size_t m = 0; m < nh; ++m) proj(r, m) = sol->nullspace[r][m];
  out.solution_dim = linalg::rank(proj);
  if (out.solution_dim > 0) {
    out.status = CongruenceStatus::NonUnique;
  } else if (mode == CoefficientMode::Z && !out.solution.is_integral()) {
    out.status = CongruenceStatus::NonIntegral;
  } else {
    out.status = CongruenceStatus::Unique;
  }
  return out;
}

}  // namespace gkm
