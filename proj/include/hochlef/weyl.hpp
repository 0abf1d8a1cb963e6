// Exact arithmetic in M_r(D_n): r-by-r matrices over polynomial-coefficient
// differential operators in n variables, with an optional Laurent mode that
// admits negative powers of the coordinate variables (never of the
// derivatives).  Elements are sparse maps from normal-ordered monomials
// y^alpha d^beta E_{ij} to rationals; normal order puts all y powers to the
// left of all d powers, so equality is sparse-map equality.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hochlef/rational.hpp"

namespace hochlef {

// One basis monomial y^alpha d^beta E_{row,col}.  Matrix indices are
// 0-based internally; beta entries are always >= 0, alpha entries may be
// negative only in Laurent mode.
struct MonKey {
  std::vector<int> alpha;
  std::vector<int> beta;
  unsigned row = 0;
  unsigned col = 0;

  auto operator<=>(const MonKey&) const = default;

  bool is_identity_monomial() const {
    auto z = [](const std::vector<int>& v) {
      return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
    };
    return row == col && z(alpha) && z(beta);
  }

  int coeff_degree() const {  // total degree of the polynomial part
    int d = 0;
    for (int a : alpha) d += std::max(a, 0);
    return d;
  }
  int laurent_depth() const {
    int d = 0;
    for (int a : alpha) d += std::max(-a, 0);
    return d;
  }
  int order() const { return std::accumulate(beta.begin(), beta.end(), 0); }
  // Euler weight per variable: alpha_i - beta_i.  Multiplication is graded
  // by this vector, which the linear solver uses to split systems.
  std::vector<int> weight() const {
    std::vector<int> w(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) w[i] = alpha[i] - beta[i];
    return w;
  }
};

class WeylOp {
 public:
  WeylOp() = default;
  WeylOp(unsigned n, unsigned r, bool laurent = false)
      : n_(n), r_(r), laurent_(laurent) {
    if (n == 0 || r == 0) throw std::invalid_argument("WeylOp: n, r >= 1");
  }

  unsigned vars() const { return n_; }
  unsigned rank() const { return r_; }
  bool laurent() const { return laurent_; }
  const std::map<MonKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  static WeylOp zero(unsigned n, unsigned r, bool laurent = false) {
    return WeylOp(n, r, laurent);
  }
  static WeylOp identity(unsigned n, unsigned r, bool laurent = false) {
    WeylOp op(n, r, laurent);
    for (unsigned i = 0; i < r; ++i)
      op.add_term(MonKey{std::vector<int>(n, 0), std::vector<int>(n, 0), i, i},
                  1);
    return op;
  }
  static WeylOp constant(const Rational& c, unsigned n, unsigned r,
                         bool laurent = false) {
    WeylOp op = identity(n, r, laurent);
    op.scale_inplace(c);
    return op;
  }
  // y_k (0-based k)
  static WeylOp coordinate(unsigned k, unsigned n, unsigned r,
                           bool laurent = false) {
    WeylOp op(n, r, laurent);
    for (unsigned i = 0; i < r; ++i) {
      MonKey m{std::vector<int>(n, 0), std::vector<int>(n, 0), i, i};
      m.alpha[k] = 1;
      op.add_term(m, 1);
    }
    return op;
  }
  // d_k = partial derivative in variable k (0-based)
  static WeylOp derivative(unsigned k, unsigned n, unsigned r,
                           bool laurent = false) {
    WeylOp op(n, r, laurent);
    for (unsigned i = 0; i < r; ++i) {
      MonKey m{std::vector<int>(n, 0), std::vector<int>(n, 0), i, i};
      m.beta[k] = 1;
      op.add_term(m, 1);
    }
    return op;
  }
  static WeylOp monomial(const MonKey& m, const Rational& c, unsigned n,
                         unsigned r, bool laurent = false) {
    WeylOp op(n, r, laurent);
    op.add_term(m, c);
    return op;
  }
  // E_{ij} (x) y^alpha d^beta, indices 0-based.
  static WeylOp matrix_unit(unsigned i, unsigned j, unsigned n, unsigned r,
                            bool laurent = false) {
    WeylOp op(n, r, laurent);
    op.add_term(MonKey{std::vector<int>(n, 0), std::vector<int>(n, 0), i, j},
                1);
    return op;
  }

  void add_term(const MonKey& m, const Rational& c) {
    check_key(m);
    if (hochlef::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (hochlef::is_zero(it->second)) terms_.erase(it);
    }
  }

  WeylOp& operator+=(const WeylOp& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  WeylOp& operator-=(const WeylOp& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  WeylOp operator-() const {
    WeylOp r = *this;
    r.scale_inplace(-1);
    return r;
  }
  void scale_inplace(const Rational& c) {
    if (hochlef::is_zero(c)) {
      terms_.clear();
      return;
    }
    for (auto& [m, v] : terms_) v *= c;
  }
  friend WeylOp operator*(const Rational& c, WeylOp op) {
    op.scale_inplace(c);
    return op;
  }

  bool operator==(const WeylOp& o) const {
    return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
  }

  friend WeylOp operator*(const WeylOp& a, const WeylOp& b) {
    a.check_compatible(b);
    WeylOp out(a.n_, a.r_, a.laurent_ || b.laurent_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        mul_monomials(ma, mb, ca * cb, out);
    return out;
  }

  friend WeylOp commutator(const WeylOp& a, const WeylOp& b) {
    return a * b - b * a;
  }

  // Drops terms whose polynomial degree exceeds max_coeff_deg or whose
  // operator order exceeds max_order; negative bound = unbounded.
  WeylOp truncated(int max_coeff_deg, int max_order) const {
    WeylOp out(n_, r_, laurent_);
    for (const auto& [m, c] : terms_) {
      if (max_coeff_deg >= 0 && m.coeff_degree() > max_coeff_deg) continue;
      if (max_order >= 0 && m.order() > max_order) continue;
      out.terms_.emplace(m, c);
    }
    return out;
  }

  int order() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.order());
    return d;
  }
  int coeff_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.coeff_degree());
    return d;
  }
  int laurent_depth() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.laurent_depth());
    return d;
  }

  // Expands the single-monomial product ma*mb into `out` with coefficient c,
  // using d^b y^a = sum_k C(b,k) a(a-1)...(a-k+1) y^(a-k) d^(b-k) in each
  // variable and E_{ij}E_{kl} = delta_{jk} E_{il}.
  static void mul_monomials(const MonKey& ma, const MonKey& mb,
                            const Rational& c, WeylOp& out) {
    if (ma.col != mb.row) return;
    const size_t n = ma.alpha.size();
    MonKey base;
    base.alpha.resize(n);
    base.beta.resize(n);
    base.row = ma.row;
    base.col = mb.col;
    // Per-variable expansion terms: (k, coefficient) lists.
    std::vector<std::vector<std::pair<int, mpz_class>>> varterms(n);
    for (size_t v = 0; v < n; ++v) {
      const int b = ma.beta[v];   // derivative power passing through
      const int a = mb.alpha[v];  // coordinate power being passed
      const int kmax = std::min(b, a >= 0 ? a : b);
      for (int k = 0; k <= kmax; ++k) {
        mpz_class f = binomial(b, k) * falling_factorial(a, k);
        if (f != 0) varterms[v].emplace_back(k, f);
      }
    }
    // Cartesian product over variables.
    std::vector<size_t> idx(n, 0);
    for (;;) {
      mpz_class factor = 1;
      MonKey m = base;
      for (size_t v = 0; v < n; ++v) {
        const auto& [k, f] = varterms[v][idx[v]];
        factor *= f;
        m.alpha[v] = ma.alpha[v] + mb.alpha[v] - k;
        m.beta[v] = ma.beta[v] + mb.beta[v] - k;
      }
      out.add_term(m, c * Rational(factor));
      size_t v = 0;
      while (v < n && ++idx[v] == varterms[v].size()) idx[v++] = 0;
      if (v == n) break;
    }
  }

 private:
  void check_key(const MonKey& m) const {
    if (m.alpha.size() != n_ || m.beta.size() != n_)
      throw std::invalid_argument("WeylOp: monomial arity mismatch");
    if (m.row >= r_ || m.col >= r_)
      throw std::invalid_argument("WeylOp: matrix index out of range");
    for (int b : m.beta)
      if (b < 0) throw std::logic_error("WeylOp: negative derivative power");
    if (!laurent_)
      for (int a : m.alpha)
        if (a < 0)
          throw std::invalid_argument(
              "WeylOp: negative coordinate power in polynomial mode");
  }
  void check_compatible(const WeylOp& o) const {
    if (n_ != o.n_ || r_ != o.r_)
      throw std::invalid_argument("WeylOp: dimension mismatch");
  }

  unsigned n_ = 1, r_ = 1;
  bool laurent_ = false;
  std::map<MonKey, Rational> terms_;
};

// A sparse section vector: r components of (Laurent) polynomials in n
// variables.  Serves as the independent oracle for the operator product.
class PolySec {
 public:
  // key = (exponent vector, component index)
  using Key = std::pair<std::vector<int>, unsigned>;

  PolySec(unsigned n, unsigned r, bool laurent = false)
      : n_(n), r_(r), laurent_(laurent) {}

  static PolySec monomial(const std::vector<int>& exps, unsigned component,
                          unsigned n, unsigned r, bool laurent = false) {
    PolySec s(n, r, laurent);
    s.add_term(exps, component, 1);
    return s;
  }

  void add_term(const std::vector<int>& exps, unsigned component,
                const Rational& c) {
    if (exps.size() != n_ || component >= r_)
      throw std::invalid_argument("PolySec: bad term");
    if (!laurent_)
      for (int e : exps)
        if (e < 0) throw std::invalid_argument("PolySec: negative exponent");
    if (hochlef::is_zero(c)) return;
    auto it = terms_.find({exps, component});
    if (it == terms_.end()) {
      terms_.emplace(Key{exps, component}, c);
    } else {
      it->second += c;
      if (hochlef::is_zero(it->second)) terms_.erase(it);
    }
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool operator==(const PolySec& o) const {
    return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
  }
  unsigned vars() const { return n_; }
  unsigned rank() const { return r_; }
  bool laurent() const { return laurent_; }

 private:
  unsigned n_, r_;
  bool laurent_;
  std::map<Key, Rational> terms_;
};

// Standard action of a differential operator on a section vector.
inline PolySec apply(const WeylOp& op, const PolySec& f) {
  if (op.vars() != f.vars() || op.rank() != f.rank())
    throw std::invalid_argument("apply: dimension mismatch");
  if (op.laurent() && !f.laurent())
    throw std::invalid_argument("apply: Laurent operator on polynomial section");
  PolySec out(f.vars(), f.rank(), f.laurent() || op.laurent());
  for (const auto& [m, c] : op.terms()) {
    for (const auto& [key, v] : f.terms()) {
      const auto& [exps, comp] = key;
      if (comp != m.col) continue;
      mpz_class factor = 1;
      std::vector<int> e(exps);
      for (unsigned k = 0; k < f.vars(); ++k) {
        factor *= falling_factorial(exps[k], m.beta[k]);
        if (factor == 0) break;
        e[k] = exps[k] - m.beta[k] + m.alpha[k];
      }
      if (factor == 0) continue;
      out.add_term(e, m.row, c * v * Rational(factor));
    }
  }
  return out;
}

}  // namespace hochlef
