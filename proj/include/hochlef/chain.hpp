// Normalized Hochschild chains of M_r(D_n): rational combinations of tensor
// words (a_0,...,a_q) whose slots are normal-ordered monomials.  Slots past
// the first live in A/C1; the unit 1 = sum_i E_ii is eliminated against the
// pivot monomial E_{r-1,r-1}, so words form an honest basis and equality is
// sparse-map equality.
#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "hochlef/weyl.hpp"

namespace hochlef {

using Word = std::vector<MonKey>;

class Chain {
 public:
  Chain() = default;
  Chain(unsigned n, unsigned r, bool laurent, int degree)
      : n_(n), r_(r), laurent_(laurent), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("Chain: negative degree");
  }

  unsigned vars() const { return n_; }
  unsigned rank() const { return r_; }
  bool laurent() const { return laurent_; }
  int degree() const { return degree_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  static Chain from_op(const WeylOp& op) {
    Chain c(op.vars(), op.rank(), op.laurent(), 0);
    for (const auto& [m, coeff] : op.terms()) c.add_word({m}, coeff);
    return c;
  }

  // The degree-0 chain back as an operator.
  WeylOp to_op() const {
    if (degree_ != 0) throw std::domain_error("Chain::to_op: degree > 0");
    WeylOp op(n_, r_, laurent_);
    for (const auto& [w, c] : terms_) op.add_term(w[0], c);
    return op;
  }

  // Inserts a word, reducing slots >= 1 modulo the unit.  The unit is
  // sum_i E_ii (x) 1; the pivot monomial E_{r-1,r-1} (x) 1 is rewritten as
  // 1 - sum_{i<r-1} E_ii (x) 1, which kills scalar entries for r = 1 and
  // canonicalizes them for r > 1.
  void add_word(const Word& w, const Rational& c) {
    if (static_cast<int>(w.size()) != degree_ + 1)
      throw std::invalid_argument("Chain: word length != degree + 1");
    if (hochlef::is_zero(c)) return;
    for (size_t j = 1; j < w.size(); ++j) {
      if (is_pivot(w[j])) {
        if (r_ == 1) return;  // scalar slot: normalized to zero
        for (unsigned i = 0; i + 1 < r_; ++i) {
          Word w2 = w;
          w2[j].row = w2[j].col = i;
          add_word(w2, -c);
        }
        return;
      }
    }
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second += c;
      if (hochlef::is_zero(it->second)) terms_.erase(it);
    }
  }

  Chain& operator+=(const Chain& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_word(w, c);
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_word(w, -c);
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rational& s, Chain c) {
    if (hochlef::is_zero(s)) {
      c.terms_.clear();
      return c;
    }
    for (auto& [w, v] : c.terms_) v *= s;
    return c;
  }
  Chain operator-() const { return Rational(-1) * *this; }

  bool operator==(const Chain& o) const {
    return n_ == o.n_ && r_ == o.r_ && degree_ == o.degree_ &&
           terms_ == o.terms_;
  }

  int max_coeff_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_)
      for (const auto& m : w) d = std::max(d, m.coeff_degree());
    return d;
  }
  int max_order() const {
    int d = 0;
    for (const auto& [w, c] : terms_)
      for (const auto& m : w) d = std::max(d, m.order());
    return d;
  }
  int max_laurent_depth() const {
    int d = 0;
    for (const auto& [w, c] : terms_)
      for (const auto& m : w) d = std::max(d, m.laurent_depth());
    return d;
  }
  // Distinct total Euler weights of the words; the Hochschild differential
  // preserves them, so linear solves split along this set.
  std::set<std::vector<int>> word_weights() const {
    std::set<std::vector<int>> ws;
    for (const auto& [w, c] : terms_) ws.insert(word_weight(w));
    return ws;
  }
  static std::vector<int> word_weight(const Word& w) {
    std::vector<int> total(w.empty() ? 0 : w[0].alpha.size(), 0);
    for (const auto& m : w) {
      auto wt = m.weight();
      for (size_t i = 0; i < total.size(); ++i) total[i] += wt[i];
    }
    return total;
  }

  bool is_pivot(const MonKey& m) const {
    return m.row == r_ - 1 && m.col == r_ - 1 && m.coeff_degree() == 0 &&
           m.laurent_depth() == 0 && m.order() == 0;
  }

 private:
  void check_compatible(const Chain& o) const {
    if (n_ != o.n_ || r_ != o.r_ || degree_ != o.degree_)
      throw std::invalid_argument("Chain: incompatible chains");
  }

  unsigned n_ = 1, r_ = 1;
  bool laurent_ = false;
  int degree_ = 0;
  std::map<Word, Rational> terms_;
};

namespace detail {
// Term list of a monomial product, reusing the Weyl normal-ordering kernel.
inline void mul_into_words(const MonKey& a, const MonKey& b, unsigned n,
                           unsigned r, bool laurent, const Rational& c,
                           const Word& prefix, const Word& suffix, Chain& out) {
  WeylOp prod(n, r, laurent);
  WeylOp::mul_monomials(a, b, c, prod);
  Word w;
  w.reserve(prefix.size() + 1 + suffix.size());
  for (const auto& [m, coeff] : prod.terms()) {
    w.assign(prefix.begin(), prefix.end());
    w.push_back(m);
    w.insert(w.end(), suffix.begin(), suffix.end());
    out.add_word(w, coeff);
  }
}
}  // namespace detail

// Hochschild differential: b(a_0,...,a_q) = sum_{j<q} (-1)^j (..a_j a_{j+1}..)
// + (-1)^q (a_q a_0, a_1, ..., a_{q-1}).
inline Chain boundary(const Chain& c) {
  if (c.degree() < 1)
    throw std::domain_error("boundary: defined for degree >= 1");
  const int q = c.degree();
  Chain out(c.vars(), c.rank(), c.laurent(), q - 1);
  for (const auto& [w, coeff] : c.terms()) {
    for (int j = 0; j < q; ++j) {
      Rational s = (j % 2 == 0) ? coeff : -coeff;
      Word prefix(w.begin(), w.begin() + j);
      Word suffix(w.begin() + j + 2, w.end());
      detail::mul_into_words(w[j], w[j + 1], c.vars(), c.rank(), c.laurent(),
                             s, prefix, suffix, out);
    }
    Rational s = (q % 2 == 0) ? coeff : -coeff;
    Word suffix(w.begin() + 1, w.end() - 1);
    detail::mul_into_words(w[q], w[0], c.vars(), c.rank(), c.laurent(), s, {},
                           suffix, out);
  }
  return out;
}

// Canonical cycle generating HH_{2n}:
//   c_{2n} = sum_{pi in S_2n} sgn(pi) (1, u_pi(1), ..., u_pi(2n)),
// u_{2j-1} = d_j, u_{2j} = y_j, entries tensored with Id_r.
inline Chain generator_c2n(unsigned n, unsigned r = 1, bool laurent = false) {
  if (n < 1) throw std::invalid_argument("generator_c2n: n >= 1");
  Chain out(n, r, laurent, 2 * n);
  std::vector<MonKey> u(2 * n);
  for (unsigned j = 0; j < n; ++j) {
    MonKey der{std::vector<int>(n, 0), std::vector<int>(n, 0), 0, 0};
    der.beta[j] = 1;
    MonKey crd{std::vector<int>(n, 0), std::vector<int>(n, 0), 0, 0};
    crd.alpha[j] = 1;
    u[2 * j] = der;      // u_{2j-1} in 1-based numbering
    u[2 * j + 1] = crd;  // u_{2j}
  }
  std::vector<unsigned> perm(2 * n);
  for (unsigned i = 0; i < 2 * n; ++i) perm[i] = i;
  const MonKey one{std::vector<int>(n, 0), std::vector<int>(n, 0), 0, 0};
  do {
    int sgn = 1;
    for (unsigned i = 0; i < perm.size(); ++i)
      for (unsigned j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) sgn = -sgn;
    // expand Id_r on every slot
    std::vector<unsigned> idx(2 * n + 1, 0);
    for (;;) {
      Word w(2 * n + 1);
      w[0] = one;
      w[0].row = w[0].col = idx[0];
      for (unsigned t = 0; t < 2 * n; ++t) {
        w[t + 1] = u[perm[t]];
        w[t + 1].row = w[t + 1].col = idx[t + 1];
      }
      out.add_word(w, sgn);
      size_t v = 0;
      while (v < idx.size() && ++idx[v] == r) idx[v++] = 0;
      if (v == idx.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// L_a(a_0,...,a_q) = sum_j (a_0,...,[a, a_j],...,a_q); degree preserving.
inline Chain lie_action(const WeylOp& a, const Chain& c) {
  Chain out(c.vars(), c.rank(), c.laurent() || a.laurent(), c.degree());
  for (const auto& [w, coeff] : c.terms()) {
    for (size_t j = 0; j < w.size(); ++j) {
      WeylOp slot = WeylOp::monomial(w[j], 1, c.vars(), c.rank(),
                                     c.laurent() || a.laurent());
      WeylOp br = commutator(a, slot);
      for (const auto& [m, cc] : br.terms()) {
        Word w2 = w;
        w2[j] = m;
        out.add_word(w2, coeff * cc);
      }
    }
  }
  return out;
}

// Interior product: iota_a(a_0,...,a_q) = sum_{j=1}^{q+1} (-1)^j
// (a_0,...,a_{j-1},a,a_j,...,a_q).  With this sign convention the Cartan
// formula L_a = b iota_a + iota_a b holds on all degrees.
inline Chain insertion(const WeylOp& a, const Chain& c) {
  Chain out(c.vars(), c.rank(), c.laurent() || a.laurent(), c.degree() + 1);
  for (const auto& [w, coeff] : c.terms()) {
    for (size_t j = 1; j <= w.size(); ++j) {
      Rational s = (j % 2 == 0) ? coeff : -coeff;
      for (const auto& [m, cc] : a.terms()) {
        Word w2;
        w2.reserve(w.size() + 1);
        w2.assign(w.begin(), w.begin() + j);
        w2.push_back(m);
        w2.insert(w2.end(), w.begin() + j, w.end());
        out.add_word(w2, s * cc);
      }
    }
  }
  return out;
}

}  // namespace hochlef
