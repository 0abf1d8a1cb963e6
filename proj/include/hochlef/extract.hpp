// Expressing Hochschild cycles as lambda * reference + boundary by exact
// linear algebra over finite monomial windows, plus the constructive
// per-monomial commutator decomposition in the n = 1 Weyl algebra.
//
// The solver is untrusted: every witness it produces is re-verified by exact
// chain arithmetic before a result is returned.  UNSOLVABLE is always a
// statement about a window, never about a homology class; nonexactness is
// only ever reported as a rank defect that is stable under window growth.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "hochlef/chain.hpp"
#include "hochlef/linsolve.hpp"

namespace hochlef {

struct TruncationWindow {
  int max_coeff_deg = 4;  // bound on sum of positive coordinate exponents
  int max_order = 4;      // bound on sum of derivative exponents
  int laurent_bound = 0;  // each coordinate exponent >= -laurent_bound

  bool contains(const MonKey& m) const {
    if (m.coeff_degree() > max_coeff_deg) return false;
    if (m.order() > max_order) return false;
    for (int a : m.alpha)
      if (a < -laurent_bound) return false;
    return true;
  }
  bool contains(const Chain& c) const {
    for (const auto& [w, coeff] : c.terms())
      for (const auto& m : w)
        if (!contains(m)) return false;
    return true;
  }
  // Smallest window covering both *this and the chain's support.
  TruncationWindow enveloped(const Chain& c) const {
    TruncationWindow w = *this;
    w.max_coeff_deg = std::max(w.max_coeff_deg, c.max_coeff_degree());
    w.max_order = std::max(w.max_order, c.max_order());
    w.laurent_bound = std::max(w.laurent_bound, c.max_laurent_depth());
    return w;
  }
};

struct GrowthSchedule {
  int max_rounds = 4;
  int coeff_deg_step = 2;
  int order_step = 2;
  int laurent_factor = 2;

  TruncationWindow grown(TruncationWindow w, int rounds) const {
    for (int i = 0; i < rounds; ++i) {
      w.max_coeff_deg += coeff_deg_step;
      w.max_order += order_step;
      w.laurent_bound =
          w.laurent_bound == 0 ? 0 : w.laurent_bound * laurent_factor;
    }
    return w;
  }
};

struct SolveStats {
  std::size_t rows = 0;       // generator words of degree q+1
  std::size_t rows_used = 0;  // rows consumed before the solve finished
  std::size_t cols = 0;       // degree-q words spanned
  std::size_t nnz = 0;        // nonzeros over all boundary rows
  std::size_t rank = 0;
};

// --- constructive commutator decomposition ---------------------------------

// Writes D as sum_i [x_i, y_i] in M_r(D_1^pol), one pair per monomial:
//   y^a d^b, a > 0  ->  (d, y^{a+1} d^b / (a+1))
//   d^b, b > 0      ->  (-y, d^{b+1} / (b+1))
//   constant c      ->  (c d, y)
// Off-diagonal matrix monomials use [E_ij u, E_jj] = E_ij u.
inline std::vector<std::pair<WeylOp, WeylOp>> commutator_decompose(
    const WeylOp& D) {
  if (D.vars() != 1)
    throw std::invalid_argument("commutator_decompose: needs n = 1");
  if (D.laurent())
    throw std::invalid_argument(
        "commutator_decompose: Laurent coefficients unsupported (the "
        "obstruction class lives there)");
  const unsigned r = D.rank();
  std::vector<std::pair<WeylOp, WeylOp>> pairs;
  for (const auto& [m, c] : D.terms()) {
    const int a = m.alpha[0], b = m.beta[0];
    if (m.row != m.col) {
      pairs.emplace_back(WeylOp::monomial(m, c, 1, r),
                         WeylOp::matrix_unit(m.col, m.col, 1, r));
      continue;
    }
    const unsigned i = m.row;
    auto mono = [&](int aa, int bb, const Rational& cc) {
      MonKey k{{aa}, {bb}, i, i};
      return WeylOp::monomial(k, cc, 1, r);
    };
    if (a > 0) {
      pairs.emplace_back(mono(0, 1, 1), mono(a + 1, b, c / Rational(a + 1)));
    } else if (b > 0) {
      pairs.emplace_back(mono(1, 0, -1), mono(0, b + 1, c / Rational(b + 1)));
    } else {
      pairs.emplace_back(mono(0, 1, c), mono(1, 0, 1));
    }
  }
  return pairs;
}

// Same decomposition as a 1-chain sum_i (x_i, y_i), so b(chain) = D.
inline Chain commutator_decompose_chain(const WeylOp& D) {
  Chain out(D.vars(), D.rank(), D.laurent(), 1);
  for (const auto& [x, y] : commutator_decompose(D))
    for (const auto& [mx, cx] : x.terms())
      for (const auto& [my, cy] : y.terms()) out.add_word({mx, my}, cx * cy);
  return out;
}

// --- windowed boundary systems ----------------------------------------------

namespace detail {

inline void enumerate_exponents(int vars, int lo, int pos_budget,
                                std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars) {
    out.push_back(cur);
    return;
  }
  for (int e = lo; e <= pos_budget; ++e) {
    cur.push_back(e);
    enumerate_exponents(vars, lo, pos_budget - std::max(e, 0), cur, out);
    cur.pop_back();
  }
}

inline std::vector<MonKey> enumerate_monomials(unsigned n, unsigned r,
                                               const TruncationWindow& w) {
  std::vector<std::vector<int>> alphas, betas;
  std::vector<int> cur;
  enumerate_exponents(static_cast<int>(n), -w.laurent_bound, w.max_coeff_deg,
                      cur, alphas);
  cur.clear();
  enumerate_exponents(static_cast<int>(n), 0, w.max_order, cur, betas);
  std::vector<MonKey> mons;
  for (const auto& a : alphas)
    for (const auto& b : betas)
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j) mons.push_back(MonKey{a, b, i, j});
  std::sort(mons.begin(), mons.end());
  return mons;
}

// All normalized words of the given tensor length over `mons` whose total
// weight lies in `weights`; the pivot monomial is excluded from slots >= 1.
inline void enumerate_words(const std::vector<MonKey>& mons, unsigned length,
                            const std::set<std::vector<int>>& weights,
                            const Chain& proto, std::vector<Word>& out) {
  if (mons.empty() || length == 0) return;
  const size_t n = mons[0].alpha.size();
  std::vector<int> wmin(n, 0), wmax(n, 0);
  for (const auto& m : mons) {
    auto wt = m.weight();
    for (size_t i = 0; i < n; ++i) {
      wmin[i] = std::min(wmin[i], wt[i]);
      wmax[i] = std::max(wmax[i], wt[i]);
    }
  }
  Word cur;
  std::vector<int> acc(n, 0);
  auto feasible = [&](unsigned remaining) {
    for (const auto& target : weights) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) {
        int lo = acc[i] + static_cast<int>(remaining) * wmin[i];
        int hi = acc[i] + static_cast<int>(remaining) * wmax[i];
        ok = target[i] >= lo && target[i] <= hi;
      }
      if (ok) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, unsigned depth) -> void {
    if (depth == length) {
      if (weights.count(acc)) out.push_back(cur);
      return;
    }
    if (!feasible(length - depth)) return;
    for (const auto& m : mons) {
      if (depth > 0 && proto.is_pivot(m)) continue;
      auto wt = m.weight();
      for (size_t i = 0; i < n; ++i) acc[i] += wt[i];
      cur.push_back(m);
      self(self, depth + 1);
      cur.pop_back();
      for (size_t i = 0; i < n; ++i) acc[i] -= wt[i];
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// Streaming solver for the boundary map from windowed (q+1)-words onto
// degree-q chains, restricted to the Euler-weight blocks of the supplied
// target chains.  Boundary rows of generator words are fed into a row
// echelon in a fixed enumeration order; the targets' residuals are kept
// reduced at every step, so a caller can stop as soon as its residual
// condition is reached instead of eliminating the whole window.
class BoundarySolver {
 public:
  BoundarySolver(unsigned n, unsigned r, bool laurent, int target_degree,
                 const TruncationWindow& window,
                 const std::vector<const Chain*>& targets, bool track)
      : n_(n), r_(r), laurent_(laurent), degree_(target_degree), ech_(track) {
    std::set<std::vector<int>> weights;
    for (const Chain* t : targets) {
      auto ws = t->word_weights();
      weights.insert(ws.begin(), ws.end());
    }
    if (weights.empty()) weights.insert(std::vector<int>(n, 0));
    auto mons = detail::enumerate_monomials(n, r, window);
    Chain proto(n, r, laurent, 0);
    detail::enumerate_words(mons, target_degree + 2, weights, proto, gens_);

    // Boundary images, then a deterministic lexicographic column indexing.
    images_.reserve(gens_.size());
    std::set<Word> colset;
    for (const auto& g : gens_) {
      Chain one(n, r, laurent, target_degree + 1);
      one.add_word(g, 1);
      Chain img = boundary(one);
      for (const auto& [w, c] : img.terms()) colset.insert(w);
      images_.push_back(std::move(img));
    }
    for (const Chain* t : targets)
      for (const auto& [w, c] : t->terms()) colset.insert(w);
    columns_.assign(colset.begin(), colset.end());
    for (std::uint32_t i = 0; i < columns_.size(); ++i) colid_[columns_[i]] = i;
    stats_.rows = gens_.size();
    stats_.cols = columns_.size();
    for (const Chain* t : targets)
      tracked_.push_back({vectorize(*t), SparseVec{}});
  }

  struct Tracked {
    SparseVec residual;
    SparseVec combo;  // over generator-word tags
  };

  const Tracked& tracked(size_t i) const { return tracked_[i]; }
  size_t generator_count() const { return gens_.size(); }
  bool exhausted() const { return next_ == gens_.size(); }

  // Feeds the next generator row; keeps target residuals fully reduced.
  void step() {
    size_t i = next_++;
    SparseVec row = vectorize(images_[i]);
    stats_.nnz += row.size();
    auto added = ech_.add_row(std::move(row), static_cast<std::uint32_t>(i));
    stats_.rank = ech_.rank();
    stats_.rows_used = next_;
    if (!added.independent) return;
    for (auto& t : tracked_) {
      const Rational* c = coeff_at(t.residual, added.pivot);
      if (!c) continue;
      Rational f = -*c;
      axpy(t.residual, f, ech_.row(added.index));
      // decomposition semantics: residual moves by f*row, combo by -f*combo
      axpy(t.combo, -f, ech_.combo(added.index));
    }
  }

  void run_all() {
    while (!exhausted()) step();
  }

  Chain combo_to_chain(const SparseVec& combo) const {
    Chain out(n_, r_, laurent_, degree_ + 1);
    for (const auto& [tag, c] : combo) out.add_word(gens_[tag], c);
    return out;
  }

  const SolveStats& stats() const { return stats_; }

 private:
  SparseVec vectorize(const Chain& c) const {
    SparseVec v;
    v.reserve(c.terms().size());
    for (const auto& [w, coeff] : c.terms()) {
      auto it = colid_.find(w);
      if (it == colid_.end())
        throw std::logic_error("BoundarySolver: chain outside column span");
      v.emplace_back(it->second, coeff);
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  unsigned n_, r_;
  bool laurent_;
  int degree_;
  std::vector<Word> gens_;
  std::vector<Chain> images_;
  std::vector<Word> columns_;
  std::map<Word, std::uint32_t> colid_;
  RowEchelon ech_;
  std::vector<Tracked> tracked_;
  size_t next_ = 0;
  SolveStats stats_;
};

// --- express_as_boundary -----------------------------------------------------

struct ExpressResult {
  bool solved = false;  // false means UNSOLVABLE *within this window*
  Chain witness;
  SolveStats stats;
};

inline ExpressResult express_as_boundary(const Chain& target,
                                         const TruncationWindow& window) {
  if (target.degree() >= 1 && !boundary(target).is_zero())
    throw std::invalid_argument("express_as_boundary: target is not a cycle");
  TruncationWindow w = window.enveloped(target);
  ExpressResult res;
  if (target.is_zero()) {
    res.solved = true;
    res.witness = Chain(target.vars(), target.rank(), target.laurent(),
                        target.degree() + 1);
    return res;
  }
  BoundarySolver sys(target.vars(), target.rank(), target.laurent(),
                     target.degree(), w, {&target}, true);
  while (!sys.exhausted() && !sys.tracked(0).residual.empty()) sys.step();
  res.stats = sys.stats();
  if (!sys.tracked(0).residual.empty()) return res;  // UNSOLVABLE(window)
  res.witness = sys.combo_to_chain(sys.tracked(0).combo);
  if (!(boundary(res.witness) == target))
    throw std::logic_error("express_as_boundary: witness failed verification");
  res.solved = true;
  return res;
}

// Certified rank-defect probe: the target stays outside the boundary image
// across consecutive growth rounds.  Reported as a window statement only.
struct RankDefectRound {
  TruncationWindow window;
  SolveStats stats;
  bool in_image = false;
};
struct RankDefectReport {
  std::vector<RankDefectRound> rounds;
  bool stable_defect = false;
};

inline RankDefectReport certify_rank_defect(const Chain& target,
                                            const TruncationWindow& start,
                                            const GrowthSchedule& schedule,
                                            int rounds = 2) {
  RankDefectReport rep;
  for (int i = 0; i < rounds; ++i) {
    TruncationWindow w = schedule.grown(start, i).enveloped(target);
    BoundarySolver sys(target.vars(), target.rank(), target.laurent(),
                       target.degree(), w, {&target}, false);
    sys.run_all();  // the defect claim needs the full windowed rank
    rep.rounds.push_back({w, sys.stats(), sys.tracked(0).residual.empty()});
  }
  rep.stable_defect =
      rep.rounds.size() >= 2 &&
      std::none_of(rep.rounds.begin(), rep.rounds.end(),
                   [](const RankDefectRound& r) { return r.in_image; });
  return rep;
}

// --- extract_class -----------------------------------------------------------

enum class ExtractStatus {
  Success,
  CalibrationError,  // reference cycle is exact inside the window
  WindowExhausted,   // growth schedule ran out; inconclusive
};

struct ClassResult {
  ExtractStatus status = ExtractStatus::WindowExhausted;
  Rational lambda = 0;
  Chain witness;            // b(witness) = cycle - lambda * reference
  TruncationWindow window;  // window of the successful round
  SolveStats stats;
  int rounds_used = 0;
};

namespace detail {
// Residuals stay reduced throughout, so once res_c = lambda * res_r the
// equality persists under further elimination and the lambda is final.
inline bool proportional(const SparseVec& rc, const SparseVec& rr,
                         Rational& lambda) {
  if (rc.empty()) {
    lambda = 0;
    return true;
  }
  if (rr.empty()) return false;
  if (rc.size() != rr.size() || rc.front().first != rr.front().first)
    return false;
  Rational l = rc.front().second / rr.front().second;
  for (size_t i = 0; i < rc.size(); ++i)
    if (rc[i].first != rr[i].first || rc[i].second != l * rr[i].second)
      return false;
  lambda = l;
  return true;
}
}  // namespace detail

inline ClassResult extract_class(const Chain& cycle, const Chain& reference,
                                 const TruncationWindow& window,
                                 const GrowthSchedule& schedule = {}) {
  if (cycle.degree() != reference.degree())
    throw std::invalid_argument("extract_class: degree mismatch");
  if (cycle.degree() >= 1 &&
      (!boundary(cycle).is_zero() || !boundary(reference).is_zero()))
    throw std::invalid_argument("extract_class: inputs must be cycles");
  ClassResult res;
  for (int round = 0; round <= schedule.max_rounds; ++round) {
    TruncationWindow w =
        schedule.grown(window, round).enveloped(cycle).enveloped(reference);
    BoundarySolver sys(cycle.vars(), cycle.rank(), cycle.laurent(),
                       cycle.degree(), w, {&cycle, &reference}, true);
    Rational lambda = 0;
    bool solved = false, calibration_dead = false;
    for (;;) {
      const auto& rc = sys.tracked(0).residual;
      const auto& rr = sys.tracked(1).residual;
      if (rr.empty() && rc.empty()) {
        // reference became exact before separating the cycle: unusable
        calibration_dead = true;
        break;
      }
      if (!rr.empty() && detail::proportional(rc, rr, lambda)) {
        solved = true;
        break;
      }
      if (rr.empty()) {
        calibration_dead = true;
        break;
      }
      if (sys.exhausted()) break;
      sys.step();
    }
    res.stats = sys.stats();
    res.window = w;
    res.rounds_used = round + 1;
    if (calibration_dead) {
      res.status = ExtractStatus::CalibrationError;
      return res;
    }
    if (!solved) continue;  // window too small; grow
    // witness = combo(cycle) - lambda * combo(reference)
    SparseVec combo = sys.tracked(0).combo;
    axpy(combo, -lambda, sys.tracked(1).combo);
    Chain witness = sys.combo_to_chain(combo);
    if (!(boundary(witness) == cycle - lambda * reference))
      throw std::logic_error("extract_class: witness failed verification");
    res.status = ExtractStatus::Success;
    res.lambda = lambda;
    res.witness = witness;
    return res;
  }
  return res;
}

}  // namespace hochlef
