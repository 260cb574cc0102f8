#ifndef NOREGRET_SIMPLEX_HPP_
#define NOREGRET_SIMPLEX_HPP_

// dense two-phase simplex with Bland's rule, templated on the scalar.
// with Rational it is exact and immune to cycling; with double it uses
// small tolerances and is intended for the same small/medium problems.
// all variables are implicitly >= 0; callers encode free variables or
// upper bounds as explicit rows.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "noregret/rational.hpp"

namespace noregret {

enum class Rel { kLe, kGe, kEq };

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

template <class S>
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  S objective{};
  std::vector<S> x;  // original variables only
};

template <class S>
class SimplexSolver {
 public:
  // maximize c.x subject to rows; n fixed by c.size()
  explicit SimplexSolver(std::vector<S> c) : c_(std::move(c)) {}

  void add_row(std::vector<S> coeffs, Rel rel, S rhs) {
    if (coeffs.size() != c_.size())
      throw std::invalid_argument("simplex: row width mismatch");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
  }

  LpResult<S> solve() {
    build_tableau();
    // phase 1: maximize -(sum of artificials)
    if (!artificial_.empty()) {
      obj_.assign(ncols_, S(0));
      obj_val_ = S(0);
      for (size_t j : artificial_) obj_[j] = S(-1);
      for (size_t i = 0; i < nrows_; ++i) zero_basic(i);
      iterate(/*allow_artificial=*/true);
      if (is_neg(obj_val_)) return {LpStatus::kInfeasible, S(0), {}};
      evict_artificials();
    }
    // phase 2: maximize the real objective
    obj_.assign(ncols_, S(0));
    obj_val_ = S(0);
    for (size_t j = 0; j < c_.size(); ++j) obj_[j] = c_[j];
    for (size_t i = 0; i < nrows_; ++i) zero_basic(i);
    if (!iterate(/*allow_artificial=*/false))
      return {LpStatus::kUnbounded, S(0), {}};
    LpResult<S> res;
    res.status = LpStatus::kOptimal;
    res.objective = obj_val_;
    res.x.assign(c_.size(), S(0));
    for (size_t i = 0; i < nrows_; ++i)
      if (basis_[i] < c_.size()) res.x[basis_[i]] = tab_[i][ncols_];
    return res;
  }

 private:
  struct Row {
    std::vector<S> coeffs;
    Rel rel;
    S rhs;
  };

  static constexpr bool kExact = scalar_traits<S>::exact;

  static S tol() {
    if constexpr (kExact) return S(0);
    return S(1e-9);
  }

  static bool is_pos(const S& v) { return v > tol(); }
  static bool is_neg(const S& v) { return v < -tol(); }

  void build_tableau() {
    const size_t n = c_.size();
    size_t extra = 0;
    for (const auto& r : rows_) {
      // after sign-normalizing rhs >= 0: <= gets slack, >= gets
      // surplus + artificial, = gets artificial
      Rel rel = r.rel;
      if (is_neg(r.rhs)) rel = flip(rel);
      extra += (rel == Rel::kGe) ? 2 : 1;
    }
    nrows_ = rows_.size();
    ncols_ = n + extra;
    tab_.assign(nrows_, std::vector<S>(ncols_ + 1, S(0)));
    basis_.assign(nrows_, 0);
    artificial_.clear();
    size_t next = n;
    for (size_t i = 0; i < nrows_; ++i) {
      const Row& r = rows_[i];
      S sign = is_neg(r.rhs) ? S(-1) : S(1);
      Rel rel = is_neg(r.rhs) ? flip(r.rel) : r.rel;
      for (size_t j = 0; j < n; ++j) tab_[i][j] = sign * r.coeffs[j];
      tab_[i][ncols_] = sign * r.rhs;
      if (rel == Rel::kLe) {
        tab_[i][next] = S(1);
        basis_[i] = next++;
      } else if (rel == Rel::kGe) {
        tab_[i][next] = S(-1);  // surplus
        ++next;
        tab_[i][next] = S(1);  // artificial
        basis_[i] = next;
        artificial_.push_back(next++);
      } else {
        tab_[i][next] = S(1);
        basis_[i] = next;
        artificial_.push_back(next++);
      }
    }
  }

  static Rel flip(Rel r) {
    if (r == Rel::kLe) return Rel::kGe;
    if (r == Rel::kGe) return Rel::kLe;
    return Rel::kEq;
  }

  bool is_artificial(size_t j) const {
    for (size_t a : artificial_)
      if (a == j) return true;
    return false;
  }

  // subtract obj_[basis_[i]] * row_i so the basic column reads zero
  void zero_basic(size_t i) {
    const S f = obj_[basis_[i]];
    if (f == S(0)) return;
    for (size_t j = 0; j < ncols_; ++j) obj_[j] -= f * tab_[i][j];
    obj_val_ += f * tab_[i][ncols_];
  }

  void pivot(size_t r, size_t col) {
    const S p = tab_[r][col];
    for (size_t j = 0; j <= ncols_; ++j) tab_[r][j] /= p;
    for (size_t i = 0; i < nrows_; ++i) {
      if (i == r) continue;
      const S f = tab_[i][col];
      if (f == S(0)) continue;
      for (size_t j = 0; j <= ncols_; ++j) tab_[i][j] -= f * tab_[r][j];
    }
    const S f = obj_[col];
    if (f != S(0)) {
      for (size_t j = 0; j < ncols_; ++j) obj_[j] -= f * tab_[r][j];
      obj_val_ += f * tab_[r][ncols_];
    }
    basis_[r] = col;
  }

  // returns false when unbounded
  bool iterate(bool allow_artificial) {
    const size_t cap = 20000 + 200 * (nrows_ + ncols_);
    for (size_t step = 0; step < cap; ++step) {
      // Bland: smallest improving column index
      size_t col = ncols_;
      for (size_t j = 0; j < ncols_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (is_pos(obj_[j])) {
          col = j;
          break;
        }
      }
      if (col == ncols_) return true;  // optimal
      // ratio test; ties -> smallest basis index (Bland)
      size_t row = nrows_;
      S best{};
      for (size_t i = 0; i < nrows_; ++i) {
        if (!is_pos(tab_[i][col])) continue;
        S ratio = tab_[i][ncols_] / tab_[i][col];
        if (row == nrows_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[row])) {
          row = i;
          best = ratio;
        }
      }
      if (row == nrows_) return false;  // unbounded
      pivot(row, col);
    }
    throw std::runtime_error("simplex: iteration cap exceeded");
  }

  // after a feasible phase 1, pivot leftover artificial basics out on any
  // usable column; rows with none are redundant and harmless
  void evict_artificials() {
    for (size_t i = 0; i < nrows_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (size_t j = 0; j < ncols_; ++j) {
        if (is_artificial(j)) continue;
        if (tab_[i][j] != S(0) && (kExact || is_pos(tab_[i][j]) ||
                                   is_neg(tab_[i][j]))) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<S> c_;
  std::vector<Row> rows_;
  std::vector<std::vector<S>> tab_;
  std::vector<S> obj_;
  S obj_val_{};
  std::vector<size_t> basis_;
  std::vector<size_t> artificial_;
  size_t nrows_ = 0;
  size_t ncols_ = 0;
};

// convenience wrapper
template <class S>
LpResult<S> solve_lp(const std::vector<S>& c,
                     const std::vector<std::vector<S>>& coeffs,
                     const std::vector<Rel>& rels, const std::vector<S>& rhs) {
  if (coeffs.size() != rels.size() || coeffs.size() != rhs.size())
    throw std::invalid_argument("solve_lp: row count mismatch");
  SimplexSolver<S> solver(c);
  for (size_t i = 0; i < coeffs.size(); ++i)
    solver.add_row(coeffs[i], rels[i], rhs[i]);
  return solver.solve();
}

// exact rank via Gauss elimination; used for extreme-point certificates
inline int rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace noregret

#endif  // NOREGRET_SIMPLEX_HPP_
