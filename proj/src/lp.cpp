#include "mink3/lp.hpp"

#include <utility>

#include "mink3/errors.hpp"

namespace mink3 {

void FeasibilityProblem::add_eq(std::vector<Scalar> coeffs, Scalar rhs) {
  if (static_cast<int>(coeffs.size()) != nvars_) throw InvalidInput("constraint arity mismatch");
  eqs_.push_back(Row{std::move(coeffs), std::move(rhs)});
}

void FeasibilityProblem::add_le(std::vector<Scalar> coeffs, Scalar rhs) {
  if (static_cast<int>(coeffs.size()) != nvars_) throw InvalidInput("constraint arity mismatch");
  les_.push_back(Row{std::move(coeffs), std::move(rhs)});
}

void FeasibilityProblem::add_lt(std::vector<Scalar> coeffs, Scalar rhs) {
  if (static_cast<int>(coeffs.size()) != nvars_) throw InvalidInput("constraint arity mismatch");
  lts_.push_back(Row{std::move(coeffs), std::move(rhs)});
}

// Equalities are eliminated exactly first (each independent equality removes
// one variable), leaving a low-dimensional pure-inequality system for the
// simplex. Inequalities are activated lazily against the current point.
std::optional<std::vector<Scalar>> FeasibilityProblem::solve() const {
  if (!lts_.empty()) return solve_with_strict();
  const int n = nvars_;

  // --- Gaussian elimination over the scalar field ---------------------
  std::vector<std::vector<Scalar>> aug;  // [coeffs | rhs]
  aug.reserve(eqs_.size());
  for (const Row& r : eqs_) {
    std::vector<Scalar> row = r.a;
    row.push_back(r.b);
    aug.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int c = 0; c < n && rank < aug.size(); ++c) {
    size_t prow = rank;
    while (prow < aug.size() && aug[prow][c].is_zero()) ++prow;
    if (prow == aug.size()) continue;
    std::swap(aug[rank], aug[prow]);
    const Scalar piv = aug[rank][c];
    for (int j = c; j <= n; ++j)
      if (!aug[rank][j].is_zero()) aug[rank][j] /= piv;
    for (size_t r2 = 0; r2 < aug.size(); ++r2) {
      if (r2 == rank || aug[r2][c].is_zero()) continue;
      const Scalar f = aug[r2][c];
      for (int j = c; j <= n; ++j)
        if (!aug[rank][j].is_zero()) aug[r2][j] -= f * aug[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (size_t r = rank; r < aug.size(); ++r)
    if (!aug[r][n].is_zero()) return std::nullopt;  // 0 = nonzero

  std::vector<int> free_cols;
  {
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  const int nf = static_cast<int>(free_cols.size());

  // x_pivot[r] = aug[r][n] - sum_f aug[r][free_f] * y_f
  auto assemble = [&](const std::vector<Scalar>& y) {
    std::vector<Scalar> x(n, Scalar(0));
    for (int f = 0; f < nf; ++f) x[free_cols[f]] = y[f];
    for (size_t r = 0; r < rank; ++r) {
      Scalar v = aug[r][n];
      for (int f = 0; f < nf; ++f)
        if (!aug[r][free_cols[f]].is_zero()) v -= aug[r][free_cols[f]] * y[f];
      x[pivot_col[r]] = std::move(v);
    }
    return x;
  };

  // --- reduce the inequalities to the free variables -------------------
  std::vector<Row> reduced;
  reduced.reserve(les_.size());
  for (const Row& r : les_) {
    std::vector<Scalar> coef(nf, Scalar(0));
    Scalar rhs = r.b;
    for (int f = 0; f < nf; ++f) coef[f] = r.a[free_cols[f]];
    for (size_t e = 0; e < rank; ++e) {
      const Scalar& ap = r.a[pivot_col[e]];
      if (ap.is_zero()) continue;
      rhs -= ap * aug[e][n];
      for (int f = 0; f < nf; ++f)
        if (!aug[e][free_cols[f]].is_zero()) coef[f] -= ap * aug[e][free_cols[f]];
    }
    bool all_zero = true;
    for (const Scalar& c : coef)
      if (!c.is_zero()) all_zero = false;
    if (all_zero) {
      if (rhs.sign() < 0) return std::nullopt;
      continue;
    }
    reduced.push_back(Row{std::move(coef), std::move(rhs)});
  }

  // --- lazy simplex over the free variables ----------------------------
  std::vector<char> active(reduced.size(), 0);
  std::vector<Row> act;
  std::vector<Scalar> y(nf, Scalar(0));
  for (;;) {
    bool grew = false;
    for (size_t i = 0; i < reduced.size(); ++i) {
      if (active[i]) continue;
      Scalar lhs(0);
      for (int j = 0; j < nf; ++j)
        if (!reduced[i].a[j].is_zero()) lhs += reduced[i].a[j] * y[j];
      if (lhs > reduced[i].b) {
        active[i] = 1;
        act.push_back(reduced[i]);
        grew = true;
      }
    }
    if (!grew) return assemble(y);
    auto sol = phase1(nf, {}, act);
    if (!sol) return std::nullopt;
    y = std::move(*sol);
  }
}

// Dense Phase-I tableau. Free variables are split x = u - v; every row is
// normalized to rhs >= 0; artificials close the initial basis; minimize
// their sum with Bland's rule (termination guaranteed).
std::optional<std::vector<Scalar>> FeasibilityProblem::phase1(int nvars, const std::vector<Row>& eqs,
                                                              const std::vector<Row>& les) {
  const size_t m = eqs.size() + les.size();
  if (m == 0) return std::vector<Scalar>(nvars, Scalar(0));

  const int nsplit = 2 * nvars;
  const int nslack = static_cast<int>(les.size());
  // worst case one artificial per row
  const int ncols = nsplit + nslack + static_cast<int>(m);

  std::vector<std::vector<Scalar>> tab(m, std::vector<Scalar>(ncols + 1, Scalar(0)));
  std::vector<int> basis(m, -1);
  int nart = 0;

  size_t r = 0;
  auto fill_vars = [&](const Row& row, int sgn) {
    for (int j = 0; j < nvars; ++j) {
      if (row.a[j].is_zero()) continue;
      const Scalar c = sgn > 0 ? row.a[j] : -row.a[j];
      tab[r][2 * j] = c;
      tab[r][2 * j + 1] = -c;
    }
  };
  for (const Row& row : eqs) {
    const int sgn = row.b.sign() >= 0 ? 1 : -1;
    fill_vars(row, sgn);
    tab[r][ncols] = sgn > 0 ? row.b : -row.b;
    const int art = nsplit + nslack + nart++;
    tab[r][art] = Scalar(1);
    basis[r] = art;
    ++r;
  }
  for (size_t i = 0; i < les.size(); ++i) {
    const Row& row = les[i];
    const int sgn = row.b.sign() >= 0 ? 1 : -1;
    fill_vars(row, sgn);
    tab[r][ncols] = sgn > 0 ? row.b : -row.b;
    const int slack = nsplit + static_cast<int>(i);
    tab[r][slack] = Scalar(sgn);
    if (sgn > 0) {
      basis[r] = slack;
    } else {
      const int art = nsplit + nslack + nart++;
      tab[r][art] = Scalar(1);
      basis[r] = art;
    }
    ++r;
  }

  const int used_cols = nsplit + nslack + nart;

  // Reduced cost row for min(sum of artificials), expressed through the basis.
  std::vector<Scalar> cost(used_cols + 1, Scalar(0));
  for (size_t i = 0; i < m; ++i) {
    if (basis[i] >= nsplit + nslack) {
      for (int j = 0; j < used_cols; ++j)
        if (!tab[i][j].is_zero()) cost[j] -= tab[i][j];
      cost[used_cols] -= tab[i][ncols];
    }
  }
  for (int a = 0; a < nart; ++a) cost[nsplit + nslack + a] += Scalar(1);

  for (;;) {
    int enter = -1;
    for (int j = 0; j < used_cols; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;  // Bland: lowest eligible index
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Scalar best_ratio(0);
    for (size_t i = 0; i < m; ++i) {
      if (tab[i][enter].sign() <= 0) continue;
      Scalar ratio = tab[i][ncols] / tab[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = static_cast<int>(i);
        best_ratio = std::move(ratio);
      }
    }
    if (leave < 0) throw InternalError("phase-1 objective unbounded");

    // pivot on (leave, enter)
    {
      const Scalar piv = tab[leave][enter];
      for (int j = 0; j <= ncols; ++j)
        if (!tab[leave][j].is_zero()) tab[leave][j] /= piv;
    }
    for (size_t i = 0; i < m; ++i) {
      if (static_cast<int>(i) == leave || tab[i][enter].is_zero()) continue;
      const Scalar f = tab[i][enter];
      for (int j = 0; j <= ncols; ++j)
        if (!tab[leave][j].is_zero()) tab[i][j] -= f * tab[leave][j];
    }
    if (!cost[enter].is_zero()) {
      const Scalar f = cost[enter];
      for (int j = 0; j < used_cols; ++j)
        if (!tab[leave][j].is_zero()) cost[j] -= f * tab[leave][j];
      cost[used_cols] -= f * tab[leave][ncols];
    }
    basis[leave] = enter;
  }

  const Scalar w = -cost[used_cols];
  if (w.sign() > 0) return std::nullopt;

  std::vector<Scalar> split(nsplit, Scalar(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < nsplit) split[basis[i]] = tab[i][ncols];
  std::vector<Scalar> x(nvars);
  for (int j = 0; j < nvars; ++j) x[j] = split[2 * j] - split[2 * j + 1];
  return x;
}

// Max of <obj, x>: eliminate equalities, phase-1 to a feasible basis, then a
// phase-2 sweep with Bland's rule (artificial columns barred from entering).
std::optional<std::pair<Scalar, std::vector<Scalar>>> FeasibilityProblem::maximize(
    int nvars, const std::vector<Scalar>& obj, const std::vector<Row>& eqs, const std::vector<Row>& les) {
  const int n = nvars;
  std::vector<std::vector<Scalar>> aug;
  aug.reserve(eqs.size());
  for (const Row& r : eqs) {
    std::vector<Scalar> row = r.a;
    row.push_back(r.b);
    aug.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int c = 0; c < n && rank < aug.size(); ++c) {
    size_t prow = rank;
    while (prow < aug.size() && aug[prow][c].is_zero()) ++prow;
    if (prow == aug.size()) continue;
    std::swap(aug[rank], aug[prow]);
    const Scalar piv = aug[rank][c];
    for (int j = c; j <= n; ++j)
      if (!aug[rank][j].is_zero()) aug[rank][j] /= piv;
    for (size_t r2 = 0; r2 < aug.size(); ++r2) {
      if (r2 == rank || aug[r2][c].is_zero()) continue;
      const Scalar f = aug[r2][c];
      for (int j = c; j <= n; ++j)
        if (!aug[rank][j].is_zero()) aug[r2][j] -= f * aug[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (size_t r = rank; r < aug.size(); ++r)
    if (!aug[r][n].is_zero()) return std::nullopt;

  std::vector<int> free_cols;
  {
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  const int nf = static_cast<int>(free_cols.size());

  auto reduce_functional = [&](const std::vector<Scalar>& a, const Scalar& b) {
    std::vector<Scalar> coef(nf, Scalar(0));
    Scalar rhs = b;
    for (int f = 0; f < nf; ++f) coef[f] = a[free_cols[f]];
    for (size_t e = 0; e < rank; ++e) {
      const Scalar& ap = a[pivot_col[e]];
      if (ap.is_zero()) continue;
      rhs -= ap * aug[e][n];
      for (int f = 0; f < nf; ++f)
        if (!aug[e][free_cols[f]].is_zero()) coef[f] -= ap * aug[e][free_cols[f]];
    }
    return std::make_pair(std::move(coef), std::move(rhs));
  };

  std::vector<Row> reduced;
  for (const Row& r : les) {
    auto [coef, rhs] = reduce_functional(r.a, r.b);
    bool all_zero = true;
    for (const Scalar& c : coef)
      if (!c.is_zero()) all_zero = false;
    if (all_zero) {
      if (rhs.sign() < 0) return std::nullopt;
      continue;
    }
    reduced.push_back(Row{std::move(coef), std::move(rhs)});
  }
  // objective in free variables: <obj, x> = <robj, y> + obj_const
  auto [robj, neg_const] = reduce_functional(obj, Scalar(0));
  const Scalar obj_const = -neg_const;

  auto assemble = [&](const std::vector<Scalar>& y) {
    std::vector<Scalar> x(n, Scalar(0));
    for (int f = 0; f < nf; ++f) x[free_cols[f]] = y[f];
    for (size_t r = 0; r < rank; ++r) {
      Scalar v = aug[r][n];
      for (int f = 0; f < nf; ++f)
        if (!aug[r][free_cols[f]].is_zero()) v -= aug[r][free_cols[f]] * y[f];
      x[pivot_col[r]] = std::move(v);
    }
    return x;
  };

  bool robj_zero = true;
  for (const Scalar& c : robj)
    if (!c.is_zero()) robj_zero = false;
  if (nf == 0 || robj_zero) {
    // objective fixed by the equalities; any feasible point attains it
    FeasibilityProblem sub(nf);
    sub.les_ = reduced;
    auto pt = sub.solve();
    if (!pt) return std::nullopt;
    return std::make_pair(obj_const, assemble(*pt));
  }
  if (reduced.empty()) throw InternalError("unbounded objective: no constraints");
  auto opt = optimize_le(nf, robj, reduced);
  if (!opt) return std::nullopt;
  return std::make_pair(opt->first + obj_const, assemble(opt->second));
}

std::optional<std::vector<Scalar>> FeasibilityProblem::solve_with_strict() const {
  // Shared positive slack: <c,x> < d becomes <c,x> + eps <= d with eps > 0;
  // the strict system is feasible iff max eps over the closure is positive.
  const int n = nvars_;
  std::vector<Row> eqs, les;
  for (const Row& r : eqs_) {
    std::vector<Scalar> a = r.a;
    a.push_back(Scalar(0));
    eqs.push_back(Row{std::move(a), r.b});
  }
  for (const Row& r : les_) {
    std::vector<Scalar> a = r.a;
    a.push_back(Scalar(0));
    les.push_back(Row{std::move(a), r.b});
  }
  for (const Row& r : lts_) {
    std::vector<Scalar> a = r.a;
    a.push_back(Scalar(1));
    les.push_back(Row{std::move(a), r.b});
  }
  {
    std::vector<Scalar> cap(n + 1, Scalar(0));
    cap[n] = Scalar(1);
    les.push_back(Row{cap, Scalar(1)});  // eps <= 1 keeps the objective bounded
    std::vector<Scalar> pos(n + 1, Scalar(0));
    pos[n] = Scalar(-1);
    les.push_back(Row{pos, Scalar(0)});  // eps >= 0
  }
  std::vector<Scalar> obj(n + 1, Scalar(0));
  obj[n] = Scalar(1);
  auto best = maximize(n + 1, obj, eqs, les);
  if (!best || best->first.sign() <= 0) return std::nullopt;
  best->second.resize(n);
  return best->second;
}

// Phase-1 then phase-2 over a pure-inequality system; returns the maximum of
// <obj, y> with an attaining point.
std::optional<std::pair<Scalar, std::vector<Scalar>>> FeasibilityProblem::optimize_le(
    int nvars, const std::vector<Scalar>& obj, const std::vector<Row>& les) {
  const size_t m = les.size();
  if (m == 0) throw InternalError("unbounded objective: no constraints");

  const int nsplit = 2 * nvars;
  const int nslack = static_cast<int>(m);
  const int ncols = nsplit + nslack + static_cast<int>(m);

  std::vector<std::vector<Scalar>> tab(m, std::vector<Scalar>(ncols + 1, Scalar(0)));
  std::vector<int> basis(m, -1);
  int nart = 0;

  for (size_t i = 0; i < m; ++i) {
    const Row& row = les[i];
    const int sgn = row.b.sign() >= 0 ? 1 : -1;
    for (int j = 0; j < nvars; ++j) {
      if (row.a[j].is_zero()) continue;
      const Scalar c = sgn > 0 ? row.a[j] : -row.a[j];
      tab[i][2 * j] = c;
      tab[i][2 * j + 1] = -c;
    }
    tab[i][ncols] = sgn > 0 ? row.b : -row.b;
    const int slack = nsplit + static_cast<int>(i);
    tab[i][slack] = Scalar(sgn);
    if (sgn > 0) {
      basis[i] = slack;
    } else {
      const int art = nsplit + nslack + nart++;
      tab[i][art] = Scalar(1);
      basis[i] = art;
    }
  }
  const int first_art = nsplit + nslack;
  const int used_cols = first_art + nart;

  auto pivot_step = [&](std::vector<Scalar>& cost, int max_col) -> bool {
    int enter = -1;
    for (int j = 0; j < max_col; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;
    int leave = -1;
    Scalar best_ratio(0);
    for (size_t i = 0; i < m; ++i) {
      if (tab[i][enter].sign() <= 0) continue;
      Scalar ratio = tab[i][ncols] / tab[i][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = static_cast<int>(i);
        best_ratio = std::move(ratio);
      }
    }
    if (leave < 0) throw InternalError("simplex objective unbounded");
    const Scalar piv = tab[leave][enter];
    for (int j = 0; j <= ncols; ++j)
      if (!tab[leave][j].is_zero()) tab[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (static_cast<int>(i) == leave || tab[i][enter].is_zero()) continue;
      const Scalar f = tab[i][enter];
      for (int j = 0; j <= ncols; ++j)
        if (!tab[leave][j].is_zero()) tab[i][j] -= f * tab[leave][j];
    }
    if (!cost[enter].is_zero()) {
      const Scalar f = cost[enter];
      for (int j = 0; j < static_cast<int>(cost.size()) - 1; ++j)
        if (!tab[leave][j].is_zero()) cost[j] -= f * tab[leave][j];
      cost.back() -= f * tab[leave][ncols];
    }
    basis[leave] = enter;
    return true;
  };

  // phase 1: minimize the artificials
  {
    std::vector<Scalar> cost(used_cols + 1, Scalar(0));
    for (size_t i = 0; i < m; ++i) {
      if (basis[i] >= first_art) {
        for (int j = 0; j < used_cols; ++j)
          if (!tab[i][j].is_zero()) cost[j] -= tab[i][j];
        cost[used_cols] -= tab[i][ncols];
      }
    }
    for (int a = 0; a < nart; ++a) cost[first_art + a] += Scalar(1);
    while (pivot_step(cost, used_cols)) {
    }
    if ((-cost[used_cols]).sign() > 0) return std::nullopt;
  }

  // phase 2: minimize -obj; artificial columns may not re-enter
  {
    std::vector<Scalar> cost(used_cols + 1, Scalar(0));
    for (int j = 0; j < nvars; ++j) {
      cost[2 * j] = -obj[j];
      cost[2 * j + 1] = obj[j];
    }
    for (size_t i = 0; i < m; ++i) {
      if (basis[i] < 0 || cost[basis[i]].is_zero()) continue;
      const Scalar f = cost[basis[i]];
      for (int j = 0; j < used_cols; ++j)
        if (!tab[i][j].is_zero()) cost[j] -= f * tab[i][j];
      cost[used_cols] -= f * tab[i][ncols];
    }
    while (pivot_step(cost, first_art)) {
    }
  }

  std::vector<Scalar> split(nsplit, Scalar(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < nsplit) split[basis[i]] = tab[i][ncols];
  std::vector<Scalar> y(nvars);
  Scalar value(0);
  for (int j = 0; j < nvars; ++j) {
    y[j] = split[2 * j] - split[2 * j + 1];
    if (!obj[j].is_zero()) value += obj[j] * y[j];
  }
  return std::make_pair(std::move(value), std::move(y));
}

// ---------------------------------------------------------------------------
// IncrementalFeasibility
// ---------------------------------------------------------------------------

void IncrementalFeasibility::push_frame() { frames_.push_back({erows_.size(), irows_.size(), inconsistent_}); }

void IncrementalFeasibility::pop_frame() {
  if (frames_.empty()) throw InternalError("pop without frame");
  erows_.resize(frames_.back().ne);
  irows_.resize(frames_.back().ni);
  inconsistent_ = frames_.back().inconsistent;
  frames_.pop_back();
}

bool IncrementalFeasibility::add_eq(std::vector<Scalar> coeffs, Scalar rhs) {
  if (static_cast<int>(coeffs.size()) != n_) throw InvalidInput("constraint arity mismatch");
  if (inconsistent_) return false;
  // forward-reduce against existing pivots (rows stay untouched)
  for (const ERow& r : erows_) {
    const Scalar& c = coeffs[r.pivot];
    if (c.is_zero()) continue;
    const Scalar t = c / r.a[r.pivot];
    for (int j = 0; j < n_; ++j)
      if (!r.a[j].is_zero()) coeffs[j] -= t * r.a[j];
    rhs -= t * r.b;
  }
  int pivot = -1;
  for (int j = 0; j < n_; ++j)
    if (!coeffs[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) {
    if (!rhs.is_zero()) inconsistent_ = true;
    return !inconsistent_;
  }
  erows_.push_back(ERow{std::move(coeffs), std::move(rhs), pivot});
  return true;
}

void IncrementalFeasibility::add_le(std::vector<Scalar> coeffs, Scalar rhs) {
  if (static_cast<int>(coeffs.size()) != n_) throw InvalidInput("constraint arity mismatch");
  irows_.push_back(IRow{std::move(coeffs), std::move(rhs), false});
}

std::vector<Scalar> IncrementalFeasibility::assemble(const std::vector<Scalar>& y,
                                                     const std::vector<int>& free_cols) const {
  std::vector<Scalar> x(n_, Scalar(0));
  for (size_t f = 0; f < free_cols.size(); ++f) x[free_cols[f]] = y[f];
  // Rows are triangular by construction; later rows may reference earlier
  // pivots only with zero coefficient, so one reverse sweep resolves all.
  for (size_t r = erows_.size(); r-- > 0;) {
    const ERow& row = erows_[r];
    Scalar v = row.b;
    for (int j = 0; j < n_; ++j)
      if (j != row.pivot && !row.a[j].is_zero()) v -= row.a[j] * x[j];
    x[row.pivot] = v / row.a[row.pivot];
  }
  return x;
}

std::optional<std::vector<Scalar>> IncrementalFeasibility::solve() {
  if (inconsistent_) return std::nullopt;

  std::vector<int> free_cols;
  {
    std::vector<char> is_pivot(n_, 0);
    for (const ERow& r : erows_) is_pivot[r.pivot] = 1;
    for (int j = 0; j < n_; ++j)
      if (!is_pivot[j]) free_cols.push_back(j);
  }
  const int nf = static_cast<int>(free_cols.size());

  // reduce one functional to the free variables (one forward sweep: row r
  // has zeros at all earlier pivots, so those stay eliminated)
  auto reduce = [&](const IRow& row) {
    std::vector<Scalar> a = row.a;
    Scalar b = row.b;
    for (const ERow& er : erows_) {
      const Scalar& c = a[er.pivot];
      if (c.is_zero()) continue;
      const Scalar t = c / er.a[er.pivot];
      for (int j = 0; j < n_; ++j)
        if (!er.a[j].is_zero()) a[j] -= t * er.a[j];
      b -= t * er.b;
    }
    FeasibilityProblem::Row out;
    out.a.reserve(nf);
    for (int f = 0; f < nf; ++f) out.a.push_back(a[free_cols[f]]);
    out.b = std::move(b);
    return out;
  };

  std::vector<Scalar> y(nf, Scalar(0));
  std::vector<FeasibilityProblem::Row> act;
  for (const IRow& row : irows_)
    if (row.active) act.push_back(reduce(row));
  if (!act.empty()) {
    auto sol = FeasibilityProblem::phase1(nf, {}, act);
    if (!sol) return std::nullopt;
    y = std::move(*sol);
  }
  for (;;) {
    std::vector<Scalar> x = assemble(y, free_cols);
    bool grew = false;
    for (IRow& row : irows_) {
      if (row.active) continue;
      Scalar lhs(0);
      for (int j = 0; j < n_; ++j)
        if (!row.a[j].is_zero()) lhs += row.a[j] * x[j];
      if (lhs > row.b) {
        row.active = true;
        act.push_back(reduce(row));
        grew = true;
      }
    }
    if (!grew) return x;
    auto sol = FeasibilityProblem::phase1(nf, {}, act);
    if (!sol) return std::nullopt;
    y = std::move(*sol);
  }
}

}  // namespace mink3
