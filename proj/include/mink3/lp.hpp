#ifndef MINK3_LP_HPP
#define MINK3_LP_HPP

#include <optional>
#include <vector>

#include "mink3/scalar.hpp"

namespace mink3 {

/// Exact linear feasibility over the scalar field: find x with
/// A_eq x = b_eq and A_le x <= b_le, all variables free.
///
/// Phase-I simplex with Bland's rule (termination guaranteed). Inequalities
/// are activated lazily: the solver works on the equalities plus whichever
/// inequalities the current point violates, so large membership systems stay
/// small in practice. Deterministic for fixed insertion order.
class FeasibilityProblem {
 public:
  explicit FeasibilityProblem(int nvars) : nvars_(nvars) {}

  void add_eq(std::vector<Scalar> coeffs, Scalar rhs);
  void add_le(std::vector<Scalar> coeffs, Scalar rhs);
  /// Strict inequality <coeffs, x> < rhs. Decided exactly by maximizing a
  /// shared slack over all strict rows (feasible iff the maximum is > 0).
  void add_lt(std::vector<Scalar> coeffs, Scalar rhs);

  int num_vars() const { return nvars_; }
  size_t num_rows() const { return eqs_.size() + les_.size() + lts_.size(); }

  std::optional<std::vector<Scalar>> solve() const;

 private:
  struct Row {
    std::vector<Scalar> a;
    Scalar b;
  };

  static std::optional<std::vector<Scalar>> phase1(int nvars, const std::vector<Row>& eqs,
                                                   const std::vector<Row>& les);
  /// max of <obj, x> over {eqs, les}; nullopt when infeasible. The objective
  /// must be bounded above on the feasible set.
  static std::optional<std::pair<Scalar, std::vector<Scalar>>> maximize(int nvars,
                                                                        const std::vector<Scalar>& obj,
                                                                        const std::vector<Row>& eqs,
                                                                        const std::vector<Row>& les);
 public:
  static std::optional<std::pair<Scalar, std::vector<Scalar>>> optimize_le(int nvars,
                                                                           const std::vector<Scalar>& obj,
                                                                           const std::vector<Row>& les);

  std::optional<std::vector<Scalar>> solve_with_strict() const;

  int nvars_;
  std::vector<Row> eqs_;
  std::vector<Row> les_;
  std::vector<Row> lts_;

  friend class IncrementalFeasibility;
};

/// Stack-structured variant for backtracking searches: constraints are
/// pushed and popped in frames, equalities are kept in an incrementally
/// grown echelon form, and solves reuse the shared prefix work.
class IncrementalFeasibility {
 public:
  explicit IncrementalFeasibility(int nvars) : n_(nvars) {}

  void push_frame();
  void pop_frame();

  /// Returns false when this equality makes the system inconsistent
  /// (the caller still owns the frame and should pop it).
  bool add_eq(std::vector<Scalar> coeffs, Scalar rhs);
  void add_le(std::vector<Scalar> coeffs, Scalar rhs);

  std::optional<std::vector<Scalar>> solve();

 private:
  struct ERow {
    std::vector<Scalar> a;
    Scalar b;
    int pivot;
  };
  struct IRow {
    std::vector<Scalar> a;
    Scalar b;
    bool active = false;
  };

  std::vector<Scalar> assemble(const std::vector<Scalar>& y, const std::vector<int>& free_cols) const;

  int n_;
  bool inconsistent_ = false;
  std::vector<ERow> erows_;
  std::vector<IRow> irows_;
  struct Frame {
    size_t ne, ni;
    bool inconsistent;
  };
  std::vector<Frame> frames_;
};

}  // namespace mink3

#endif  // MINK3_LP_HPP
