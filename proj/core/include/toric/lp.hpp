#pragma once

#include "toric/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toric {

template <class Num>
struct Solved;

// Small exact linear programs. Two-phase simplex with Bland's rule over rationals,
// so termination is guaranteed and the optimum is a vertex with exact coordinates.
class LinearProgram {
 public:
  using Terms = std::vector<std::pair<int, Rat>>;

  // New variable with optional lower/upper bounds; returns its index.
  int add_var(std::optional<Rat> lo = Rat(0), std::optional<Rat> hi = std::nullopt);
  void add_le(Terms lhs, Rat rhs);  // sum <= rhs
  void add_ge(Terms lhs, Rat rhs);  // sum >= rhs
  void set_objective(Terms obj);    // maximize

  enum class Status { Optimal, Infeasible, Unbounded };
  struct Result {
    Status status = Status::Infeasible;
    Rat value;
    std::vector<Rat> x;
  };
  Result solve() const;

  // Same program in double precision; a fast screen, never a certificate.
  struct ApproxResult {
    Status status = Status::Infeasible;
    double value = 0;
    std::vector<double> x;
  };
  ApproxResult solve_approx() const;

  size_t num_vars() const { return lo_.size(); }
  size_t num_rows() const { return rows_.size(); }

 private:
  template <class Num, class Conv>
  Solved<Num> solve_as(Conv conv) const;

  std::vector<std::optional<Rat>> lo_;
  std::vector<Terms> rows_;
  std::vector<Rat> rhs_;
  Terms obj_;
};

// Dense core: maximize c.x subject to A x <= b, x >= 0.
LinearProgram::Result simplex_max(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                                  const std::vector<Rat>& c);

}  // namespace toric
