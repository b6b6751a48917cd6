#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace robmon {

/// Sample-count interval [lower, upper] or [lower, inf).
struct Interval {
  std::size_t lower = 0;
  std::optional<std::size_t> upper;  // nullopt means +inf (Since family only)

  bool unbounded() const { return !upper.has_value(); }
  bool upper_closed() const { return upper.has_value(); }

  static Interval closed(std::size_t lo, std::size_t hi) { return {lo, hi}; }
  static Interval from(std::size_t lo) { return {lo, std::nullopt}; }

  bool operator==(const Interval&) const = default;
  auto operator<=>(const Interval&) const = default;
};

// ---------------------------------------------------------------------------
// Surface syntax, as written by the user.

enum class ExprKind {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Until,
  Since,
  Eventually,
  Always,
  Once,
  Historically,
  Next,
  Prev,
};

struct Expr {
  ExprKind kind = ExprKind::True;
  std::string name;                 // Atom only
  std::optional<Interval> interval; // bounded temporal operators only
  std::vector<Expr> args;

  bool operator==(const Expr&) const = default;
};

namespace expr {
Expr truth();
Expr falsity();
Expr atom(std::string name);
Expr negation(Expr e);
Expr conj(Expr a, Expr b);
Expr disj(Expr a, Expr b);
Expr implies(Expr a, Expr b);
Expr until(Expr a, Interval i, Expr b);
Expr since(Expr a, Interval i, Expr b);
Expr eventually(Interval i, Expr e);
Expr always(Interval i, Expr e);
Expr once(Interval i, Expr e);
Expr historically(Interval i, Expr e);
Expr next(Expr e);
Expr prev(Expr e);
}  // namespace expr

/// Horizon and history computed directly on the surface tree, with one rule per
/// derived operator. Used to cross-check desugaring.
std::size_t surface_horizon(const Expr& e);
std::size_t surface_history(const Expr& e);

// ---------------------------------------------------------------------------
// Core formula: True, atoms, negation, disjunction, Until, Since.

enum class Op { True, Atom, Not, Or, Until, Since };

struct Node {
  Op op = Op::True;
  std::string atom;       // Op::Atom
  std::size_t lhs = 0;    // Not operand; left operand of Or/Until/Since
  std::size_t rhs = 0;    // right operand of Or/Until/Since
  Interval interval;      // Until/Since
  std::size_t hrz = 0;
  std::size_t hst = 0;

  bool is_temporal() const { return op == Op::Until || op == Op::Since; }
  bool is_unbounded_since() const { return op == Op::Since && interval.unbounded(); }
};

/// hrz of a node given its operands' horizons (ignored where unused).
std::size_t compute_horizon(Op op, const Interval& interval, std::size_t lhs_hrz,
                            std::size_t rhs_hrz);

/// hst of a node given its operands' histories. Negative intermediate terms
/// are dominated inside the max; the result is clamped at 0.
std::size_t compute_history(Op op, const Interval& interval, std::size_t lhs_hst,
                            std::size_t rhs_hst);

/// Subformula DAG in bottom-up index order: index 0 is the root and every
/// operand index is strictly greater than its parent's. Structurally equal
/// subformulas share one node.
class Formula {
 public:
  /// Desugars a surface tree into core nodes. Throws FormulaError for
  /// unbounded future intervals and empty intervals.
  static Formula from_expr(const Expr& e);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t k) const { return nodes_.at(k); }
  std::span<const Node> nodes() const { return nodes_; }
  static constexpr std::size_t root() { return 0; }

  /// hrz of the root: number of future samples the verdict depends on.
  std::size_t horizon() const { return nodes_.front().hrz; }
  /// hst of the root.
  std::size_t core_history() const { return nodes_.front().hst; }
  /// Table history: horizon() + core_history().
  std::size_t history() const { return horizon() + core_history(); }

  /// Sorted, unique atom names.
  const std::vector<std::string>& atoms() const { return atoms_; }

  bool has_unbounded_since() const;

 private:
  std::vector<Node> nodes_;
  std::vector<std::string> atoms_;
};

/// Convenience: Formula::from_expr.
Formula desugar(const Expr& e);

/// Depth of the core DAG (a single leaf has depth 0).
std::size_t core_depth(const Formula& f);

std::string to_string(const Formula& f);

}  // namespace robmon
