#include "robmon/formula.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "robmon/errors.hpp"

namespace robmon {

namespace expr {

namespace {
Expr make(ExprKind kind, std::vector<Expr> args, std::optional<Interval> interval = {}) {
  Expr e;
  e.kind = kind;
  e.args = std::move(args);
  e.interval = interval;
  return e;
}
}  // namespace

Expr truth() { return make(ExprKind::True, {}); }
Expr falsity() { return make(ExprKind::False, {}); }
Expr atom(std::string name) {
  Expr e = make(ExprKind::Atom, {});
  e.name = std::move(name);
  return e;
}
Expr negation(Expr e) { return make(ExprKind::Not, {std::move(e)}); }
Expr conj(Expr a, Expr b) { return make(ExprKind::And, {std::move(a), std::move(b)}); }
Expr disj(Expr a, Expr b) { return make(ExprKind::Or, {std::move(a), std::move(b)}); }
Expr implies(Expr a, Expr b) { return make(ExprKind::Implies, {std::move(a), std::move(b)}); }
Expr until(Expr a, Interval i, Expr b) {
  return make(ExprKind::Until, {std::move(a), std::move(b)}, i);
}
Expr since(Expr a, Interval i, Expr b) {
  return make(ExprKind::Since, {std::move(a), std::move(b)}, i);
}
Expr eventually(Interval i, Expr e) { return make(ExprKind::Eventually, {std::move(e)}, i); }
Expr always(Interval i, Expr e) { return make(ExprKind::Always, {std::move(e)}, i); }
Expr once(Interval i, Expr e) { return make(ExprKind::Once, {std::move(e)}, i); }
Expr historically(Interval i, Expr e) {
  return make(ExprKind::Historically, {std::move(e)}, i);
}
Expr next(Expr e) { return make(ExprKind::Next, {std::move(e)}); }
Expr prev(Expr e) { return make(ExprKind::Prev, {std::move(e)}); }

}  // namespace expr

namespace {

using Signed = std::int64_t;

Signed s(std::size_t v) { return static_cast<Signed>(v); }

std::size_t clamp0(Signed v) { return v < 0 ? 0 : static_cast<std::size_t>(v); }

void check_interval(const Interval& i, bool future) {
  if (i.unbounded()) {
    if (future) throw FormulaError("unbounded future interval");
    return;
  }
  if (i.lower > *i.upper) {
    throw FormulaError("empty interval [" + std::to_string(i.lower) + "," +
                       std::to_string(*i.upper) + "]");
  }
}

// Until-style horizon with a left operand horizon and a right operand horizon.
std::size_t until_horizon(std::size_t u, std::size_t lhs, std::size_t rhs) {
  return clamp0(std::max(s(lhs) + s(u) - 1, s(rhs) + s(u)));
}

// The unbounded case also reads the left operand at the current column (the
// chain term), so its left-operand term never drops below hst(lhs).
std::size_t since_history(const Interval& i, std::size_t lhs, std::size_t rhs) {
  if (i.unbounded()) {
    Signed l = s(i.lower);
    return clamp0(std::max(s(lhs) + std::max<Signed>(l, 1) - 1, s(rhs) + l));
  }
  Signed u = s(*i.upper);
  return clamp0(std::max(s(lhs) + u - 1, s(rhs) + u));
}

}  // namespace

std::size_t compute_horizon(Op op, const Interval& interval, std::size_t lhs_hrz,
                            std::size_t rhs_hrz) {
  switch (op) {
    case Op::True:
    case Op::Atom:
      return 0;
    case Op::Not:
      return lhs_hrz;
    case Op::Or:
    case Op::Since:
      return std::max(lhs_hrz, rhs_hrz);
    case Op::Until:
      return until_horizon(interval.upper.value(), lhs_hrz, rhs_hrz);
  }
  return 0;
}

std::size_t compute_history(Op op, const Interval& interval, std::size_t lhs_hst,
                            std::size_t rhs_hst) {
  switch (op) {
    case Op::True:
    case Op::Atom:
      return 0;
    case Op::Not:
      return lhs_hst;
    case Op::Or:
    case Op::Until:
      return std::max(lhs_hst, rhs_hst);
    case Op::Since:
      return since_history(interval, lhs_hst, rhs_hst);
  }
  return 0;
}

std::size_t surface_horizon(const Expr& e) {
  auto arg = [&](std::size_t k) { return surface_horizon(e.args.at(k)); };
  switch (e.kind) {
    case ExprKind::True:
    case ExprKind::False:
    case ExprKind::Atom:
      return 0;
    case ExprKind::Not:
      return arg(0);
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Implies:
    case ExprKind::Since:
      return std::max(arg(0), arg(1));
    case ExprKind::Once:
    case ExprKind::Historically:
    case ExprKind::Prev:
      return arg(0);
    case ExprKind::Until:
      return until_horizon(e.interval.value().upper.value(), arg(0), arg(1));
    case ExprKind::Eventually:
    case ExprKind::Always:
      return until_horizon(e.interval.value().upper.value(), 0, arg(0));
    case ExprKind::Next:
      return until_horizon(1, 0, arg(0));
  }
  return 0;
}

std::size_t surface_history(const Expr& e) {
  auto arg = [&](std::size_t k) { return surface_history(e.args.at(k)); };
  switch (e.kind) {
    case ExprKind::True:
    case ExprKind::False:
    case ExprKind::Atom:
      return 0;
    case ExprKind::Not:
    case ExprKind::Eventually:
    case ExprKind::Always:
    case ExprKind::Next:
      return arg(0);
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Implies:
    case ExprKind::Until:
      return std::max(arg(0), arg(1));
    case ExprKind::Since:
      return since_history(e.interval.value(), arg(0), arg(1));
    case ExprKind::Once:
    case ExprKind::Historically:
      return since_history(e.interval.value(), 0, arg(0));
    case ExprKind::Prev:
      return since_history(Interval::closed(1, 1), 0, arg(0));
  }
  return 0;
}

namespace {

// Hash-consing builder. Ids are assigned in creation order, so operands always
// carry smaller ids than the nodes built on top of them.
class Builder {
 public:
  std::size_t truth() { return make(Op::True, {}, 0, 0, {}); }
  std::size_t atom(const std::string& name) { return make(Op::Atom, name, 0, 0, {}); }

  // No double-negation folding: every derived operator keeps its own row.
  std::size_t negate(std::size_t x) { return make(Op::Not, {}, x, 0, {}); }
  std::size_t disj(std::size_t a, std::size_t b) { return make(Op::Or, {}, a, b, {}); }
  std::size_t conj(std::size_t a, std::size_t b) { return negate(disj(negate(a), negate(b))); }
  std::size_t until(std::size_t a, Interval i, std::size_t b) {
    check_interval(i, true);
    return make(Op::Until, {}, a, b, i);
  }
  std::size_t since(std::size_t a, Interval i, std::size_t b) {
    check_interval(i, false);
    return make(Op::Since, {}, a, b, i);
  }

  std::size_t build(const Expr& e) {
    auto arg = [&](std::size_t k) { return build(e.args.at(k)); };
    auto interval = [&]() {
      if (!e.interval) throw FormulaError("temporal operator without interval");
      return *e.interval;
    };
    switch (e.kind) {
      case ExprKind::True:
        return truth();
      case ExprKind::False:
        return negate(truth());
      case ExprKind::Atom:
        return atom(e.name);
      case ExprKind::Not:
        return negate(arg(0));
      case ExprKind::And:
        return conj(arg(0), arg(1));
      case ExprKind::Or:
        return disj(arg(0), arg(1));
      case ExprKind::Implies:
        return disj(negate(arg(0)), arg(1));
      case ExprKind::Until: {
        auto a = arg(0);
        return until(a, interval(), arg(1));
      }
      case ExprKind::Since: {
        auto a = arg(0);
        return since(a, interval(), arg(1));
      }
      case ExprKind::Eventually:
        return until(truth(), interval(), arg(0));
      case ExprKind::Always:
        return negate(until(truth(), interval(), negate(arg(0))));
      case ExprKind::Once:
        return since(truth(), interval(), arg(0));
      case ExprKind::Historically:
        return negate(since(truth(), interval(), negate(arg(0))));
      case ExprKind::Next:
        return until(truth(), Interval::closed(1, 1), arg(0));
      case ExprKind::Prev:
        return since(truth(), Interval::closed(1, 1), arg(0));
    }
    throw FormulaError("unknown expression kind");
  }

  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  using Key = std::tuple<Op, std::string, std::size_t, std::size_t, Interval>;

  std::size_t make(Op op, std::string atom, std::size_t lhs, std::size_t rhs, Interval i) {
    Key key{op, atom, lhs, rhs, i};
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    Node n;
    n.op = op;
    n.atom = std::move(atom);
    n.lhs = lhs;
    n.rhs = rhs;
    n.interval = i;
    std::size_t lhrz = 0, rhrz = 0, lhst = 0, rhst = 0;
    if (op != Op::True && op != Op::Atom) {
      lhrz = nodes_[lhs].hrz;
      lhst = nodes_[lhs].hst;
    }
    if (op == Op::Or || op == Op::Until || op == Op::Since) {
      rhrz = nodes_[rhs].hrz;
      rhst = nodes_[rhs].hst;
    }
    n.hrz = compute_horizon(op, i, lhrz, rhrz);
    n.hst = compute_history(op, i, lhst, rhst);
    nodes_.push_back(std::move(n));
    index_.emplace(std::move(key), nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  std::vector<Node> nodes_;
  std::map<Key, std::size_t> index_;
};

bool has_operands(Op op) { return op != Op::True && op != Op::Atom; }
bool is_binary(Op op) { return op == Op::Or || op == Op::Until || op == Op::Since; }

}  // namespace

Formula Formula::from_expr(const Expr& e) {
  Builder b;
  std::size_t root = b.build(e);
  const auto& built = b.nodes();

  // Keep only what the root reaches.
  std::vector<bool> reachable(built.size(), false);
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    if (reachable[id]) continue;
    reachable[id] = true;
    const auto& n = built[id];
    if (has_operands(n.op)) stack.push_back(n.lhs);
    if (is_binary(n.op)) stack.push_back(n.rhs);
  }

  // Descending builder id puts parents before operands.
  std::vector<std::size_t> remap(built.size(), 0);
  std::vector<std::size_t> order;
  for (std::size_t id = built.size(); id-- > 0;) {
    if (reachable[id]) {
      remap[id] = order.size();
      order.push_back(id);
    }
  }

  Formula f;
  f.nodes_.reserve(order.size());
  std::set<std::string> atoms;
  for (auto id : order) {
    Node n = built[id];
    if (has_operands(n.op)) n.lhs = remap[n.lhs];
    if (is_binary(n.op)) n.rhs = remap[n.rhs];
    if (n.op == Op::Atom) atoms.insert(n.atom);
    f.nodes_.push_back(std::move(n));
  }
  f.atoms_.assign(atoms.begin(), atoms.end());
  return f;
}

bool Formula::has_unbounded_since() const {
  return std::any_of(nodes_.begin(), nodes_.end(),
                     [](const Node& n) { return n.is_unbounded_since(); });
}

Formula desugar(const Expr& e) { return Formula::from_expr(e); }

std::size_t core_depth(const Formula& f) {
  std::vector<std::size_t> depth(f.size(), 0);
  for (std::size_t k = f.size(); k-- > 0;) {
    const auto& n = f.node(k);
    if (has_operands(n.op)) depth[k] = depth[n.lhs] + 1;
    if (is_binary(n.op)) depth[k] = std::max(depth[k], depth[n.rhs] + 1);
  }
  return depth[Formula::root()];
}

std::string to_string(const Formula& f) {
  std::ostringstream out;
  auto interval = [](const Interval& i) {
    return "[" + std::to_string(i.lower) + "," +
           (i.unbounded() ? std::string("inf)") : std::to_string(*i.upper) + "]");
  };
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& n = f.node(k);
    out << k << ": ";
    switch (n.op) {
      case Op::True:
        out << "true";
        break;
      case Op::Atom:
        out << n.atom;
        break;
      case Op::Not:
        out << "not " << n.lhs;
        break;
      case Op::Or:
        out << n.lhs << " or " << n.rhs;
        break;
      case Op::Until:
        out << n.lhs << " U" << interval(n.interval) << " " << n.rhs;
        break;
      case Op::Since:
        out << n.lhs << " S" << interval(n.interval) << " " << n.rhs;
        break;
    }
    out << "  (hrz=" << n.hrz << ", hst=" << n.hst << ")\n";
  }
  return out.str();
}

}  // namespace robmon
