#include <random>
#include <stdexcept>

#include "doctest.h"
#include "robmon/errors.hpp"
#include "robmon/monitor.hpp"
#include "robmon/oracle.hpp"
#include "robmon/parser.hpp"
#include "robmon/run.hpp"
#include "support/generators.hpp"

using namespace robmon;

namespace {

StateSample at(double t, std::vector<double> v) { return {t, std::move(v)}; }

std::size_t find_row(const Formula& f, Op op, std::optional<Interval> interval = {}) {
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f.node(k).op == op && (!interval || f.node(k).interval == *interval)) return k;
  }
  throw std::logic_error("row not found");
}

}  // namespace

TEST_CASE("table dimensions") {
  std::vector<std::string> vars{"x", "y"};
  PredicateMap preds;
  preds.emplace("p", Predicate{"p", "x", AtLeast{0.0}});
  preds.emplace("q", Predicate{"q", "y", AtLeast{0.0}});

  Monitor worked(parse_formula("historically[0,inf) p and always[1,2] q"), preds, vars);
  CHECK(worked.width() == 5);
  CHECK(worked.height() == 13);
  CHECK(worked.horizon() == 2);
  CHECK(worked.history() == 2);
  CHECK(worked.cell_count() == 65);
  CHECK(worked.pre_count() == 13);

  Monitor single(parse_formula("p"), preds, vars);
  CHECK(single.width() == 1);
  CHECK(single.height() == 1);

  Monitor ev(parse_formula("eventually[0,1] p"), preds, vars);
  CHECK(ev.horizon() == 1);
  CHECK(ev.history() == 1);
  CHECK(ev.width() == 3);
}

TEST_CASE("construction errors") {
  std::vector<std::string> vars{"x"};
  PredicateMap preds;
  preds.emplace("p", Predicate{"p", "x", AtLeast{0.0}});
  CHECK_THROWS_WITH_AS(Monitor(parse_formula("p and q and r"), preds, vars),
                       doctest::Contains("unbound atom: q, r"), InputError);
  preds.emplace("q", Predicate{"q", "w", AtLeast{0.0}});
  CHECK_THROWS_WITH_AS(Monitor(parse_formula("p and q"), preds, vars),
                       doctest::Contains("unknown variable"), InputError);
}

TEST_CASE("step: small hand-checked streams") {
  std::vector<std::string> vars{"x", "y"};
  PredicateMap preds;
  preds.emplace("p", Predicate{"p", "x", AtLeast{0.0}});
  preds.emplace("q", Predicate{"q", "y", AtLeast{4.0}});

  SUBCASE("eventually[0,1] p looks one sample ahead") {
    Monitor m(parse_formula("eventually[0,1] p"), preds, vars);
    std::vector<StateSample> next{at(1, {2, 0})};
    CHECK(m.step(at(0, {-1, 0}), next) == 2.0);
  }
  SUBCASE("once[0,inf) q is a running max") {
    Monitor m(parse_formula("once[0,inf) q"), preds, vars);
    CHECK(m.step(at(0, {0, 3}), {}) == -1.0);
    CHECK(m.step(at(1, {0, 7}), {}) == 3.0);
    CHECK(m.step(at(2, {0, 1}), {}) == 3.0);
  }
  SUBCASE("true is +inf at every step") {
    Monitor m(parse_formula("true"), preds, vars);
    for (int i = 0; i < 5; ++i) CHECK(m.step(at(i, {0, 0}), {}) == kPosInf);
  }
  SUBCASE("wrong number of predictions") {
    Monitor m(parse_formula("eventually[0,2] p"), preds, vars);
    std::vector<StateSample> one{at(1, {0, 0})};
    CHECK_THROWS_WITH_AS(m.step(at(0, {0, 0}), one),
                         doctest::Contains("prediction length mismatch"), std::invalid_argument);
    CHECK(m.steps() == 0);
  }
}

TEST_CASE("worked example table entries") {
  std::vector<std::string> vars{"x", "y"};
  PredicateMap preds;
  preds.emplace("p", Predicate{"p", "x", AtLeast{0.0}});
  preds.emplace("q", Predicate{"q", "y", AtLeast{0.0}});
  auto f = parse_formula("historically[0,inf) p and always[1,2] q");
  Monitor m(f, preds, vars);

  const auto until_row = find_row(f, Op::Until);
  std::size_t box_row = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f.node(k).op == Op::Not && f.node(k).lhs == until_row) box_row = k;
  }
  REQUIRE(box_row != 0);
  const auto since_row = find_row(f, Op::Since);
  const auto q_row = f.node(f.node(until_row).rhs).lhs;
  REQUIRE(f.node(q_row).atom == "q");
  const auto not_p_row = f.node(since_row).rhs;

  std::vector<double> xs{1, 3, -2, 4, 5, 0.5, 2, -1};
  std::vector<double> ys{2, -1, 3, 6, -4, 1, 7, 2};
  for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
    std::vector<StateSample> pred{at(i + 1.0, {xs[i + 1], ys[i + 1]}),
                                  at(i + 2.0, {xs[i + 2], ys[i + 2]})};
    m.step(at(static_cast<double>(i), {xs[i], ys[i]}), pred);

    // always[1,2] q at the current column is the min of q one and two steps ahead.
    CHECK(*m.cell(box_row, 0) == std::min(*m.cell(q_row, 1), *m.cell(q_row, 2)));
    CHECK(*m.cell(box_row, 0) == std::min(ys[i + 1], ys[i + 2]));
    CHECK(*m.cell(box_row, 1) == *m.cell(q_row, 2));
    // The window at the rightmost column lies beyond the horizon.
    CHECK(*m.cell(box_row, 2) == kPosInf);
    CHECK(*m.cell(until_row, 2) == kNegInf);

    // The leftmost historically cell is built from Pre.
    if (i >= 2) {
      CHECK(m.first_column(since_row) == -2);
      CHECK(*m.cell(since_row, -2) == std::max(*m.cell(not_p_row, -2), m.pre(since_row)));
      CHECK(m.cr(since_row, -2) == *m.cell(since_row, -2));
    }
    if (i >= 3) {
      // Pre holds the once-not-p value at time i - 3, i.e. -min(x[0..i-3]).
      double lo = xs[0];
      for (std::size_t k = 0; k <= i - 3; ++k) lo = std::min(lo, xs[k]);
      CHECK(m.pre(since_row) == -lo);
    } else {
      CHECK(m.pre(since_row) == kNegInf);
    }
  }
}

TEST_CASE("warm-up cells before the first sample are undefined") {
  std::vector<std::string> vars{"x"};
  PredicateMap preds;
  preds.emplace("p", Predicate{"p", "x", AtLeast{0.0}});
  auto f = parse_formula("once[0,3] p");
  const auto p_row = find_row(f, Op::Atom);
  Monitor m(f, preds, vars);
  CHECK(m.history() == 3);
  CHECK_FALSE(m.cell(0, 0).has_value());
  m.step(at(0, {1}), {});
  CHECK(m.cell(0, 0).has_value());
  CHECK_FALSE(m.cell(0, -1).has_value());
  CHECK_FALSE(m.cell(p_row, -1).has_value());
  m.step(at(1, {2}), {});
  CHECK(m.cell(p_row, -1) == 1.0);
  CHECK_FALSE(m.cell(p_row, -2).has_value());
  CHECK_FALSE(m.cell(0, 5).has_value());
}

TEST_CASE("cr reproduces every defined cell") {
  testing::Rng rng(3);
  testing::GenOptions o;
  auto preds = testing::test_predicates();
  for (int n = 0; n < 60; ++n) {
    auto f = desugar(testing::random_expr(rng, o));
    auto trace = testing::random_trace(rng, f.horizon() + 15);
    Monitor m(f, preds, trace.variables);
    for (std::size_t i = 0; i + f.horizon() < trace.size(); ++i) {
      m.step(trace[i], predict(PredictorMode::Perfect, trace, i, m.horizon()));
      for (std::size_t k = 0; k < f.size(); ++k) {
        for (auto j = m.first_column(k); j <= static_cast<std::ptrdiff_t>(m.horizon()); ++j) {
          if (auto v = m.cell(k, j)) CHECK(m.cr(k, j) == *v);
        }
      }
    }
  }
}

TEST_CASE("every defined cell matches the offline semantics on the supplied samples") {
  testing::Rng rng(17);
  testing::GenOptions o;
  auto preds = testing::test_predicates();
  std::size_t checked = 0;
  for (int n = 0; n < 120; ++n) {
    auto f = desugar(testing::random_expr(rng, o));
    auto trace = testing::random_trace(rng, testing::uniform(rng, f.horizon() + 1, f.horizon() + 25));
    Monitor m(f, preds, trace.variables);
    for (std::size_t i = 0; i + f.horizon() < trace.size(); ++i) {
      m.step(trace[i], predict(PredictorMode::Perfect, trace, i, m.horizon()));
      auto seen = trace.prefix(i + f.horizon() + 1);
      OfflineSemantics oracle(f, preds, seen);
      for (std::size_t k = 0; k < f.size(); ++k) {
        for (auto j = m.first_column(k); j <= static_cast<std::ptrdiff_t>(m.horizon()); ++j) {
          auto v = m.cell(k, j);
          if (!v) continue;
          auto t = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + j);
          REQUIRE_MESSAGE(*v == oracle.robustness(k, t),
                          "row " << k << " col " << j << " step " << i << "\n" << to_string(f));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("storage stays fixed over a long stream") {
  std::vector<std::string> vars{"lambda"};
  PredicateMap preds;
  preds.emplace("inb", Predicate{"inb", "lambda", Between{0.9, 1.1}});
  Monitor m(parse_formula("not inb -> once[0,100] historically[0,100] inb"), preds, vars);
  const auto cells = m.cell_count();
  const auto pres = m.pre_count();
  CHECK(cells == m.height() * m.width());
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> lam(0.8, 1.2);
  for (int i = 0; i < 10000; ++i) m.step(at(i * 0.01, {lam(rng)}), {});
  CHECK(m.cell_count() == cells);
  CHECK(m.pre_count() == pres);
  CHECK(m.steps() == 10000);
}
