// Copyright 2026 The GResilience Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "gresilience/errors.hpp"
#include "gresilience/game.hpp"
#include "support.hpp"

using namespace gresilience;
using gresilience::testing::grid_argmin_p;
using gresilience::testing::grid_argmin_q;
using gresilience::testing::greenness_gap;
using gresilience::testing::psne_by_enumeration;
using gresilience::testing::random_action_pair;
using gresilience::testing::resilience_gap;

namespace {

const CandidateAction kA1{"a1", ActionKind::Learning, {20.0, 2.0, 4.0}};
const CandidateAction kA2{"a2", ActionKind::Operating, {15.0, 8.0, 1.0}};

PayoffMatrix reference_matrix(double epsilon = 0.5) {
  return build_payoff_matrix(kA1, kA2, Confidence(epsilon));
}

}  // namespace

TEST_SUITE("game") {

TEST_CASE("resilience payoff") {
  CHECK(resilience_payoff(kA1, Confidence(0.0), 1) == 0.0);
  CHECK(resilience_payoff(kA1, Confidence(0.0), 2) == 0.0);
  CHECK(resilience_payoff(kA1, Confidence(0.5), 2) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK_THROWS_AS(resilience_payoff(kA1, Confidence(0.5), 3), DomainError);
  CHECK_THROWS_AS(resilience_payoff(kA1, Confidence(0.5), 0), DomainError);
}

TEST_CASE("matched payoff doubles the unmatched one") {
  Rng rng(301);
  for (int trial = 0; trial < 100; ++trial) {
    auto [a, b] = random_action_pair(rng);
    const Confidence eps(rng.uniform01());
    CHECK(resilience_payoff(a, eps, 2) == doctest::Approx(2.0 * resilience_payoff(a, eps, 1)));
    CHECK(greenness_payoff(b, eps, 2) == doctest::Approx(2.0 * greenness_payoff(b, eps, 1)));
  }
}

TEST_CASE("greenness payoff") {
  CHECK(greenness_payoff(kA1, Confidence(1.0), 1) == 0.0);
  CHECK(greenness_payoff(kA1, Confidence(0.5), 1) == doctest::Approx(0.0625).epsilon(1e-12));
  // Zero human labor counts as one interaction.
  const CandidateAction automatic{"auto", ActionKind::Operating, {10.0, 4.0, 0.0}};
  CHECK(greenness_payoff(automatic, Confidence(0.25), 1) ==
        doctest::Approx(0.75 / 4.0).epsilon(1e-12));
}

TEST_CASE("payoff matrix layout on the reference pair") {
  const PayoffMatrix m = reference_matrix();
  CHECK(m.at(0, 0).resilience == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(m.at(1, 1).resilience == doctest::Approx(1.0 / 15.0).epsilon(1e-9));
  CHECK(m.at(0, 0).greenness == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(m.at(1, 1).greenness == doctest::Approx(0.125).epsilon(1e-12));
  // Off-diagonal cells pair the row action's resilience with the column
  // action's greenness at half the matched value.
  CHECK(m.at(0, 1).resilience == doctest::Approx(0.025).epsilon(1e-12));
  CHECK(m.at(0, 1).greenness == doctest::Approx(0.0625).epsilon(1e-12));
  CHECK(m.at(1, 0).resilience == doctest::Approx(1.0 / 30.0).epsilon(1e-9));
  CHECK(m.at(1, 0).greenness == doctest::Approx(0.0625).epsilon(1e-12));
}

TEST_CASE("zero confidence zeroes every resilience payoff") {
  const PayoffMatrix m = reference_matrix(0.0);
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) CHECK(m.at(row, col).resilience == 0.0);
  }
}

TEST_CASE("diagonal doubling holds on random matrices") {
  Rng rng(302);
  for (int trial = 0; trial < 200; ++trial) {
    auto [a, b] = random_action_pair(rng);
    const PayoffMatrix m = build_payoff_matrix(a, b, Confidence(rng.uniform01()));
    CHECK(m.at(0, 0).resilience == doctest::Approx(2.0 * m.at(0, 1).resilience));
    CHECK(m.at(1, 1).resilience == doctest::Approx(2.0 * m.at(1, 0).resilience));
    CHECK(m.at(0, 0).greenness == doctest::Approx(2.0 * m.at(1, 0).greenness));
    CHECK(m.at(1, 1).greenness == doctest::Approx(2.0 * m.at(0, 1).greenness));
  }
}

TEST_CASE("matrix rejects identical action ids") {
  CHECK_THROWS_AS(build_payoff_matrix(kA1, kA1, Confidence(0.5)), DomainError);
}

TEST_CASE("reference matrix has exactly the two matched equilibria") {
  const auto cells = find_psne(reference_matrix());
  CHECK((cells == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}));
}

TEST_CASE("full confidence keeps matched cells as weak equilibria") {
  const auto cells = find_psne(reference_matrix(1.0));
  CHECK((std::find(cells.begin(), cells.end(), std::pair<int, int>{0, 0}) != cells.end()));
  CHECK((std::find(cells.begin(), cells.end(), std::pair<int, int>{1, 1}) != cells.end()));
}

TEST_CASE("total indifference makes every cell an equilibrium") {
  PayoffMatrix m;
  m.actions = {kA1, kA2};
  m.cells = {};  // all payoffs zero
  CHECK(find_psne(m).size() == 4);
}

TEST_CASE("psne matches exhaustive best-response enumeration") {
  Rng rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    auto [a, b] = random_action_pair(rng);
    double eps = rng.uniform(0.0, 1.0);
    if (trial % 10 == 0) eps = 0.0;
    if (trial % 10 == 5) eps = 1.0;
    const PayoffMatrix m = build_payoff_matrix(a, b, Confidence(eps));
    CHECK(find_psne(m) == psne_by_enumeration(m));
  }
}

TEST_CASE("symmetric payoffs mix at one half") {
  const CandidateAction x{"x", ActionKind::Learning, {10.0, 2.0, 2.0}};
  const CandidateAction y{"y", ActionKind::Operating, {10.0, 4.0, 1.0}};  // same h*co2 product
  const MixedStrategy s = solve_msne(build_payoff_matrix(x, y, Confidence(0.5)));
  CHECK(s.p == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.q == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.interior);
}

TEST_CASE("reference pair mixes at q one half and p five sevenths") {
  const MixedStrategy s = solve_msne(reference_matrix());
  CHECK(std::abs(s.q - 0.5) <= 1e-9);
  CHECK(s.p == doctest::Approx(0.714286).epsilon(1e-6));
  CHECK(s.interior);
  // The grid oracle lands on the same mix.
  CHECK(std::abs(s.q - grid_argmin_q(reference_matrix())) <= 0.002);
  CHECK(std::abs(s.p - grid_argmin_p(reference_matrix())) <= 0.002);
}

TEST_CASE("strong time dominance clamps p to one") {
  // The second action is more than twice as fast: no interior indifference.
  const CandidateAction slow{"slow", ActionKind::Learning, {40.0, 2.0, 4.0}};
  const CandidateAction fast{"fast", ActionKind::Operating, {10.0, 8.0, 1.0}};
  const PayoffMatrix m = build_payoff_matrix(slow, fast, Confidence(0.5));
  const MixedStrategy s = solve_msne(m);
  CHECK(s.p == 1.0);
  CHECK_FALSE(s.interior);
  CHECK(grid_argmin_p(m) == doctest::Approx(1.0));
}

TEST_CASE("degenerate confidence yields the symmetric mix without crashing") {
  const MixedStrategy zero = solve_msne(reference_matrix(0.0));
  CHECK(zero.p == 0.5);  // resilience payoffs vanished
  CHECK_FALSE(zero.interior);
  const MixedStrategy one = solve_msne(reference_matrix(1.0));
  CHECK(one.q == 0.5);  // greenness payoffs vanished
  CHECK_FALSE(one.interior);
}

TEST_CASE("mixed strategy is invariant to the confidence level") {
  Rng rng(304);
  for (int trial = 0; trial < 50; ++trial) {
    auto [a, b] = random_action_pair(rng);
    const MixedStrategy base = solve_msne(build_payoff_matrix(a, b, Confidence(0.1)));
    for (double eps = 0.2; eps < 0.95; eps += 0.1) {
      const MixedStrategy s = solve_msne(build_payoff_matrix(a, b, Confidence(eps)));
      CHECK(std::abs(s.p - base.p) <= 1e-12);
      CHECK(std::abs(s.q - base.q) <= 1e-12);
    }
  }
}

TEST_CASE("pure column play reduces expectations to that column") {
  const PayoffMatrix m = reference_matrix();
  const ExpectedPayoffs e = expected_payoffs(m, MixedStrategy{1.0, 0.3, false});
  CHECK(e.resilience_a1 == m.at(0, 0).resilience);
  CHECK(e.resilience_a2 == m.at(1, 0).resilience);
}

TEST_CASE("interior mix makes both players indifferent") {
  const PayoffMatrix m = reference_matrix();
  const MixedStrategy s = solve_msne(m);
  const ExpectedPayoffs e = expected_payoffs(m, s);
  CHECK(std::abs(e.resilience_a1 - e.resilience_a2) <= 1e-9);
  CHECK(std::abs(e.greenness_a1 - e.greenness_a2) <= 1e-9);
  CHECK(resilience_gap(m, s.p) <= 1e-9);
  CHECK(greenness_gap(m, s.q) <= 1e-9);
}

TEST_CASE("solve_game bundles equilibria and expectations") {
  const GameSolution solution = solve_game(reference_matrix());
  CHECK(solution.psne.size() == 2);
  CHECK(solution.mixed.interior);
  CHECK(std::abs(solution.expected.greenness_a1 - solution.expected.greenness_a2) <= 1e-9);
}

TEST_CASE("certain agreement ends in one round") {
  Rng rng(305);
  const PayoffMatrix m = reference_matrix();
  const PlayResult out = play(m, MixedStrategy{1.0, 1.0, false}, rng, 10);
  CHECK(out.action_id == "a1");
  CHECK(out.rounds == 1);
  CHECK_FALSE(out.psne_fallback);
}

TEST_CASE("guaranteed mismatch falls back after max rounds") {
  Rng rng(306);
  const PayoffMatrix m = reference_matrix();
  const PlayResult out = play(m, MixedStrategy{1.0, 0.0, false}, rng, 10);
  CHECK(out.rounds == 10);
  CHECK(out.psne_fallback);
  // Matched-cell payoff sums: a1 -> 2*(0.025 + 0.0625), a2 -> 2*(1/30 + 0.0625);
  // a2's is larger.
  CHECK(out.action_id == "a2");
}

TEST_CASE("fallback tie falls through to the id") {
  // Equal run times and equal h*co2 products give identical payoff sums.
  const CandidateAction x{"x", ActionKind::Learning, {20.0, 2.0, 4.0}};
  const CandidateAction y{"y", ActionKind::Operating, {20.0, 8.0, 1.0}};
  Rng rng(307);
  const PayoffMatrix m = build_payoff_matrix(x, y, Confidence(0.5));
  const PlayResult out = play(m, MixedStrategy{1.0, 0.0, false}, rng, 4);
  CHECK(out.psne_fallback);
  CHECK(out.action_id == "x");  // equal sums, equal e_t: lexicographic id
}

TEST_CASE("opposed dominance leaves only the mismatched equilibrium") {
  // The fast action dominates on time (ratio > 2), the slow one on greenness,
  // so neither matched cell survives and the players' clamps guarantee a
  // mismatch every round. The fallback still settles on one action: the
  // matched cell with the larger payoff sum.
  const CandidateAction green_slow{"g", ActionKind::Learning, {50.0, 1.0, 1.0}};
  const CandidateAction dirty_fast{"f", ActionKind::Operating, {10.0, 10.0, 4.0}};
  const PayoffMatrix m = build_payoff_matrix(green_slow, dirty_fast, Confidence(0.5));
  CHECK((find_psne(m) == std::vector<std::pair<int, int>>{{1, 0}}));
  const MixedStrategy s = solve_msne(m);
  CHECK(s.p == 1.0);
  CHECK(s.q == 0.0);
  CHECK_FALSE(s.interior);
  Rng rng(310);
  const PlayResult out = play(m, s, rng, 8);
  CHECK(out.psne_fallback);
  CHECK(out.rounds == 8);
  CHECK(out.action_id == "g");  // 2*(r1+g1) = 1.02 beats 2*(r2+g2) = 0.125
}

TEST_CASE("play is deterministic for a fixed seed") {
  const PayoffMatrix m = reference_matrix();
  const MixedStrategy s = solve_msne(m);
  Rng first(42);
  Rng second(42);
  const PlayResult a = play(m, s, first, 10);
  const PlayResult b = play(m, s, second, 10);
  CHECK(a.action_id == b.action_id);
  CHECK(a.rounds == b.rounds);
  CHECK(a.psne_fallback == b.psne_fallback);
  CHECK(first == second);
}

TEST_CASE("match frequency approaches pq plus its complement product") {
  const PayoffMatrix m = reference_matrix();
  const MixedStrategy s = solve_msne(m);  // p = 5/7, q = 1/2
  Rng rng(308);
  int matches = 0;
  const int rounds = 100000;
  for (int i = 0; i < rounds; ++i) {
    if (!play(m, s, rng, 1).psne_fallback) ++matches;
  }
  const double expected = s.p * s.q + (1.0 - s.p) * (1.0 - s.q);
  CHECK(std::abs(static_cast<double>(matches) / rounds - expected) <= 0.01);
}

TEST_CASE("play validates its inputs") {
  Rng rng(309);
  const PayoffMatrix m = reference_matrix();
  CHECK_THROWS_AS((play(m, MixedStrategy{0.5, 0.5, true}, rng, 0)), DomainError);
  CHECK_THROWS_AS((play(m, MixedStrategy{1.5, 0.5, true}, rng, 5)), DomainError);
}

}  // TEST_SUITE("game")
