#include <vector>

#include "doctest.h"
#include "swaf/deployer.hpp"
#include "swaf/errors.hpp"

using swaf::DeployerNetwork;
using swaf::DeployerParams;
using Path = DeployerNetwork::Path;

namespace {

DeployerParams tiny(std::size_t interval = 4) {
  DeployerParams p;
  p.n_inputs = 1;
  p.n_hidden = 2;
  p.n_outputs = 2;
  p.interval = interval;
  return p;
}

// w1 = [(0.9), (0.1)]; hidden 0 prefers output 1, hidden 1 prefers output 0.
DeployerNetwork hand_network(std::size_t interval = 4) {
  return DeployerNetwork(tiny(interval), {0.9, 0.1}, {0.2, 0.5, 0.7, 0.3});
}

}  // namespace

TEST_CASE("fire follows the strongest synapses") {
  auto net = hand_network();
  swaf::RngStream rng(1);
  CHECK(net.fire(rng) == 1);
  CHECK(net.active_path() == Path{0, 0, 1});
  CHECK(net.cycles_remaining() == 4);
}

TEST_CASE("ties go to the lowest index") {
  DeployerParams p;
  p.n_inputs = 3;
  p.n_hidden = 4;
  p.n_outputs = 5;
  DeployerNetwork net(p, std::vector<double>(12, 0.5), std::vector<double>(20, 0.5));
  swaf::RngStream rng(9);
  for (int i = 0; i < 20; ++i) {
    CHECK(net.fire(rng) == 0);
    CHECK(net.active_path()->hidden == 0);
  }
}

TEST_CASE("depress lowers both path synapses by the same amount") {
  auto net = hand_network();
  CHECK_THROWS_AS(net.depress(0.1), swaf::StateError);

  swaf::RngStream rng(1);
  net.fire(rng);
  net.depress(0.0);
  CHECK(net.input_hidden(0, 0) == 0.9);
  CHECK(net.hidden_output(1, 0) == 0.7);

  DeployerNetwork half(tiny(), {0.5, 0.1}, {0.2, 0.5, 0.5, 0.3});
  half.fire(rng);
  half.depress(0.3);
  CHECK(half.input_hidden(0, 0) == doctest::Approx(0.2));
  CHECK(half.hidden_output(1, 0) == doctest::Approx(0.2));
  // Off-path weights untouched.
  CHECK(half.input_hidden(1, 0) == 0.1);
  CHECK(half.hidden_output(0, 0) == 0.2);
  CHECK(half.hidden_output(0, 1) == 0.5);
}

TEST_CASE("repeated depression abandons the path") {
  // Output 1 dominates under hidden 0 by a wide margin, so the hidden layer flips first.
  DeployerNetwork net(tiny(), {0.9, 0.1}, {0.0, 0.5, 5.0, 0.3});
  swaf::RngStream rng(1);
  net.fire(rng);
  int punishments = 0;
  while (net.fire(rng) == 1) {
    net.depress(0.3);
    ++punishments;
    REQUIRE(punishments < 10);
  }
  CHECK(punishments == 3);
  CHECK(net.active_path() == Path{0, 1, 0});
  // No floor at zero.
  CHECK(net.input_hidden(0, 0) < 0.1);
}

TEST_CASE("the rule holds for a whole interval") {
  auto net = hand_network(5);
  swaf::RngStream rng(3);
  CHECK(net.interval_elapsed());
  for (int i = 0; i < 5; ++i) {
    CHECK(net.deploy_step(1.0, rng) == 1);
  }
  CHECK(net.interval_elapsed());
  // Weights only changed at boundaries; the first firing punished nothing.
  CHECK(net.input_hidden(0, 0) == 0.9);
}

TEST_CASE("only the worst part is punished at a boundary") {
  auto good = hand_network(2);
  auto bad = hand_network(2);
  swaf::RngStream r1(5), r2(5);
  for (int i = 0; i < 2; ++i) {
    good.deploy_step(0.0, r1);
    bad.deploy_step(0.0, r2);
  }
  good.deploy_step(0.5, r1);
  CHECK(good.input_hidden(0, 0) == 0.9);
  CHECK(good.hidden_output(1, 0) == 0.7);

  // 56 of 70 agents rank better: inside the worst 20 %.
  bad.deploy_step(56.0 / 70.0, r2);
  CHECK(bad.input_hidden(0, 0) < 0.9);
  CHECK(0.9 - bad.input_hidden(0, 0) == doctest::Approx(0.7 - bad.hidden_output(1, 0)));
}

TEST_CASE("random networks are reproducible from the seed") {
  DeployerParams p;
  swaf::RngStream a(123), b(123);
  DeployerNetwork na(p, a), nb(p, b);
  for (std::size_t j = 0; j < p.n_hidden; ++j) {
    for (std::size_t i = 0; i < p.n_inputs; ++i) {
      REQUIRE(na.input_hidden(j, i) == nb.input_hidden(j, i));
      REQUIRE(na.input_hidden(j, i) >= 0.0);
      REQUIRE(na.input_hidden(j, i) < 1.0);
    }
  }
  swaf::RngStream rank(77);
  for (int t = 0; t < 2000; ++t) {
    const double r = rank.uniform_real();
    REQUIRE(na.deploy_step(r, a) == nb.deploy_step(r, b));
  }
}

TEST_CASE("deployer parameter validation") {
  DeployerParams p;
  CHECK_NOTHROW(p.validate());
  p.interval = 0;
  CHECK_THROWS_AS(p.validate(), swaf::ArgumentError);
  p = DeployerParams{};
  p.worse_ratio = 0.0;
  CHECK_THROWS_AS(p.validate(), swaf::ArgumentError);
  p = DeployerParams{};
  p.n_hidden = 0;
  CHECK_THROWS_AS(p.validate(), swaf::ArgumentError);
  CHECK_THROWS_AS(DeployerNetwork(tiny(), {0.1}, {0.1, 0.2, 0.3, 0.4}), swaf::ArgumentError);
}
