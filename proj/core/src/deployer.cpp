#include "swaf/deployer.hpp"

#include "swaf/errors.hpp"

namespace swaf {

void DeployerParams::validate() const {
  if (n_inputs == 0 || n_hidden == 0 || n_outputs == 0) {
    throw ArgumentError("deployer: layer sizes must be positive");
  }
  if (interval == 0) {
    throw ArgumentError("deployer: interval must be at least 1");
  }
  if (!(worse_ratio > 0.0 && worse_ratio < 1.0)) {
    throw ArgumentError("deployer: worse ratio must lie in (0, 1)");
  }
}

DeployerNetwork::DeployerNetwork(const DeployerParams& params, RngStream& rng) : params_(params) {
  params_.validate();
  w1_.resize(params_.n_hidden * params_.n_inputs);
  w2_.resize(params_.n_outputs * params_.n_hidden);
  for (double& w : w1_) {
    w = rng.uniform_real();
  }
  for (double& w : w2_) {
    w = rng.uniform_real();
  }
}

DeployerNetwork::DeployerNetwork(const DeployerParams& params, std::vector<double> input_hidden,
                                 std::vector<double> hidden_output)
    : params_(params), w1_(std::move(input_hidden)), w2_(std::move(hidden_output)) {
  params_.validate();
  if (w1_.size() != params_.n_hidden * params_.n_inputs ||
      w2_.size() != params_.n_outputs * params_.n_hidden) {
    throw ArgumentError("deployer: weight matrix shape does not match layer sizes");
  }
}

std::size_t DeployerNetwork::fire(RngStream& rng) {
  Path p;
  p.input = static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(params_.n_inputs) - 1));
  for (std::size_t j = 1; j < params_.n_hidden; ++j) {
    if (input_hidden(j, p.input) > input_hidden(p.hidden, p.input)) {
      p.hidden = j;
    }
  }
  for (std::size_t k = 1; k < params_.n_outputs; ++k) {
    if (hidden_output(k, p.hidden) > hidden_output(p.output, p.hidden)) {
      p.output = k;
    }
  }
  path_ = p;
  cycles_remaining_ = params_.interval;
  return p.output;
}

void DeployerNetwork::depress(double xi) {
  if (!path_) {
    throw StateError("deployer: depress called before any firing");
  }
  w1_[path_->hidden * params_.n_inputs + path_->input] -= xi;
  w2_[path_->output * params_.n_hidden + path_->hidden] -= xi;
}

std::size_t DeployerNetwork::deploy_step(double rank_fraction, RngStream& rng) {
  if (cycles_remaining_ == 0) {
    // Rank fractions are ratios of small integers; the slack keeps e.g.
    // 56/70 inside the worst 20% despite 1 - 0.2 rounding.
    constexpr double kSlack = 1e-12;
    if (path_ && rank_fraction >= 1.0 - params_.worse_ratio - kSlack) {
      depress(rng.uniform_real());
    }
    fire(rng);
  }
  --cycles_remaining_;
  return path_->output;
}

}  // namespace swaf
