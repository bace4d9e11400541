#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swaf/rng.hpp"

namespace swaf {

struct DeployerParams {
  std::size_t n_inputs = 3;
  std::size_t n_hidden = 20;
  std::size_t n_outputs = 11;  // one output neuron per candidate rule
  std::size_t interval = 100;  // learning cycles between redeployments
  double worse_ratio = 0.2;    // worst fraction of agents that gets punished

  void validate() const;
};

/// Two-layer winner-take-all network that picks an agent's active rule.
///
/// Firing follows only the strongest synapse out of the current neuron
/// (input -> hidden -> output). Learning is depression only: when the agent
/// ends an interval among the worst `worse_ratio` of the swarm, both synapses
/// of the firing path lose the same random amount. Weights are not floored,
/// so a punished path keeps losing until a rival takes over.
class DeployerNetwork {
 public:
  struct Path {
    std::size_t input = 0;
    std::size_t hidden = 0;
    std::size_t output = 0;

    friend bool operator==(const Path&, const Path&) = default;
  };

  /// Every synaptic strength drawn uniformly from [0, 1).
  DeployerNetwork(const DeployerParams& params, RngStream& rng);

  /// Explicit weights: `input_hidden` is n_hidden x n_inputs row-major,
  /// `hidden_output` is n_outputs x n_hidden row-major.
  DeployerNetwork(const DeployerParams& params, std::vector<double> input_hidden,
                  std::vector<double> hidden_output);

  /// Pick a random input neuron, follow the maximal synapses (lowest index on
  /// ties) and return the firing output neuron. Restarts the interval.
  std::size_t fire(RngStream& rng);

  /// Subtract `xi` from both synapses on the active path.
  /// Throws StateError when nothing has fired yet.
  void depress(double xi);

  /// One learning cycle of deployment. At an interval boundary the active
  /// path is punished if `rank_fraction` (0 = best agent) falls in the worst
  /// `worse_ratio` part, and the network fires again. Returns the output
  /// neuron whose rule runs this cycle.
  std::size_t deploy_step(double rank_fraction, RngStream& rng);

  /// True when the next deploy_step will redeploy.
  bool interval_elapsed() const { return cycles_remaining_ == 0; }

  double input_hidden(std::size_t hidden, std::size_t input) const {
    return w1_[hidden * params_.n_inputs + input];
  }
  double hidden_output(std::size_t output, std::size_t hidden) const {
    return w2_[output * params_.n_hidden + hidden];
  }

  const DeployerParams& params() const { return params_; }
  const std::optional<Path>& active_path() const { return path_; }
  std::size_t cycles_remaining() const { return cycles_remaining_; }

 private:
  DeployerParams params_;
  std::vector<double> w1_;
  std::vector<double> w2_;
  std::optional<Path> path_;
  std::size_t cycles_remaining_ = 0;
};

}  // namespace swaf
