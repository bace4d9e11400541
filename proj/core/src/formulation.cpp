#include "swaf/formulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swaf/errors.hpp"

namespace swaf {

double pbh_map_coordinate(double x, const Bounds& b) {
  const double s = b.range();
  double z = x;
  // (l - x) and (x - u) are positive in their branches, so fmod is already the
  // non-negative modulus here.
  if (x < b.lower) {
    z = b.upper - std::fmod(b.lower - x, s);
  } else if (x > b.upper) {
    z = b.lower + std::fmod(x - b.upper, s);
  }
  // Rounding in s = u - l can leave z one ulp outside the box.
  return std::clamp(z, b.lower, b.upper);
}

Vector pbh_map(std::span<const double> x, std::span<const Bounds> bounds) {
  if (x.size() != bounds.size()) {
    throw ArgumentError("pbh_map: point and bounds differ in dimension");
  }
  Vector z(x.size());
  for (std::size_t d = 0; d < x.size(); ++d) {
    z[d] = pbh_map_coordinate(x[d], bounds[d]);
  }
  return z;
}

GoodnessPair goodness(Problem& problem, std::span<const double> x) {
  const Vector z = pbh_map(x, problem.bounds());
  const RawEvaluation raw = problem.evaluate_raw(z);
  GoodnessPair gp{raw.objective, 0.0};
  for (double g : raw.constraints) {
    gp.f_con += std::max(0.0, g);
  }
  return gp;
}

Ordering bch_compare(const GoodnessPair& a, const GoodnessPair& b) {
  if (a.f_con < b.f_con || (a.f_con == b.f_con && a.f_obj <= b.f_obj)) {
    return Ordering::a_better_or_equal;
  }
  return Ordering::b_better;
}

GoodnessPair acr_apply(const GoodnessPair& gp, double epsilon_r) {
  return {gp.f_obj, std::max(epsilon_r, gp.f_con)};
}

AcrParams AcrParams::defaults_for(std::size_t max_cycles) {
  AcrParams p;
  p.t_th = max_cycles / 2;
  return p;
}

void AcrParams::validate(std::size_t max_cycles) const {
  if (!(0.0 <= r_l && r_l < r_u && r_u <= 1.0)) {
    throw ArgumentError("ACR: require 0 <= r_l < r_u <= 1");
  }
  if (!(0.0 < beta_l && beta_l < 1.0 && 1.0 < beta_u && beta_u < 1.0 / beta_l)) {
    throw ArgumentError("ACR: require 0 < beta_l < 1 < beta_u < 1/beta_l");
  }
  if (!(0.0 < beta_f && beta_f < 1.0)) {
    throw ArgumentError("ACR: require 0 < beta_f < 1");
  }
  if (t_th > max_cycles) {
    throw ArgumentError("ACR: t_th exceeds the cycle budget");
  }
}

namespace {

void refresh_statistics(AcrState& s, std::span<const GoodnessPair> published) {
  s.n_eps = 0;
  s.eps_min = std::numeric_limits<double>::infinity();
  s.eps_max = 0.0;
  for (const auto& gp : published) {
    if (gp.f_con > s.epsilon_r) {
      ++s.n_eps;
    }
    s.eps_min = std::min(s.eps_min, gp.f_con);
    s.eps_max = std::max(s.eps_max, gp.f_con);
  }
}

}  // namespace

AcrState acr_init(std::span<const GoodnessPair> published) {
  if (published.empty()) {
    throw StateError("acr_init: empty published set");
  }
  AcrState s;
  refresh_statistics(s, published);
  s.epsilon_r = s.eps_max;
  refresh_statistics(s, published);
  return s;
}

AcrState acr_update(const AcrState& state, const AcrParams& params, std::size_t t,
                    std::span<const GoodnessPair> published) {
  if (published.empty()) {
    throw StateError("acr_update: empty published set");
  }
  AcrState next = state;
  refresh_statistics(next, published);

  const double ratio =
      static_cast<double>(next.n_eps) / static_cast<double>(published.size());
  if (t >= params.t_th && next.eps_min > 0.0) {
    next.epsilon_r = params.beta_f * state.epsilon_r;
  } else if (ratio <= params.r_l) {
    next.epsilon_r = params.beta_l * state.epsilon_r;
  } else if (ratio >= params.r_u) {
    next.epsilon_r = params.beta_u * state.epsilon_r;
  }
  return next;
}

}  // namespace swaf
