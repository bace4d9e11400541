#include "swaf/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "swaf/errors.hpp"

namespace swaf {

namespace {

using std::cos;
using std::exp;
using std::sin;
using X = std::span<const double>;
using std::numbers::pi;

double sq(double v) { return v * v; }
double cube(double v) { return v * v * v; }

std::vector<Bounds> uniform_bounds(std::size_t n, double lo, double hi) {
  return std::vector<Bounds>(n, Bounds{lo, hi});
}

Problem goldstein_price() {
  return Problem({
      .name = "GP",
      .bounds = uniform_bounds(2, -2.0, 2.0),
      .objective =
          [](X x) {
            const double a = 1.0 + sq(x[0] + x[1] + 1.0) *
                                       (19.0 - 14.0 * x[0] + 3.0 * sq(x[0]) - 14.0 * x[1] +
                                        6.0 * x[0] * x[1] + 3.0 * sq(x[1]));
            const double b = 30.0 + sq(2.0 * x[0] - 3.0 * x[1]) *
                                        (18.0 - 32.0 * x[0] + 12.0 * sq(x[0]) + 48.0 * x[1] -
                                         36.0 * x[0] * x[1] + 27.0 * sq(x[1]));
            return a * b;
          },
      .known_best = 3.0,
      .known_optimizer = Vector{0.0, -1.0},
  });
}

Problem branin() {
  return Problem({
      .name = "BR",
      .bounds = {{-5.0, 10.0}, {0.0, 15.0}},
      .objective =
          [](X x) {
            return sq(x[1] - 5.1 / (4.0 * pi * pi) * sq(x[0]) + 5.0 / pi * x[0] - 6.0) +
                   10.0 * (1.0 - 1.0 / (8.0 * pi)) * cos(x[0]) + 10.0;
          },
      .known_best = 0.397887,
      .known_optimizer = Vector{pi, 2.275},
  });
}

Problem hartman3() {
  return Problem({
      .name = "H3",
      .bounds = uniform_bounds(3, 0.0, 1.0),
      .objective =
          [](X x) {
            static constexpr double c[4] = {1.0, 1.2, 3.0, 3.2};
            static constexpr double a[4][3] = {
                {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}};
            static constexpr double p[4][3] = {{0.3689, 0.1170, 0.2673},
                                               {0.4699, 0.4387, 0.7470},
                                               {0.1091, 0.8732, 0.5547},
                                               {0.03815, 0.5743, 0.8828}};
            double sum = 0.0;
            for (int i = 0; i < 4; ++i) {
              double inner = 0.0;
              for (int j = 0; j < 3; ++j) {
                inner += a[i][j] * sq(x[j] - p[i][j]);
              }
              sum += c[i] * exp(-inner);
            }
            return -sum;
          },
      .known_best = -3.86278,
      .known_optimizer = Vector{0.11461434203082951, 0.55564885079053838, 0.85254695384602508},
  });
}

Problem shubert() {
  return Problem({
      .name = "SH",
      .bounds = uniform_bounds(2, -10.0, 10.0),
      .objective =
          [](X x) {
            double s0 = 0.0;
            double s1 = 0.0;
            for (int i = 1; i <= 5; ++i) {
              s0 += i * cos((i + 1) * x[0] + i);
              s1 += i * cos((i + 1) * x[1] + i);
            }
            return s0 * s1;
          },
      .known_best = -186.7309,
      .known_optimizer = Vector{-1.4251284289564423, -0.8003211005067602},
  });
}

Problem g1() {
  std::vector<Bounds> b = uniform_bounds(13, 0.0, 1.0);
  b[9] = b[10] = b[11] = Bounds{0.0, 100.0};
  return Problem({
      .name = "G1",
      .bounds = std::move(b),
      .objective =
          [](X x) {
            double f = 0.0;
            for (int i = 0; i < 4; ++i) {
              f += 5.0 * x[i] - 5.0 * sq(x[i]);
            }
            for (int i = 4; i < 13; ++i) {
              f -= x[i];
            }
            return f;
          },
      .constraints =
          {
              [](X x) { return 2 * x[0] + 2 * x[1] + x[9] + x[10] - 10; },
              [](X x) { return 2 * x[0] + 2 * x[2] + x[9] + x[11] - 10; },
              [](X x) { return 2 * x[1] + 2 * x[2] + x[10] + x[11] - 10; },
              [](X x) { return -8 * x[0] + x[9]; },
              [](X x) { return -8 * x[1] + x[10]; },
              [](X x) { return -8 * x[2] + x[11]; },
              [](X x) { return -2 * x[3] - x[4] + x[9]; },
              [](X x) { return -2 * x[5] - x[6] + x[10]; },
              [](X x) { return -2 * x[7] - x[8] + x[11]; },
          },
      .known_best = -15.0,
      .known_optimizer = Vector{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1},
  });
}

Problem g2() {
  return Problem({
      .name = "G2",
      .bounds = uniform_bounds(20, 0.0, 10.0),
      .objective =
          [](X x) {
            double sum4 = 0.0;
            double prod2 = 1.0;
            double weighted = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
              const double c = cos(x[i]);
              sum4 += sq(sq(c));
              prod2 *= sq(c);
              weighted += static_cast<double>(i + 1) * sq(x[i]);
            }
            return std::abs(sum4 - 2.0 * prod2) / std::sqrt(weighted);
          },
      .constraints =
          {
              [](X x) {
                double prod = 1.0;
                for (double v : x) prod *= v;
                return 0.75 - prod;
              },
              [](X x) {
                double sum = 0.0;
                for (double v : x) sum += v;
                return sum - 7.5 * static_cast<double>(x.size());
              },
          },
      .sense = Sense::maximize,
      .known_best = 0.80362,
      .known_optimizer =
          Vector{3.1624606168147467,  3.1283314306999639,  3.0947921309105442,
                 3.0614505912451389,  3.0279291615969033,  2.9938260683536675,
                 2.9586687160641829,  2.9218422748224353,  0.49482511474972957,
                 0.48835711019854172, 0.48231642713235851, 0.47664475118800781,
                 0.47129550800784248, 0.46623099256571637, 0.46142004961953043,
                 0.45683664794574497, 0.45245876905064258, 0.44826762228743117,
                 0.44424700924023952, 0.44038285944990696},
  });
}

Problem g3() {
  constexpr std::size_t n = 10;
  return Problem({
      .name = "G3",
      .bounds = uniform_bounds(n, 0.0, 1.0),
      .objective =
          [](X x) {
            double prod = std::pow(std::sqrt(static_cast<double>(x.size())),
                                   static_cast<double>(x.size()));
            for (double v : x) prod *= v;
            return prod;
          },
      .constraints = {convert_equality(
          [](X x) {
            double sum = 0.0;
            for (double v : x) sum += sq(v);
            return sum - 1.0;
          },
          kCatalogEqualityTolerance)},
      .sense = Sense::maximize,
      .known_best = 1.0005,
      .known_optimizer = Vector(n, 1.0 / std::sqrt(static_cast<double>(n))),
  });
}

Problem g4() {
  auto a = [](X x) {
    return 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] -
           0.0022053 * x[2] * x[4];
  };
  auto b = [](X x) {
    return 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * sq(x[2]);
  };
  auto c = [](X x) {
    return 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] +
           0.0019085 * x[2] * x[3];
  };
  return Problem({
      .name = "G4",
      .bounds = {{78.0, 102.0}, {33.0, 45.0}, {27.0, 45.0}, {27.0, 45.0}, {27.0, 45.0}},
      .objective =
          [](X x) {
            return 5.3578547 * sq(x[2]) + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] -
                   40792.141;
          },
      .constraints =
          {
              [a](X x) { return a(x) - 92.0; },
              [a](X x) { return -a(x); },
              [b](X x) { return b(x) - 110.0; },
              [b](X x) { return 90.0 - b(x); },
              [c](X x) { return c(x) - 25.0; },
              [c](X x) { return 20.0 - c(x); },
          },
      .known_best = -30665.5,
      .known_optimizer = Vector{78.0, 33.0, 29.995256035682001, 45.0, 36.775812885788},
  });
}

Problem g5() {
  const double eps = kCatalogEqualityTolerance;
  return Problem({
      .name = "G5",
      .bounds = {{0.0, 1200.0}, {0.0, 1200.0}, {-0.55, 0.55}, {-0.55, 0.55}},
      .objective =
          [](X x) {
            return 3.0 * x[0] + 0.000001 * cube(x[0]) + 2.0 * x[1] +
                   (0.000002 / 3.0) * cube(x[1]);
          },
      .constraints =
          {
              [](X x) { return -x[3] + x[2] - 0.55; },
              [](X x) { return -x[2] + x[3] - 0.55; },
              convert_equality(
                  [](X x) {
                    return 1000.0 * sin(-x[2] - 0.25) + 1000.0 * sin(-x[3] - 0.25) + 894.8 -
                           x[0];
                  },
                  eps),
              convert_equality(
                  [](X x) {
                    return 1000.0 * sin(x[2] - 0.25) + 1000.0 * sin(x[2] - x[3] - 0.25) +
                           894.8 - x[1];
                  },
                  eps),
              convert_equality(
                  [](X x) {
                    return 1000.0 * sin(x[3] - 0.25) + 1000.0 * sin(x[3] - x[2] - 0.25) +
                           1294.8;
                  },
                  eps),
          },
      .known_best = 5126.497,
      .known_optimizer =
          Vector{679.9451489029733, 1026.0669763292588, 0.11887636899714218, -0.39623348550508342},
  });
}

Problem g6() {
  return Problem({
      .name = "G6",
      .bounds = {{13.0, 100.0}, {0.0, 100.0}},
      .objective = [](X x) { return cube(x[0] - 10.0) + cube(x[1] - 20.0); },
      .constraints =
          {
              [](X x) { return -sq(x[0] - 5.0) - sq(x[1] - 5.0) + 100.0; },
              [](X x) { return sq(x[0] - 6.0) + sq(x[1] - 5.0) - 82.81; },
          },
      .known_best = -6961.81,
      .known_optimizer = Vector{14.095000001126852, 0.84296079145612646},
  });
}

Problem g7() {
  return Problem({
      .name = "G7",
      .bounds = uniform_bounds(10, -10.0, 10.0),
      .objective =
          [](X x) {
            return sq(x[0]) + sq(x[1]) + x[0] * x[1] - 14.0 * x[0] - 16.0 * x[1] +
                   sq(x[2] - 10.0) + 4.0 * sq(x[3] - 5.0) + sq(x[4] - 3.0) +
                   2.0 * sq(x[5] - 1.0) + 5.0 * sq(x[6]) + 7.0 * sq(x[7] - 11.0) +
                   2.0 * sq(x[8] - 10.0) + sq(x[9] - 7.0) + 45.0;
          },
      .constraints =
          {
              [](X x) { return -105.0 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7]; },
              [](X x) { return 10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7]; },
              [](X x) { return -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12.0; },
              [](X x) {
                return 3 * sq(x[0] - 2) + 4 * sq(x[1] - 3) + 2 * sq(x[2]) - 7 * x[3] - 120.0;
              },
              [](X x) { return 5 * sq(x[0]) + 8 * x[1] + sq(x[2] - 6) - 2 * x[3] - 40.0; },
              [](X x) {
                return sq(x[0]) + 2 * sq(x[1] - 2) - 2 * x[0] * x[1] + 14 * x[4] - 6 * x[5];
              },
              [](X x) { return 0.5 * sq(x[0] - 8) + 2 * sq(x[1] - 4) + 3 * sq(x[4]) - x[5] - 30.0; },
              [](X x) { return -3 * x[0] + 6 * x[1] + 12 * sq(x[8] - 8) - 7 * x[9]; },
          },
      .known_best = 24.306,
      .known_optimizer =
          Vector{2.1719963387842136, 2.3636830432333795, 8.7739257274354649, 5.095984437800209,
                 0.99065475412536885, 1.4305739269541609, 1.3216441531949761, 9.8287257626989213,
                 8.2800915739006093, 8.3759266486449029},
  });
}

Problem g8() {
  return Problem({
      .name = "G8",
      .bounds = uniform_bounds(2, 0.0, 10.0),
      .objective =
          [](X x) {
            return cube(sin(2.0 * pi * x[0])) * sin(2.0 * pi * x[1]) /
                   (cube(x[0]) * (x[0] + x[1]));
          },
      .constraints =
          {
              [](X x) { return sq(x[0]) - x[1] + 1.0; },
              [](X x) { return 1.0 - x[0] + sq(x[1] - 4.0); },
          },
      .sense = Sense::maximize,
      .known_best = 0.095825,
      .known_optimizer = Vector{1.227971352607526, 4.2453733661227488},
  });
}

Problem g9() {
  return Problem({
      .name = "G9",
      .bounds = uniform_bounds(7, -10.0, 10.0),
      .objective =
          [](X x) {
            return sq(x[0] - 10.0) + 5.0 * sq(x[1] - 12.0) + sq(sq(x[2])) +
                   3.0 * sq(x[3] - 11.0) + 10.0 * cube(sq(x[4])) + 7.0 * sq(x[5]) +
                   sq(sq(x[6])) - 4.0 * x[5] * x[6] - 10.0 * x[5] - 8.0 * x[6];
          },
      .constraints =
          {
              [](X x) {
                return -127.0 + 2 * sq(x[0]) + 3 * sq(sq(x[1])) + x[2] + 4 * sq(x[3]) + 5 * x[4];
              },
              [](X x) { return -282.0 + 7 * x[0] + 3 * x[1] + 10 * sq(x[2]) + x[3] - x[4]; },
              [](X x) { return -196.0 + 23 * x[0] + sq(x[1]) + 6 * sq(x[5]) - 8 * x[6]; },
              [](X x) {
                return 4 * sq(x[0]) + sq(x[1]) - 3 * x[0] * x[1] + 2 * sq(x[2]) + 5 * x[5] -
                       11 * x[6];
              },
          },
      .known_best = 680.630,
      .known_optimizer =
          Vector{2.3304993502483127, 1.9513723651580706, -0.47754139960612613, 4.3657262523261862,
                 -0.62448695740045812, 1.0381309942532533, 1.5942266815176753},
  });
}

Problem g10() {
  std::vector<Bounds> b = uniform_bounds(8, 10.0, 1000.0);
  b[0] = Bounds{100.0, 10000.0};
  b[1] = b[2] = Bounds{1000.0, 10000.0};
  return Problem({
      .name = "G10",
      .bounds = std::move(b),
      .objective = [](X x) { return x[0] + x[1] + x[2]; },
      .constraints =
          {
              [](X x) { return -1.0 + 0.0025 * (x[3] + x[5]); },
              [](X x) { return -1.0 + 0.0025 * (x[4] + x[6] - x[3]); },
              [](X x) { return -1.0 + 0.01 * (x[7] - x[4]); },
              [](X x) { return -x[0] * x[5] + 833.33252 * x[3] + 100.0 * x[0] - 83333.333; },
              [](X x) { return -x[1] * x[6] + 1250.0 * x[4] + x[1] * x[3] - 1250.0 * x[3]; },
              [](X x) { return -x[2] * x[7] + 1250000.0 + x[2] * x[4] - 2500.0 * x[4]; },
          },
      .known_best = 7049.248,
      .known_optimizer =
          Vector{579.30668513258661, 1359.9706788969297, 5109.9706681864527, 182.01769949845587,
                 295.60117345380223, 217.98230033829549, 286.41652582744007, 395.60117340649407},
  });
}

Problem g11() {
  return Problem({
      .name = "G11",
      .bounds = uniform_bounds(2, -1.0, 1.0),
      .objective = [](X x) { return sq(x[0]) + sq(x[1] - 1.0); },
      .constraints = {convert_equality([](X x) { return x[1] - sq(x[0]); },
                                       kCatalogEqualityTolerance)},
      .known_best = 0.7499,
      .known_optimizer = Vector{1.0 / std::numbers::sqrt2, 0.5},
  });
}

using Factory = Problem (*)();

struct Entry {
  std::string_view id;
  Factory make;
};

constexpr Entry kCatalog[] = {
    {"GP", goldstein_price}, {"BR", branin}, {"H3", hartman3}, {"SH", shubert},
    {"G1", g1},              {"G2", g2},     {"G3", g3},       {"G4", g4},
    {"G5", g5},              {"G6", g6},     {"G7", g7},       {"G8", g8},
    {"G9", g9},              {"G10", g10},   {"G11", g11},
};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

std::vector<Problem> benchmark_catalog() {
  std::vector<Problem> out;
  out.reserve(std::size(kCatalog));
  for (const auto& e : kCatalog) {
    out.push_back(e.make());
  }
  return out;
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> out;
  for (const auto& e : kCatalog) {
    out.emplace_back(e.id);
  }
  return out;
}

std::vector<std::string> table_row_order() {
  return {"GP", "BR", "H3", "SH", "G1", "G2", "G4", "G6",
          "G7", "G8", "G9", "G10", "G3", "G5", "G11"};
}

Problem make_catalog_problem(std::string_view id) {
  const std::string key = upper(id);
  for (const auto& e : kCatalog) {
    if (e.id == key) {
      return e.make();
    }
  }
  throw ConfigError("unknown built-in problem '" + std::string(id) + "'");
}

}  // namespace swaf
