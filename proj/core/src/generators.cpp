#include "pandora/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <string>

namespace pandora {

namespace {

void check_size(std::size_t boxes, std::size_t scenarios) {
  if (boxes == 0 || boxes > kMaxGeneratedBoxes) {
    throw Error("box count must lie in [1, " + std::to_string(kMaxGeneratedBoxes) + "]");
  }
  if (scenarios == 0 || scenarios > kMaxGeneratedScenarios) {
    throw Error("scenario count must lie in [1, " + std::to_string(kMaxGeneratedScenarios) +
                "]");
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s) {
  s = trim(s);
  if (s == "inf") return kInfinity;
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("cannot parse number '" + std::string(s) + "'");
  }
  return out;
}

}  // namespace

Instance random_instance(std::size_t boxes, std::size_t scenarios, std::uint64_t seed,
                         const RandomInstanceOptions& options) {
  check_size(boxes, scenarios);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> cost(options.min_cost, options.max_cost);
  std::uniform_int_distribution<int> value(0, options.max_value);
  std::bernoulli_distribution infinite(options.infinity_probability);
  std::uniform_int_distribution<std::size_t> any_box(0, boxes - 1);
  std::uniform_int_distribution<int> weight(1, std::max(1, options.max_weight));

  Instance out;
  for (std::size_t b = 0; b < boxes; ++b) out.costs.push_back(cost(rng));
  for (std::size_t s = 0; s < scenarios; ++s) {
    Scenario sc;
    bool any_finite = false;
    for (std::size_t b = 0; b < boxes; ++b) {
      if (infinite(rng)) {
        sc.values.push_back(kInfinity);
      } else {
        sc.values.push_back(value(rng));
        any_finite = true;
      }
    }
    if (!any_finite) sc.values[any_box(rng)] = value(rng);
    sc.weight = options.max_weight > 0 ? weight(rng) : 1.0;
    out.scenarios.push_back(std::move(sc));
  }
  return out;
}

Instance mssc_instance(std::size_t boxes, std::size_t scenarios, std::uint64_t seed,
                       double zero_probability) {
  check_size(boxes, scenarios);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution zero(zero_probability);
  std::uniform_int_distribution<std::size_t> any_box(0, boxes - 1);

  Instance out;
  out.costs.assign(boxes, 1.0);
  for (std::size_t s = 0; s < scenarios; ++s) {
    Scenario sc;
    bool any_zero = false;
    for (std::size_t b = 0; b < boxes; ++b) {
      const bool z = zero(rng);
      sc.values.push_back(z ? 0.0 : kInfinity);
      any_zero = any_zero || z;
    }
    if (!any_zero) sc.values[any_box(rng)] = 0.0;
    out.scenarios.push_back(std::move(sc));
  }
  return out;
}

std::vector<std::vector<SupportPoint>> parse_supports(std::string_view text) {
  std::vector<std::vector<SupportPoint>> out;
  for (std::string_view box : split(text, ';')) {
    std::vector<SupportPoint> support;
    for (std::string_view point : split(box, ',')) {
      const auto parts = split(point, ':');
      if (parts.size() != 2) {
        throw Error("support point '" + std::string(point) + "' is not value:probability");
      }
      support.push_back({parse_number(parts[0]), parse_number(parts[1])});
    }
    out.push_back(std::move(support));
  }
  return out;
}

Instance adversarial_cost_instance(std::size_t boxes, std::size_t scenarios, double scale,
                                   std::uint64_t seed) {
  check_size(boxes, scenarios);
  if (boxes < 2 || scenarios < 2) throw Error("adversarial instance needs n >= 2 and m >= 2");
  if (!(scale > 1.0)) throw Error("adversarial scale H must exceed 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(0, 9);

  Instance out;
  out.costs.assign(boxes, scale);
  out.costs[0] = 1.0 / scale;

  const double rare_mass = 1.0 / scale / static_cast<double>(scenarios - 1);
  for (std::size_t s = 0; s < scenarios; ++s) {
    Scenario sc;
    sc.values.push_back(s == 0 ? 0.0 : kInfinity);
    for (std::size_t b = 1; b < boxes; ++b) sc.values.push_back(value(rng));
    sc.weight = s == 0 ? 1.0 - 1.0 / scale : rare_mass;
    out.scenarios.push_back(std::move(sc));
  }
  return out;
}

}  // namespace pandora
