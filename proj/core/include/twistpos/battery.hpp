#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace twistpos {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

/// Outcome of one randomized or exhaustive check suite.
struct BatteryReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t inconclusive = 0;
  std::vector<std::string> messages;  // the first few failures
  std::vector<std::pair<std::string, std::string>> facts;  // summary numbers
  double seconds = 0;

  void check(bool ok, const std::function<std::string()>& what);
  void fail(const std::string& what);
  void skip(const std::string& what);
  void note(const std::string& key, const std::string& value) { facts.emplace_back(key, value); }
  Verdict verdict() const;
};

struct BatteryOptions {
  std::uint64_t seed = 20240607;
  /// Samples per stratum in the sampling batteries.
  std::size_t samples = 100;
  /// Samples per (pair, r) in the product-structure battery.
  std::size_t product_samples = 100;
  /// Distinct parameter vectors in the large injectivity check.
  std::size_t injectivity = 1000;
  /// Sampled intervals per infinite group.
  std::size_t infinite_intervals = 60;
  std::size_t tnn_products = 500;
  std::size_t tnn_adversarial = 100;
};

BatteryReport battery_order_sanity(const BatteryOptions& opts);
BatteryReport battery_weyl_shellable(const BatteryOptions& opts);
BatteryReport battery_twisted_parametrization(const BatteryOptions& opts, const std::vector<std::size_t>& ns = {3, 4});
BatteryReport battery_inclusion_product(const BatteryOptions& opts, const std::vector<std::size_t>& ns = {3, 4});
BatteryReport battery_demazure(const BatteryOptions& opts);
BatteryReport battery_thickening(const BatteryOptions& opts);
BatteryReport battery_qhat(const BatteryOptions& opts);
BatteryReport battery_z_parametrization(const BatteryOptions& opts, const std::vector<std::size_t>& ns = {2, 3});
BatteryReport battery_tnn(const BatteryOptions& opts);
/// Negative and positive Marsh-Rietsch samples for every v <= w in SL_n.
BatteryReport battery_marsh_rietsch(const BatteryOptions& opts, const std::vector<std::size_t>& ns = {3});

}  // namespace twistpos
