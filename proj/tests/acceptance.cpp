// Runs the acceptance batteries and prints one line per criterion.
// Usage: acceptance [criterion ...]   (default: all)

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "twistpos/battery.hpp"

using namespace twistpos;

namespace {

struct Criterion {
  int id;
  double limit_seconds;
  std::function<BatteryReport(const BatteryOptions&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, 10, [](const BatteryOptions& o) { return battery_order_sanity(o); }},
      {2, 120, [](const BatteryOptions& o) { return battery_weyl_shellable(o); }},
      {3, 300, [](const BatteryOptions& o) { return battery_twisted_parametrization(o); }},
      {4, 300, [](const BatteryOptions& o) { return battery_inclusion_product(o); }},
      {5, 30, [](const BatteryOptions& o) { return battery_demazure(o); }},
      {6, 60, [](const BatteryOptions& o) { return battery_thickening(o); }},
      {7, 180, [](const BatteryOptions& o) { return battery_qhat(o); }},
      {8, 120, [](const BatteryOptions& o) { return battery_z_parametrization(o); }},
      {9, 60, [](const BatteryOptions& o) { return battery_tnn(o); }},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int k = 1; k < argc; ++k) wanted.push_back(std::atoi(argv[k]));
  const BatteryOptions opts;
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const auto rep = c.run(opts);
    const bool in_time = rep.seconds <= c.limit_seconds;
    const bool pass = rep.verdict() == Verdict::Pass && in_time;
    all_pass = all_pass && pass;
    std::printf("criterion %d: %s  %s  checks=%zu failures=%zu inconclusive=%zu time=%.1fs/%.0fs seed=%llu\n", c.id,
                pass ? "PASS" : "FAIL", rep.name.c_str(), rep.checks, rep.failures, rep.inconclusive, rep.seconds,
                c.limit_seconds, static_cast<unsigned long long>(rep.seed));
    for (const auto& [k, v] : rep.facts) std::printf("    %s: %s\n", k.c_str(), v.c_str());
    for (const auto& m : rep.messages) std::printf("    %s\n", m.c_str());
    if (!in_time) std::printf("    over the time limit\n");
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
