#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "twistpos/battery.hpp"
#include "twistpos/homology.hpp"
#include "twistpos/pinning.hpp"
#include "twistpos/poset.hpp"

namespace twistpos::cli {

using nlohmann::json;

/// Cartan matrix plus the names used for nodes on the command line.
struct GroupConfig {
  CartanMatrix cartan;
  std::vector<std::string> labels;
};

GroupConfig default_config(const CartanMatrix& cartan);
GroupConfig load_config(const std::string& path);
/// A2, B3, G2, A1~ (affine A1).
GroupConfig named_config(const std::string& name);

/// Labels separated by whitespace or commas; empty means the identity.
Word parse_word(const GroupConfig& cfg, const std::string& text);
NodeSet parse_nodes(const GroupConfig& cfg, const std::string& text);

std::string word_text(const GroupConfig& cfg, const Word& w);
std::string element_text(const GroupConfig& cfg, const WeylElement& w);

json word_json(const WeylElement& w);
json matrix_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

json poset_json(const FinitePoset& p);
std::string poset_dot(const FinitePoset& p);

SimplicialComplex complex_from_json(const json& j);
json homology_json(const HomologyProfile& h);

json report_json(const BatteryReport& r, bool timing);

}  // namespace twistpos::cli
