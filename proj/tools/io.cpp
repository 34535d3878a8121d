#include "io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "twistpos/error.hpp"

namespace twistpos::cli {

GroupConfig default_config(const CartanMatrix& cartan) {
  GroupConfig cfg{cartan, {}};
  for (std::size_t i = 0; i < cartan.size(); ++i) cfg.labels.push_back(std::to_string(i + 1));
  return cfg;
}

GroupConfig load_config(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  require(j.contains("cartan") && j["cartan"].is_array(), ErrorKind::Parse, path + ": missing \"cartan\" array");
  std::vector<std::vector<int>> rows;
  try {
    rows = j["cartan"].get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, path + ": cartan entries must be integers");
  }
  auto cfg = default_config(CartanMatrix(rows));
  if (j.contains("labels")) {
    auto labels = j["labels"].get<std::vector<std::string>>();
    require(labels.size() == cfg.cartan.size(), ErrorKind::InvalidInput, "labels must name every node");
    cfg.labels = std::move(labels);
  }
  return cfg;
}

GroupConfig named_config(const std::string& name) {
  if (name == "A1~") return default_config(CartanMatrix::affine_A1());
  if (name == "G2") return default_config(CartanMatrix::type_G2());
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B')) {
    std::size_t rank = 0;
    try {
      rank = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "unknown group " + name);
    }
    require(rank >= 1 && rank <= 8, ErrorKind::InvalidInput, "rank out of range in " + name);
    return default_config(name[0] == 'A' ? CartanMatrix::type_A(rank) : CartanMatrix::type_B(rank));
  }
  fail(ErrorKind::Parse, "unknown group " + name + " (try A2, B2, G2, A1~)");
}

Word parse_word(const GroupConfig& cfg, const std::string& text) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',') {
      ++pos;
      continue;
    }
    const auto start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ',') ++pos;
    const auto token = text.substr(start, pos - start);
    std::size_t k = 0;
    while (k < cfg.labels.size() && cfg.labels[k] != token) ++k;
    require(k < cfg.labels.size(), ErrorKind::Parse,
            "unknown node label '" + token + "' at position " + std::to_string(start) + " in \"" + text + "\"");
    out.push_back(k);
  }
  return out;
}

NodeSet parse_nodes(const GroupConfig& cfg, const std::string& text) {
  NodeSet out;
  for (auto i : parse_word(cfg, text)) out.insert(i);
  return out;
}

std::string word_text(const GroupConfig& cfg, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (auto i : w) {
    if (!out.empty()) out += ' ';
    out += cfg.labels[i];
  }
  return out;
}

std::string element_text(const GroupConfig& cfg, const WeylElement& w) {
  return word_text(cfg, canonical_reduced_word(w));
}

json word_json(const WeylElement& w) { return canonical_reduced_word(w); }

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j) {
  require(j.is_array() && !j.empty(), ErrorKind::Parse, "matrix must be a nonempty array of rows");
  const auto n = j.size();
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    require(j[i].is_array() && j[i].size() == n, ErrorKind::Parse, "matrix must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = j[i][k];
      std::string s = e.is_string() ? e.get<std::string>() : e.is_number_integer() ? std::to_string(e.get<long long>()) : "";
      require(!s.empty(), ErrorKind::Parse, "matrix entries must be \"p/q\" strings or integers");
      try {
        m(i, k) = Rational(s);
        m(i, k).canonicalize();
      } catch (const std::exception&) {
        fail(ErrorKind::Parse, "bad rational '" + s + "'");
      }
      require(m(i, k).get_den() != 0, ErrorKind::Parse, "zero denominator in '" + s + "'");
    }
  }
  return m;
}

json poset_json(const FinitePoset& p) {
  json covers = json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
  json out{{"elements", p.keys()}, {"covers", covers}};
  if (p.rank()) out["rank"] = *p.rank();
  return out;
}

std::string poset_dot(const FinitePoset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < p.size(); ++k) os << "  n" << k << " [label=\"" << p.keys()[k] << "\"];\n";
  for (const auto& [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

SimplicialComplex complex_from_json(const json& j) {
  require(j.is_object() && j.contains("vertices") && j.contains("facets"), ErrorKind::Parse,
          "complex JSON needs \"vertices\" and \"facets\"");
  SimplicialComplex c;
  try {
    c.vertices = j["vertices"].get<std::size_t>();
    c.facets = j["facets"].get<std::vector<std::vector<std::size_t>>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
  for (auto& f : c.facets) {
    std::sort(f.begin(), f.end());
    for (auto v : f) require(v < c.vertices, ErrorKind::Parse, "facet vertex out of range");
  }
  return c;
}

json homology_json(const HomologyProfile& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) {
    json row = json::array();
    for (const auto& d : t) row.push_back(d.get_str());
    torsion.push_back(std::move(row));
  }
  const auto d = sphere_dimension(h);
  return {{"betti", h.betti}, {"torsion", torsion}, {"sphere", d ? json(*d) : json(nullptr)}};
}

json report_json(const BatteryReport& r, bool timing) {
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  json out{{"name", r.name},       {"verdict", to_string(r.verdict())}, {"seed", r.seed},
           {"checks", r.checks},   {"failures", r.failures},            {"inconclusive", r.inconclusive},
           {"facts", facts},       {"messages", r.messages}};
  if (timing) out["seconds"] = r.seconds;
  return out;
}

}  // namespace twistpos::cli
