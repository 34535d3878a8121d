// twistpos: queries and check batteries for twisted Bruhat orders and
// totally positive cells.
//
// Exit codes: 0 pass, 2 a check failed, 3 only inconclusive results, 4 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "twistpos/doubleflag.hpp"
#include "twistpos/el_labeling.hpp"
#include "twistpos/error.hpp"
#include "twistpos/random.hpp"

using namespace twistpos;
using namespace twistpos::cli;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 2;
constexpr int kInconclusive = 3;
constexpr int kUsage = 4;

struct Options {
  std::string config;
  std::string group = "A2";
  std::string J;
  std::uint64_t seed = BatteryOptions{}.seed;
  std::size_t budget_elems = EnumerationBudget{}.max_elements;
  std::string format = "json";
  std::string out;
  bool timing = false;
};

struct Emitter {
  const Options& opts;

  void write(const std::string& text) const {
    if (opts.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(opts.out);
    require(static_cast<bool>(f), ErrorKind::InvalidInput, "cannot write " + opts.out);
    f << text;
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }
};

GroupConfig group_config(const Options& o) {
  return o.config.empty() ? named_config(o.group) : load_config(o.config);
}

WeylGroupPtr make_group(const Options& o, const GroupConfig& cfg) {
  EnumerationBudget budget;
  budget.max_elements = o.budget_elems;
  return WeylGroup::create(cfg.cartan, budget);
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kPass;
    case Verdict::Fail: return kFail;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kFail;
}

ReflectionOrder default_order(const WeylGroupPtr& g) {
  try {
    return ReflectionOrder::from_word(g, canonical_reduced_word(longest_element(g, NodeSet::all(g->rank()))));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    return ReflectionOrder::ratio(g);
  }
}

json nodes_json(NodeSet J) { return J.members(); }

// ---------------------------------------------------------------- order

int cmd_order(const Options& o, const std::string& vtext, const std::string& wtext) {
  const auto cfg = group_config(o);
  const auto g = make_group(o, cfg);
  const ParabolicContext J(g, parse_nodes(cfg, o.J));
  const auto v = evaluate(g, parse_word(cfg, vtext));
  const auto w = evaluate(g, parse_word(cfg, wtext));
  const bool leq = j_leq(v, w, J);
  std::optional<WeylElement> c;
  if (leq) c = minimal_c(v, w, J);

  if (o.format == "text") {
    std::ostringstream os;
    os << "v = " << element_text(cfg, v) << "  l = " << v.length() << "  lJ = " << j_length(v, J) << "\n"
       << "w = " << element_text(cfg, w) << "  l = " << w.length() << "  lJ = " << j_length(w, J) << "\n"
       << "v <=^J w: " << (leq ? "yes" : "no") << "\n";
    if (c) os << "c = " << element_text(cfg, *c) << "\n";
    Emitter{o}.write(os.str());
  } else {
    Emitter{o}.write(json{{"v", word_json(v)},
                          {"w", word_json(w)},
                          {"J", nodes_json(J.J())},
                          {"length", {{"v", v.length()}, {"w", w.length()}}},
                          {"j_length", {{"v", j_length(v, J)}, {"w", j_length(w, J)}}},
                          {"comparable", leq},
                          {"c", c ? word_json(*c) : json(nullptr)}});
  }
  return kPass;
}

// ---------------------------------------------------------------- interval

int cmd_interval(const Options& o, const std::string& xtext, const std::string& ytext, const std::string& checks) {
  const auto cfg = group_config(o);
  const auto g = make_group(o, cfg);
  const ParabolicContext J(g, parse_nodes(cfg, o.J));
  const auto x = evaluate(g, parse_word(cfg, xtext));
  const auto y = evaluate(g, parse_word(cfg, ytext));
  require(j_leq(x, y, J), ErrorKind::NotLeq, "x is not below y in the twisted order");

  std::set<std::string> wanted;
  {
    std::stringstream ss(checks);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) wanted.insert(item);
    for (const auto& c : wanted)
      require(c == "pure" || c == "thin" || c == "el" || c == "homology", ErrorKind::Parse, "unknown check " + c);
  }

  json result{{"bottom", word_json(x)}, {"top", word_json(y)}, {"J", nodes_json(J.J())}};
  Verdict verdict = Verdict::Pass;
  try {
    const auto iv = j_interval(x, y, J);
    const auto raw = to_finite_poset(iv);
    std::vector<std::string> keys;
    for (const auto& e : iv.elements) keys.push_back(element_text(cfg, e));
    const FinitePoset p(keys, raw.covers(), raw.rank());
    if (o.format == "dot") {
      Emitter{o}.write(poset_dot(p));
      return kPass;
    }
    result["poset"] = poset_json(p);
    json verdicts = json::object();
    auto record = [&](const std::string& name, bool ok) {
      verdicts[name] = ok;
      if (!ok) verdict = Verdict::Fail;
    };
    if (wanted.count("pure")) record("pure", check_pure(p).pure);
    if (wanted.count("thin")) record("thin", check_pure(p).pure && check_thin(p).thin);
    if (wanted.count("el")) {
      const auto lp = el_label_twisted_interval(iv, default_order(g));
      record("el", verify_el(lp, ChainReading::BottomUp).ok);
      record("el_top_down", verify_el(lp, ChainReading::TopDown).ok);
    }
    if (wanted.count("homology")) {
      const auto h = reduced_homology(order_complex(p, ComplexMode::OpenInterval).complex);
      result["homology"] = homology_json(h);
      // a one-element interval counts as the empty sphere
      const long rank = j_length(y, J) - j_length(x, J);
      record("sphere", is_sphere_signature(h, std::max(static_cast<int>(rank) - 2, -1)));
    }
    result["checks"] = verdicts;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    verdict = Verdict::Inconclusive;
    result["reason"] = e.what();
  }
  result["verdict"] = to_string(verdict);

  if (o.format == "text") {
    std::ostringstream os;
    os << "interval [" << element_text(cfg, x) << ", " << element_text(cfg, y) << "]  verdict: " << to_string(verdict)
       << "\n";
    if (result.contains("poset")) os << "elements: " << result["poset"]["elements"].size() << "\n";
    if (result.contains("checks"))
      for (const auto& [k, v] : result["checks"].items()) os << k << ": " << (v.get<bool>() ? "pass" : "fail") << "\n";
    if (result.contains("homology")) os << "sphere dimension: " << result["homology"]["sphere"].dump() << "\n";
    if (result.contains("reason")) os << result["reason"].get<std::string>() << "\n";
    Emitter{o}.write(os.str());
  } else {
    Emitter{o}.write(result);
  }
  return exit_code(verdict);
}

// ---------------------------------------------------------------- verify-suite

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t n = 0;
    try {
      n = std::stoul(item);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad size '" + item + "'");
    }
    require(n >= 2 && n <= 5, ErrorKind::InvalidInput, "SL_n sizes must be between 2 and 5");
    out.push_back(n);
  }
  require(!out.empty(), ErrorKind::InvalidInput, "no sizes given");
  return out;
}

int cmd_verify(const Options& o, const std::string& suite, const std::string& sizes, std::size_t samples) {
  BatteryOptions b;
  b.seed = o.seed;
  b.samples = samples;
  b.product_samples = samples;
  const auto ns = parse_sizes(sizes);

  std::vector<BatteryReport> reports;
  const bool all = suite == "all";
  if (all) {
    reports.push_back(battery_order_sanity(b));
    reports.push_back(battery_weyl_shellable(b));
    reports.push_back(battery_demazure(b));
    reports.push_back(battery_tnn(b));
  }
  if (all || suite == "flags") reports.push_back(battery_marsh_rietsch(b, ns));
  if (all || suite == "twisted") {
    reports.push_back(battery_twisted_parametrization(b, ns));
    reports.push_back(battery_inclusion_product(b, ns));
  }
  if (all || suite == "doubleflag") {
    reports.push_back(battery_thickening(b));
    reports.push_back(battery_qhat(b));
    reports.push_back(battery_z_parametrization(b, {2, 3}));
  }

  Verdict overall = Verdict::Pass;
  for (const auto& r : reports) {
    if (r.verdict() == Verdict::Fail) overall = Verdict::Fail;
    if (r.verdict() == Verdict::Inconclusive && overall == Verdict::Pass) overall = Verdict::Inconclusive;
  }

  if (o.format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << to_string(r.verdict()) << "  " << r.name << "  checks=" << r.checks << " failures=" << r.failures
         << " inconclusive=" << r.inconclusive;
      if (o.timing) os << " time=" << r.seconds << "s";
      os << "\n";
      for (const auto& m : r.messages) os << "    " << m << "\n";
    }
    os << "suite " << suite << " seed " << o.seed << ": " << to_string(overall) << "\n";
    Emitter{o}.write(os.str());
  } else {
    json list = json::array();
    for (const auto& r : reports) list.push_back(report_json(r, o.timing));
    Emitter{o}.write(json{{"suite", suite}, {"seed", o.seed}, {"sizes", ns}, {"samples", samples},
                          {"batteries", list}, {"verdict", to_string(overall)}});
  }
  return exit_code(overall);
}

// ---------------------------------------------------------------- sample

std::vector<Rational> parse_params(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      Rational q(item);
      q.canonicalize();
      out.push_back(q);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad rational '" + item + "'");
    }
  }
  return out;
}

std::size_t pinned_size(const GroupConfig& cfg) {
  const auto r = cfg.cartan.size();
  require(cfg.cartan == CartanMatrix::type_A(r), ErrorKind::InvalidInput, "matrix realizations need type A");
  require(r + 1 <= 5, ErrorKind::InvalidInput, "matrix realizations are limited to SL_n with n <= 5");
  return r + 1;
}

int cmd_sample(const Options& o, const std::string& kind, const std::vector<std::string>& words,
               const std::string& params_text) {
  const auto cfg = group_config(o);
  const PinnedGroup G(pinned_size(cfg));
  const auto g = G.weyl();
  std::vector<WeylElement> elems;
  for (const auto& w : words) elems.push_back(evaluate(g, parse_word(cfg, w)));
  const ParabolicContext J(g, parse_nodes(cfg, o.J));
  SeededRng rng(o.seed);
  auto params_for = [&](std::size_t k) {
    if (params_text.empty()) return rng.positive_rationals(k);
    return parse_params(params_text);
  };

  json out{{"kind", kind}};
  RatMatrix m;
  if (kind == "double") {
    require(elems.size() == 3, ErrorKind::InvalidInput, "double samples take W V U");
    const TripleIndex t{elems[0], elems[1], elems[2]};
    require(q_member(t), ErrorKind::NotMember, "the triple is not a double flag stratum");
    const auto z = z_sample(G, t, params_for(static_cast<std::size_t>(q_rank(t) - 1)));
    out["index"] = {word_json(t.w), word_json(t.v), word_json(t.u)};
    out["c"] = word_json(z.c);
    out["parameters"] = json::array();
    for (const auto& p : z.parameters) out["parameters"].push_back(to_string(p));
    out["g1"] = matrix_json(z.g1);
    out["g2"] = matrix_json(z.g2);
    m = z.g1 * z.g2;
    out["matrix"] = matrix_json(m);
    out["stratum"] = {word_json(bruhat_stratum(G, z.g1)), word_json(mixed_stratum(G, z.g2)),
                      word_json(opposite_bruhat_stratum(G, m))};
  } else {
    require(elems.size() == 2, ErrorKind::InvalidInput, kind + " samples take V W");
    const auto& v = elems[0];
    const auto& w = elems[1];
    CellSample s;
    if (kind == "twisted") {
      require(j_leq(v, w, J), ErrorKind::NotComparable, "v is not below w in the twisted order");
      s = sample_twisted_cell(G, v, w, J, params_for(static_cast<std::size_t>(j_length(w, J) - j_length(v, J))));
      const auto st = twisted_stratum(G, s.matrix, J);
      out["stratum"] = {word_json(st.first), word_json(st.second)};
      out["J"] = nodes_json(J.J());
    } else if (kind == "negative" || kind == "positive") {
      require(bruhat_leq(v, w), ErrorKind::NotComparable, "v is not below w in the Bruhat order");
      const auto mk = kind == "negative" ? MrKind::Negative : MrKind::Positive;
      s = sample_mr(G, mk, v, canonical_reduced_word(w), params_for(w.length() - v.length()));
      if (mk == MrKind::Negative) {
        const auto st = richardson_stratum(G, s.matrix);
        out["stratum"] = {word_json(st.first), word_json(st.second)};
      } else {
        out["stratum"] = {word_json(mixed_stratum(G, s.matrix)), word_json(opposite_bruhat_stratum(G, s.matrix))};
      }
    } else {
      fail(ErrorKind::InvalidInput, "unknown sample kind " + kind);
    }
    json index = json::array();
    for (const auto& e : s.index) index.push_back(word_json(e));
    out["index"] = index;
    out["parameters"] = json::array();
    for (const auto& p : s.parameters) out["parameters"].push_back(to_string(p));
    m = s.matrix;
    out["matrix"] = matrix_json(m);
  }

  if (o.format == "text") {
    std::ostringstream os;
    os << "parameters:";
    for (const auto& p : out["parameters"]) os << " " << p.get<std::string>();
    os << "\nmatrix: " << to_string(m) << "\n";
    Emitter{o}.write(os.str());
  } else {
    Emitter{o}.write(out);
  }
  return kPass;
}

// ---------------------------------------------------------------- stratum

json read_json_input(const std::string& inline_text, const std::string& path) {
  try {
    if (!inline_text.empty()) return json::parse(inline_text);
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::InvalidInput, "cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

int cmd_stratum(const Options& o, const std::string& matrix_text, const std::string& input) {
  require(!matrix_text.empty() || !input.empty(), ErrorKind::InvalidInput, "give --matrix or --input");
  auto j = read_json_input(matrix_text, input);
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  const auto m = matrix_from_json(j);
  const auto n = m.size();
  require(n >= 2 && n <= 5, ErrorKind::InvalidInput, "matrix size must be between 2 and 5");
  require(m.determinant() == 1, ErrorKind::InvalidInput, "matrix must have determinant 1");
  GroupConfig cfg = o.config.empty() ? default_config(CartanMatrix::type_A(n - 1)) : load_config(o.config);
  require(pinned_size(cfg) == n, ErrorKind::InvalidInput, "config rank does not match the matrix size");
  const PinnedGroup G(n);
  const ParabolicContext J(G.weyl(), parse_nodes(cfg, o.J));
  const auto rich = richardson_stratum(G, m);
  const auto dbl = double_bruhat_stratum(G, m);
  const auto tw = twisted_stratum(G, m, J);

  if (o.format == "text") {
    std::ostringstream os;
    os << "B+ w B+: " << element_text(cfg, bruhat_stratum(G, m)) << "\n"
       << "B- v B+: " << element_text(cfg, birkhoff_stratum(G, m)) << "\n"
       << "B+ v B-: " << element_text(cfg, mixed_stratum(G, m)) << "\n"
       << "B- u B-: " << element_text(cfg, opposite_bruhat_stratum(G, m)) << "\n"
       << "twisted: (" << element_text(cfg, tw.first) << ", " << element_text(cfg, tw.second) << ")\n";
    Emitter{o}.write(os.str());
  } else {
    Emitter{o}.write(json{{"bruhat", word_json(bruhat_stratum(G, m))},
                          {"birkhoff", word_json(birkhoff_stratum(G, m))},
                          {"mixed", word_json(mixed_stratum(G, m))},
                          {"opposite_bruhat", word_json(opposite_bruhat_stratum(G, m))},
                          {"richardson", {word_json(rich.first), word_json(rich.second)}},
                          {"double_bruhat", {word_json(dbl.first), word_json(dbl.second)}},
                          {"J", nodes_json(J.J())},
                          {"twisted", {word_json(tw.first), word_json(tw.second)}},
                          {"tnn", tnn_test(m)}});
  }
  return kPass;
}

// ---------------------------------------------------------------- homology

int cmd_homology(const Options& o, const std::string& input) {
  const auto c = complex_from_json(read_json_input("", input));
  const auto h = reduced_homology(c);
  if (o.format == "text") {
    std::ostringstream os;
    for (std::size_t k = 0; k < h.betti.size(); ++k) {
      os << "H~_" << static_cast<long>(k) - 1 << ": rank " << h.betti[k];
      for (const auto& t : h.torsion[k]) os << " + Z/" << t.get_str();
      os << "\n";
    }
    const auto d = sphere_dimension(h);
    os << "sphere dimension: " << (d ? std::to_string(*d) : "none") << "\n";
    Emitter{o}.write(os.str());
  } else {
    Emitter{o}.write(homology_json(h));
  }
  return kPass;
}

int classify(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExceeded: return kInconclusive;
    case ErrorKind::Parse:
    case ErrorKind::InvalidInput:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::NonReducedWord:
    case ErrorKind::ParameterMismatch:
    case ErrorKind::NonpositiveParameter:
    case ErrorKind::NotComparable:
    case ErrorKind::NotLeq:
    case ErrorKind::NotMember:
    case ErrorKind::MismatchedGroup: return kUsage;
    default: return kFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Bruhat orders, positive cells and their check batteries"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config, "JSON file with \"cartan\" and optional \"labels\"");
  app.add_option("--group", o.group, "Named group when no config is given (A2, B2, G2, A1~, ...)");
  app.add_option("--J", o.J, "Node labels of J, e.g. \"2,3\"");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--budget-elems", o.budget_elems, "Element budget for enumerations")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--out", o.out, "Write output to this file");
  app.add_flag("--timing", o.timing, "Include wall-clock timings in reports");

  std::string a, b, checks = "pure,thin,el,homology", suite, sizes = "3", kind = "twisted", params, matrix, input;
  std::vector<std::string> words;
  std::size_t samples = BatteryOptions{}.samples;

  auto* order = app.add_subcommand("order", "Compare two elements in the twisted order");
  order->add_option("v", a, "Word for v")->required();
  order->add_option("w", b, "Word for w")->required();

  auto* interval = app.add_subcommand("interval", "Export and check a twisted interval [x, y]");
  interval->add_option("x", a, "Word for x")->required();
  interval->add_option("y", b, "Word for y")->required();
  interval->add_option("--checks", checks, "Comma-separated subset of pure,thin,el,homology");

  auto* verify = app.add_subcommand("verify-suite", "Run a check battery");
  verify->add_option("suite", suite, "flags, twisted, doubleflag or all")
      ->required()
      ->check(CLI::IsMember({"flags", "twisted", "doubleflag", "all"}));
  verify->add_option("--n", sizes, "Comma-separated SL_n sizes for the matrix batteries");
  verify->add_option("--samples", samples, "Samples per stratum")->check(CLI::PositiveNumber);

  auto* sample = app.add_subcommand("sample", "Draw a point of a positive cell in SL_n");
  sample->add_option("words", words, "V W (or W V U for --kind double)")->required();
  sample->add_option("--kind", kind, "twisted, negative, positive or double")
      ->check(CLI::IsMember({"twisted", "negative", "positive", "double"}));
  sample->add_option("--params", params, "Comma-separated positive rationals; random from --seed if omitted");

  auto* stratum = app.add_subcommand("stratum", "Identify the strata containing a matrix");
  stratum->add_option("--matrix", matrix, "Matrix as JSON rows of \"p/q\" strings");
  stratum->add_option("--input", input, "File with the matrix JSON, or - for stdin");

  auto* homology = app.add_subcommand("homology", "Reduced homology of a simplicial complex");
  homology->add_option("--input", input, "Complex JSON file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  if (o.format == "dot" && !interval->parsed()) {
    std::cerr << "error: --format dot is only available for interval\n";
    return kUsage;
  }

  try {
    if (order->parsed()) return cmd_order(o, a, b);
    if (interval->parsed()) return cmd_interval(o, a, b, checks);
    if (verify->parsed()) return cmd_verify(o, suite, sizes, samples);
    if (sample->parsed()) return cmd_sample(o, kind, words, params);
    if (stratum->parsed()) return cmd_stratum(o, matrix, input);
    if (homology->parsed()) return cmd_homology(o, input);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
