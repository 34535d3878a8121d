#include "twistpos/battery.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "twistpos/doubleflag.hpp"
#include "twistpos/error.hpp"
#include "twistpos/homology.hpp"
#include "twistpos/random.hpp"

namespace twistpos {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

void BatteryReport::check(bool ok, const std::function<std::string()>& what) {
  ++checks;
  if (!ok) fail(what());
}

void BatteryReport::fail(const std::string& what) {
  ++failures;
  if (messages.size() < 10) messages.push_back(what);
}

void BatteryReport::skip(const std::string& what) {
  ++inconclusive;
  if (messages.size() < 10) messages.push_back("inconclusive: " + what);
}

Verdict BatteryReport::verdict() const {
  if (failures) return Verdict::Fail;
  if (inconclusive) return Verdict::Inconclusive;
  return Verdict::Pass;
}

namespace {

template <class Body>
BatteryReport run(const std::string& name, std::uint64_t seed, Body&& body) {
  BatteryReport rep;
  rep.name = name;
  rep.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.fail(std::string("aborted: ") + e.what());
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Runs one item; budget overruns are inconclusive, any other error a failure.
template <class Body>
void guarded(BatteryReport& rep, const std::string& label, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded)
      rep.skip(label + ": " + e.what());
    else
      rep.fail(label + ": " + e.what());
  }
}

std::vector<NodeSet> all_subsets(std::size_t rank) {
  std::vector<NodeSet> out;
  for (std::uint64_t m = 0; m < (1ULL << rank); ++m) out.push_back(NodeSet(m));
  return out;
}

std::string J_string(NodeSet J) { return "J=" + word_to_string(J.members()); }

std::string pair_string(const WeylElement& v, const WeylElement& w) {
  return "(" + element_key(v) + ", " + element_key(w) + ")";
}

std::vector<std::pair<std::string, CartanMatrix>> finite_groups() {
  return {{"A2", CartanMatrix::type_A(2)},
          {"A3", CartanMatrix::type_A(3)},
          {"B2", CartanMatrix::type_B(2)},
          {"G2", CartanMatrix::type_G2()}};
}

// Lexicographically largest reduced word.
Word lexmax_reduced_word(WeylElement w) {
  Word out;
  while (!w.is_identity()) {
    for (std::size_t i = w.rank(); i-- > 0;) {
      if (w.has_left_descent(i)) {
        out.push_back(i);
        w = w.simple_times(i);
        break;
      }
    }
  }
  return out;
}

std::vector<WeylElement> lower_ideal(const WeylElement& w) {
  std::vector<WeylElement> out;
  for (auto& x : enumerate_ball(w.group(), w.length()))
    if (bruhat_leq(x, w)) out.push_back(std::move(x));
  return out;
}

void check_twisted_interval(BatteryReport& rep, const WeylElement& x, const WeylElement& y,
                            const ParabolicContext& J, const ReflectionOrder& order, const std::string& where) {
  const auto label = where + " " + J_string(J.J()) + " " + pair_string(x, y);
  guarded(rep, label, [&] {
    const auto iv = j_interval(x, y, J);
    const auto p = to_finite_poset(iv);
    const long rank = j_length(y, J) - j_length(x, J);
    rep.check(check_pure(p).pure, [&] { return label + " not pure"; });
    rep.check(check_thin(p).thin, [&] { return label + " not thin"; });
    const auto lp = el_label_twisted_interval(iv, order);
    const auto top_down = verify_el(lp, ChainReading::TopDown);
    rep.check(top_down.ok, [&] { return label + " EL (top-down) fails: " + top_down.reason; });
    const auto bottom_up = verify_el(lp, ChainReading::BottomUp);
    rep.check(bottom_up.ok, [&] { return label + " EL (bottom-up) fails: " + bottom_up.reason; });
    const auto h = reduced_homology(order_complex(p, ComplexMode::OpenInterval).complex);
    rep.check(is_sphere_signature(h, static_cast<int>(rank) - 2),
              [&] { return label + " open interval is not a sphere of dimension " + std::to_string(rank - 2); });
  });
}

}  // namespace

BatteryReport battery_order_sanity(const BatteryOptions& opts) {
  return run("order sanity", opts.seed, [&](BatteryReport& rep) {
    for (const auto& [name, cartan] : finite_groups()) {
      const auto g = WeylGroup::create(cartan);
      const auto elems = enumerate_group(g);
      for (const auto J0 : all_subsets(g->rank())) {
        const ParabolicContext J(g, J0);
        const auto label = name + " " + J_string(J0);
        const auto w0 = *J.longest();
        const std::size_t n = elems.size();
        std::vector<std::vector<char>> leq(n, std::vector<char>(n));
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) leq[a][b] = j_leq(elems[a], elems[b], J);
        for (std::size_t a = 0; a < n; ++a) {
          rep.check(leq[a][a], [&] { return label + " not reflexive at " + element_key(elems[a]); });
          for (std::size_t b = 0; b < n; ++b) {
            const auto& v = elems[a];
            const auto& w = elems[b];
            if (J0.empty())
              rep.check(leq[a][b] == bruhat_leq(v, w), [&] { return label + " differs from Bruhat at " + pair_string(v, w); });
            if (J0.count() == g->rank())
              rep.check(leq[a][b] == bruhat_leq(w, v),
                        [&] { return label + " differs from reversed Bruhat at " + pair_string(v, w); });
            rep.check(leq[a][b] == bruhat_leq(multiply(v, w0), multiply(w, w0)),
                      [&] { return label + " translation fails at " + pair_string(v, w); });
            if (a != b && leq[a][b])
              rep.check(!leq[b][a], [&] { return label + " not antisymmetric at " + pair_string(v, w); });
            if (!leq[a][b]) continue;
            rep.check(j_length(v, J) <= j_length(w, J), [&] { return label + " J-length not monotone"; });
            for (std::size_t c = 0; c < n; ++c)
              if (leq[b][c])
                rep.check(leq[a][c], [&] { return label + " not transitive through " + pair_string(v, w); });
          }
        }
      }
    }
  });
}

BatteryReport battery_weyl_shellable(const BatteryOptions& opts) {
  return run("twisted Bruhat intervals are shellable spheres", opts.seed, [&](BatteryReport& rep) {
    std::size_t finite_count = 0;
    for (const auto& [name, cartan] : finite_groups()) {
      const auto g = WeylGroup::create(cartan);
      const auto elems = enumerate_group(g);
      const auto order = ReflectionOrder::from_word(g, canonical_reduced_word(longest_element(g, NodeSet::all(g->rank()))));
      for (const auto J0 : all_subsets(g->rank())) {
        const ParabolicContext J(g, J0);
        for (const auto& x : elems) {
          for (const auto& y : elems) {
            if (!j_leq(x, y, J)) continue;
            const long d = j_length(y, J) - j_length(x, J);
            if (d < 1 || d > 4) continue;
            check_twisted_interval(rep, x, y, J, order, name);
            ++finite_count;
          }
        }
      }
    }
    rep.note("finite intervals", std::to_string(finite_count));

    SeededRng rng(opts.seed);
    const std::vector<std::pair<std::string, CartanMatrix>> infinite = {
        {"affine A1", CartanMatrix::affine_A1()}, {"[[2,-3],[-3,2]]", CartanMatrix({{2, -3}, {-3, 2}})}};
    for (const auto& [name, cartan] : infinite) {
      const auto g = WeylGroup::create(cartan);
      const auto order = ReflectionOrder::ratio(g);
      const auto elems = enumerate_ball(g, 6);
      std::vector<std::tuple<NodeSet, WeylElement, WeylElement>> cands;
      for (const auto J0 : all_subsets(g->rank())) {
        const ParabolicContext J(g, J0);
        for (const auto& x : elems)
          for (const auto& y : elems) {
            if (!j_leq(x, y, J)) continue;
            const long d = j_length(y, J) - j_length(x, J);
            if (d >= 1 && d <= 4) cands.emplace_back(J0, x, y);
          }
      }
      std::shuffle(cands.begin(), cands.end(), std::mt19937_64(rng.split(cands.size()).next()));
      const auto take = std::min(cands.size(), opts.infinite_intervals);
      for (std::size_t k = 0; k < take; ++k) {
        const auto& [J0, x, y] = cands[k];
        check_twisted_interval(rep, x, y, ParabolicContext(g, J0), order, name);
      }
      rep.note(name + " intervals", std::to_string(take) + " of " + std::to_string(cands.size()));
    }
  });
}

BatteryReport battery_twisted_parametrization(const BatteryOptions& opts, const std::vector<std::size_t>& ns) {
  return run("twisted cell parametrization", opts.seed, [&](BatteryReport& rep) {
    SeededRng root(opts.seed);
    std::size_t pairs = 0, samples = 0, task = 0;
    for (const auto n : ns) {
      const PinnedGroup G(n);
      const auto elems = enumerate_group(G.weyl());
      for (const auto J0 : all_subsets(G.weyl()->rank())) {
        const ParabolicContext J(G.weyl(), J0);
        const auto where = "SL" + std::to_string(n) + " " + J_string(J0);
        std::optional<std::pair<WeylElement, WeylElement>> largest;
        long largest_d = -1;
        for (const auto& v : elems) {
          for (const auto& w : elems) {
            const auto label = where + " " + pair_string(v, w);
            if (!j_leq(v, w, J)) {
              bool threw = false;
              try {
                sample_twisted_cell(G, v, w, J, {});
              } catch (const Error& e) {
                threw = e.kind() == ErrorKind::NotComparable;
              }
              rep.check(threw, [&] { return label + " sampler accepted an incomparable pair"; });
              continue;
            }
            const long d = j_length(w, J) - j_length(v, J);
            if (d > 3) continue;
            ++pairs;
            if (d > largest_d) {
              largest_d = d;
              largest = std::make_pair(v, w);
            }
            const auto pv = parabolic_decompose(v, J);
            const auto pw = parabolic_decompose(w, J);
            std::vector<TwistedWords> variants{{}};
            TwistedWords alt{lexmax_reduced_word(pw.rep), lexmax_reduced_word(pv.part)};
            if (*alt.w_upper != canonical_reduced_word(pw.rep) || *alt.v_lower != canonical_reduced_word(pv.part))
              variants.push_back(alt);
            auto rng = root.split(task++);
            guarded(rep, label, [&] {
              for (const auto& words : variants) {
                std::set<std::vector<Rational>> seen;
                std::set<std::string> flags;
                for (std::size_t s = 0; s < opts.samples; ++s) {
                  const auto params = rng.positive_rationals(static_cast<std::size_t>(d));
                  const auto cell = sample_twisted_cell(G, v, w, J, params, words);
                  ++samples;
                  rep.check(cell.parameters.size() == static_cast<std::size_t>(d),
                            [&] { return label + " parameter count"; });
                  rep.check(twisted_stratum(G, cell.matrix, J) == std::make_pair(v, w),
                            [&] { return label + " sample left its stratum"; });
                  if (seen.insert(params).second) flags.insert(to_string(canonical_twisted_flag(G, cell.matrix, J)));
                }
                rep.check(flags.size() == seen.size(), [&] { return label + " distinct parameters collide"; });
              }
            });
          }
        }
        if (largest && largest_d > 0) {
          const auto& [v, w] = *largest;
          const auto label = where + " injectivity " + pair_string(v, w);
          auto rng = root.split(task++);
          guarded(rep, label, [&] {
            std::set<std::vector<Rational>> seen;
            std::set<std::string> flags;
            while (seen.size() < opts.injectivity) {
              auto params = rng.positive_rationals(static_cast<std::size_t>(largest_d), 50);
              if (!seen.insert(params).second) continue;
              flags.insert(to_string(canonical_twisted_flag(G, sample_twisted_cell(G, v, w, J, params).matrix, J)));
            }
            rep.check(flags.size() == seen.size(), [&] {
              return label + ": " + std::to_string(seen.size()) + " vectors gave " + std::to_string(flags.size()) + " flags";
            });
          });
        }
      }
    }
    rep.note("pairs", std::to_string(pairs));
    rep.note("samples", std::to_string(samples));
  });
}

BatteryReport battery_inclusion_product(const BatteryOptions& opts, const std::vector<std::size_t>& ns) {
  return run("big cell inclusion and product structure", opts.seed, [&](BatteryReport& rep) {
    SeededRng root(opts.seed);
    std::size_t task = 0, triples = 0;
    for (const auto n : ns) {
      const PinnedGroup G(n);
      const auto elems = enumerate_group(G.weyl());
      for (const auto J0 : all_subsets(G.weyl()->rank())) {
        const ParabolicContext J(G.weyl(), J0);
        const auto where = "SL" + std::to_string(n) + " " + J_string(J0);
        for (const auto& v : elems) {
          for (const auto& w : elems) {
            if (!j_leq(v, w, J)) continue;
            const long d = j_length(w, J) - j_length(v, J);
            if (d > 3) continue;
            const auto middle = j_interval(v, w, J).elements;
            auto rng = root.split(task++);
            const auto label = where + " " + pair_string(v, w);
            guarded(rep, label, [&] {
              for (std::size_t s = 0; s < opts.product_samples; ++s) {
                const auto g = sample_twisted_cell(G, v, w, J, rng.positive_rationals(static_cast<std::size_t>(d))).matrix;
                const auto flag = canonical_twisted_flag(G, g, J);
                for (const auto& r : middle) {
                  ++triples;
                  const auto lr = label + " r=" + element_key(r);
                  if (!big_cell_test(G, g, r, J)) {
                    rep.fail(lr + " sample outside the translated big cell");
                    continue;
                  }
                  ++rep.checks;
                  const auto k = big_cell_coordinate(G, g, r, J);
                  const auto& rd = G.lift(r);
                  rep.check(canonical_twisted_flag(G, k * rd, J) == flag, [&] { return lr + " coordinate mismatch"; });
                  const auto f = sigma_factorize(G, k, r, J);
                  rep.check(twisted_stratum(G, f.plus * rd, J) == std::make_pair(v, r),
                            [&] { return lr + " plus factor in the wrong stratum"; });
                  rep.check(twisted_stratum(G, f.minus * rd, J) == std::make_pair(r, w),
                            [&] { return lr + " minus factor in the wrong stratum"; });
                  rep.check(canonical_twisted_flag(G, sigma_recompose(f.plus, f.minus) * rd, J) == flag,
                            [&] { return lr + " recomposition changed the flag"; });
                }
              }
            });
          }
        }
      }
    }
    rep.note("(sample, r) pairs", std::to_string(triples));
  });
}

BatteryReport battery_demazure(const BatteryOptions& opts) {
  return run("Demazure products", opts.seed, [&](BatteryReport& rep) {
    const std::vector<std::pair<std::string, CartanMatrix>> groups = {
        {"A2", CartanMatrix::type_A(2)}, {"A3", CartanMatrix::type_A(3)}, {"B2", CartanMatrix::type_B(2)}};
    for (const auto& [name, cartan] : groups) {
      const auto g = WeylGroup::create(cartan);
      const auto elems = enumerate_ball(g, 4);
      std::vector<std::vector<WeylElement>> ideals;
      for (const auto& w : elems) ideals.push_back(lower_ideal(w));
      auto extreme = [&](const std::vector<WeylElement>& set, bool want_min) -> std::optional<WeylElement> {
        std::optional<WeylElement> found;
        for (const auto& x : set) {
          bool ok = true;
          for (const auto& y : set)
            if (!(want_min ? bruhat_leq(x, y) : bruhat_leq(y, x))) ok = false;
          if (ok) found = x;
        }
        return found;
      };
      for (std::size_t a = 0; a < elems.size(); ++a) {
        for (std::size_t b = 0; b < elems.size(); ++b) {
          const auto& w = elems[a];
          const auto& x = elems[b];
          const auto label = name + " " + pair_string(w, x);
          std::vector<WeylElement> prods;
          for (const auto& w1 : ideals[a]) prods.push_back(multiply(w1, x));
          const auto lo = extreme(prods, true);
          rep.check(lo && *lo == demazure_min(w, x), [&] { return label + " demazure_min disagrees"; });
          std::vector<WeylElement> mixed;
          for (const auto& w1 : ideals[a])
            for (const auto& u1 : ideals[b]) mixed.push_back(multiply(w1.inverse(), u1));
          const auto hi = extreme(mixed, false);
          rep.check(hi && *hi == demazure_max_inverse(w, x), [&] { return label + " demazure_max_inverse disagrees"; });
        }
      }
    }
  });
}

BatteryReport battery_thickening(const BatteryOptions& opts) {
  return run("thickening order embedding", opts.seed, [&](BatteryReport& rep) {
    for (std::size_t n : {1u, 2u}) {
      const auto g = WeylGroup::create(CartanMatrix::type_A(n));
      const Thickening th(g);
      const auto elems = enumerate_ball(g, 3);
      std::vector<std::pair<std::size_t, std::size_t>> idx;
      std::vector<WeylElement> tops;
      for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) {
          idx.emplace_back(a, b);
          tops.push_back(th.th(elems[a], elems[b]));
        }
      for (std::size_t p = 0; p < idx.size(); ++p) {
        for (std::size_t q = 0; q < idx.size(); ++q) {
          const auto& w1 = elems[idx[p].first];
          const auto& v1 = elems[idx[p].second];
          const auto& w2 = elems[idx[q].first];
          const auto& v2 = elems[idx[q].second];
          const bool lhs = bruhat_leq(w1, w2) && bruhat_leq(v2, v1);
          rep.check(lhs == j_leq(tops[p], tops[q], th.order_context()), [&] {
            return "A" + std::to_string(n) + " th" + pair_string(w1, v1) + " vs th" + pair_string(w2, v2);
          });
        }
      }
    }
  });
}

BatteryReport battery_qhat(const BatteryOptions& opts) {
  return run("Q-hat intervals and link spheres", opts.seed, [&](BatteryReport& rep) {
    std::size_t intervals = 0, links = 0;
    for (std::size_t n : {1u, 2u}) {
      const auto g = WeylGroup::create(CartanMatrix::type_A(n));
      const Thickening th(g);
      const auto elems = enumerate_group(g);
      const auto name = "A" + std::to_string(n);
      for (const auto& w : elems)
        for (const auto& v : elems)
          for (const auto& u : elems) {
            const TripleIndex t{w, v, u};
            if (!q_member(t) || q_rank(t) - 1 > 4) continue;
            ++intervals;
            const auto label = name + " " + to_string(t);
            guarded(rep, label, [&] {
              const auto q = q_interval_hat(t);
              rep.check(check_pure(q.poset).pure, [&] { return label + " not pure"; });
              rep.check(check_thin(q.poset).thin, [&] { return label + " not thin"; });
              const auto el = verify_el(q_el_label(q, th), ChainReading::TopDown);
              rep.check(el.ok, [&] { return label + " EL fails: " + el.reason; });
            });
          }
      for (const auto& w : elems)
        for (const auto& u : elems) {
          if (w.is_identity() && u.is_identity()) continue;
          const auto total = static_cast<int>(w.length() + u.length());
          if (total > 5) continue;
          ++links;
          const auto label = name + " link " + pair_string(w, u);
          guarded(rep, label, [&] {
            const auto h = reduced_homology(link_boundary_complex(link_face_poset(w, u)));
            rep.check(is_sphere_signature(h, total - 2),
                      [&] { return label + " boundary is not a sphere of dimension " + std::to_string(total - 2); });
          });
        }
    }
    rep.note("intervals", std::to_string(intervals));
    rep.note("link pairs", std::to_string(links));
  });
}

BatteryReport battery_z_parametrization(const BatteryOptions& opts, const std::vector<std::size_t>& ns) {
  return run("double flag parametrization", opts.seed, [&](BatteryReport& rep) {
    SeededRng root(opts.seed);
    std::size_t task = 0, triples = 0;
    for (const auto n : ns) {
      const PinnedGroup G(n);
      const auto elems = enumerate_group(G.weyl());
      for (const auto& w : elems)
        for (const auto& v : elems)
          for (const auto& u : elems) {
            const TripleIndex t{w, v, u};
            if (!q_member(t)) continue;
            const long d = q_rank(t) - 1;
            if (d > 3) continue;
            ++triples;
            auto rng = root.split(task++);
            const auto label = "SL" + std::to_string(n) + " " + to_string(t);
            guarded(rep, label, [&] {
              for (std::size_t s = 0; s < opts.samples; ++s) {
                const auto z = z_sample(G, t, rng.positive_rationals(static_cast<std::size_t>(d)));
                rep.check(bruhat_stratum(G, z.g1) == w, [&] { return label + " g1 outside B+wB+"; });
                rep.check(mixed_stratum(G, z.g2) == v, [&] { return label + " g2 outside B+vB-"; });
                rep.check(opposite_bruhat_stratum(G, z.g1 * z.g2) == u, [&] { return label + " g1g2 outside B-uB-"; });
              }
            });
          }
    }
    rep.note("triples", std::to_string(triples));
  });
}

BatteryReport battery_tnn(const BatteryOptions& opts) {
  return run("totally nonnegative monoid", opts.seed, [&](BatteryReport& rep) {
    SeededRng rng(opts.seed);
    for (std::size_t n : {3u, 4u}) {
      const PinnedGroup G(n);
      const auto nodes = n - 1;
      for (std::size_t k = 0; k < opts.tnn_products / 2; ++k) {
        RatMatrix g = RatMatrix::identity(n);
        const auto len = 1 + rng.index(10);
        for (std::size_t s = 0; s < len; ++s) {
          const auto kind = static_cast<GeneratorKind>(rng.index(3));
          g = g * G.generator(kind, rng.index(nodes), rng.positive_rational());
        }
        rep.check(tnn_test(g), [&] { return "SL" + std::to_string(n) + " product " + std::to_string(k) + " rejected"; });
      }
      // x-part and y-part along a reduced word of w0 with one negated parameter
      const auto w0word = canonical_reduced_word(longest_element(G.weyl(), NodeSet::all(nodes)));
      for (std::size_t k = 0; k < opts.tnn_adversarial / 2; ++k) {
        const auto N = w0word.size();
        auto xs = rng.positive_rationals(N);
        auto ys = rng.positive_rationals(N);
        const auto bad = rng.index(2 * N);
        if (bad < N)
          xs[bad] = -xs[bad];
        else
          ys[bad - N] = -ys[bad - N];
        RatMatrix g = RatMatrix::identity(n);
        for (std::size_t s = 0; s < N; ++s) g = g * G.x(w0word[s], xs[s]);
        g = g * G.cochar(rng.index(nodes), rng.positive_rational());
        for (std::size_t s = 0; s < N; ++s) g = g * G.y(w0word[s], ys[s]);
        rep.check(!tnn_test(g), [&] { return "SL" + std::to_string(n) + " adversarial " + std::to_string(k) + " accepted"; });
      }
    }
  });
}

BatteryReport battery_marsh_rietsch(const BatteryOptions& opts, const std::vector<std::size_t>& ns) {
  return run("Marsh-Rietsch parametrization", opts.seed, [&](BatteryReport& rep) {
    SeededRng root(opts.seed);
    std::size_t task = 0;
    for (const auto n : ns) {
      const PinnedGroup G(n);
      const auto elems = enumerate_group(G.weyl());
      for (const auto& w : elems) {
        for (const auto& v : elems) {
          if (!bruhat_leq(v, w)) continue;
          auto rng = root.split(task++);
          const auto label = "SL" + std::to_string(n) + " " + pair_string(v, w);
          guarded(rep, label, [&] {
            for (const auto& word : {canonical_reduced_word(w), lexmax_reduced_word(w)}) {
              const auto k = w.length() - v.length();
              for (std::size_t s = 0; s < opts.samples; ++s) {
                const auto neg = sample_mr(G, MrKind::Negative, v, word, rng.positive_rationals(k));
                rep.check(richardson_stratum(G, neg.matrix) == std::make_pair(v, w),
                          [&] { return label + " negative sample left its stratum"; });
                const auto pos = sample_mr(G, MrKind::Positive, v, word, rng.positive_rationals(k));
                rep.check(mixed_stratum(G, pos.matrix) == v && opposite_bruhat_stratum(G, pos.matrix) == w,
                          [&] { return label + " positive sample left its stratum"; });
              }
            }
          });
        }
      }
    }
  });
}

}  // namespace twistpos
