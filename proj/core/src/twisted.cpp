#include "twistpos/twisted.hpp"

#include <algorithm>

#include "twistpos/error.hpp"

namespace twistpos {

ParabolicContext::ParabolicContext(WeylGroupPtr group, NodeSet J)
    : group_(std::move(group)), J_(J), cache_(std::make_shared<Cache>()) {
  require(group_ != nullptr, ErrorKind::InvalidInput, "null group");
  for (auto j : J_.members())
    require(j < group_->rank(), ErrorKind::IndexOutOfRange, "J contains node " + std::to_string(j));
}

std::vector<WeylElement> ParabolicContext::wj_ball(std::size_t max_length) const {
  std::lock_guard lock(cache_->mutex);
  auto& c = *cache_;
  if (!c.ball_complete && (c.ball.empty() || c.ball_length < max_length)) {
    if (!c.longest) {
      try {
        c.longest = std::optional<WeylElement>(longest_element(group_, J_));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        c.longest = std::optional<WeylElement>();
      }
    }
    if (*c.longest) {
      c.ball = enumerate_group(group_, J_);
      c.ball_complete = true;
    } else {
      // Grow geometrically so that repeated small requests stay cheap.
      const auto target = std::max<std::size_t>(max_length, 2 * c.ball_length);
      c.ball = enumerate_ball(group_, target, J_);
      c.ball_length = target;
    }
  }
  std::vector<WeylElement> out;
  for (const auto& u : c.ball) {
    if (u.length() > max_length) break;
    out.push_back(u);
  }
  return out;
}

std::optional<WeylElement> ParabolicContext::longest() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->longest) return *cache_->longest;
  }
  wj_ball(0);
  std::lock_guard lock(cache_->mutex);
  return *cache_->longest;
}

std::optional<bool> ParabolicContext::cached_leq(const WeylElement& v, const WeylElement& w) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->leq.find({v, w});
  if (it == cache_->leq.end()) return std::nullopt;
  return it->second;
}

void ParabolicContext::store_leq(const WeylElement& v, const WeylElement& w, bool value) const {
  std::lock_guard lock(cache_->mutex);
  if (cache_->leq.size() > 2'000'000) cache_->leq.clear();
  cache_->leq.emplace(std::make_pair(v, w), value);
}

ParabolicParts parabolic_decompose(const WeylElement& w, const ParabolicContext& J) {
  require(w.group()->same_as(*J.group()), ErrorKind::MismatchedGroup, "element and J disagree on group");
  return parabolic_decompose(w, J.J());
}

long j_length(const WeylElement& w, const ParabolicContext& J) {
  const auto p = parabolic_decompose(w, J);
  return static_cast<long>(p.rep.length()) - static_cast<long>(p.part.length());
}

namespace {

bool is_witness(const WeylElement& u, const ParabolicParts& pv, const ParabolicParts& pw) {
  // v^J u <= w^J and w_J <= u^{-1} v_J
  const auto left = multiply(pv.rep, u);
  if (left.length() > pw.rep.length()) return false;
  const auto right = multiply(u.inverse(), pv.part);
  if (right.length() < pw.part.length()) return false;
  return bruhat_leq(left, pw.rep) && bruhat_leq(pw.part, right);
}

}  // namespace

bool j_leq(const WeylElement& v, const WeylElement& w, const ParabolicContext& J) {
  require(v.group()->same_as(*w.group()), ErrorKind::MismatchedGroup, "elements belong to different groups");
  if (J.J().empty()) return bruhat_leq(v, w);
  if (auto hit = J.cached_leq(v, w)) return *hit;
  const auto pv = parabolic_decompose(v, J);
  const auto pw = parabolic_decompose(w, J);
  bool found = false;
  for (const auto& u : J.wj_ball(pw.rep.length() + pv.rep.length())) {
    if (is_witness(u, pv, pw)) {
      found = true;
      break;
    }
  }
  J.store_leq(v, w, found);
  return found;
}

WeylElement minimal_c(const WeylElement& v, const WeylElement& w, const ParabolicContext& J) {
  const auto pv = parabolic_decompose(v, J);
  const auto pw = parabolic_decompose(w, J);
  std::vector<WeylElement> witnesses;
  for (const auto& u : J.wj_ball(pw.rep.length() + pv.rep.length()))
    if (is_witness(u, pv, pw)) witnesses.push_back(u);
  if (witnesses.empty()) fail(ErrorKind::NotComparable, "v is not <=^J w");

  std::vector<WeylElement> minimal;
  for (const auto& a : witnesses) {
    bool is_min = true;
    for (const auto& b : witnesses) {
      if (!(a == b) && bruhat_leq(b, a)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(a);
  }
  if (minimal.size() != 1) fail(ErrorKind::AmbiguousMinimum, "witness set has no unique minimum");
  const auto& c = minimal.front();

  require(multiply(c, pw.part).length() + c.length() == pw.part.length(), ErrorKind::PostconditionFailed,
          "l(c w_J) != l(w_J) - l(c)");
  require(multiply(c.inverse(), pv.part).length() == c.length() + pv.part.length(),
          ErrorKind::PostconditionFailed, "l(c^{-1} v_J) != l(c) + l(v_J)");
  return c;
}

WeylElement demazure_min(const WeylElement& w, const WeylElement& v) {
  require(w.group()->same_as(*v.group()), ErrorKind::MismatchedGroup, "elements belong to different groups");
  auto x = v;
  const auto word = canonical_reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (x.has_left_descent(*it)) x = x.simple_times(*it);
  return x;
}

WeylElement demazure_max_inverse(const WeylElement& w, const WeylElement& u) {
  require(w.group()->same_as(*u.group()), ErrorKind::MismatchedGroup, "elements belong to different groups");
  auto x = w.group()->identity();
  auto word = canonical_reduced_word(w.inverse());
  const auto tail = canonical_reduced_word(u);
  word.insert(word.end(), tail.begin(), tail.end());
  for (auto i : word)
    if (!x.has_right_descent(i)) x = x.times_simple(i);
  return x;
}

WeylElement circ_lJ(std::size_t i, const WeylElement& w, const ParabolicContext& J) {
  const auto sw = w.simple_times(i);
  const bool down = j_leq(sw, w, J);
  const bool up = j_leq(w, sw, J);
  if (down == up) fail(ErrorKind::IncomparablePair, "neither or both of s_i w <=^J w and w <=^J s_i w hold");
  return down ? sw : w;
}

TwistedIntervalPoset j_interval(const WeylElement& x, const WeylElement& y, const ParabolicContext& J) {
  require(j_leq(x, y, J), ErrorKind::NotComparable, "interval bottom is not <=^J top");
  const auto& group = J.group();
  const auto px = parabolic_decompose(x, J);
  const auto py = parabolic_decompose(y, J);

  std::vector<std::pair<long, WeylElement>> members;
  for (const auto& rep : enumerate_ball(group, py.rep.length())) {
    bool minimal = true;
    for (auto j : J.J().members()) minimal = minimal && !rep.has_right_descent(j);
    if (!minimal) continue;
    const auto bound = rep.length() + px.rep.length() + px.part.length();
    for (const auto& part : J.wj_ball(bound)) {
      const auto z = multiply(rep, part);
      if (j_leq(x, z, J) && j_leq(z, y, J))
        members.emplace_back(static_cast<long>(rep.length()) - static_cast<long>(part.length()), z);
    }
  }
  std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return shortlex_less(a.second, b.second);
  });

  TwistedIntervalPoset out{x, y, {}, {}, {}};
  for (auto& [jl, z] : members) {
    out.jlengths.push_back(jl);
    out.elements.push_back(std::move(z));
  }
  for (std::size_t a = 0; a < out.elements.size(); ++a)
    for (std::size_t b = 0; b < out.elements.size(); ++b)
      if (out.jlengths[b] == out.jlengths[a] + 1 && j_leq(out.elements[a], out.elements[b], J))
        out.covers.emplace_back(a, b);
  return out;
}

std::size_t Subexpression::skips() const {
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
}

Subexpression mr_positive_subexpression(const WeylElement& v, const Word& word_w) {
  const auto& group = v.group();
  require(is_reduced(group, word_w), ErrorKind::NonReducedWord, "word " + word_to_string(word_w) + " is not reduced");
  require(bruhat_leq(v, group->from_word(word_w)), ErrorKind::NotLeq, "v is not below the word's element");

  Subexpression sub{word_w, std::vector<bool>(word_w.size(), false)};
  auto x = v;
  for (std::size_t k = word_w.size(); k-- > 0;) {
    if (x.has_right_descent(word_w[k])) {
      sub.used[k] = true;
      x = x.times_simple(word_w[k]);
    }
  }
  require(x.is_identity(), ErrorKind::PostconditionFailed, "positive subexpression did not reach e");
  require(is_positive_subexpression(group, sub), ErrorKind::PostconditionFailed,
          "greedy subexpression is not positive");
  return sub;
}

bool is_positive_subexpression(const WeylGroupPtr& group, const Subexpression& sub) {
  auto prefix = group->identity();
  for (std::size_t k = 0; k < sub.word.size(); ++k) {
    if (prefix.has_right_descent(sub.word[k])) return false;
    if (sub.used[k]) prefix = prefix.times_simple(sub.word[k]);
  }
  return true;
}

}  // namespace twistpos
