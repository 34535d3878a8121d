#include "twistpos/weyl.hpp"

#include <algorithm>
#include <unordered_set>

#include "twistpos/error.hpp"

namespace twistpos {

namespace {

using Mat = std::vector<std::int64_t>;

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t coeff, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(coeff, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    fail(ErrorKind::BudgetExceeded, "integer overflow in root coordinates");
  return out;
}

// mat <- mat * s_k: column j gets col_j - a_{jk} col_k.
void right_reflect(const CartanMatrix& a, std::size_t n, Mat& mat, std::size_t k) {
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k || a(j, k) == 0) continue;
    for (std::size_t r = 0; r < n; ++r)
      mat[r * n + j] = checked_sub_mul(mat[r * n + j], a(j, k), mat[r * n + k]);
  }
  for (std::size_t r = 0; r < n; ++r) mat[r * n + k] = -mat[r * n + k];
}

// mat <- s_k * mat: row k gets row_k - sum_j a_{jk} row_j.
void left_reflect(const CartanMatrix& a, std::size_t n, Mat& mat, std::size_t k) {
  for (std::size_t c = 0; c < n; ++c) {
    std::int64_t pairing = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(j, k) == 0) continue;
      pairing = checked_sub_mul(pairing, -a(j, k), mat[j * n + c]);
    }
    mat[k * n + c] = checked_sub_mul(mat[k * n + c], 1, pairing);
  }
}

bool column_negative(const Mat& mat, std::size_t n, std::size_t col) {
  for (std::size_t r = 0; r < n; ++r) {
    const auto x = mat[r * n + col];
    if (x != 0) return x < 0;
  }
  fail(ErrorKind::CorruptedElement, "zero column in element matrix");
}

Mat identity_matrix(std::size_t n) {
  Mat m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

void check_node(const WeylGroup& g, std::size_t i) {
  require(i < g.rank(), ErrorKind::IndexOutOfRange,
          "node " + std::to_string(i) + " out of range for rank " + std::to_string(g.rank()));
}

void check_same(const WeylElement& x, const WeylElement& y) {
  require(x.group()->same_as(*y.group()), ErrorKind::MismatchedGroup,
          "elements belong to different Weyl groups");
}

}  // namespace

std::vector<std::size_t> NodeSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

WeylGroupPtr WeylGroup::create(CartanMatrix cartan, EnumerationBudget budget) {
  require(budget.max_elements > 0 && budget.max_length > 0, ErrorKind::InvalidInput,
          "enumeration budgets must be positive");
  return std::shared_ptr<const WeylGroup>(new WeylGroup(std::move(cartan), budget));
}

WeylElement WeylGroup::identity() const {
  const auto n = rank();
  return WeylElement(shared_from_this(), identity_matrix(n), identity_matrix(n), 0);
}

WeylElement WeylGroup::simple_reflection(std::size_t i) const {
  check_node(*this, i);
  return identity().times_simple(i);
}

WeylElement WeylGroup::from_word(const Word& word) const {
  auto x = identity();
  for (auto i : word) {
    check_node(*this, i);
    x = x.times_simple(i);
  }
  return x;
}

WeylElement WeylGroup::from_matrix(std::vector<std::int64_t> matrix) const {
  const auto n = rank();
  require(matrix.size() == n * n, ErrorKind::InvalidInput, "matrix has wrong size");
  // Strip right descents down to the identity; the letters give the inverse.
  Mat work = matrix;
  Mat inv = identity_matrix(n);
  const Mat id = identity_matrix(n);
  std::size_t len = 0;
  while (work != id) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (column_negative(work, n, i)) {
        k = i;
        break;
      }
    }
    require(k < n, ErrorKind::CorruptedElement, "matrix has no descent but is not the identity");
    require(++len <= budget_.max_length * 4 + 64, ErrorKind::CorruptedElement,
            "length reduction did not terminate");
    right_reflect(cartan_, n, work, k);
    right_reflect(cartan_, n, inv, k);
  }
  return WeylElement(shared_from_this(), std::move(matrix), std::move(inv), len);
}

RootVector WeylElement::apply(const RootVector& root) const {
  require(root.size() == n_, ErrorKind::InvalidInput, "root vector has wrong size");
  RootVector out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] = checked_sub_mul(out[i], -entry(i, j), root[j]);
  return out;
}

RootVector WeylElement::image_of_simple(std::size_t j) const {
  check_node(*group_, j);
  RootVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = entry(i, j);
  return out;
}

bool WeylElement::has_right_descent(std::size_t i) const {
  check_node(*group_, i);
  return column_negative(m_, n_, i);
}

bool WeylElement::has_left_descent(std::size_t i) const {
  check_node(*group_, i);
  return column_negative(inv_, n_, i);
}

WeylElement WeylElement::inverse() const { return WeylElement(group_, inv_, m_, length_); }

WeylElement WeylElement::times_simple(std::size_t i) const {
  check_node(*group_, i);
  const bool down = column_negative(m_, n_, i);
  Mat m = m_;
  Mat inv = inv_;
  right_reflect(group_->cartan(), n_, m, i);
  left_reflect(group_->cartan(), n_, inv, i);
  return WeylElement(group_, std::move(m), std::move(inv), down ? length_ - 1 : length_ + 1);
}

WeylElement WeylElement::simple_times(std::size_t i) const {
  check_node(*group_, i);
  const bool down = column_negative(inv_, n_, i);
  Mat m = m_;
  Mat inv = inv_;
  left_reflect(group_->cartan(), n_, m, i);
  right_reflect(group_->cartan(), n_, inv, i);
  return WeylElement(group_, std::move(m), std::move(inv), down ? length_ - 1 : length_ + 1);
}

std::size_t WeylElement::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : m_) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

WeylElement simple_reflection(const WeylGroupPtr& group, std::size_t i) {
  return group->simple_reflection(i);
}

WeylElement multiply(const WeylElement& x, const WeylElement& y) {
  check_same(x, y);
  auto out = x;
  for (auto i : canonical_reduced_word(y)) out = out.times_simple(i);
  return out;
}

WeylElement evaluate(const WeylGroupPtr& group, const Word& word) { return group->from_word(word); }

NodeSet descents(const WeylElement& w, Side side) {
  NodeSet out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (side == Side::Right ? w.has_right_descent(i) : w.has_left_descent(i)) out.insert(i);
  }
  return out;
}

Word canonical_reduced_word(const WeylElement& w) {
  // The first letter is the smallest left descent, i.e. the smallest right
  // descent of the inverse.
  const auto n = w.rank();
  const auto& a = w.group()->cartan();
  Mat inv(w.inverse_matrix().begin(), w.inverse_matrix().end());
  Word word;
  word.reserve(w.length());
  for (std::size_t step = 0; step < w.length(); ++step) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (column_negative(inv, n, i)) {
        k = i;
        break;
      }
    }
    require(k < n, ErrorKind::CorruptedElement, "descent missing during word extraction");
    word.push_back(k);
    right_reflect(a, n, inv, k);
  }
  return word;
}

bool is_reduced(const WeylGroupPtr& group, const Word& word) {
  return group->from_word(word).length() == word.size();
}

bool bruhat_leq(const WeylElement& v0, const WeylElement& w0) {
  check_same(v0, w0);
  // If s is a left descent of w then v <= w iff min(v, sv) <= sw.
  auto v = v0;
  auto w = w0;
  while (true) {
    if (v.length() > w.length()) return false;
    if (v.length() == w.length()) return v == w;
    if (v.is_identity()) return true;
    std::size_t s = w.rank();
    for (std::size_t i = 0; i < w.rank(); ++i) {
      if (w.has_left_descent(i)) {
        s = i;
        break;
      }
    }
    w = w.simple_times(s);
    if (v.has_left_descent(s)) v = v.simple_times(s);
  }
}

ParabolicParts parabolic_decompose(const WeylElement& w, NodeSet J) {
  auto rep = w;
  Word stripped;
  while (true) {
    std::size_t k = w.rank();
    for (std::size_t i = 0; i < w.rank(); ++i) {
      if (J.contains(i) && rep.has_right_descent(i)) {
        k = i;
        break;
      }
    }
    if (k == w.rank()) break;
    rep = rep.times_simple(k);
    stripped.push_back(k);
  }
  auto part = w.group()->identity();
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it) part = part.times_simple(*it);
  return {rep, part};
}

namespace {

std::vector<WeylElement> bfs(const WeylGroupPtr& group, std::size_t max_length,
                             std::optional<NodeSet> restrict_to, bool until_exhausted) {
  const auto n = group->rank();
  const NodeSet gens = restrict_to ? *restrict_to : NodeSet::all(n);
  for (auto i : gens.members()) check_node(*group, i);
  const auto budget = group->budget().max_elements;

  std::vector<WeylElement> out{group->identity()};
  std::unordered_set<WeylElement> seen{group->identity()};
  std::vector<WeylElement> level{group->identity()};
  for (std::size_t len = 1; until_exhausted || len <= max_length; ++len) {
    std::vector<std::pair<Word, WeylElement>> next;
    for (const auto& x : level) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!gens.contains(i) || x.has_right_descent(i)) continue;
        auto y = x.times_simple(i);
        if (!seen.insert(y).second) continue;
        require(seen.size() <= budget, ErrorKind::BudgetExceeded,
                "enumeration exceeded " + std::to_string(budget) + " elements");
        next.emplace_back(canonical_reduced_word(y), std::move(y));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [word, y] : next) {
      level.push_back(y);
      out.push_back(std::move(y));
    }
  }
  return out;
}

}  // namespace

std::vector<WeylElement> enumerate_ball(const WeylGroupPtr& group, std::size_t max_length,
                                        std::optional<NodeSet> restrict_to) {
  return bfs(group, max_length, restrict_to, false);
}

std::vector<WeylElement> enumerate_group(const WeylGroupPtr& group, std::optional<NodeSet> restrict_to) {
  return bfs(group, 0, restrict_to, true);
}

std::vector<RootVector> inversion_set(const WeylElement& w) {
  std::vector<RootVector> out;
  auto prefix = w.group()->identity();
  for (auto i : canonical_reduced_word(w)) {
    out.push_back(prefix.image_of_simple(i));
    prefix = prefix.times_simple(i);
  }
  return out;
}

WeylElement longest_element(const WeylGroupPtr& group, NodeSet J) {
  auto x = group->identity();
  const auto cap = group->budget().max_length;
  while (true) {
    std::size_t k = group->rank();
    for (std::size_t i = 0; i < group->rank(); ++i) {
      if (J.contains(i) && !x.has_right_descent(i)) {
        k = i;
        break;
      }
    }
    if (k == group->rank()) return x;
    require(x.length() < cap, ErrorKind::BudgetExceeded, "parabolic subgroup looks infinite");
    x = x.times_simple(k);
  }
}

bool shortlex_less(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return canonical_reduced_word(a) < canonical_reduced_word(b);
}

std::string word_to_string(const Word& word) {
  std::string out = "[";
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k]);
  }
  return out + "]";
}

}  // namespace twistpos
