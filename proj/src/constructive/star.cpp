#include "common.hpp"

#include <algorithm>
#include <optional>

namespace prodlab {

using detail::first_label;
using detail::sign_of;

namespace {

using Choices = std::vector<std::vector<Rational>>;

struct Star {
  Rational base;  // product of every fixed label at the center
  std::vector<Rational> forbidden;

  bool accepts(const std::vector<Rational>& xs) const {
    Rational center = base;
    for (const Rational& x : xs) center *= x;
    for (const Rational& a : forbidden)
      if (center == a) return false;
    for (const Rational& x : xs)
      if (center == x) return false;
    return true;
  }
};

std::vector<Rational> distinct_abs(const std::vector<Rational>& list, std::size_t limit) {
  std::vector<Rational> out;
  for (const Rational& x : list) {
    if (out.size() == limit) break;
    if (std::none_of(out.begin(), out.end(), [&](const Rational& y) { return abs(y) == abs(x); })) out.push_back(x);
  }
  return out;
}

std::size_t distinct_abs_count(const std::vector<Rational>& list) { return distinct_abs(list, list.size()).size(); }

// Odometer over the choices, first coordinate slowest.
std::optional<std::vector<Rational>> search(const Star& star, const Choices& choices) {
  const std::size_t q = choices.size();
  for (const auto& c : choices)
    if (c.empty()) return std::nullopt;
  std::vector<std::size_t> idx(q, 0);
  std::vector<Rational> xs(q);
  while (true) {
    for (std::size_t i = 0; i < q; ++i) xs[i] = choices[i][idx[i]];
    if (star.accepts(xs)) return xs;
    std::size_t i = q;
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (q == 0) return std::nullopt;
  }
}

std::vector<Rational> truncated(const std::vector<Rational>& list, std::size_t n) {
  return {list.begin(), list.begin() + static_cast<std::ptrdiff_t>(std::min(n, list.size()))};
}

std::vector<Rational> of_sign(const std::vector<Rational>& list, int s) {
  std::vector<Rational> out;
  for (const Rational& x : list)
    if (sign_of(x) == s) out.push_back(x);
  return out;
}

std::vector<Rational> small_star(const Star& star, const Choices& lists) {
  const std::size_t q = lists.size();
  if (q == 2) {
    const Rational& x1 = first_label(lists[0], [&](const Rational& x) { return star.base * x != 1; }, "star, first leaf");
    const Rational& x2 = first_label(
        lists[1], [&](const Rational& x) { return star.accepts({x1, x}); }, "star, second leaf");
    return {x1, x2};
  }
  if (auto xs = search(star, lists)) return *xs;
  throw InvariantViolation("star extension failed");
}

// One anchor (or none), 3-lists.
std::vector<Rational> three_list_star(const Star& star, const Choices& full) {
  const std::size_t q = full.size();
  Choices lists;
  for (const auto& l : full) lists.push_back(truncated(l, 3));
  if (q <= 2) return small_star(star, lists);

  const auto rich = std::find_if(lists.begin(), lists.end(), [](const auto& l) { return distinct_abs_count(l) == 3; });
  if (rich != lists.end()) {
    Choices choices;
    for (auto it = lists.begin(); it != lists.end(); ++it) choices.push_back(distinct_abs(*it, it == rich ? 3 : 2));
    if (auto xs = search(star, choices)) return *xs;
    throw InvariantViolation("star extension: three-value case exhausted");
  }

  // every list is {alpha, beta, -beta} with alpha, beta of equal sign
  std::vector<Rational> alpha(q), beta(q);
  for (std::size_t i = 0; i < q; ++i) {
    for (const Rational& x : lists[i]) {
      const bool paired = std::count_if(lists[i].begin(), lists[i].end(),
                                        [&](const Rational& y) { return abs(y) == abs(x); }) == 2;
      if (!paired) alpha[i] = x;
    }
    for (const Rational& x : lists[i])
      if (x != alpha[i] && sign_of(x) == sign_of(alpha[i])) beta[i] = x;
  }
  Rational psi = star.base;
  for (const Rational& a : alpha) psi *= a;
  const int s = sign_of(psi);
  std::optional<std::size_t> opposite;
  for (std::size_t i = 0; i < q && !opposite; ++i)
    if (sign_of(alpha[i]) == -s) opposite = i;

  Choices choices;
  if (!opposite) {
    choices.push_back({-beta[0]});
    for (std::size_t i = 1; i < q; ++i) {
      if (i <= 2)
        choices.push_back({alpha[i], beta[i]});
      else
        choices.push_back({alpha[i]});
    }
  } else {
    for (std::size_t i = 0; i < q; ++i) choices.push_back({alpha[i], beta[i]});
  }
  if (auto xs = search(star, choices)) return *xs;
  throw InvariantViolation("star extension: sign-split case exhausted");
}

// Two anchors, 4-lists.
std::vector<Rational> four_list_star(const Star& star, const Choices& full, const StarAnchor& t,
                                     const StarAnchor& t2) {
  const std::size_t q = full.size();
  Choices lists;
  for (const auto& l : full) lists.push_back(truncated(l, 4));
  if (q <= 2) return small_star(star, lists);

  std::vector<std::size_t> counts;
  for (const auto& l : lists) counts.push_back(distinct_abs_count(l));
  const std::size_t rich4 = static_cast<std::size_t>(std::count(counts.begin(), counts.end(), 4));
  const std::size_t rich3 = static_cast<std::size_t>(std::count(counts.begin(), counts.end(), 3));
  if (rich4 >= 1 || rich3 >= 2) {
    Choices choices;
    bool wide_used = false;
    std::size_t threes_used = 0;
    for (std::size_t i = 0; i < q; ++i) {
      std::size_t take = 2;
      if (rich4 >= 1 && !wide_used && counts[i] == 4) {
        take = 4;
        wide_used = true;
      } else if (rich4 == 0 && counts[i] == 3 && threes_used < 2) {
        take = 3;
        ++threes_used;
      }
      choices.push_back(distinct_abs(lists[i], take));
    }
    if (auto xs = search(star, choices)) return *xs;
    throw InvariantViolation("star extension: distinct-absolute-value case exhausted");
  }

  // sign-driven greedy; the list with three absolute values (if any) goes first
  std::vector<std::size_t> order(q);
  for (std::size_t i = 0; i < q; ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return counts[i] == 3; });
  std::vector<Rational> xs(q);
  Rational partial = star.base;
  const auto pick = [&](std::size_t k, const std::function<bool(const Rational&)>& ok) {
    xs[order[k]] = first_label(lists[order[k]], ok, "star extension, sign case");
    partial *= xs[order[k]];
  };
  const int sa = sign_of(t.product), sb = sign_of(t2.product);
  if (sa == sb) {
    const int s = sa;
    for (std::size_t k = 0; k + 2 < q; ++k) pick(k, [&](const Rational& x) { return sign_of(x) == s; });
    if (sign_of(partial) == s) {
      pick(q - 2, [&](const Rational& x) { return sign_of(x) == s && partial * x != 1; });
      pick(q - 1, [&](const Rational& x) { return sign_of(x) == -s; });
    } else {
      pick(q - 2, [&](const Rational& x) { return sign_of(x) == s; });
      pick(q - 1, [&](const Rational& x) { return sign_of(x) == s; });
    }
  } else {
    const Rational negative = sa < 0 ? t.product : t2.product;
    for (std::size_t k = 0; k + 2 < q; ++k) pick(k, [&](const Rational& x) { return x > 0; });
    if (partial < 0) {
      Star tail{partial, {negative}};
      const auto found = search(tail, {of_sign(lists[order[q - 2]], 1), of_sign(lists[order[q - 1]], 1)});
      if (!found) throw InvariantViolation("star extension: positive pair exhausted");
      xs[order[q - 2]] = (*found)[0];
      xs[order[q - 1]] = (*found)[1];
    } else {
      pick(q - 2, [&](const Rational& x) { return x > 0 && partial * x != 1; });
      pick(q - 1, [&](const Rational& x) { return x < 0 && partial * x != negative; });
    }
  }
  if (!star.accepts(xs)) throw InvariantViolation("star extension: sign case produced a conflict");
  return xs;
}

}  // namespace

std::vector<Rational> extend_star(const StarExtensionProblem& problem) {
  if (problem.anchors.size() > 2) throw PreconditionError("extend_star: at most two anchors");
  if (problem.extra_factor == 0) throw PreconditionError("extend_star: zero center factor");
  const std::size_t need = problem.anchors.size() == 2 ? 4 : 3;
  for (const auto& a : problem.anchors)
    if (a.label == 0) throw PreconditionError("extend_star: zero anchor label");
  for (const auto& l : problem.leaf_lists) {
    if (l.size() < need) throw PreconditionError("extend_star: leaf list too short");
    if (std::find(l.begin(), l.end(), Rational(0)) != l.end())
      throw PreconditionError("extend_star: leaf list contains 0");
  }
  Choices lists;
  for (auto l : problem.leaf_lists) {
    normalize_labels(l);
    lists.push_back(std::move(l));
  }
  Star star{problem.extra_factor, {}};
  for (const auto& a : problem.anchors) {
    star.base *= a.label;
    star.forbidden.push_back(a.product);
  }
  if (lists.size() == 1 && star.base == 1)
    throw PreconditionError("extend_star: single leaf with center factor 1 always conflicts");
  if (lists.empty()) {
    if (!star.accepts({})) throw PreconditionError("extend_star: center already conflicts with an anchor");
    return {};
  }
  const auto xs = problem.anchors.size() == 2
                      ? four_list_star(star, lists, problem.anchors[0], problem.anchors[1])
                      : three_list_star(star, lists);
  if (!star.accepts(xs)) throw InvariantViolation("extend_star: result conflicts");
  return xs;
}

}  // namespace prodlab
