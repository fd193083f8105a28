#include "common.hpp"

#include <algorithm>

namespace prodlab {

using detail::first_label;

Labelling label_path(const Graph& path, const ListAssignment& la) {
  if (!detail::is_path_graph(path) || path.edge_count() < 2)
    throw PreconditionError("label_path: graph is not a path of length at least 2");
  const std::size_t n = path.edge_count();
  detail::require_lists(path, la, (n % 2 == 0 || n == 3) ? 2 : 3, "label_path");

  const auto seq = detail::path_sequence(path);
  // edge e_i joins seq[i-1] and seq[i], i = 1..n
  const auto edge = [&](std::size_t i) { return Edge::of(seq[i - 1], seq[i]); };
  const auto not_one = [&](std::size_t i) { return i == 2 || i == n - 1; };

  Labelling lab;
  for (std::size_t parity : {std::size_t{1}, std::size_t{0}}) {
    std::vector<std::size_t> chain;
    for (std::size_t i = 1; i <= n; ++i)
      if (i % 2 == parity) chain.push_back(i);
    const bool has_two = std::find(chain.begin(), chain.end(), 2) != chain.end();
    const bool has_last = std::find(chain.begin(), chain.end(), n - 1) != chain.end();
    if (has_last && !has_two) std::reverse(chain.begin(), chain.end());
    const Rational* prev = nullptr;
    for (std::size_t i : chain) {
      const Rational& x = first_label(
          la.at(edge(i)),
          [&](const Rational& x) { return !(not_one(i) && x == 1) && !(prev && x == *prev); },
          "label_path");
      lab.set(edge(i), x);
      prev = &x;
    }
  }
  detail::assert_proper(path, lab, la, "label_path");
  return lab;
}

namespace {

// Proper colouring of the cycle c_0..c_{k-1} (k >= 2) from the given lists.
std::vector<Rational> colour_cycle(const std::vector<const std::vector<Rational>*>& lists) {
  const std::size_t k = lists.size();
  std::vector<Rational> colour(k);
  if (k % 2 == 0) {
    std::size_t start = k;
    for (std::size_t i = 0; i < k && start == k; ++i) {
      const auto& a = *lists[i];
      const auto& b = *lists[(i + 1) % k];
      for (const Rational& x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) {
          start = i;
          break;
        }
    }
    if (start == k) {
      for (std::size_t i = 0; i < k; ++i) colour[i] = (*lists[0])[i % 2];
      return colour;
    }
    const auto& b = *lists[(start + 1) % k];
    colour[start] = first_label(
        *lists[start], [&](const Rational& x) { return std::find(b.begin(), b.end(), x) == b.end(); },
        "label_cycle");
    for (std::size_t step = 1; step < k; ++step) {
      const std::size_t j = (start + k - step) % k;
      const Rational& after = colour[(j + 1) % k];
      const bool last = step + 1 == k;
      colour[j] = first_label(
          *lists[j],
          [&](const Rational& x) { return x != after && !(last && x == colour[(j + k - 1) % k]); },
          "label_cycle");
    }
    return colour;
  }
  colour[0] = lists[0]->front();
  for (std::size_t j = 1; j < k; ++j) {
    const bool last = j + 1 == k;
    colour[j] = first_label(
        *lists[j], [&](const Rational& x) { return x != colour[j - 1] && !(last && x == colour[0]); },
        "label_cycle");
  }
  return colour;
}

}  // namespace

Labelling label_cycle(const Graph& cycle, const ListAssignment& la) {
  if (!detail::is_cycle_graph(cycle)) throw PreconditionError("label_cycle: graph is not a cycle");
  const std::size_t n = cycle.edge_count();
  detail::require_lists(cycle, la, n % 4 == 0 ? 2 : 3, "label_cycle");

  const auto seq = detail::cycle_sequence(cycle);
  // edge e_i joins seq[i] and seq[i+1]; e_{i-1} and e_{i+1} must differ
  const auto edge = [&](std::size_t i) { return Edge::of(seq[i % n], seq[(i + 1) % n]); };

  std::vector<std::vector<std::size_t>> conflict_cycles;
  if (n % 2 == 1) {
    std::vector<std::size_t> c;
    for (std::size_t j = 0; j < n; ++j) c.push_back((2 * j) % n);
    conflict_cycles.push_back(std::move(c));
  } else {
    for (std::size_t parity = 0; parity < 2; ++parity) {
      std::vector<std::size_t> c;
      for (std::size_t i = parity; i < n; i += 2) c.push_back(i);
      conflict_cycles.push_back(std::move(c));
    }
  }

  Labelling lab;
  for (const auto& c : conflict_cycles) {
    std::vector<const std::vector<Rational>*> lists;
    for (std::size_t i : c) lists.push_back(&la.at(edge(i)));
    const auto colour = colour_cycle(lists);
    for (std::size_t j = 0; j < c.size(); ++j) lab.set(edge(c[j]), colour[j]);
  }
  detail::assert_proper(cycle, lab, la, "label_cycle");
  return lab;
}

}  // namespace prodlab
