#pragma once

// Bounded bidirectional BFS for a word in generators (and their inverses)
// evaluating to a target isometry.

#include <unordered_map>

#include "monlat/isometry.hpp"

namespace monlat {

/// Letter i >= 0 is generator i, letter -(i+1) is its inverse. A word
/// [l1, ..., ln] evaluates to l1 o l2 o ... o ln.
using Letter = int;
using Word = std::vector<Letter>;

inline constexpr std::size_t kMaxWordSearchLength = 12;

inline Isometry evaluate_word(const LatticePtr& l, const std::vector<Isometry>& gens, const Word& w) {
  Isometry g = identity_isometry(l);
  for (Letter x : w) g = compose(g, x >= 0 ? gens.at(x) : inverse(gens.at(-x - 1)));
  return g;
}

/// Shortest word of length <= max_len evaluating to target, or nullopt.
inline std::optional<Word> word_search(const LatticePtr& l, const std::vector<Isometry>& gens, const Isometry& target,
                                       std::size_t max_len) {
  if (max_len > kMaxWordSearchLength)
    throw InputError("word search bound is " + std::to_string(kMaxWordSearchLength));
  if (!(*target.lattice() == *l)) throw InputError("target lives on a different lattice");
  const std::size_t n = gens.size();
  std::vector<IntMatrix> letters;  // index 2i = gen i, 2i+1 = inverse
  for (const auto& g : gens) {
    if (!(*g.lattice() == *l)) throw InputError("generator lives on a different lattice");
    letters.push_back(g.matrix());
    letters.push_back(inverse(g).matrix());
  }
  auto letter_of = [](std::size_t idx) -> Letter {
    return idx % 2 == 0 ? static_cast<Letter>(idx / 2) : -static_cast<Letter>(idx / 2) - 1;
  };
  auto inverse_idx = [](std::size_t idx) { return idx ^ 1u; };

  // forward: prefix product X = l1...lj ; backward: Y = target * (suffix)^{-1}
  using Map = std::unordered_map<IntMatrix, std::vector<std::size_t>, MatrixHash>;
  Map fwd, bwd;
  const IntMatrix id = IntMatrix::identity(l->rank());
  fwd.emplace(id, std::vector<std::size_t>{});
  bwd.emplace(target.matrix(), std::vector<std::size_t>{});
  std::vector<IntMatrix> fwd_frontier{id}, bwd_frontier{target.matrix()};

  auto to_word = [&](const std::vector<std::size_t>& prefix, const std::vector<std::size_t>& suffix) {
    Word w;
    for (auto i : prefix) w.push_back(letter_of(i));
    for (auto i : suffix) w.push_back(letter_of(i));
    return w;
  };
  if (id == target.matrix()) return Word{};

  std::size_t depth_f = 0, depth_b = 0;
  while (depth_f + depth_b < max_len && n > 0) {
    const bool grow_forward = fwd_frontier.size() <= bwd_frontier.size();
    auto& frontier = grow_forward ? fwd_frontier : bwd_frontier;
    auto& mine = grow_forward ? fwd : bwd;
    auto& other = grow_forward ? bwd : fwd;
    std::vector<IntMatrix> next;
    for (const auto& x : frontier) {
      const std::vector<std::size_t> path = mine.at(x);
      for (std::size_t idx = 0; idx < letters.size(); ++idx) {
        std::vector<std::size_t> p2;
        IntMatrix y;
        if (grow_forward) {
          if (!path.empty() && path.back() == inverse_idx(idx)) continue;
          y = x * letters[idx];
          p2 = path;
          p2.push_back(idx);
        } else {
          if (!path.empty() && path.front() == inverse_idx(idx)) continue;
          y = x * letters[inverse_idx(idx)];
          p2.push_back(idx);
          p2.insert(p2.end(), path.begin(), path.end());
        }
        if (mine.count(y)) continue;
        if (auto it = other.find(y); it != other.end())
          return grow_forward ? to_word(p2, it->second) : to_word(it->second, p2);
        mine.emplace(y, p2);
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
    (grow_forward ? depth_f : depth_b) += 1;
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

}  // namespace monlat
