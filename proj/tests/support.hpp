#pragma once

#include <string>
#include <vector>

#include "fatnielsen/errors.hpp"
#include "fatnielsen/random_walk.hpp"
#include "fatnielsen/reduction.hpp"

namespace testing {

using namespace fatnielsen;

inline Word W(const GenusContext& ctx, const std::string& s) { return ctx.parse(s); }

inline PolygonDomain domain(int genus, std::vector<std::string> sides, std::vector<int> pairing) {
  GenusContext ctx(genus);
  std::vector<Word> words;
  for (const auto& s : sides) words.push_back(ctx.parse(s));
  return PolygonDomain(ctx, std::move(words), std::move(pairing));
}

// The image of the twist beta -> beta alpha on the standard torus domain.
inline PolygonDomain twisted_torus() { return domain(1, {"b1 a1", "a1", "A1 B1", "A1"}, {3, 4, 1, 2}); }

inline PolygonDomain random_domain(int genus, int steps, std::uint64_t seed) {
  return random_walk(standard_domain(GenusContext(genus)), steps, seed).domain;
}

// Free reduction by a stack, independent of Word's own normalization.
inline std::vector<int> stack_reduce(const std::vector<int>& indices) {
  std::vector<int> out;
  for (int i : indices) {
    Letter l{i};
    if (!out.empty() && Letter{out.back()}.inverse() == l)
      out.pop_back();
    else
      out.push_back(i);
  }
  return out;
}

inline std::vector<int> indices(const Word& w) {
  std::vector<int> out;
  for (Letter l : w.letters()) out.push_back(l.index);
  return out;
}

}  // namespace testing
