#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "support.hpp"

using namespace testing;
using boost::multiprecision::cpp_int;

namespace {

// The energy sum evaluated directly with arbitrary precision.
cpp_int direct_energy(const Word& w, int genus) {
  cpp_int base = 4 * genus + 1, total = 0;
  for (Letter l : w.letters()) total = total * base + l.index;
  return total;
}

std::vector<Word> all_reduced(int genus, int max_len) {
  std::vector<Word> out{Word()};
  std::vector<Word> frontier{Word()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (int i = 1; i <= 4 * genus; ++i) {
        Letter l{i};
        if (!w.empty() && w[w.length() - 1].inverse() == l) continue;
        std::vector<Letter> ls(w.letters().begin(), w.letters().end());
        ls.push_back(l);
        next.emplace_back(ls);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("alphabet follows the sigma numbering") {
  GenusContext g2(2);
  CHECK(g2.letter_name(Letter{1}) == "b2");
  CHECK(g2.letter_name(Letter{2}) == "a2");
  CHECK(g2.letter_name(Letter{3}) == "B2");
  CHECK(g2.letter_name(Letter{4}) == "A2");
  CHECK(g2.letter_name(Letter{5}) == "b1");
  CHECK(g2.letter_name(Letter{8}) == "A1");
  for (int i = 1; i <= 8; ++i) CHECK(Letter{i}.inverse().inverse() == Letter{i});
  CHECK(Letter{5}.inverse() == Letter{7});
  CHECK(Letter{6}.inverse() == Letter{8});
}

TEST_CASE("parsing reduces and round-trips") {
  GenusContext g1(1), g2(2);
  CHECK(W(g1, "a1 A1").empty());
  CHECK(g1.format(W(g1, "b1 a1 A1 B1 a1")) == "a1");
  const std::string bbar = "b2 a2 B2 A2 b1 a1 B1 A1";
  CHECK(g2.format(W(g2, bbar)) == bbar);
  CHECK(W(g2, bbar) == g2.boundary_inverse());
  CHECK_THROWS_AS(g1.parse("a2"), Error);
  try {
    g1.parse("c1");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownLetter);
  }
  const int bad[] = {1, 5};
  CHECK_THROWS(g1.reduce_tokens(bad));
}

TEST_CASE("boundary words") {
  GenusContext g1(1);
  CHECK(g1.format(g1.boundary()) == "a1 b1 A1 B1");
  CHECK(multiply(g1.boundary(), g1.boundary_inverse()).empty());
}

TEST_CASE("multiplication and inversion") {
  GenusContext g1(1);
  CHECK(multiply(W(g1, "b1 a1"), W(g1, "A1 B1")).empty());
  CHECK(g1.format(multiply(W(g1, "a1"), W(g1, "A1 B1"))) == "B1");
  CHECK(g1.format(multiply(W(g1, "b1"), W(g1, "a1"))) == "b1 a1");
  CHECK(invert(Word()).empty());
  CHECK(g1.format(invert(W(g1, "b1 a1"))) == "A1 B1");
  CHECK(invert(invert(W(g1, "a1 B1"))) == W(g1, "a1 B1"));
  CHECK(cancellation_depth(W(g1, "b1 a1"), W(g1, "A1 B1 a1")) == 2);
}

TEST_CASE("multiplication agrees with stack reduction of the concatenation") {
  SplitMix64 rng(11);
  const int genus = 2;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> a, b;
    for (int k = rng.below(7); k > 0; --k) a.push_back(1 + rng.below(4 * genus));
    for (int k = rng.below(7); k > 0; --k) b.push_back(1 + rng.below(4 * genus));
    GenusContext ctx(genus);
    Word u = ctx.reduce_tokens(a), v = ctx.reduce_tokens(b);
    std::vector<int> cat = indices(u);
    for (int i : indices(v)) cat.push_back(i);
    Word uv = multiply(u, v);
    CHECK(indices(uv) == stack_reduce(cat));
    CHECK(uv.length() <= u.length() + v.length());
    CHECK((uv.length() + u.length() + v.length()) % 2 == 0);
    CHECK(multiply(uv, invert(v)) == u);
  }
}

TEST_CASE("energy values") {
  GenusContext g1(1);
  CHECK(energy_value(W(g1, "b1"), 1) == 1);
  CHECK(energy_value(W(g1, "a1"), 1) == 2);
  CHECK(energy_value(W(g1, "B1"), 1) == 3);
  CHECK(energy_value(W(g1, "A1"), 1) == 4);
  CHECK(energy_value(W(g1, "b1 a1"), 1) == 7);
  CHECK(energy_value(W(g1, "a1 b1"), 1) == 11);
  CHECK(energy_value(Word(), 1) == 0);
}

TEST_CASE("comparator matches exact energies on all short words") {
  const auto words = all_reduced(1, 4);
  CHECK(words.size() == 1 + 4 + 12 + 36 + 108);
  for (const Word& u : words)
    for (const Word& v : words) {
      const cpp_int eu = direct_energy(u, 1), ev = direct_energy(v, 1);
      const auto c = energy_compare(u, v);
      CHECK((c < 0) == (eu < ev));
      CHECK((c == 0) == (eu == ev));
      CHECK((eu == ev) == (u == v));
    }
  GenusContext g1(1);
  CHECK(energy_compare(W(g1, "b1"), W(g1, "b1 a1")) < 0);
  CHECK(energy_compare(W(g1, "b1 a1"), W(g1, "a1 b1")) < 0);
}

TEST_CASE("energy sums compare like their exact totals") {
  SplitMix64 rng(5);
  GenusContext ctx(2);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Word> a, b;
    cpp_int ea = 0, eb = 0;
    for (int k = 0; k < 4; ++k) {
      std::vector<int> ta, tb;
      for (int n = rng.below(6); n > 0; --n) ta.push_back(1 + rng.below(8));
      for (int n = rng.below(6); n > 0; --n) tb.push_back(1 + rng.below(8));
      a.push_back(ctx.reduce_tokens(ta));
      b.push_back(ctx.reduce_tokens(tb));
      ea += direct_energy(a.back(), 2);
      eb += direct_energy(b.back(), 2);
    }
    const auto c = compare_energy_sums(a, b, 2);
    CHECK((c < 0) == (ea < eb));
    CHECK((c == 0) == (ea == eb));
  }
}

TEST_CASE("abelianization") {
  GenusContext g1(1), g2(2);
  CHECK(g1.abelianize(W(g1, "b1 a1")) == std::vector<int>{1, 1});
  CHECK(g1.abelianize(Word()) == std::vector<int>{0, 0});
  CHECK(g1.abelianize(g1.boundary()) == std::vector<int>{0, 0});
  CHECK(g2.abelianize(W(g2, "a1 a1 B2")) == std::vector<int>{2, 0, 0, -1});
}
