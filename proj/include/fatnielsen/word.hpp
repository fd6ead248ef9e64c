#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fatnielsen {

using BigInt = boost::multiprecision::cpp_int;

// A letter sigma_i of the fixed symplectic alphabet. Within each block of four
// the letters are beta_k, alpha_k, beta_k^-1, alpha_k^-1 with k = g - block,
// so inversion only depends on the position inside the block.
struct Letter {
  int index = 1;  // 1..4g

  constexpr Letter inverse() const noexcept {
    int r = (index - 1) % 4;
    return Letter{index + (r < 2 ? 2 : -2)};
  }
  constexpr bool is_alpha() const noexcept { return (index - 1) % 4 % 2 == 1; }
  constexpr bool is_positive() const noexcept { return (index - 1) % 4 < 2; }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

class GenusContext;

// A freely reduced word in the sigma letters. Immutable value; every
// constructor reduces.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word from_indices(std::initializer_list<int> indices);

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word multiply(std::span<const Word> factors);
Word invert(const Word& w);

// Number of letters that cancel when forming u*v.
std::size_t cancellation_depth(const Word& u, const Word& v);

// Prefix/suffix of length n. Sub-words of a reduced word are reduced.
Word prefix(const Word& w, std::size_t n);
Word suffix(const Word& w, std::size_t n);

// Exact energy: sum_j (4g+1)^(|w|-j) * index(letter_j).
BigInt energy_value(const Word& w, int genus);

// Same order as energy_value without big integers: length first, then the
// letter indices lexicographically.
std::strong_ordering energy_compare(const Word& u, const Word& v);

// Compares sum of energies of `a` against that of `b` exactly, in time linear
// in the total length (base-(4g+1) digit addition instead of big integers).
std::strong_ordering compare_energy_sums(std::span<const Word> a,
                                         std::span<const Word> b, int genus);

struct EnergyLess {
  bool operator()(const Word& u, const Word& v) const {
    return energy_compare(u, v) < 0;
  }
};

// Genus-dependent data: alphabet size, boundary word and token names.
class GenusContext {
 public:
  explicit GenusContext(int genus);

  int genus() const noexcept { return genus_; }
  int alphabet_size() const noexcept { return 4 * genus_; }
  bool valid(Letter l) const noexcept {
    return l.index >= 1 && l.index <= alphabet_size();
  }

  // boundary = prod_i [alpha_i, beta_i]; boundary_inverse = sigma_1 ... sigma_4g
  const Word& boundary() const noexcept { return boundary_; }
  const Word& boundary_inverse() const noexcept { return boundary_inverse_; }

  Letter alpha(int k) const;  // alpha_k, 1 <= k <= g
  Letter beta(int k) const;

  // Tokens "a1".."ag", "b1".."bg"; capitals are inverses.
  Letter parse_letter(std::string_view token) const;
  std::string letter_name(Letter l) const;

  // Whitespace-separated tokens; the empty string is the identity.
  Word parse(std::string_view text) const;
  Word reduce_tokens(std::span<const int> indices) const;
  std::string format(const Word& w) const;

  // Exponent sums, alpha_1..alpha_g followed by beta_1..beta_g.
  std::vector<int> abelianize(const Word& w) const;

  friend bool operator==(const GenusContext& a, const GenusContext& b) {
    return a.genus_ == b.genus_;
  }

 private:
  int genus_;
  Word boundary_;
  Word boundary_inverse_;
};

}  // namespace fatnielsen
