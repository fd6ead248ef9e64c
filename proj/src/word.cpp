#include "fatnielsen/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "fatnielsen/errors.hpp"

namespace fatnielsen {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::BoundaryNotPreserved: return "BoundaryNotPreserved";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::InvalidSpan: return "InvalidSpan";
    case ErrorKind::InvalidSlide: return "InvalidSlide";
    case ErrorKind::InapplicableMove: return "InapplicableMove";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::StuckDomain: return "StuckDomain";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::MalformedTriangulation: return "MalformedTriangulation";
    case ErrorKind::NotFlippable: return "NotFlippable";
    case ErrorKind::NotPentagonConfiguration: return "NotPentagonConfiguration";
    case ErrorKind::MultiArcDiscrepancy: return "MultiArcDiscrepancy";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
  }
  return "Unknown";
}

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::from_indices(std::initializer_list<int> indices) {
  std::vector<Letter> letters;
  for (int i : indices) letters.push_back(Letter{i});
  return Word(std::move(letters));
}

std::size_t cancellation_depth(const Word& u, const Word& v) {
  std::size_t k = 0;
  const std::size_t n = std::min(u.length(), v.length());
  while (k < n && u[u.length() - 1 - k] == v[k].inverse()) ++k;
  return k;
}

Word multiply(const Word& u, const Word& v) {
  std::size_t k = cancellation_depth(u, v);
  std::vector<Letter> out(u.letters().begin(), u.letters().end() - k);
  out.insert(out.end(), v.letters().begin() + k, v.letters().end());
  return Word(std::move(out));
}

Word multiply(std::span<const Word> factors) {
  Word acc;
  for (const Word& w : factors) acc = multiply(acc, w);
  return acc;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word prefix(const Word& w, std::size_t n) {
  return Word(std::vector<Letter>(w.letters().begin(), w.letters().begin() + n));
}

Word suffix(const Word& w, std::size_t n) {
  return Word(std::vector<Letter>(w.letters().end() - n, w.letters().end()));
}

BigInt energy_value(const Word& w, int genus) {
  const BigInt base = 4 * genus + 1;
  BigInt e = 0;
  for (Letter l : w.letters()) e = e * base + l.index;
  return e;
}

std::strong_ordering energy_compare(const Word& u, const Word& v) {
  if (auto c = u.length() <=> v.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      u.letters().begin(), u.letters().end(), v.letters().begin(),
      v.letters().end());
}

namespace {

// Little-endian digits in base 4g+1.
std::vector<std::uint32_t> digit_sum(std::span<const Word> words, std::uint32_t base) {
  std::size_t longest = 0;
  for (const Word& w : words) longest = std::max(longest, w.length());
  std::vector<std::uint64_t> acc(longest + 2, 0);
  for (const Word& w : words) {
    const std::size_t n = w.length();
    for (std::size_t j = 0; j < n; ++j) acc[j] += static_cast<std::uint64_t>(w[n - 1 - j].index);
  }
  std::vector<std::uint32_t> out;
  std::uint64_t carry = 0;
  for (std::size_t j = 0; j < acc.size() || carry; ++j) {
    std::uint64_t v = carry + (j < acc.size() ? acc[j] : 0);
    out.push_back(static_cast<std::uint32_t>(v % base));
    carry = v / base;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

std::strong_ordering compare_energy_sums(std::span<const Word> a,
                                         std::span<const Word> b, int genus) {
  const auto base = static_cast<std::uint32_t>(4 * genus + 1);
  auto da = digit_sum(a, base);
  auto db = digit_sum(b, base);
  if (auto c = da.size() <=> db.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(da.rbegin(), da.rend(), db.rbegin(),
                                                db.rend());
}

GenusContext::GenusContext(int genus) : genus_(genus) {
  if (genus < 1)
    throw Error(ErrorKind::PreconditionViolation, "genus must be positive");
  std::vector<Letter> inv;
  for (int i = 1; i <= 4 * genus; ++i) inv.push_back(Letter{i});
  boundary_inverse_ = Word(inv);
  boundary_ = invert(boundary_inverse_);
}

Letter GenusContext::alpha(int k) const {
  if (k < 1 || k > genus_)
    throw Error(ErrorKind::UnknownLetter, "alpha index out of range");
  return Letter{4 * (genus_ - k) + 2};
}

Letter GenusContext::beta(int k) const {
  if (k < 1 || k > genus_)
    throw Error(ErrorKind::UnknownLetter, "beta index out of range");
  return Letter{4 * (genus_ - k) + 1};
}

Letter GenusContext::parse_letter(std::string_view token) const {
  auto fail = [&] {
    return Error(ErrorKind::UnknownLetter,
                 "unknown letter '" + std::string(token) + "' for genus " +
                     std::to_string(genus_));
  };
  if (token.size() < 2) throw fail();
  char c = token[0];
  int k = 0;
  for (char d : token.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(d))) throw fail();
    k = k * 10 + (d - '0');
    if (k > genus_) throw fail();
  }
  if (token[1] == '0' || k < 1) throw fail();
  switch (c) {
    case 'a': return alpha(k);
    case 'b': return beta(k);
    case 'A': return alpha(k).inverse();
    case 'B': return beta(k).inverse();
    default: throw fail();
  }
}

std::string GenusContext::letter_name(Letter l) const {
  if (!valid(l))
    throw Error(ErrorKind::UnknownLetter,
                "letter index " + std::to_string(l.index) + " out of range");
  int k = genus_ - (l.index - 1) / 4;
  char c = l.is_alpha() ? 'a' : 'b';
  if (!l.is_positive()) c = static_cast<char>(std::toupper(c));
  return c + std::to_string(k);
}

Word GenusContext::parse(std::string_view text) const {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) letters.push_back(parse_letter(token));
  return Word(std::move(letters));
}

Word GenusContext::reduce_tokens(std::span<const int> indices) const {
  std::vector<Letter> letters;
  for (int i : indices) {
    Letter l{i};
    if (!valid(l))
      throw Error(ErrorKind::UnknownLetter,
                  "letter index " + std::to_string(i) + " out of range");
    letters.push_back(l);
  }
  return Word(std::move(letters));
}

std::string GenusContext::format(const Word& w) const {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += letter_name(l);
  }
  return out;
}

std::vector<int> GenusContext::abelianize(const Word& w) const {
  std::vector<int> v(2 * genus_, 0);
  for (Letter l : w.letters()) {
    int k = genus_ - (l.index - 1) / 4;
    int slot = l.is_alpha() ? k - 1 : genus_ + k - 1;
    v[slot] += l.is_positive() ? 1 : -1;
  }
  return v;
}

}  // namespace fatnielsen
