#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spotted {

/// A letter is a signed generator index: +i is x_i, -i is x_i^-1.
using Letter = std::int32_t;

class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input exceeds a configured search or enumeration cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct Generator {
  int index = 1;
  int sign = 1;

  static Generator from_letter(Letter l) { return {l < 0 ? -l : l, l < 0 ? -1 : 1}; }
  Letter letter() const { return sign * index; }
  Generator inverse() const { return {index, -sign}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Freely reduced word in the free group of rank `rank` on x_1..x_rank.
///
/// The empty sequence is the identity. Every constructor reduces, so a
/// ReducedWord never holds an adjacent pair (x, x^-1).
class ReducedWord {
 public:
  explicit ReducedWord(int rank);

  /// Free reduction of an arbitrary letter sequence.
  static ReducedWord reduce(std::span<const Letter> letters, int rank);
  static ReducedWord reduce(std::initializer_list<Letter> letters, int rank) {
    return reduce(std::span<const Letter>(letters.begin(), letters.size()), rank);
  }

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// Contiguous letters [begin, end). Already reduced, no re-reduction needed.
  ReducedWord subword(std::size_t begin, std::size_t end) const;

  /// Same element viewed in a free group of larger rank.
  ReducedWord lifted(int new_rank) const;

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  ReducedWord(int rank, std::vector<Letter> reduced) : rank_(rank), letters_(std::move(reduced)) {}

  int rank_;
  std::vector<Letter> letters_;
};

ReducedWord concat(const ReducedWord& u, const ReducedWord& v);
ReducedWord inverse(const ReducedWord& w);
/// w^k for any integer k (negative powers use the inverse).
ReducedWord power(const ReducedWord& w, long k);
/// u^-1 v u, composition read left to right.
ReducedWord conjugate(const ReducedWord& v, const ReducedWord& u);

inline ReducedWord operator*(const ReducedWord& u, const ReducedWord& v) { return concat(u, v); }

struct SubwordRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const SubwordRange&, const SubwordRange&) = default;
};

/// All nonempty contiguous ranges, ordered by start then end.
std::vector<SubwordRange> subwords(const ReducedWord& w);

/// Accepts token form ("x1 X2 x3") or, for rank <= 26, compact form ("abA").
/// The empty string (or only whitespace) is the identity.
ReducedWord parse(std::string_view text, int rank);
/// Token form; the identity prints as the empty string.
std::string to_string(const ReducedWord& w);
/// Compact form (a = x1, A = X1); requires rank <= 26.
std::string to_compact(const ReducedWord& w);

/// Every reduced word of length exactly n over the given rank, in lexicographic
/// order of letter codes. Used by exhaustive tests and bounded searches.
std::vector<ReducedWord> all_reduced_words(int rank, std::size_t n);
/// Every reduced word of length at most n, shortest first.
std::vector<ReducedWord> all_reduced_words_upto(int rank, std::size_t n);

struct ReducedWordHash {
  std::size_t operator()(const ReducedWord& w) const noexcept;
};

}  // namespace spotted
