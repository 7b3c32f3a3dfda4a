#include "spotted/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace spotted {

namespace {

void check_rank(int rank) {
  if (rank < 2) {
    throw RankError("rank must be at least 2, got " + std::to_string(rank));
  }
}

void check_same_rank(const ReducedWord& u, const ReducedWord& v) {
  if (u.rank() != v.rank()) {
    throw RankError("rank mismatch: " + std::to_string(u.rank()) + " vs " + std::to_string(v.rank()));
  }
}

// Appends `l` to a reduced stack, cancelling against the top if possible.
inline void push_reduce(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

ReducedWord::ReducedWord(int rank) : rank_(rank) { check_rank(rank); }

ReducedWord ReducedWord::reduce(std::span<const Letter> letters, int rank) {
  check_rank(rank);
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0 || l > rank || l < -rank) {
      throw RankError("letter index " + std::to_string(l < 0 ? -l : l) + " outside 1.." + std::to_string(rank));
    }
    push_reduce(out, l);
  }
  return ReducedWord(rank, std::move(out));
}

ReducedWord ReducedWord::subword(std::size_t begin, std::size_t end) const {
  if (begin > end || end > letters_.size()) {
    throw std::out_of_range("subword range out of bounds");
  }
  return ReducedWord(rank_, std::vector<Letter>(letters_.begin() + begin, letters_.begin() + end));
}

ReducedWord ReducedWord::lifted(int new_rank) const {
  if (new_rank < rank_) {
    throw RankError("cannot lift to a smaller rank");
  }
  return ReducedWord(new_rank, letters_);
}

ReducedWord concat(const ReducedWord& u, const ReducedWord& v) {
  check_same_rank(u, v);
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.reserve(u.size() + v.size());
  for (Letter l : v.letters()) push_reduce(out, l);
  return ReducedWord::reduce(out, u.rank());
}

ReducedWord inverse(const ReducedWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
  return ReducedWord::reduce(out, w.rank());
}

ReducedWord power(const ReducedWord& w, long k) {
  const ReducedWord base = k < 0 ? inverse(w) : w;
  const long n = k < 0 ? -k : k;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    for (Letter l : base.letters()) push_reduce(out, l);
  }
  return ReducedWord::reduce(out, w.rank());
}

ReducedWord conjugate(const ReducedWord& v, const ReducedWord& u) {
  return concat(concat(inverse(u), v), u);
}

std::vector<SubwordRange> subwords(const ReducedWord& w) {
  std::vector<SubwordRange> out;
  out.reserve(w.size() * (w.size() + 1) / 2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) out.push_back({i, j});
  }
  return out;
}

ReducedWord parse(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<Letter> letters;
  const bool tokenized = std::any_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });

  if (!tokenized) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("unexpected character '") + c + "' in word");
      }
      if (rank > 26) {
        throw ParseError("compact word form requires rank <= 26");
      }
      const bool upper = std::isupper(static_cast<unsigned char>(c));
      const int index = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      if (index > rank) {
        throw RankError(std::string("letter '") + c + "' exceeds rank " + std::to_string(rank));
      }
      letters.push_back(upper ? -index : index);
    }
    return ReducedWord::reduce(letters, rank);
  }

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const char head = text[pos];
    if (head != 'x' && head != 'X') {
      throw ParseError(std::string("malformed token starting at '") + head + "'");
    }
    ++pos;
    const std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin || (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))) {
      throw ParseError("malformed token near position " + std::to_string(digits_begin - 1));
    }
    int index = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + digits_begin, text.data() + pos, index);
    if (ec != std::errc{} || ptr != text.data() + pos) {
      throw ParseError("generator index out of range");
    }
    if (index < 1 || index > rank) {
      throw RankError("generator index " + std::to_string(index) + " outside 1.." + std::to_string(rank));
    }
    letters.push_back(head == 'x' ? index : -index);
  }
  return ReducedWord::reduce(letters, rank);
}

std::string to_string(const ReducedWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i] > 0 ? 'x' : 'X';
    out += std::to_string(w[i] > 0 ? w[i] : -w[i]);
  }
  return out;
}

std::string to_compact(const ReducedWord& w) {
  if (w.rank() > 26) throw RankError("compact word form requires rank <= 26");
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    out += static_cast<char>(l > 0 ? 'a' + l - 1 : 'A' - l - 1);
  }
  return out;
}

std::vector<ReducedWord> all_reduced_words(int rank, std::size_t n) {
  check_rank(rank);
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<std::vector<Letter>> next;
    next.reserve(layer.size() * static_cast<std::size_t>(2 * rank - 1));
    for (const auto& prefix : layer) {
      for (int i = 1; i <= rank; ++i) {
        for (Letter l : {Letter(i), Letter(-i)}) {
          if (!prefix.empty() && prefix.back() == -l) continue;
          auto extended = prefix;
          extended.push_back(l);
          next.push_back(std::move(extended));
        }
      }
    }
    layer = std::move(next);
  }
  std::vector<ReducedWord> out;
  out.reserve(layer.size());
  for (auto& letters : layer) out.push_back(ReducedWord::reduce(letters, rank));
  return out;
}

std::vector<ReducedWord> all_reduced_words_upto(int rank, std::size_t n) {
  std::vector<ReducedWord> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto layer = all_reduced_words(rank, len);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

std::size_t ReducedWordHash::operator()(const ReducedWord& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(l + 0x40000000) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace spotted
