#pragma once

// Reduced words in the free group F_g. Text form: generator i is the letter
// 'a' + i, lowercase for h_i and uppercase for h_i^{-1}; "1" is the identity.

#include <cstddef>
#include <string>
#include <vector>

#include "pingpong/error.hpp"

namespace pingpong::schottky {

struct Letter {
  int gen = 0;   // 0-based generator index
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  /// Position in the list (1,+), (1,-), (2,+), ...
  std::size_t index() const { return static_cast<std::size_t>(2 * gen + (sign > 0 ? 0 : 1)); }
  static Letter from_index(std::size_t i) { return {static_cast<int>(i / 2), (i % 2 == 0) ? 1 : -1}; }
  char symbol() const;

  friend bool operator==(const Letter&, const Letter&) = default;
};

class ReducedWord {
 public:
  ReducedWord() = default;
  /// Throws NonReducedWord if some letter is followed by its inverse.
  explicit ReducedWord(std::vector<Letter> letters);
  static ReducedWord parse(const std::string& text, int g);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  ReducedWord inverse() const;
  ReducedWord prefix(std::size_t k) const;
  /// Appends a letter; throws NonReducedWord if it cancels.
  ReducedWord extended(Letter x) const;
  /// Freely reduced product.
  friend ReducedWord operator*(const ReducedWord& a, const ReducedWord& b);

  std::string str() const;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// (2g)(2g-1)^{k-1}, saturating at SIZE_MAX.
std::size_t word_count(int g, std::size_t k);

}  // namespace pingpong::schottky
