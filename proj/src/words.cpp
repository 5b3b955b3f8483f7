#include "pingpong/words.hpp"

#include <cctype>
#include <limits>

namespace pingpong::schottky {

char Letter::symbol() const {
  const char c = static_cast<char>('a' + gen);
  return sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

ReducedWord::ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].sign != 1 && letters_[i].sign != -1)
      throw Error(ErrorCode::InputError, "letter sign must be +1 or -1");
    if (i > 0 && letters_[i] == letters_[i - 1].inverse())
      throw Error(ErrorCode::NonReducedWord, "letter " + std::to_string(i) + " cancels its predecessor");
  }
}

ReducedWord ReducedWord::parse(const std::string& text, int g) {
  if (g < 1 || g > 26) throw Error(ErrorCode::InputError, "word parsing supports 1 <= g <= 26");
  if (text == "1" || text.empty()) return {};
  std::vector<Letter> out;
  for (char c : text) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (!std::isalpha(u)) throw Error(ErrorCode::ParseError, std::string("bad letter '") + c + "'");
    const int gen = std::tolower(u) - 'a';
    if (gen >= g) throw Error(ErrorCode::ParseError, std::string("letter '") + c + "' exceeds the generator count");
    out.push_back({gen, std::islower(u) ? 1 : -1});
  }
  return ReducedWord(std::move(out));
}

ReducedWord ReducedWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& x : out) x = x.inverse();
  ReducedWord w;
  w.letters_ = std::move(out);
  return w;
}

ReducedWord ReducedWord::prefix(std::size_t k) const {
  ReducedWord w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(k, letters_.size())));
  return w;
}

ReducedWord ReducedWord::extended(Letter x) const {
  if (!letters_.empty() && letters_.back() == x.inverse())
    throw Error(ErrorCode::NonReducedWord, "appended letter cancels");
  ReducedWord w = *this;
  w.letters_.push_back(x);
  return w;
}

ReducedWord operator*(const ReducedWord& a, const ReducedWord& b) {
  std::vector<Letter> out = a.letters_;
  for (const auto& x : b.letters_) {
    if (!out.empty() && out.back() == x.inverse()) out.pop_back();
    else out.push_back(x);
  }
  ReducedWord w;
  w.letters_ = std::move(out);
  return w;
}

std::string ReducedWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& x : letters_) s.push_back(x.symbol());
  return s;
}

std::size_t word_count(int g, std::size_t k) {
  if (k == 0) return 1;
  const std::size_t base = static_cast<std::size_t>(2 * g - 1);
  std::size_t count = static_cast<std::size_t>(2 * g);
  for (std::size_t i = 1; i < k; ++i) {
    if (count > std::numeric_limits<std::size_t>::max() / std::max<std::size_t>(base, 1))
      return std::numeric_limits<std::size_t>::max();
    count *= base;
  }
  return count;
}

}  // namespace pingpong::schottky
