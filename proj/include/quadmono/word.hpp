#ifndef QUADMONO_WORD_HPP
#define QUADMONO_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quadmono/error.hpp"

namespace quadmono {

/// Free-group generator id, 1-based.
using Gen = std::uint32_t;

/// A signed letter: +g is the generator, -g its inverse.
using Letter = int;

struct Syllable {
  Gen gen = 0;
  int exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Element of a free group, stored as a freely reduced run-length word.
///
/// Adjacent syllables never share a generator and no exponent is zero, so
/// two words are equal as group elements iff they are equal as values.
class FreeWord {
 public:
  FreeWord() = default;

  explicit FreeWord(std::vector<Syllable> syllables) {
    for (const auto& s : syllables) push(s.gen, s.exp);
  }

  static FreeWord generator(Gen g, int exp = 1) {
    FreeWord w;
    w.push(g, exp);
    return w;
  }

  /// Builds a word from signed letters, e.g. {1, 2, -1} = x1 x2 x1^-1.
  static FreeWord from_letters(std::span<const Letter> letters) {
    FreeWord w;
    for (Letter l : letters) {
      if (l == 0) throw Error("letter 0 is not a generator");
      w.push(static_cast<Gen>(std::abs(l)), l > 0 ? 1 : -1);
    }
    return w;
  }
  static FreeWord from_letters(std::initializer_list<Letter> letters) {
    return from_letters(std::span<const Letter>(letters.begin(), letters.size()));
  }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }

  /// Number of letters, i.e. the sum of |exponent|.
  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& s : syl_) n += static_cast<std::size_t>(std::abs(s.exp));
    return n;
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(length());
    for (const auto& s : syl_) {
      const Letter l = s.exp > 0 ? static_cast<Letter>(s.gen) : -static_cast<Letter>(s.gen);
      for (int i = 0; i < std::abs(s.exp); ++i) out.push_back(l);
    }
    return out;
  }

  /// Total number of occurrences of g^{+-1}.
  std::size_t occurrences(Gen g) const {
    std::size_t n = 0;
    for (const auto& s : syl_)
      if (s.gen == g) n += static_cast<std::size_t>(std::abs(s.exp));
    return n;
  }

  int exponent_sum(Gen g) const {
    int n = 0;
    for (const auto& s : syl_)
      if (s.gen == g) n += s.exp;
    return n;
  }

  Gen max_generator() const {
    Gen m = 0;
    for (const auto& s : syl_) m = std::max(m, s.gen);
    return m;
  }

  FreeWord inverse() const {
    FreeWord w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
    return w;
  }

  FreeWord pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    FreeWord w;
    for (int i = 0; i < k; ++i) w *= *this;
    return w;
  }

  FreeWord& operator*=(const FreeWord& rhs) {
    for (const auto& s : rhs.syl_) push(s.gen, s.exp);
    return *this;
  }
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  void push(Gen g, int exp) {
    if (exp == 0) return;
    if (!syl_.empty() && syl_.back().gen == g) {
      syl_.back().exp += exp;
      if (syl_.back().exp == 0) syl_.pop_back();
      return;
    }
    syl_.push_back({g, exp});
  }

  std::vector<Syllable> syl_;
};

inline FreeWord multiply(const FreeWord& u, const FreeWord& v) { return u * v; }

/// by * u * by^-1
inline FreeWord conjugate(const FreeWord& u, const FreeWord& by) { return by * u * by.inverse(); }

/// [a, b] = a b a^-1 b^-1
inline FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return a * b * a.inverse() * b.inverse();
}

/// Product of single generators in the given order.
inline FreeWord product_of(std::span<const Gen> gens) {
  FreeWord w;
  for (Gen g : gens) w *= FreeWord::generator(g);
  return w;
}

/// Strips conjugating shells: returns a cyclically reduced conjugate of u.
inline FreeWord cyclic_reduce(const FreeWord& u) {
  std::vector<Syllable> s = u.syllables();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
    const int merged = s[lo].exp + s[hi - 1].exp;
    if (merged == 0) {
      ++lo;
      --hi;
      continue;
    }
    // x^a ... x^b with a+b != 0: rotate x^b to the front and merge.
    s[lo].exp = merged;
    --hi;
    break;
  }
  return FreeWord(std::vector<Syllable>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                        s.begin() + static_cast<std::ptrdiff_t>(hi)));
}

/// The word w with every occurrence of g replaced by image (g^-1 by image^-1).
inline FreeWord substitute(const FreeWord& w, Gen g, const FreeWord& image) {
  FreeWord out;
  const FreeWord inv = image.inverse();
  for (const auto& s : w.syllables()) {
    if (s.gen != g) {
      out *= FreeWord::generator(s.gen, s.exp);
      continue;
    }
    const FreeWord& piece = s.exp > 0 ? image : inv;
    for (int i = 0; i < std::abs(s.exp); ++i) out *= piece;
  }
  return out;
}

/// Maps generator ids to display names ("a1", "4", "mu2") and back.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::vector<std::string> names) : names_(std::move(names)) { reindex(); }

  /// Names "<prefix>1" .. "<prefix>n".
  static SymbolTable numbered(std::size_t n, std::string_view prefix = "") {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return SymbolTable(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  const std::string& name(Gen g) const {
    if (g == 0 || g > names_.size()) throw IndexError("generator " + std::to_string(g) + " has no name");
    return names_[g - 1];
  }

  Gen lookup(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw Error("unknown generator '" + std::string(name) + "'");
    return it->second;
  }

  bool contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

  Gen add(std::string name) {
    if (contains(name)) throw Error("duplicate generator '" + name + "'");
    names_.push_back(std::move(name));
    index_[names_.back()] = static_cast<Gen>(names_.size());
    return static_cast<Gen>(names_.size());
  }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.names_ == b.names_; }

 private:
  void reindex() {
    index_.clear();
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<Gen>(i + 1)).second)
        throw Error("duplicate generator '" + names_[i] + "'");
    }
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Gen> index_;
};

/// Space-separated syllables in the paper-like style: "a1 a2^-1 a3^2".
inline std::string to_string(const FreeWord& w, const SymbolTable& names) {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << names.name(s.gen);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

}  // namespace quadmono

#endif  // QUADMONO_WORD_HPP
