#ifndef QUADMONO_BRAID_HPP
#define QUADMONO_BRAID_HPP

#include <cstdlib>
#include <string>
#include <vector>

#include "quadmono/error.hpp"
#include "quadmono/word.hpp"

namespace quadmono {

struct BraidLetter {
  unsigned index = 0;  // Artin generator sigma_index, 1 <= index < strands
  int exp = 0;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
  friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the Artin generators of B_strands. No normal form is kept beyond
/// merging adjacent powers of the same generator.
class Braid {
 public:
  Braid() = default;
  explicit Braid(unsigned strands) : strands_(strands) {}
  Braid(unsigned strands, const std::vector<BraidLetter>& word) : strands_(strands) {
    for (const auto& l : word) append(l.index, l.exp);
  }

  static Braid sigma(unsigned strands, unsigned k, int exp = 1) {
    Braid b(strands);
    b.append(k, exp);
    return b;
  }

  unsigned strands() const { return strands_; }
  const std::vector<BraidLetter>& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }

  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& l : word_) n += static_cast<std::size_t>(std::abs(l.exp));
    return n;
  }

  Braid& append(unsigned k, int exp) {
    if (k == 0 || k >= strands_)
      throw IndexError("sigma_" + std::to_string(k) + " is not a generator of B_" + std::to_string(strands_));
    if (exp == 0) return *this;
    if (!word_.empty() && word_.back().index == k) {
      word_.back().exp += exp;
      if (word_.back().exp == 0) word_.pop_back();
    } else {
      word_.push_back({k, exp});
    }
    return *this;
  }

  Braid inverse() const {
    Braid b(strands_);
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) b.append(it->index, -it->exp);
    return b;
  }

  Braid pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Braid b(strands_);
    for (int i = 0; i < k; ++i) b *= *this;
    return b;
  }

  Braid& operator*=(const Braid& rhs) {
    if (rhs.strands_ != strands_) throw PreconditionError("braid strand counts differ");
    for (const auto& l : rhs.word_) append(l.index, l.exp);
    return *this;
  }
  friend Braid operator*(Braid lhs, const Braid& rhs) { return lhs *= rhs; }

  friend bool operator==(const Braid&, const Braid&) = default;

 private:
  unsigned strands_ = 1;
  std::vector<BraidLetter> word_;
};

/// Which way sigma_k moves the free generators.
///
/// upper_conjugates:  x_k -> x_{k+1},  x_{k+1} -> x_{k+1} x_k x_{k+1}^-1.
///   Preserves x_p ... x_2 x_1; reproduces the printed relation lists.
/// lower_conjugates:  x_k -> x_k x_{k+1} x_k^-1,  x_{k+1} -> x_k.
///   Preserves x_1 x_2 ... x_p.
enum class ArtinConvention { upper_conjugates, lower_conjugates };

/// The product of all generators fixed by every braid under `convention`.
inline FreeWord boundary_word(unsigned strands, ArtinConvention convention) {
  FreeWord w;
  for (unsigned i = 1; i <= strands; ++i) {
    const Gen g = convention == ArtinConvention::upper_conjugates ? strands + 1 - i : i;
    w *= FreeWord::generator(g);
  }
  return w;
}

namespace detail {

inline FreeWord sigma_image(unsigned k, int sign, Gen g, ArtinConvention conv) {
  const auto x = [](Gen i) { return FreeWord::generator(i); };
  const auto xi = [](Gen i) { return FreeWord::generator(i, -1); };
  const Gen a = k, b = k + 1;
  if (g != a && g != b) return x(g);
  if (conv == ArtinConvention::upper_conjugates) {
    if (sign > 0) return g == a ? x(b) : x(b) * x(a) * xi(b);
    return g == b ? x(a) : xi(a) * x(b) * x(a);
  }
  if (sign > 0) return g == a ? x(a) * x(b) * xi(a) : x(a);
  return g == a ? x(b) : xi(b) * x(a) * x(b);
}

inline FreeWord apply_sigma(unsigned k, int sign, const FreeWord& w, ArtinConvention conv) {
  FreeWord out;
  for (const auto& s : w.syllables()) {
    const FreeWord img = sigma_image(k, sign, s.gen, conv);
    const FreeWord piece = s.exp > 0 ? img : img.inverse();
    for (int i = 0; i < std::abs(s.exp); ++i) out *= piece;
  }
  return out;
}

}  // namespace detail

/// Left action of B_p on the free group F_p: the rightmost braid letter acts
/// first, so artin_apply(b1 * b2, w) == artin_apply(b1, artin_apply(b2, w)).
inline FreeWord artin_apply(const Braid& b, const FreeWord& w,
                            ArtinConvention conv = ArtinConvention::upper_conjugates) {
  if (w.max_generator() > b.strands())
    throw IndexError("word mentions generator " + std::to_string(w.max_generator()) + " but braid has " +
                     std::to_string(b.strands()) + " strands");
  FreeWord out = w;
  const auto& word = b.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int sign = it->exp > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(it->exp); ++i) out = detail::apply_sigma(it->index, sign, out, conv);
  }
  return out;
}

/// conjugator * sigma_index * conjugator^-1.
struct HalfTwist {
  unsigned strands = 2;
  unsigned index = 1;
  Braid conjugator{2};

  friend bool operator==(const HalfTwist&, const HalfTwist&) = default;
};

inline Braid halftwist_to_braid(const HalfTwist& h) {
  Braid c = h.conjugator.is_identity() ? Braid(h.strands) : h.conjugator;
  if (c.strands() != h.strands) throw PreconditionError("half-twist conjugator has the wrong strand count");
  return c * Braid::sigma(h.strands, h.index) * c.inverse();
}

/// (conjugator * sigma_index^exp * conjugator^-1): the half-twist raised to exp.
inline Braid halftwist_power(const HalfTwist& h, int exp) {
  Braid c = h.conjugator.is_identity() ? Braid(h.strands) : h.conjugator;
  return c * Braid::sigma(h.strands, h.index, exp) * c.inverse();
}

/// Which side of an intermediate real point a band passes.
enum class Side { below, above };

/// Half-twist exchanging points i < j along a path that passes each
/// intermediate point i+1..j-1 on the side given in `sides` (sides[0] is
/// point i+1). The conjugator is sigma_{j-1}^{+-1} ... sigma_{i+1}^{+-1},
/// with sigma^{+1} for below and sigma^{-1} for above.
inline HalfTwist band_generator(unsigned p, unsigned i, unsigned j, const std::vector<Side>& sides) {
  if (!(1 <= i && i < j && j <= p))
    throw PreconditionError("band generator needs 1 <= i < j <= p, got " + std::to_string(i) + ", " +
                            std::to_string(j));
  if (sides.size() != j - i - 1) throw PreconditionError("band path needs one side per intermediate point");
  Braid c(p);
  for (unsigned m = j - 1; m > i; --m) c.append(m, sides[m - i - 1] == Side::below ? 1 : -1);
  return HalfTwist{p, i, c};
}

inline HalfTwist band_generator(unsigned p, unsigned i, unsigned j, Side side) {
  if (i >= j) throw PreconditionError("band generator needs i < j");
  return band_generator(p, i, j, std::vector<Side>(j - i - 1, side));
}

struct FullTwistSpec {
  unsigned strands = 2;
  unsigned first = 1;  // range [first..last] of points
  unsigned last = 2;
  unsigned power = 1;  // number of full twists
};

/// (Delta^2 on points first..last)^power as a positive braid word.
inline Braid fulltwist(const FullTwistSpec& spec) {
  if (!(1 <= spec.first && spec.first < spec.last && spec.last <= spec.strands))
    throw PreconditionError("full twist needs 1 <= first < last <= strands");
  Braid cycle(spec.strands);
  for (unsigned k = spec.first; k < spec.last; ++k) cycle.append(k, 1);
  // (sigma_i ... sigma_{j-1})^{j-i+1} is the full twist on j-i+1 points.
  return cycle.pow(static_cast<int>((spec.last - spec.first + 1) * spec.power));
}

inline std::string to_string(const Braid& b) {
  if (b.is_identity()) return "1";
  std::string out;
  for (const auto& l : b.word()) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.index);
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

}  // namespace quadmono

#endif  // QUADMONO_BRAID_HPP
