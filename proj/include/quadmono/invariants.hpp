#ifndef QUADMONO_INVARIANTS_HPP
#define QUADMONO_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quadmono/error.hpp"
#include "quadmono/presentation.hpp"
#include "quadmono/word.hpp"

namespace quadmono {

using BigInt = boost::multiprecision::cpp_int;

template <class Int>
using Matrix = std::vector<std::vector<Int>>;

template <class Int>
struct SmithResult {
  std::vector<Int> diagonal;  // nonzero diagonal entries d1 | d2 | ..., all positive
  std::size_t rank = 0;

  /// Diagonal entries with the units dropped.
  std::vector<Int> invariant_factors() const {
    std::vector<Int> out;
    for (const auto& d : diagonal)
      if (d != 1) out.push_back(d);
    return out;
  }
};

namespace detail {

template <class Int>
Int abs_value(const Int& x) {
  return x < 0 ? Int(-x) : x;
}

}  // namespace detail

/// Exact Smith normal form by unimodular row and column operations.
template <class Int>
SmithResult<Int> smith_normal_form(Matrix<Int> a) {
  using detail::abs_value;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != cols) throw PreconditionError("matrix rows differ in length");

  SmithResult<Int> res;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Pivot: the smallest nonzero entry of the remaining block.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!piv || abs_value(a[i][j]) < abs_value(a[piv->first][piv->second]))) piv = {i, j};
    if (!piv) break;
    std::swap(a[t], a[piv->first]);
    for (auto& r : a) std::swap(r[t], r[piv->second]);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& r : a) std::swap(r[t], r[j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Row and column are clear; enforce divisibility of the rest.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < rows && !bad; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[*bad][j];
    }
    res.diagonal.push_back(abs_value(a[t][t]));
  }
  res.rank = res.diagonal.size();
  return res;
}

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // d1 | d2 | ..., each >= 2

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

inline std::string to_string(const AbelianInvariants& a) {
  std::ostringstream os;
  bool first = true;
  if (a.free_rank > 0) {
    os << "Z";
    if (a.free_rank > 1) os << "^" << a.free_rank;
    first = false;
  }
  for (const auto& d : a.torsion) {
    os << (first ? "" : " + ") << "Z" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

/// Exponent-sum matrix over the active generators.
inline Matrix<BigInt> exponent_matrix(const Presentation& p) {
  std::map<Gen, std::size_t> col;
  for (std::size_t i = 0; i < p.generators.size(); ++i) col[p.generators[i]] = i;
  Matrix<BigInt> m;
  for (const auto& r : p.relators) {
    std::vector<BigInt> row(p.generators.size(), 0);
    for (const auto& s : r.syllables()) {
      auto it = col.find(s.gen);
      if (it == col.end()) throw IndexError("relator uses a generator that is not in the presentation");
      row[it->second] += s.exp;
    }
    m.push_back(std::move(row));
  }
  return m;
}

inline AbelianInvariants abelianization(const Presentation& p) {
  const auto snf = smith_normal_form(exponent_matrix(p));
  AbelianInvariants a;
  a.free_rank = p.generators.size() - snf.rank;
  a.torsion = snf.invariant_factors();
  return a;
}

/// A finite group given by its multiplication table.
class FiniteGroup {
 public:
  using Element = std::uint16_t;

  FiniteGroup() = default;

  /// Validates identity, inverses and (exhaustively for order <= 64, else on
  /// a deterministic sample) associativity.
  FiniteGroup(std::string name, std::vector<std::vector<Element>> table) : name_(std::move(name)) {
    const std::size_t n = table.size();
    if (n == 0) throw PreconditionError("group table is empty");
    if (n > 4096) throw PreconditionError("group order above 4096 is not supported");
    for (const auto& row : table) {
      if (row.size() != n) throw PreconditionError("group table is not square");
      for (Element x : row)
        if (x >= n) throw PreconditionError("group table entry out of range");
    }
    mul_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mul_[i * n + j] = table[i][j];
    order_ = n;

    std::optional<Element> e;
    for (std::size_t i = 0; i < n && !e; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = mul(static_cast<Element>(i), static_cast<Element>(j)) == j &&
                                                     mul(static_cast<Element>(j), static_cast<Element>(i)) == j;
      if (ok) e = static_cast<Element>(i);
    }
    if (!e) throw PreconditionError("group table has no identity");
    identity_ = *e;

    inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < n && !found; ++j)
        if (mul(static_cast<Element>(i), static_cast<Element>(j)) == identity_ &&
            mul(static_cast<Element>(j), static_cast<Element>(i)) == identity_) {
          inv_[i] = static_cast<Element>(j);
          found = true;
        }
      if (!found) throw PreconditionError("group table element " + std::to_string(i) + " has no inverse");
    }

    const auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      const auto x = static_cast<Element>(a), y = static_cast<Element>(b), z = static_cast<Element>(c);
      return mul(mul(x, y), z) == mul(x, mul(y, z));
    };
    if (n <= 64) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (!assoc(a, b, c)) throw PreconditionError("group table is not associative");
    } else {
      std::uint64_t s = 0x9E3779B97F4A7C15ull;
      for (int k = 0; k < 200000; ++k) {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        if (!assoc(s % n, (s >> 16) % n, (s >> 32) % n)) throw PreconditionError("group table is not associative");
      }
    }

    orders_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Element x = static_cast<Element>(i);
      std::size_t k = 1;
      while (x != identity_) {
        x = mul(x, static_cast<Element>(i));
        ++k;
      }
      orders_[i] = k;
    }
  }

  /// The group generated by permutations of {0..degree-1}; products compose
  /// right to left, (a*b)(i) = a(b(i)).
  static FiniteGroup from_permutations(std::string name, const std::vector<std::vector<int>>& gens) {
    if (gens.empty()) throw PreconditionError("need at least one permutation");
    const std::size_t deg = gens[0].size();
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems{id};
    std::set<std::vector<int>> seen{id};
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (const auto& g : gens) {
        std::vector<int> x(deg);
        for (std::size_t i = 0; i < deg; ++i) x[i] = g[static_cast<std::size_t>(elems[k][i])];
        if (seen.insert(x).second) elems.push_back(x);
      }
    }
    std::sort(elems.begin(), elems.end());
    std::map<std::vector<int>, Element> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
    std::vector<std::vector<Element>> table(elems.size(), std::vector<Element>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) {
        std::vector<int> x(deg);
        for (std::size_t i = 0; i < deg; ++i) x[i] = elems[a][static_cast<std::size_t>(elems[b][i])];
        table[a][b] = index.at(x);
      }
    return FiniteGroup(std::move(name), std::move(table));
  }

  static FiniteGroup cyclic(std::size_t n, std::string name = "") {
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
    return FiniteGroup(name.empty() ? "z" + std::to_string(n) : std::move(name), std::move(t));
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inverse(Element a) const { return inv_[a]; }
  std::size_t element_order(Element a) const { return orders_[a]; }

  std::vector<std::vector<Element>> table() const {
    std::vector<std::vector<Element>> t(order_, std::vector<Element>(order_));
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) t[i][j] = mul(static_cast<Element>(i), static_cast<Element>(j));
    return t;
  }

 private:
  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::size_t> orders_;
  Element identity_ = 0;
};

inline const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names{"s3", "s4", "a4", "d4", "z6"};
  return names;
}

/// s3, s4, a4, d4, z6, and also zN for any N >= 1 and "trivial".
inline FiniteGroup builtin_group(std::string_view name) {
  if (name == "s3") return FiniteGroup::from_permutations("s3", {{1, 0, 2}, {1, 2, 0}});
  if (name == "s4") return FiniteGroup::from_permutations("s4", {{1, 0, 2, 3}, {1, 2, 3, 0}});
  if (name == "a4") return FiniteGroup::from_permutations("a4", {{1, 2, 0, 3}, {0, 2, 3, 1}});
  if (name == "d4") return FiniteGroup::from_permutations("d4", {{1, 2, 3, 0}, {3, 2, 1, 0}});
  if (name == "trivial") return FiniteGroup::cyclic(1, "trivial");
  if (name.size() >= 2 && name[0] == 'z') {
    const std::string digits(name.substr(1));
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() <= 4) {
      const auto n = static_cast<std::size_t>(std::stoul(digits));
      if (n >= 1) return FiniteGroup::cyclic(n);
    }
  }
  throw PreconditionError("unknown group '" + std::string(name) + "'");
}

inline std::vector<FiniteGroup> default_battery() {
  std::vector<FiniteGroup> b;
  for (const auto& n : builtin_group_names()) b.push_back(builtin_group(n));
  return b;
}

/// Comma-separated group names, e.g. "s3,a4".
inline std::vector<FiniteGroup> parse_battery(std::string_view spec) {
  std::vector<FiniteGroup> out;
  std::string cur;
  const auto flush = [&] {
    if (!cur.empty()) out.push_back(builtin_group(cur));
    cur.clear();
  };
  for (char c : spec) {
    if (c == ',' || c == ' ')
      flush();
    else
      cur += c;
  }
  flush();
  if (out.empty()) throw PreconditionError("battery is empty");
  return out;
}

inline constexpr std::uint64_t default_hom_cap = 100000000ull;

/// |G|^k, saturating at UINT64_MAX.
inline std::uint64_t search_space(std::size_t order, std::size_t k) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (order != 0 && s > UINT64_MAX / order) return UINT64_MAX;
    s *= order;
  }
  return s;
}

/// Number of homomorphisms from <p> to G, by backtracking over the generators
/// in order; each relator is checked as soon as its last generator is set.
inline std::uint64_t count_homs(const Presentation& p, const FiniteGroup& g, std::uint64_t cap = default_hom_cap) {
  using Element = FiniteGroup::Element;
  const std::size_t k = p.generators.size();
  const std::uint64_t space = search_space(g.order(), k);
  if (space > cap)
    throw CapExceeded("enumeration of " + std::to_string(g.order()) + "^" + std::to_string(k) +
                      " assignments into " + g.name() + " exceeds the cap of " + std::to_string(cap));
  std::map<Gen, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[p.generators[i]] = i;

  // A relator is checked once its last generator x is assigned. Its maximal
  // x-free segments are evaluated once per branch, so each candidate for x
  // costs one product per segment and per occurrence of x.
  struct Rel {
    std::vector<std::pair<std::size_t, bool>> letters;  // (generator position, inverted)
    std::vector<std::pair<std::size_t, std::size_t>> segments;  // x-free [begin, end)
    std::vector<int> x_after;  // x exponent (+1/-1) after segment i, 0 for none
  };
  std::vector<std::vector<Rel>> due(k + 1);
  for (const auto& r : p.relators) {
    Rel rel;
    std::size_t last = 0;
    for (Letter l : r.letters()) {
      auto it = pos.find(static_cast<Gen>(std::abs(l)));
      if (it == pos.end()) throw IndexError("relator uses a generator that is not in the presentation");
      rel.letters.emplace_back(it->second, l < 0);
      last = std::max(last, it->second + 1);
    }
    if (last == 0) continue;  // the empty relator always holds
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= rel.letters.size(); ++i) {
      const bool end = i == rel.letters.size();
      if (end || rel.letters[i].first + 1 == last) {
        rel.segments.emplace_back(begin, i);
        rel.x_after.push_back(end ? 0 : (rel.letters[i].second ? -1 : 1));
        begin = i + 1;
      }
    }
    due[last].push_back(std::move(rel));
  }

  std::vector<Element> val(k), inv(k);
  std::uint64_t count = 0;
  std::vector<std::vector<std::vector<Element>>> seg_values(k + 1);
  const auto rec = [&](auto&& self, std::size_t depth) -> void {
    const auto& rels = due[depth + 1];
    auto& segs = seg_values[depth + 1];
    segs.resize(rels.size());
    for (std::size_t i = 0; i < rels.size(); ++i) {
      segs[i].clear();
      for (const auto& [b, e] : rels[i].segments) {
        Element x = g.identity();
        for (std::size_t j = b; j < e; ++j) {
          const auto& [at, neg] = rels[i].letters[j];
          x = g.mul(x, neg ? inv[at] : val[at]);
        }
        segs[i].push_back(x);
      }
    }
    for (std::size_t e = 0; e < g.order(); ++e) {
      const auto v = static_cast<Element>(e);
      const Element vi = g.inverse(v);
      val[depth] = v;
      inv[depth] = vi;
      bool ok = true;
      for (std::size_t i = 0; i < rels.size() && ok; ++i) {
        Element x = g.identity();
        const auto& xs = rels[i].x_after;
        for (std::size_t j = 0; j < xs.size(); ++j) {
          x = g.mul(x, segs[i][j]);
          if (xs[j] != 0) x = g.mul(x, xs[j] > 0 ? v : vi);
        }
        ok = x == g.identity();
      }
      if (!ok) continue;
      if (depth + 1 == k)
        ++count;
      else
        self(self, depth + 1);
    }
  };
  if (k == 0) return 1;
  rec(rec, 0);
  return count;
}

struct Fingerprint {
  AbelianInvariants abelian;
  std::vector<std::pair<std::string, std::uint64_t>> homs;  // in battery order

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const Presentation& p, const std::vector<FiniteGroup>& battery,
                               std::uint64_t cap = default_hom_cap) {
  Fingerprint f;
  f.abelian = abelianization(p);
  for (const auto& g : battery) f.homs.emplace_back(g.name(), count_homs(p, g, cap));
  return f;
}

inline Fingerprint fingerprint(const Presentation& p) { return fingerprint(p, default_battery()); }

inline std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  os << "abelianization " << to_string(f.abelian) << "; homs";
  for (const auto& [name, c] : f.homs) os << ' ' << name << '=' << c;
  return os.str();
}

/// <a, b | (a b)^2>, isomorphic to Z * Z2.
inline Presentation z_free_z2() {
  Presentation p = Presentation::numbered(2, "a");
  p.add_relator((FreeWord::generator(1) * FreeWord::generator(2)).pow(2));
  return normalize(p);
}

struct BignessCertificate {
  bool ok = false;
  std::vector<std::string> pair;    // generators kept
  std::vector<std::string> killed;  // generators sent to the identity
  Presentation quotient;            // simplified quotient
  Fingerprint quotient_fingerprint;
  Fingerprint reference_fingerprint;  // of <a,b | (ab)^2>
};

/// Kills every generator outside `pair`, simplifies, and compares the
/// fingerprint with that of Z * Z2. Success means the group surjects onto a
/// group consistent with Z * Z2 (by fingerprint); failure is not a disproof.
inline BignessCertificate bigness_certificate(const Presentation& p, const std::pair<Gen, Gen>& pair,
                                              const std::vector<FiniteGroup>& battery,
                                              const SimplifyOptions& opts = {},
                                              std::uint64_t cap = default_hom_cap) {
  if (p.generators.size() < 2) throw PreconditionError("bigness certificate needs at least two generators");
  if (pair.first == pair.second || !p.has_generator(pair.first) || !p.has_generator(pair.second))
    throw PreconditionError("meridian pair must be two distinct generators of the presentation");
  BignessCertificate c;
  c.pair = {p.symbols.name(pair.first), p.symbols.name(pair.second)};
  std::vector<Gen> kill;
  for (Gen g : p.generators)
    if (g != pair.first && g != pair.second) {
      kill.push_back(g);
      c.killed.push_back(p.symbols.name(g));
    }
  c.quotient = quotient_kill(p, kill, opts);
  c.quotient_fingerprint = fingerprint(c.quotient, battery, cap);
  c.reference_fingerprint = fingerprint(z_free_z2(), battery, cap);
  c.ok = c.quotient_fingerprint == c.reference_fingerprint;
  return c;
}

}  // namespace quadmono

#endif  // QUADMONO_INVARIANTS_HPP
