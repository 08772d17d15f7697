#ifndef QUADMONO_PRESENTATION_HPP
#define QUADMONO_PRESENTATION_HPP

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quadmono/error.hpp"
#include "quadmono/word.hpp"

namespace quadmono {

/// A finitely presented group <generators | relators>.
///
/// Generator ids index into `symbols`; `generators` lists the ids still in
/// play (Tietze elimination removes ids but never renumbers). After
/// normalize() every relator is nonempty, freely and cyclically reduced, in
/// canonical rotation, and unique up to rotation and inversion.
struct Presentation {
  SymbolTable symbols;
  std::vector<Gen> generators;
  std::vector<FreeWord> relators;
  /// The relator recorded as the projective relation, if any.
  std::optional<FreeWord> projective;
  std::map<std::string, std::string> meta;

  static Presentation on(const SymbolTable& symbols) {
    Presentation p;
    p.symbols = symbols;
    p.generators.resize(symbols.size());
    std::iota(p.generators.begin(), p.generators.end(), Gen{1});
    return p;
  }

  /// Generators "<prefix>1" .. "<prefix>n".
  static Presentation numbered(std::size_t n, std::string_view prefix = "a") {
    return on(SymbolTable::numbered(n, prefix));
  }

  Gen gen(std::string_view name) const { return symbols.lookup(name); }
  FreeWord x(std::string_view name, int exp = 1) const { return FreeWord::generator(gen(name), exp); }

  void add_relator(const FreeWord& w) { relators.push_back(w); }
  /// Adds the relation lhs = rhs as the relator lhs rhs^-1.
  void add_relation(const FreeWord& lhs, const FreeWord& rhs) { relators.push_back(lhs * rhs.inverse()); }

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.length();
    return n;
  }

  bool has_generator(Gen g) const { return std::find(generators.begin(), generators.end(), g) != generators.end(); }
};

namespace detail {

using Letters = std::vector<Letter>;

inline Letters invert(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

inline void free_reduce(Letters& w) {
  Letters out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

inline void cyclic_reduce(Letters& w) {
  free_reduce(w);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  w = Letters(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

/// Letter order: by generator id, positive before inverse.
inline bool letter_less(Letter a, Letter b) {
  const int ga = std::abs(a), gb = std::abs(b);
  if (ga != gb) return ga < gb;
  return a > b;
}

/// Shortlex on letters.
inline bool word_less(const Letters& a, const Letters& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

/// Pairs of generators known to commute, from relators [x, y].
class CommutingPairs {
 public:
  void add(Gen a, Gen b) {
    if (a == b) return;
    pairs_.insert(key(a, b));
  }
  bool commute(Letter a, Letter b) const {
    const Gen ga = static_cast<Gen>(std::abs(a)), gb = static_cast<Gen>(std::abs(b));
    return ga == gb || pairs_.count(key(ga, gb)) != 0;
  }
  bool empty() const { return pairs_.empty(); }

 private:
  static std::pair<Gen, Gen> key(Gen a, Gen b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }
  std::set<std::pair<Gen, Gen>> pairs_;
};

/// Returns {x, y} if w is cyclically a commutator of two distinct generators.
inline std::optional<std::pair<Gen, Gen>> as_generator_commutator(const Letters& w) {
  if (w.size() != 4) return std::nullopt;
  if (w[0] == -w[2] && w[1] == -w[3] && std::abs(w[0]) != std::abs(w[1]))
    return std::pair{static_cast<Gen>(std::abs(w[0])), static_cast<Gen>(std::abs(w[1]))};
  return std::nullopt;
}

/// Cancels x ... x^-1 when every letter in between commutes with x.
inline void partially_commutative_reduce(Letters& w, const CommutingPairs& pairs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < w.size() && !changed; ++j) {
      for (std::size_t i = j; i-- > 0;) {
        if (w[i] == -w[j]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!pairs.commute(w[i], w[j])) break;
      }
    }
  }
}

/// Lexicographic normal form of the trace of w: repeatedly emit the least
/// letter that commutes with everything before it.
inline Letters lex_normal_form(Letters w, const CommutingPairs& pairs) {
  Letters out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = w.size();
    for (std::size_t j = 0; j < w.size(); ++j) {
      bool movable = true;
      for (std::size_t i = 0; i < j && movable; ++i) movable = pairs.commute(w[i], w[j]);
      if (movable && (best == w.size() || letter_less(w[j], w[best]))) best = j;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

/// Least rotation of w or w^-1 (shortlex); identity if w reduces to nothing.
/// With commuting pairs, each rotation is also reduced and put in trace normal
/// form, and the search repeats while that shortens the word.
inline Letters canonical_relator(Letters w, const CommutingPairs& pairs) {
  cyclic_reduce(w);
  while (true) {
    if (!pairs.empty()) partially_commutative_reduce(w, pairs);
    cyclic_reduce(w);
    if (w.empty()) return w;
    Letters best;
    bool have = false;
    for (const Letters& base : {w, invert(w)}) {
      for (std::size_t i = 0; i < base.size(); ++i) {
        Letters rot(base.begin() + static_cast<std::ptrdiff_t>(i), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
        if (!pairs.empty()) {
          partially_commutative_reduce(rot, pairs);
          rot = lex_normal_form(std::move(rot), pairs);
          cyclic_reduce(rot);
        }
        if (!have || word_less(rot, best)) {
          best = std::move(rot);
          have = true;
        }
      }
    }
    if (best.size() < w.size()) {
      w = std::move(best);
      continue;
    }
    return best;
  }
}

inline Letters letters_of(const FreeWord& w) { return w.letters(); }
inline FreeWord word_of(const Letters& l) { return FreeWord::from_letters(std::span<const Letter>(l)); }

/// Canonical, deduplicated relator list in shortlex order. Relators of the
/// form [x, y] are canonicalized first; every other relator is then put in
/// normal form modulo those commutations. A commutator is never rewritten by
/// its own pair, so the normal closure is unchanged.
inline std::vector<Letters> normalize_relators(const std::vector<Letters>& input, bool use_commutations) {
  std::vector<Letters> rels;
  rels.reserve(input.size());
  const CommutingPairs none;
  for (const auto& r : input) {
    Letters c = canonical_relator(r, none);
    if (!c.empty()) rels.push_back(std::move(c));
  }
  if (use_commutations) {
    for (int round = 0; round < 8; ++round) {
      std::vector<std::pair<Gen, Gen>> comms;
      for (const auto& r : rels)
        if (auto c = as_generator_commutator(r)) comms.push_back(*c);
      if (comms.empty()) break;
      bool changed = false;
      std::vector<Letters> next;
      next.reserve(rels.size());
      for (const auto& r : rels) {
        CommutingPairs pairs;
        const auto own = as_generator_commutator(r);
        for (const auto& [a, b] : comms)
          if (!own || !((own->first == a && own->second == b) || (own->first == b && own->second == a)))
            pairs.add(a, b);
        Letters c = canonical_relator(r, pairs);
        if (c != r) changed = true;
        if (!c.empty()) next.push_back(std::move(c));
      }
      rels = std::move(next);
      if (!changed) break;
    }
  }
  std::sort(rels.begin(), rels.end(), word_less);
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  return rels;
}

inline std::vector<Letters> to_letters(const std::vector<FreeWord>& ws) {
  std::vector<Letters> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.letters());
  return out;
}

inline std::vector<FreeWord> to_words(const std::vector<Letters>& ls) {
  std::vector<FreeWord> out;
  out.reserve(ls.size());
  for (const auto& l : ls) out.push_back(word_of(l));
  return out;
}

}  // namespace detail

/// Canonical form of a single relator (no commutation context).
inline FreeWord canonical_relator(const FreeWord& w) {
  return detail::word_of(detail::canonical_relator(w.letters(), {}));
}

/// Restores the relator invariants: reduced, canonical, deduplicated, sorted.
inline Presentation normalize(Presentation p, bool use_commutations = true) {
  p.relators = detail::to_words(detail::normalize_relators(detail::to_letters(p.relators), use_commutations));
  return p;
}

struct SimplifyOptions {
  int max_passes = 64;
  std::size_t max_relator_length = 4096;
  /// Reduce relators modulo generator commutators found among the relators.
  bool use_commutations = true;
  /// Drop relators that rewriting by the others reduces to the identity.
  bool drop_derivable = true;
};

namespace detail {

/// Cyclic words r and s: finds the longest common stretch between r (from
/// position i) and s or s^-1 (from position j). Replacing that stretch u of r
/// by the complementary piece v^-1 (s = u v) is a valid rewrite; it is taken
/// when it shortens r, or keeps its length but makes it canonically smaller.
inline bool dehn_rewrite_once(Letters& r, const Letters& s) {
  const std::size_t n = r.size(), m = s.size();
  if (n == 0 || m == 0) return false;
  Letters best_word;
  bool found = false;
  std::size_t best_gain = 0;
  for (const Letters& base : {s, invert(s)}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (r[i] != base[j]) continue;
        std::size_t k = 0;
        const std::size_t limit = std::min(n, m);
        while (k < limit && r[(i + k) % n] == base[(j + k) % m]) ++k;
        if (2 * k < m) continue;
        // r = u w (rotated), s^{+-1} = u v (rotated): r -> v^-1 w.
        Letters candidate;
        candidate.reserve(n - k + (m - k));
        for (std::size_t t = m; t-- > k;) candidate.push_back(-base[(j + t) % m]);
        for (std::size_t t = k; t < n; ++t) candidate.push_back(r[(i + t) % n]);
        cyclic_reduce(candidate);
        const std::size_t gain = 2 * k - m;
        if (gain == 0) {
          const CommutingPairs none;
          if (!word_less(canonical_relator(candidate, none), canonical_relator(r, none))) continue;
        }
        if (!found || gain > best_gain) {
          best_word = std::move(candidate);
          best_gain = gain;
          found = true;
        }
      }
    }
  }
  if (found) r = std::move(best_word);
  return found;
}

/// Rewrites relators by the others until no rewrite applies. Longer (and,
/// at equal length, canonically larger) relators are rewritten first, and
/// only by relators that are not longer than themselves.
inline void dehn_rewrite(std::vector<Letters>& rels, std::size_t budget = 10000) {
  bool changed = true;
  while (changed && budget-- > 0) {
    changed = false;
    std::sort(rels.begin(), rels.end(), word_less);
    for (std::size_t a = rels.size(); a-- > 0 && !changed;) {
      for (std::size_t b = 0; b < rels.size() && !changed; ++b) {
        if (a == b || rels[b].empty()) continue;
        if (rels[b].size() > rels[a].size()) continue;
        if (dehn_rewrite_once(rels[a], rels[b])) {
          changed = true;
          if (rels[a].empty()) rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(a));
        }
      }
    }
  }
}

/// True if rewriting r by the relators in `others` (and cancelling modulo
/// their generator commutations) reaches the identity, which certifies that
/// r lies in their normal closure.
inline bool derivable(Letters r, const std::vector<const Letters*>& others, std::size_t budget = 2000) {
  CommutingPairs pairs;
  for (const Letters* s : others)
    if (auto c = as_generator_commutator(*s)) pairs.add(c->first, c->second);
  while (budget-- > 0) {
    r = canonical_relator(std::move(r), pairs);
    if (r.empty()) return true;
    bool moved = false;
    for (const Letters* s : others)
      if (dehn_rewrite_once(r, *s)) {
        moved = true;
        break;
      }
    if (!moved) return false;
  }
  return false;
}

/// Drops relators that the remaining ones derive, longest first.
inline void drop_derivable(std::vector<Letters>& rels) {
  std::sort(rels.begin(), rels.end(), word_less);
  for (std::size_t a = rels.size(); a-- > 0;) {
    std::vector<const Letters*> others;
    for (std::size_t b = 0; b < rels.size(); ++b)
      if (b != a) others.push_back(&rels[b]);
    if (derivable(rels[a], others)) rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(a));
  }
}

inline Letters substitute(const Letters& w, Letter g, const Letters& image) {
  const Letters inv = invert(image);
  Letters out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l == g)
      out.insert(out.end(), image.begin(), image.end());
    else if (l == -g)
      out.insert(out.end(), inv.begin(), inv.end());
    else
      out.push_back(l);
  }
  free_reduce(out);
  return out;
}

inline std::size_t count_of(const Letters& w, Gen g) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [g](Letter l) { return static_cast<Gen>(std::abs(l)) == g; }));
}

/// True if w abelianizes to a single generator or its inverse, as a
/// conjugate of a meridian does.
inline bool is_meridian_like(const Letters& w) {
  std::map<Gen, long> sum;
  for (Letter l : w) sum[static_cast<Gen>(std::abs(l))] += l > 0 ? 1 : -1;
  int nonzero = 0;
  for (const auto& [g, e] : sum) {
    if (e == 0) continue;
    if (std::abs(e) != 1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

}  // namespace detail

/// One generator elimination performed by simplify().
struct Elimination {
  Gen gen;
  FreeWord value;  // in terms of the generators still present at that point
};

struct SimplifyReport {
  int passes = 0;
  bool hit_pass_cap = false;
  bool hit_length_cap = false;
  std::vector<Elimination> eliminations;
};

/// Deterministic Tietze simplification.
///
/// Each pass normalizes relators (modulo known generator commutations),
/// rewrites relators by one another while that shortens them, and then
/// eliminates one generator that occurs exactly once in some relator. The
/// shortest such relator wins; among equally short ones the highest generator
/// id is removed, preferring a value that abelianizes to one generator and
/// then the smallest resulting total length.
/// Relators derivable from the others by rewriting are dropped.
inline Presentation simplify(const Presentation& input, const SimplifyOptions& opts = {},
                             SimplifyReport* report = nullptr) {
  using detail::Letters;
  Presentation p = input;
  std::vector<Letters> rels = detail::to_letters(p.relators);
  SimplifyReport local;
  SimplifyReport& rep = report ? *report : local;
  rep = {};

  const auto settle = [&](std::vector<Letters> rs) {
    rs = detail::normalize_relators(rs, opts.use_commutations);
    detail::dehn_rewrite(rs);
    rs = detail::normalize_relators(rs, opts.use_commutations);
    if (opts.drop_derivable) detail::drop_derivable(rs);
    return rs;
  };

  rels = settle(std::move(rels));
  bool fixpoint = false;
  for (int pass = 0; pass < opts.max_passes; ++pass) {
    rep.passes = pass + 1;
    std::size_t shortest = SIZE_MAX;
    for (const auto& r : rels)
      for (Gen g : p.generators)
        if (detail::count_of(r, g) == 1) shortest = std::min(shortest, r.size());
    if (shortest == SIZE_MAX) {
      fixpoint = true;
      break;
    }

    struct Choice {
      bool conjugate;
      std::size_t total;
      Gen gen;
      Letters value;
      std::vector<Letters> rels;
    };
    std::optional<Choice> best;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      const Letters& r = rels[ri];
      if (r.size() != shortest) continue;
      for (Gen g : p.generators) {
        if (detail::count_of(r, g) != 1) continue;
        const auto pos = static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [g](Letter l) {
                                                    return static_cast<Gen>(std::abs(l)) == g;
                                                  }) - r.begin());
        // r rotated = g^e rest, so g = rest^-1 (e = 1) or rest (e = -1).
        Letters rest(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
        rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
        const Letters value = r[pos] > 0 ? detail::invert(rest) : rest;
        std::vector<Letters> next;
        next.reserve(rels.size());
        bool too_long = false;
        for (std::size_t k = 0; k < rels.size(); ++k) {
          if (k == ri) continue;
          Letters w = detail::substitute(rels[k], static_cast<Letter>(g), value);
          if (w.size() > opts.max_relator_length) too_long = true;
          next.push_back(std::move(w));
        }
        if (too_long) {
          rep.hit_length_cap = true;
          continue;
        }
        next = settle(std::move(next));
        std::size_t total = 0;
        for (const auto& w : next) total += w.size();
        const bool conj = detail::is_meridian_like(value);
        const bool better = !best || g > best->gen ||
                            (g == best->gen && std::tie(best->conjugate, total) < std::tie(conj, best->total));
        if (better)
          best = Choice{conj, total, g, value, std::move(next)};
      }
    }
    if (!best) break;
    rels = std::move(best->rels);
    p.generators.erase(std::find(p.generators.begin(), p.generators.end(), best->gen));
    rep.eliminations.push_back({best->gen, detail::word_of(best->value)});
  }
  if (!fixpoint && !rep.hit_length_cap) rep.hit_pass_cap = true;

  p.relators = detail::to_words(rels);
  p.projective.reset();
  if (rep.hit_pass_cap) p.meta["simplify.cap"] = "passes";
  if (rep.hit_length_cap) p.meta["simplify.cap"] = "relator-length";
  return p;
}

/// Renames the active generators, in order, to "<prefix>1".."<prefix>k" and
/// renumbers them 1..k.
inline Presentation relabel(const Presentation& p, std::string_view prefix = "a") {
  std::map<Gen, Gen> to;
  for (std::size_t i = 0; i < p.generators.size(); ++i) to[p.generators[i]] = static_cast<Gen>(i + 1);
  const auto map_word = [&](const FreeWord& w) {
    std::vector<Syllable> s;
    for (const auto& syl : w.syllables()) {
      auto it = to.find(syl.gen);
      if (it == to.end()) throw IndexError("relator uses a generator that is not in the presentation");
      s.push_back({it->second, syl.exp});
    }
    return FreeWord(std::move(s));
  };
  Presentation q = Presentation::numbered(p.generators.size(), prefix);
  for (const auto& r : p.relators) q.relators.push_back(map_word(r));
  if (p.projective) q.projective = map_word(*p.projective);
  q.meta = p.meta;
  return normalize(q);
}

/// Adds each killed generator as a relator and simplifies.
inline Presentation quotient_kill(const Presentation& p, const std::vector<Gen>& kill,
                                  const SimplifyOptions& opts = {}) {
  Presentation q = p;
  for (Gen g : kill) {
    if (!p.has_generator(g)) throw PreconditionError("cannot kill unknown generator " + std::to_string(g));
    q.relators.push_back(FreeWord::generator(g));
  }
  q.projective.reset();
  return simplify(q, opts);
}

inline Presentation quotient_kill(const Presentation& p, const std::vector<std::string>& names,
                                  const SimplifyOptions& opts = {}) {
  std::vector<Gen> gens;
  for (const auto& n : names) {
    if (!p.symbols.contains(n)) throw PreconditionError("cannot kill unknown generator '" + n + "'");
    gens.push_back(p.symbols.lookup(n));
  }
  return quotient_kill(p, gens, opts);
}

/// Replaces the projective relator P = mu_1 ... mu_n by the relators
/// [mu_i, P] for every generator and P^2: the presentation of the quadric
/// arrangement obtained from a line arrangement by the standard Cremona
/// involution.
inline Presentation involution_transform(const Presentation& p) {
  if (!p.projective) throw PreconditionError("presentation has no flagged projective relator");
  const FreeWord flagged = canonical_relator(*p.projective);
  Presentation q = p;
  q.relators.clear();
  bool found = false;
  for (const auto& r : p.relators) {
    if (canonical_relator(r) == flagged) {
      found = true;
      continue;
    }
    q.relators.push_back(r);
  }
  if (!found) throw PreconditionError("flagged projective relator is not among the relators");
  const FreeWord& prod = *p.projective;
  for (Gen g : p.generators) q.relators.push_back(commutator(FreeWord::generator(g), prod));
  q.relators.push_back(prod.pow(2));
  q.projective.reset();
  q.meta["transform"] = "involution";
  return normalize(q, false);
}

/// Relabels q's generators by every permutation and compares normalized
/// relator sets. Only intended for small generator counts.
inline bool equal_up_to_renaming(const Presentation& a, const Presentation& b) {
  if (a.generators.size() != b.generators.size()) return false;
  const Presentation ra = relabel(a, "g");
  const Presentation rb = relabel(b, "g");
  if (ra.relators.size() != rb.relators.size()) return false;
  std::vector<Gen> perm(ra.generators.size());
  std::iota(perm.begin(), perm.end(), Gen{1});
  do {
    Presentation t = rb;
    for (auto& r : t.relators) {
      std::vector<Syllable> s;
      for (const auto& syl : r.syllables()) s.push_back({perm[syl.gen - 1], syl.exp});
      r = FreeWord(std::move(s));
    }
    t = normalize(t);
    if (t.relators == ra.relators) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace detail {

/// w = base^k with k maximal.
inline std::pair<Letters, int> split_power(const Letters& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return {Letters(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d)), static_cast<int>(n / d)};
  }
  return {w, 1};
}

inline std::string render_letters(const Letters& w, const SymbolTable& names) {
  if (w.empty()) return "e";
  const auto [base, k] = split_power(w);
  const std::string body = to_string(word_of(base), names);
  if (k == 1) return body;
  if (base.size() == 1) return body + "^" + std::to_string(k);
  return "(" + body + ")^" + std::to_string(k);
}

inline bool is_rotation(const Letters& a, const Letters& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Letters doubled(a);
  doubled.insert(doubled.end(), a.begin(), a.end());
  return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
}

}  // namespace detail

/// Relation in paper-style notation: "[a2,a3] = e", "(a1 a2)^2 = (a2 a1)^2",
/// "(a1 a2)^2 = e".
inline std::string render_relator(const FreeWord& r, const SymbolTable& names) {
  using detail::Letters;
  const Letters w = r.letters();
  if (auto c = detail::as_generator_commutator(w)) {
    if (w[0] > 0 && w[1] > 0) return "[" + names.name(c->first) + "," + names.name(c->second) + "] = e";
  }
  if (w.size() % 2 == 0 && !w.empty()) {
    const std::size_t h = w.size() / 2;
    const Letters lhs(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h));
    const Letters rhs = detail::invert(Letters(w.begin() + static_cast<std::ptrdiff_t>(h), w.end()));
    if (lhs != rhs && detail::is_rotation(lhs, rhs) && std::all_of(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h), [](Letter l) { return l > 0; }))
      return detail::render_letters(lhs, names) + " = " + detail::render_letters(rhs, names);
  }
  return detail::render_letters(w, names) + " = e";
}

/// "<a1,a2 | (a1 a2)^2>" with relators printed as words.
inline std::string to_string(const Presentation& p) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? "," : "") << p.symbols.name(p.generators[i]);
  os << " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    os << (i ? ", " : "") << detail::render_letters(p.relators[i].letters(), p.symbols);
  os << '>';
  return os.str();
}

/// Multi-line listing, one relation per line in paper notation.
inline std::string render_text(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (Gen g : p.generators) os << ' ' << p.symbols.name(g);
  os << '\n' << "relations:\n";
  for (const auto& r : p.relators) os << "  " << render_relator(r, p.symbols) << '\n';
  for (const auto& [k, v] : p.meta) os << "# " << k << ": " << v << '\n';
  return os.str();
}

/// GAP input: a FreeGroup on the generator names and the quotient by the
/// relators, each written as a product of F.i^e syllables.
inline std::string render_gap(const Presentation& p) {
  std::map<Gen, std::size_t> pos;
  for (std::size_t i = 0; i < p.generators.size(); ++i) pos[p.generators[i]] = i + 1;
  std::ostringstream os;
  os << "F := FreeGroup(";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    os << (i ? ", " : "") << '"' << p.symbols.name(p.generators[i]) << '"';
  os << ");\n";
  os << "G := F/[";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    os << (i ? ", " : " ");
    bool first = true;
    for (const auto& s : p.relators[i].syllables()) {
      os << (first ? "" : "*") << "F." << pos.at(s.gen);
      if (s.exp != 1) os << '^' << s.exp;
      first = false;
    }
  }
  os << (p.relators.empty() ? " ];\n" : " ];\n");
  return os.str();
}

}  // namespace quadmono

#endif  // QUADMONO_PRESENTATION_HPP
