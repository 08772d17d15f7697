#ifndef QUADMONO_MONODROMY_HPP
#define QUADMONO_MONODROMY_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quadmono/braid.hpp"
#include "quadmono/error.hpp"
#include "quadmono/parse.hpp"
#include "quadmono/presentation.hpp"
#include "quadmono/word.hpp"

namespace quadmono {

enum class FactorKind { halftwist, fulltwist };

/// One row of a monodromy table.
///
/// A half-twist row is (skeleton i j along `path`, epsilon, conjugator) and
/// contributes C * H^epsilon * C^-1 where H is the band half-twist for the
/// skeleton. A full-twist row contributes C * (Delta^2 on [i..j])^power * C^-1;
/// it covers the multi-branch tangencies that are not powers of a half-twist.
struct SingularFactor {
  FactorKind kind = FactorKind::halftwist;
  unsigned i = 1;
  unsigned j = 2;
  std::vector<Side> path;  // sides of points i+1..j-1; empty means all below
  int epsilon = 1;         // 1 branch, 2 node, 4 tangency, 8 unique tangency
  unsigned power = 1;      // full twists, for kind == fulltwist
  Braid conjugator;        // outer conjugator, identity if it has no letters

  /// Compares the braids the rows denote: an empty path equals an explicit
  /// all-below path, and identity conjugators match whatever their strands.
  friend bool operator==(const SingularFactor& a, const SingularFactor& b) {
    const auto effective = [](const SingularFactor& f) {
      return f.path.empty() && f.j > f.i ? std::vector<Side>(f.j - f.i - 1, Side::below) : f.path;
    };
    const bool same_conj = a.conjugator.is_identity() ? b.conjugator.is_identity() : a.conjugator == b.conjugator;
    return same_conj && a.kind == b.kind && a.i == b.i && a.j == b.j && effective(a) == effective(b) &&
           a.epsilon == b.epsilon && a.power == b.power;
  }
};

struct MonodromyTable {
  unsigned points = 1;
  std::vector<SingularFactor> factors;
  bool include_projective = true;
  std::string name;
  bool reconstructed = false;

  friend bool operator==(const MonodromyTable&, const MonodromyTable&) = default;
};

inline bool valid_epsilon(int e) { return e == 1 || e == 2 || e == 4 || e == 8; }

inline std::vector<Side> factor_path(const SingularFactor& f) {
  if (f.path.empty()) return std::vector<Side>(f.j - f.i - 1, Side::below);
  return f.path;
}

inline void validate(const SingularFactor& f, unsigned points) {
  if (!(1 <= f.i && f.i < f.j && f.j <= points))
    throw IndexError("skeleton " + std::to_string(f.i) + " " + std::to_string(f.j) + " is outside 1.." +
                     std::to_string(points));
  if (f.kind == FactorKind::halftwist) {
    if (!valid_epsilon(f.epsilon)) throw PreconditionError("epsilon must be 1,2,4,8");
    if (!f.path.empty() && f.path.size() != f.j - f.i - 1)
      throw PreconditionError("path needs one side per intermediate point");
  } else if (f.power == 0) {
    throw PreconditionError("full twist power must be positive");
  }
  if (!f.conjugator.is_identity() && f.conjugator.strands() != points)
    throw PreconditionError("conjugator strand count differs from the table");
}

inline void validate(const MonodromyTable& t) {
  if (t.points == 0) throw PreconditionError("a table needs at least one point");
  for (const auto& f : t.factors) validate(f, t.points);
}

/// The braid phi(delta) contributed by a factor.
inline Braid factor_braid(const SingularFactor& f, unsigned points) {
  validate(f, points);
  const Braid c = f.conjugator.is_identity() ? Braid(points) : f.conjugator;
  Braid core(points);
  if (f.kind == FactorKind::halftwist) {
    core = halftwist_power(band_generator(points, f.i, f.j, factor_path(f)), f.epsilon);
  } else {
    core = fulltwist({points, f.i, f.j, f.power});
  }
  return c * core * c.inverse();
}

/// Product of all factor braids in table order.
inline Braid table_product(const MonodromyTable& t) {
  Braid b(t.points);
  for (const auto& f : t.factors) b *= factor_braid(f, t.points);
  return b;
}

// ---------------------------------------------------------------------------
// Factor constructors used by the built-in and generated tables.

inline SingularFactor skeleton(unsigned i, unsigned j, int eps, Braid conj = Braid{}) {
  SingularFactor f;
  f.i = i;
  f.j = j;
  f.epsilon = eps;
  if (!conj.is_identity()) f.conjugator = std::move(conj);
  return f;
}

inline SingularFactor skeleton(unsigned i, unsigned j, std::vector<Side> path, int eps, Braid conj = Braid{}) {
  SingularFactor f = skeleton(i, j, eps, std::move(conj));
  f.path = std::move(path);
  return f;
}

inline SingularFactor fulltwist_factor(unsigned i, unsigned j, unsigned power, Braid conj = Braid{}) {
  SingularFactor f;
  f.kind = FactorKind::fulltwist;
  f.i = i;
  f.j = j;
  f.power = power;
  if (!conj.is_identity()) f.conjugator = std::move(conj);
  return f;
}

namespace detail {

inline Braid word(unsigned p, std::initializer_list<int> letters) {
  Braid b(p);
  for (int l : letters) b.append(static_cast<unsigned>(std::abs(l)), l > 0 ? 1 : -1);
  return b;
}

inline std::vector<Side> sides(std::string_view code) {
  std::vector<Side> out;
  for (char c : code) out.push_back(c == 'a' ? Side::above : Side::below);
  return out;
}

/// Delta^2 on [first..last], or the identity when the range is a single point.
inline Braid twist_or_identity(unsigned p, unsigned first, unsigned last, int power = 1) {
  if (first >= last || power == 0) return Braid(p);
  const Braid t = fulltwist({p, first, last, static_cast<unsigned>(std::abs(power))});
  return power > 0 ? t : t.inverse();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generated tables for general n.

/// A_n: two tangency points where all n quadrics meet, n branch points on each
/// side. Fiber points 1..n lie on the left of the fiber and n+1..2n on the right.
inline MonodromyTable generated_table_a(unsigned n) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  const unsigned p = 2 * n;
  MonodromyTable t;
  t.points = p;
  t.name = "A" + std::to_string(n);
  if (n >= 2) t.factors.push_back(fulltwist_factor(n + 1, 2 * n, 2));
  for (unsigned k = 0; k < n; ++k)
    t.factors.push_back(skeleton(n - k, n + k + 1, 1, detail::twist_or_identity(p, n + k + 1, 2 * n)));
  if (n >= 2) t.factors.push_back(fulltwist_factor(1, n, 2));
  for (unsigned k = 0; k < n; ++k)
    t.factors.push_back(skeleton(n - k, n + k + 1, 1, detail::twist_or_identity(p, 1, n + k)));
  return t;
}

/// B_n: one point of common tangency on the right, branch points on both sides.
inline MonodromyTable generated_table_b(unsigned n) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  const unsigned p = 2 * n;
  MonodromyTable t;
  t.points = p;
  t.name = "B" + std::to_string(n);
  if (n >= 2) t.factors.push_back(fulltwist_factor(n + 1, 2 * n, 4));
  for (unsigned k = 0; k < n; ++k) {
    const Braid conj =
        detail::twist_or_identity(p, n + 1, 2 * n) * detail::twist_or_identity(p, n + k + 1, 2 * n);
    t.factors.push_back(skeleton(n - k, n + k + 1, 1, conj));
  }
  for (unsigned k = 0; k < n; ++k)
    t.factors.push_back(skeleton(n - k, n + k + 1, 1, detail::twist_or_identity(p, n + 1, n + k + 1, -1)));
  return t;
}

// ---------------------------------------------------------------------------
// Built-in tables.

enum class Family { A, B, C };

inline char family_letter(Family f) { return f == Family::A ? 'A' : f == Family::B ? 'B' : 'C'; }

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "a" || s == "A") return Family::A;
  if (s == "b" || s == "B") return Family::B;
  if (s == "c" || s == "C") return Family::C;
  return std::nullopt;
}

inline MonodromyTable builtin_a2() {
  using detail::word;
  MonodromyTable t;
  t.points = 4;
  t.name = "A2";
  t.factors = {
      skeleton(3, 4, 4),
      skeleton(2, 3, 1, word(4, {3, 3})),
      skeleton(1, 4, detail::sides("bb"), 1),
      skeleton(1, 2, 4),
      skeleton(2, 3, 1, word(4, {1, 1})),
      skeleton(1, 4, detail::sides("aa"), 1),
  };
  return t;
}

inline MonodromyTable builtin_b2() {
  using detail::word;
  MonodromyTable t;
  t.points = 4;
  t.name = "B2";
  t.factors = {
      skeleton(3, 4, 8),
      skeleton(2, 3, 1, word(4, {3, 3, 3, 3})),
      skeleton(1, 4, detail::sides("bb"), 1, word(4, {3, 3})),
      skeleton(2, 3, 1),
      skeleton(1, 4, detail::sides("bb"), 1, word(4, {2, 1, 1, -2})),
  };
  return t;
}

inline MonodromyTable builtin_c2() {
  using detail::word;
  MonodromyTable t;
  t.points = 4;
  t.name = "C2";
  t.factors = {
      skeleton(2, 3, 1),
      skeleton(1, 4, detail::sides("bb"), 1, word(4, {2, 1, 1, -2})),
      skeleton(1, 2, 8),
      skeleton(2, 3, 1, word(4, {1, 1, 1, 1})),
      skeleton(1, 4, detail::sides("aa"), 1, word(4, {1, 1})),
  };
  return t;
}

inline MonodromyTable builtin_c3() {
  using detail::word;
  MonodromyTable t;
  t.points = 6;
  t.name = "C3";
  t.factors = {
      // right side: four nodes, three branch points
      skeleton(3, 4, 2),
      skeleton(2, 4, detail::sides("b"), 2),
      skeleton(3, 5, detail::sides("a"), 2),
      skeleton(2, 5, detail::sides("ba"), 2),
      skeleton(4, 5, 1),
      skeleton(2, 3, 1),
      skeleton(5, 6, 1, word(6, {-1, 3, -2, 3, 4})),
      // left side: two unique tangencies, three branch points
      skeleton(1, 2, 8),
      skeleton(2, 3, 1, word(6, {1, 1, 1, 1})),
      skeleton(5, 6, 8),
      skeleton(4, 5, 1, word(6, {5, 5, 5, 5})),
      skeleton(1, 5, detail::sides("bab"), 1, word(6, {1, 1, 1, 1, 5, 5, 5})),
  };
  return t;
}

inline const std::vector<std::string>& builtin_cases() {
  static const std::vector<std::string> cases{"A2", "A3", "B2", "B3", "C2", "C3"};
  return cases;
}

/// Tables for the worked cases. A3 and B3 come from the general-n generator
/// and are marked reconstructed.
inline MonodromyTable builtin_table(std::string_view id) {
  std::string key(id);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::toupper(c); });
  if (key == "A2") return builtin_a2();
  if (key == "B2") return builtin_b2();
  if (key == "C2") return builtin_c2();
  if (key == "C3") return builtin_c3();
  if (key == "A3" || key == "B3") {
    MonodromyTable t = key == "A3" ? generated_table_a(3) : generated_table_b(3);
    t.reconstructed = true;
    return t;
  }
  throw PreconditionError("no built-in table for '" + std::string(id) + "'");
}

/// Braid-driven table for (family, n), if one is available.
inline std::optional<MonodromyTable> braid_table(Family family, unsigned n) {
  if (n == 0) return std::nullopt;
  const std::string id = std::string(1, family_letter(family)) + std::to_string(n);
  if (id == "A2" || id == "B2" || id == "C2" || id == "C3") return builtin_table(id);
  if (family == Family::A) {
    MonodromyTable t = generated_table_a(n);
    t.reconstructed = true;
    return t;
  }
  if (family == Family::B) {
    MonodromyTable t = generated_table_b(n);
    t.reconstructed = true;
    return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Table text format.
//
//   points <p>
//   factor skeleton <i> <j> [above|below|path:<a|b>...] eps <e> [conj <braid>]
//   factor fulltwist <i> <j> power <k> [conj <braid>]
//
// A braid is a list of s<k> or s<k>^<e> tokens, or "1". '#' starts a comment.

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

inline long parse_int(const Token& t, std::size_t line, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size() || t.text.empty()) throw ParseError(line, t.column, std::string("expected ") + what);
  return v;
}

inline Braid parse_braid_tokens(const std::vector<Token>& toks, std::size_t from, unsigned strands, std::size_t line) {
  Braid b(strands);
  for (std::size_t k = from; k < toks.size(); ++k) {
    const Token& t = toks[k];
    if (t.text == "1") continue;
    if (t.text.size() < 2 || (t.text[0] != 's' && t.text[0] != 'S'))
      throw ParseError(line, t.column, "expected a braid letter like s2 or s3^-1");
    const std::size_t caret = t.text.find('^');
    const std::string idx = t.text.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    const long index = parse_int({idx, t.column + 1}, line, "an Artin generator index");
    long exp = 1;
    if (caret != std::string::npos) exp = parse_int({t.text.substr(caret + 1), t.column + caret + 1}, line, "an exponent");
    if (index < 1 || static_cast<unsigned long>(index) >= strands)
      throw ParseError(line, t.column, "s" + idx + " is not a generator of B_" + std::to_string(strands));
    b.append(static_cast<unsigned>(index), static_cast<int>(exp));
  }
  return b;
}

}  // namespace detail

/// Parses a braid word like "s3^2 s2^-1" on `strands` strands.
inline Braid parse_braid(std::string_view text, unsigned strands) {
  return detail::parse_braid_tokens(detail::tokenize(text), 0, strands, 1);
}

inline MonodromyTable parse_table(std::string_view text) {
  using detail::Token;
  MonodromyTable t;
  bool have_points = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;
    if (head == "points") {
      if (have_points) throw ParseError(line_no, toks[0].column, "points given twice");
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'points <p>'");
      const long p = detail::parse_int(toks[1], line_no, "a point count");
      if (p < 1) throw ParseError(line_no, toks[1].column, "point count must be positive");
      t.points = static_cast<unsigned>(p);
      have_points = true;
      continue;
    }
    if (head == "name") {
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "expected 'name <id>'");
      t.name = toks[1].text;
      continue;
    }
    if (head == "projective") {
      if (toks.size() != 2 || (toks[1].text != "on" && toks[1].text != "off"))
        throw ParseError(line_no, toks[0].column, "expected 'projective on|off'");
      t.include_projective = toks[1].text == "on";
      continue;
    }
    if (head != "factor") throw ParseError(line_no, toks[0].column, "unknown directive '" + head + "'");
    if (!have_points) throw ParseError(line_no, toks[0].column, "'points' must come before any factor");
    if (toks.size() < 4) throw ParseError(line_no, toks[0].column, "incomplete factor line");

    SingularFactor f;
    const std::string& kind = toks[1].text;
    if (kind == "skeleton") {
      f.kind = FactorKind::halftwist;
    } else if (kind == "fulltwist") {
      f.kind = FactorKind::fulltwist;
    } else {
      throw ParseError(line_no, toks[1].column, "expected 'skeleton' or 'fulltwist'");
    }
    const long i = detail::parse_int(toks[2], line_no, "a point index");
    const long j = detail::parse_int(toks[3], line_no, "a point index");
    if (i < 1 || static_cast<unsigned long>(i) > t.points)
      throw ParseError(line_no, toks[2].column, "index " + toks[2].text + " out of range 1.." + std::to_string(t.points));
    if (j < 1 || static_cast<unsigned long>(j) > t.points)
      throw ParseError(line_no, toks[3].column, "index " + toks[3].text + " out of range 1.." + std::to_string(t.points));
    if (i >= j) throw ParseError(line_no, toks[2].column, "skeleton needs i < j");
    f.i = static_cast<unsigned>(i);
    f.j = static_cast<unsigned>(j);

    std::size_t k = 4;
    bool have_amount = false;
    while (k < toks.size()) {
      const Token& tk = toks[k];
      if (tk.text == "conj") {
        f.conjugator = detail::parse_braid_tokens(toks, k + 1, t.points, line_no);
        k = toks.size();
        break;
      }
      if (f.kind == FactorKind::halftwist && (tk.text == "above" || tk.text == "below")) {
        f.path.assign(f.j - f.i - 1, tk.text == "above" ? Side::above : Side::below);
        ++k;
        continue;
      }
      if (f.kind == FactorKind::halftwist && tk.text.rfind("path:", 0) == 0) {
        const std::string code = tk.text.substr(5);
        if (code.size() != f.j - f.i - 1)
          throw ParseError(line_no, tk.column, "path needs " + std::to_string(f.j - f.i - 1) + " sides");
        for (std::size_t c = 0; c < code.size(); ++c)
          if (code[c] != 'a' && code[c] != 'b') throw ParseError(line_no, tk.column + 5 + c, "path sides are 'a' or 'b'");
        f.path = detail::sides(code);
        ++k;
        continue;
      }
      if (f.kind == FactorKind::halftwist && tk.text == "eps") {
        if (k + 1 >= toks.size()) throw ParseError(line_no, tk.column, "expected a value after 'eps'");
        const long e = detail::parse_int(toks[k + 1], line_no, "an epsilon");
        if (!valid_epsilon(static_cast<int>(e))) throw ParseError(line_no, toks[k + 1].column, "epsilon must be 1,2,4,8");
        f.epsilon = static_cast<int>(e);
        have_amount = true;
        k += 2;
        continue;
      }
      if (f.kind == FactorKind::fulltwist && tk.text == "power") {
        if (k + 1 >= toks.size()) throw ParseError(line_no, tk.column, "expected a value after 'power'");
        const long pw = detail::parse_int(toks[k + 1], line_no, "a power");
        if (pw < 1) throw ParseError(line_no, toks[k + 1].column, "power must be positive");
        f.power = static_cast<unsigned>(pw);
        have_amount = true;
        k += 2;
        continue;
      }
      throw ParseError(line_no, tk.column, "unexpected '" + tk.text + "'");
    }
    if (!have_amount)
      throw ParseError(line_no, toks[0].column, f.kind == FactorKind::halftwist ? "missing 'eps'" : "missing 'power'");
    t.factors.push_back(std::move(f));
  }
  if (!have_points) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'points' line");
  return t;
}

inline std::string render_path(const SingularFactor& f) {
  const auto path = factor_path(f);
  if (path.empty()) return "";
  if (std::all_of(path.begin(), path.end(), [](Side s) { return s == Side::below; })) return "below";
  if (std::all_of(path.begin(), path.end(), [](Side s) { return s == Side::above; })) return "above";
  std::string code = "path:";
  for (Side s : path) code += s == Side::above ? 'a' : 'b';
  return code;
}

inline std::string render_table(const MonodromyTable& t) {
  std::ostringstream os;
  if (!t.name.empty()) os << "name " << t.name << '\n';
  os << "points " << t.points << '\n';
  if (!t.include_projective) os << "projective off\n";
  for (const auto& f : t.factors) {
    os << "factor ";
    if (f.kind == FactorKind::halftwist) {
      os << "skeleton " << f.i << ' ' << f.j;
      const std::string path = render_path(f);
      if (!path.empty()) os << ' ' << path;
      os << " eps " << f.epsilon;
    } else {
      os << "fulltwist " << f.i << ' ' << f.j << " power " << f.power;
    }
    if (!f.conjugator.is_identity()) os << " conj " << to_string(f.conjugator);
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Relation formulas.

/// Equalities between the squares (multiplicity 2) or fourth powers
/// (multiplicity 4) of the cyclic rotations of g_k ... g_2 g_1, as relators
/// between consecutive rotations. A full twist raised to the power m on the
/// corresponding strands yields the same normal closure as multiplicity m.
inline std::vector<FreeWord> tangency_relations(const std::vector<FreeWord>& gens, int multiplicity) {
  if (gens.empty()) throw PreconditionError("tangency relations need at least one generator");
  if (multiplicity != 2 && multiplicity != 4) throw PreconditionError("multiplicity must be 2 or 4");
  const std::size_t k = gens.size();
  std::vector<FreeWord> out;
  if (k == 1) return out;
  // rotation t: g_{k-t} ... g_1 g_k ... g_{k-t+1}
  const auto rotation = [&](std::size_t t) {
    FreeWord w;
    for (std::size_t s = 0; s < k; ++s) w *= gens[(2 * k - 1 - t - s) % k];
    return w.pow(multiplicity);
  };
  for (std::size_t t = 0; t + 1 < k; ++t) out.push_back(rotation(t) * rotation(t + 1).inverse());
  return out;
}

/// A labeled block of relations, e.g. "an2" or "bn1".
struct RelationGroup {
  std::string label;
  std::vector<FreeWord> relators;
};

/// Orientation of the tangency chains (an1), (an5) and (bn1). `descending`
/// uses the products a_hi ... a_lo, the form of the general tangency
/// relation; `printed` uses a_lo ... a_hi as the lists are typeset. The two
/// agree for n <= 2 and define different groups from n = 3 on.
enum class TangencyOrder { descending, printed };

namespace detail {

inline FreeWord a(unsigned i) { return FreeWord::generator(i); }

/// a_hi a_{hi-1} ... a_lo (identity if hi < lo).
inline FreeWord descending(unsigned hi, unsigned lo) {
  FreeWord w;
  for (unsigned i = hi; i >= lo && i >= 1; --i) w *= a(i);
  return w;
}

inline std::vector<FreeWord> gens_range(unsigned lo, unsigned hi) {
  std::vector<FreeWord> g;
  for (unsigned i = lo; i <= hi; ++i) g.push_back(a(i));
  return g;
}

inline FreeWord eq(const FreeWord& lhs, const FreeWord& rhs) { return lhs * rhs.inverse(); }

/// Rotations of (a_hi ... a_lo)^m, or of (a_lo ... a_hi)^m when printed.
inline std::vector<FreeWord> tangency_chain(unsigned lo, unsigned hi, int m, TangencyOrder order) {
  if (hi <= lo) return {};
  std::vector<FreeWord> g = gens_range(lo, hi);
  if (order == TangencyOrder::printed) std::reverse(g.begin(), g.end());
  return tangency_relations(g, m);
}

inline std::vector<RelationGroup> formula_a(unsigned n, TangencyOrder order) {
  std::vector<RelationGroup> g;
  g.push_back({"an1", tangency_chain(n + 1, 2 * n, 2, order)});
  RelationGroup right{"an2-an4", {}};
  for (unsigned k = 0; k < n; ++k)
    right.relators.push_back(eq(a(n - k), conjugate(a(n + k + 1), descending(2 * n, n + k + 2))));
  g.push_back(right);
  g.push_back({"an5", tangency_chain(1, n, 2, order)});
  RelationGroup left{"an6-an8", {}};
  for (unsigned k = 0; k < n; ++k)
    left.relators.push_back(eq(a(n + k + 1), conjugate(a(n - k), descending(n + k, 1))));
  g.push_back(left);
  g.push_back({"an9", {descending(2 * n, 1)}});
  return g;
}

inline std::vector<RelationGroup> formula_b(unsigned n, TangencyOrder order) {
  std::vector<RelationGroup> g;
  g.push_back({"bn1", tangency_chain(n + 1, 2 * n, 4, order)});
  const FreeWord q = descending(2 * n, n + 1);
  RelationGroup right{"bn2-bn4", {}};
  for (unsigned k = 0; k < n; ++k)
    right.relators.push_back(eq(a(n - k), conjugate(conjugate(a(n + k + 1), descending(2 * n, n + k + 2)), q)));
  g.push_back(right);
  RelationGroup left{"bn5-bn7", {}};
  for (unsigned k = 0; k < n; ++k)
    left.relators.push_back(eq(a(n - k), conjugate(a(n + k + 1), descending(n + k, n + 1).inverse())));
  g.push_back(left);
  g.push_back({"bn8", {descending(2 * n, 1)}});
  return g;
}

inline std::vector<RelationGroup> from_text(const std::vector<std::pair<std::string, std::vector<std::string>>>& blocks,
                                            unsigned gens) {
  const SymbolTable numeric = SymbolTable::numbered(gens);
  std::vector<RelationGroup> out;
  for (const auto& [label, lines] : blocks) {
    RelationGroup g{label, {}};
    for (const auto& l : lines)
      for (auto& r : parse_relation(l, numeric)) g.relators.push_back(r);
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<RelationGroup> formula_c(unsigned n) {
  if (n == 1) return {{"branch", {eq(a(1), a(2))}}, {"projective", {descending(2, 1)}}};
  if (n == 2)
    return from_text({{"right", {"2 = 3", "1 = 3^-1 4 3"}},
                      {"left", {"(1 2)^4 = (2 1)^4", "3 = 2 1 2 1 2 1^-1 2^-1 1^-1 2^-1", "3^-1 4 3 = 2 1 2 1 2^-1 1^-1 2^-1"}},
                      {"projective", {"4 3 2 1"}}},
                     4);
  if (n == 3)
    return from_text({{"nodes", {"[3,4]", "[2,4]", "[4^-1 3 4, 5]", "[2, 4^-1 5 4]"}},
                      {"right", {"2 = 3", "4 = 5", "6 = 5 4 3 4^-1 1 4 3^-1 4^-1 5^-1"}},
                      {"left",
                       {"(1 2)^4 = (2 1)^4", "3 = 2 1 2 1 2 1^-1 2^-1 1^-1 2^-1", "(5 6)^4 = (6 5)^4",
                        "4 = 6 5 6 5 6^-1 5^-1 6^-1", "3 2 1 2 1 2^-1 1^-1 2^-1 3^-1 = 6 5 6 5^-1 6^-1"}},
                      {"projective", {"6 5 4 3 2 1"}}},
                     6);
  if (n == 4)
    return from_text({{"branch", {"2 = 3", "4 = 5", "6 = 7"}},
                      {"pa1", {"8 = 6 4 2 1 2^-1 4^-1 6^-1"}},
                      {"commutators", {"[2,4]", "[2,6]", "[4,6]"}},
                      {"squares", {"(1 2)^2 = (2 1)^2"}},
                      {"pa2", {"(6 8)^2 = (8 6)^2"}},
                      {"pa3", {"(4 8)^2 = (8 4)^2"}},
                      {"pa4", {"8 6^2 4^2 2^2 1"}}},
                     8);
  // General schema. Quadric Q_1 owns fiber points 1 and 2n; Q_m (m >= 2) owns
  // 2m-2 and 2m-1.
  const unsigned top = 2 * n;
  std::vector<RelationGroup> g;
  RelationGroup branch{"branch", {}};
  for (unsigned m = 2; m <= n; ++m) branch.relators.push_back(eq(a(2 * m - 2), a(2 * m - 1)));
  FreeWord evens;
  for (unsigned m = n; m >= 2; --m) evens *= a(2 * m - 2);
  branch.relators.push_back(eq(a(top), conjugate(a(1), evens)));
  g.push_back(branch);
  RelationGroup nodes{"nodes", {}};
  for (unsigned m = 2; m <= n; ++m)
    for (unsigned m2 = m + 1; m2 <= n; ++m2)
      for (unsigned x : {2 * m - 2, 2 * m - 1})
        for (unsigned y : {2 * m2 - 2, 2 * m2 - 1}) nodes.relators.push_back(commutator(a(x), a(y)));
  g.push_back(nodes);
  RelationGroup tang{"tangencies", tangency_relations({a(2), a(1)}, 4)};
  for (unsigned m = 3; m <= n; ++m)
    for (auto& r : tangency_relations({a(top), a(2 * m - 1)}, 4)) tang.relators.push_back(r);
  g.push_back(tang);
  RelationGroup squares{"squares", tangency_relations({a(2), a(1)}, 2)};
  for (unsigned m = 3; m <= n; ++m)
    for (auto& r : tangency_relations({a(top), a(2 * m - 2)}, 2)) squares.relators.push_back(r);
  FreeWord u;
  for (unsigned m = 3; m <= n; ++m) u *= a(2 * m - 2);
  squares.relators.push_back(eq(conjugate(a(1), a(2)), conjugate(a(top), u.inverse())));
  g.push_back(squares);
  g.push_back({"projective", {descending(top, 1)}});
  return g;
}

}  // namespace detail

/// The printed relation lists for (family, n) in labeled blocks, on
/// generators 1..2n. The last block is always the projective relation.
inline std::vector<RelationGroup> formula_relation_groups(Family family, unsigned n,
                                                          TangencyOrder order = TangencyOrder::descending) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  switch (family) {
    case Family::A: return detail::formula_a(n, order);
    case Family::B: return detail::formula_b(n, order);
    case Family::C: return detail::formula_c(n);
  }
  return {};
}

/// Builds a presentation from relation blocks, skipping the labels in `omit`.
inline Presentation presentation_from_groups(const std::vector<RelationGroup>& groups, unsigned gens,
                                             const std::vector<std::string>& omit = {}) {
  Presentation p = Presentation::numbered(gens, "a");
  for (const auto& g : groups) {
    if (std::find(omit.begin(), omit.end(), g.label) != omit.end()) continue;
    for (const auto& r : g.relators) p.add_relator(r);
  }
  if (!groups.empty() && !groups.back().relators.empty()) p.projective = groups.back().relators.front();
  return normalize(p, false);
}

/// Unsimplified presentation on a1..a2n from the printed relation lists.
inline Presentation formula_relations(Family family, unsigned n, TangencyOrder order = TangencyOrder::descending) {
  Presentation p = presentation_from_groups(formula_relation_groups(family, n, order), 2 * n);
  if (order == TangencyOrder::printed && family != Family::C) p.meta["tangency_order"] = "printed";
  p.meta["source"] = "formula";
  p.meta["case"] = std::string(1, family_letter(family)) + std::to_string(n);
  if (family == Family::C && n >= 5) p.meta["reconstructed"] = "true";
  return p;
}

/// The theorem presentation: <a1..an | (a1...an)^2> for A and B; for C add
/// [ai,aj] (2 <= i < j) and (a1 ak)^2 = (ak a1)^2.
inline Presentation target_presentation(Family family, unsigned n) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  Presentation p = Presentation::numbered(n, "a");
  if (family == Family::C) {
    for (unsigned i = 2; i <= n; ++i)
      for (unsigned j = i + 1; j <= n; ++j) p.add_relator(commutator(detail::a(i), detail::a(j)));
    for (unsigned k = 2; k <= n; ++k)
      for (auto& r : tangency_relations({detail::a(k), detail::a(1)}, 2)) p.add_relator(r);
  }
  FreeWord all;
  for (unsigned i = 1; i <= n; ++i) all *= detail::a(i);
  p.add_relator(all.pow(2));
  return normalize(p, false);
}

}  // namespace quadmono

#endif  // QUADMONO_MONODROMY_HPP
