#ifndef QUADMONO_IO_HPP
#define QUADMONO_IO_HPP

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quadmono/braid.hpp"
#include "quadmono/error.hpp"
#include "quadmono/invariants.hpp"
#include "quadmono/monodromy.hpp"
#include "quadmono/parse.hpp"
#include "quadmono/presentation.hpp"
#include "quadmono/word.hpp"

namespace quadmono {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Words: [["a1", 1], ["a2", -2]].

inline Json to_json(const FreeWord& w, const SymbolTable& names) {
  Json out = Json::array();
  for (const auto& s : w.syllables()) out.push_back({names.name(s.gen), s.exp});
  return out;
}

inline FreeWord word_from_json(const Json& j, const SymbolTable& names) {
  if (!j.is_array()) throw Error("word must be a JSON array of [name, exponent] pairs");
  FreeWord w;
  for (const auto& s : j) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_number_integer())
      throw Error("word syllable must be [name, exponent]");
    w *= FreeWord::generator(names.lookup(s[0].get<std::string>()), s[1].get<int>());
  }
  return w;
}

// ---------------------------------------------------------------------------
// Braids: [[index, exponent], ...]; half-twists: {"index": k, "conjugator": [...]}.

inline Json to_json(const Braid& b) {
  Json out = Json::array();
  for (const auto& l : b.word()) out.push_back({l.index, l.exp});
  return out;
}

inline Braid braid_from_json(const Json& j, unsigned strands) {
  if (!j.is_array()) throw Error("braid must be a JSON array of [index, exponent] pairs");
  Braid b(strands);
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
      throw Error("braid letter must be [index, exponent]");
    const long k = l[0].get<long>();
    if (k <= 0) throw IndexError("braid index must be positive");
    b.append(static_cast<unsigned>(k), l[1].get<int>());
  }
  return b;
}

inline Json to_json(const HalfTwist& h) {
  return Json{{"strands", h.strands}, {"index", h.index}, {"conjugator", to_json(h.conjugator)}};
}

// ---------------------------------------------------------------------------
// Monodromy tables.

inline Json to_json(const MonodromyTable& t) {
  Json out;
  out["points"] = t.points;
  if (!t.name.empty()) out["name"] = t.name;
  out["projective"] = t.include_projective;
  if (t.reconstructed) out["reconstructed"] = true;
  Json fs = Json::array();
  for (const auto& f : t.factors) {
    Json j;
    if (f.kind == FactorKind::halftwist) {
      j["skeleton"] = {f.i, f.j};
      if (!f.path.empty()) {
        std::string code;
        for (Side side : f.path) code += side == Side::above ? 'a' : 'b';
        j["path"] = code;
      }
      j["eps"] = f.epsilon;
    } else {
      j["fulltwist"] = {f.i, f.j};
      j["power"] = f.power;
    }
    if (!f.conjugator.is_identity()) j["conj"] = to_json(f.conjugator);
    fs.push_back(std::move(j));
  }
  out["factors"] = std::move(fs);
  return out;
}

inline MonodromyTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points")) throw Error("table JSON needs \"points\"");
  MonodromyTable t;
  t.points = j.at("points").get<unsigned>();
  t.name = j.value("name", std::string{});
  t.include_projective = j.value("projective", true);
  t.reconstructed = j.value("reconstructed", false);
  for (const auto& fj : j.value("factors", Json::array())) {
    SingularFactor f;
    Json range;
    if (fj.contains("skeleton")) {
      range = fj.at("skeleton");
      f.epsilon = fj.value("eps", 1);
      if (fj.contains("path")) {
        for (char c : fj.at("path").get<std::string>()) {
          if (c != 'a' && c != 'b') throw Error("path letters must be 'a' (above) or 'b' (below)");
          f.path.push_back(c == 'a' ? Side::above : Side::below);
        }
      }
    } else if (fj.contains("fulltwist")) {
      f.kind = FactorKind::fulltwist;
      range = fj.at("fulltwist");
      f.power = fj.value("power", 1u);
    } else {
      throw Error("factor needs \"skeleton\" or \"fulltwist\"");
    }
    if (!range.is_array() || range.size() != 2) throw Error("factor range must be [i, j]");
    f.i = range[0].get<unsigned>();
    f.j = range[1].get<unsigned>();
    if (fj.contains("conj")) f.conjugator = braid_from_json(fj.at("conj"), t.points);
    t.factors.push_back(std::move(f));
  }
  validate(t);
  return t;
}

// ---------------------------------------------------------------------------
// Presentations: {"generators": [...], "relators": [[...], ...], "meta": {...}}
// Relator letters are signed 1-based positions in "generators".

inline Json to_json(const Presentation& p) {
  std::map<Gen, int> pos;
  Json gens = Json::array();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    pos[p.generators[i]] = static_cast<int>(i + 1);
    gens.push_back(p.symbols.name(p.generators[i]));
  }
  const auto encode = [&](const FreeWord& w) {
    Json out = Json::array();
    for (Letter l : w.letters()) {
      const auto it = pos.find(static_cast<Gen>(std::abs(l)));
      if (it == pos.end()) throw IndexError("relator uses an eliminated generator");
      out.push_back(l > 0 ? it->second : -it->second);
    }
    return out;
  };
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(encode(r));
  Json out{{"generators", gens}, {"relators", rels}};
  if (p.projective) out["projective"] = encode(*p.projective);
  Json meta = Json::object();
  for (const auto& [k, v] : p.meta) meta[k] = v;
  out["meta"] = meta;
  return out;
}

inline Presentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators")) throw Error("presentation JSON needs \"generators\"");
  std::vector<std::string> names;
  for (const auto& g : j.at("generators")) names.push_back(g.get<std::string>());
  Presentation p = Presentation::on(SymbolTable(names));
  const auto decode = [&](const Json& w) {
    std::vector<Letter> ls;
    for (const auto& l : w) {
      const int v = l.get<int>();
      if (v == 0 || static_cast<std::size_t>(std::abs(v)) > names.size())
        throw IndexError("relator letter " + std::to_string(v) + " is out of range");
      ls.push_back(v);
    }
    return FreeWord::from_letters(std::span<const Letter>(ls));
  };
  for (const auto& r : j.value("relators", Json::array())) p.add_relator(decode(r));
  if (j.contains("projective")) p.projective = decode(j.at("projective"));
  if (j.contains("meta"))
    for (const auto& [k, v] : j.at("meta").items()) p.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
  return normalize(p, false);
}

// ---------------------------------------------------------------------------
// Text presentations.

namespace detail {

/// Splits on commas that are not inside (), [].
inline std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  parts.push_back(cur);
  return parts;
}

inline bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace detail

/// Reads a presentation written either on one line,
///
///   <a, b | (a b)^2, [a, b^2]>
///
/// or line by line:
///
///   generators a b
///   (a b)^2 = e
///   projective b a      # optional; also added as a relator
///
/// '#' starts a comment in the line form.
inline Presentation parse_presentation(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '<') {
    const auto bar = text.find('|');
    const auto close = text.rfind('>');
    if (close == std::string_view::npos || close < first) throw ParseError(1, text.size(), "missing '>'");
    const std::string_view gens = text.substr(first + 1, (bar == std::string_view::npos ? close : bar) - first - 1);
    std::vector<std::string> names;
    for (auto& g : detail::split_top_level(gens)) {
      std::istringstream is(g);
      std::string name;
      if (is >> name) names.push_back(name);
    }
    Presentation p = Presentation::on(SymbolTable(names));
    if (bar != std::string_view::npos && bar < close) {
      for (const auto& part : detail::split_top_level(text.substr(bar + 1, close - bar - 1))) {
        if (detail::blank(part)) continue;
        for (auto& r : WordParser(p.symbols, false).relation(part)) p.add_relator(r);
      }
    }
    return normalize(p, false);
  }

  Presentation p;
  bool have_gens = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (detail::blank(line)) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "generators") {
      if (have_gens) throw ParseError(lineno, 1, "generators given twice");
      std::vector<std::string> names;
      for (std::string n; ls >> n;) names.push_back(n);
      p = Presentation::on(SymbolTable(names));
      have_gens = true;
      continue;
    }
    if (!have_gens) throw ParseError(lineno, 1, "expected 'generators' before relations");
    if (head == "projective") {
      const auto at = line.find("projective") + std::string("projective").size();
      const FreeWord w = WordParser(p.symbols, false, lineno).word(std::string_view(line).substr(at));
      p.projective = w;
      p.add_relator(w);
      continue;
    }
    for (auto& r : WordParser(p.symbols, false, lineno).relation(line)) p.add_relator(r);
  }
  if (!have_gens) throw ParseError(lineno == 0 ? 1 : lineno, 1, "no 'generators' line");
  return normalize(p, false);
}

/// JSON if the text starts with '{', otherwise the text forms above.
inline Presentation read_presentation(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(1, e.byte, e.what());
    }
    return presentation_from_json(j);
  }
  return parse_presentation(text);
}

// ---------------------------------------------------------------------------
// Invariants.

inline Json to_json(const AbelianInvariants& a) {
  Json t = Json::array();
  for (const auto& d : a.torsion) t.push_back(d.str());
  return Json{{"free_rank", a.free_rank}, {"torsion", t}, {"text", to_string(a)}};
}

inline Json to_json(const Fingerprint& f) {
  Json homs = Json::object();
  for (const auto& [name, c] : f.homs) homs[name] = c;
  return Json{{"abelianization", to_json(f.abelian)}, {"homs", homs}};
}

/// {"name": "q8", "table": [[0,1,...], ...]}
inline FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("table")) throw Error("group JSON needs \"table\"");
  std::vector<std::vector<FiniteGroup::Element>> table;
  for (const auto& row : j.at("table")) {
    std::vector<FiniteGroup::Element> r;
    for (const auto& x : row) {
      const long v = x.get<long>();
      if (v < 0 || v > 65535) throw PreconditionError("group table entry out of range");
      r.push_back(static_cast<FiniteGroup::Element>(v));
    }
    table.push_back(std::move(r));
  }
  return FiniteGroup(j.value("name", std::string("custom")), std::move(table));
}

}  // namespace quadmono

#endif  // QUADMONO_IO_HPP
