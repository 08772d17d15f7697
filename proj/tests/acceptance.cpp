// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. All comparisons are exact (tolerance 0).
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "quadmono.hpp"

using namespace quadmono;

namespace {

// Exact comparisons only: fingerprints, relator sets and rendered text must
// match with zero tolerance.
constexpr int kTolerance = 0;
// n = 6 needs 24^6 (about 1.9e8) S4 assignments, above the library default.
constexpr std::uint64_t kCap = 1000000000ull;

FreeWord a(Gen g) { return FreeWord::generator(g); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

Presentation lines(std::size_t n, std::string_view prefix, const std::vector<std::string>& rels) {
  Presentation p = Presentation::numbered(n, prefix);
  for (const auto& l : rels)
    for (auto& r : parse_relation(l, p.symbols)) p.add_relator(r);
  return normalize(p, false);
}

std::string family_name(Family f) { return std::string(1, family_letter(f)); }

// Word problem in <g1, g2 | (g1 g2)^2> = <g1> * <c | c^2> with c = g1 g2.
// The free-product normal form is a stack of syllables g1^k (k != 0) and c.
bool trivial_in_z_free_z2(const FreeWord& w, Gen g1, Gen g2) {
  std::vector<int> st;  // nonzero: power of g1; 0: the involution c
  const auto push_a = [&](int e) {
    if (!st.empty() && st.back() != 0) {
      st.back() += e;
      if (st.back() == 0) st.pop_back();
    } else {
      st.push_back(e);
    }
  };
  const auto push_c = [&] {
    if (!st.empty() && st.back() == 0)
      st.pop_back();
    else
      st.push_back(0);
  };
  for (Letter l : w.letters()) {
    const Gen g = static_cast<Gen>(std::abs(l));
    if (g == g1) {
      push_a(l > 0 ? 1 : -1);
    } else if (g == g2) {
      // g2 = g1^-1 c and g2^-1 = c g1.
      if (l > 0) {
        push_a(-1);
        push_c();
      } else {
        push_c();
        push_a(1);
      }
    } else {
      return false;
    }
  }
  return st.empty();
}

// Every relator of `from` is trivial in the group of `to`, decided exactly by
// replaying the eliminations of simplify(to) and solving the word problem in
// the resulting <g1, g2 | (g1 g2)^2>.
bool closure_contains(const Presentation& to, const Presentation& from, std::string& why) {
  SimplifyReport rep;
  const Presentation s = simplify(to, {}, &rep);
  if (s.generators.size() != 2 || s.relators.size() != 1 ||
      s.relators[0] != canonical_relator((a(s.generators[0]) * a(s.generators[1])).pow(2))) {
    why = "simplified target is not <g1,g2 | (g1 g2)^2>: " + to_string(s);
    return false;
  }
  for (FreeWord r : from.relators) {
    for (const auto& e : rep.eliminations) r = substitute(r, e.gen, e.value);
    if (!trivial_in_z_free_z2(r, s.generators[0], s.generators[1])) {
      why = "relator " + to_string(r, to.symbols) + " survives";
      return false;
    }
  }
  return true;
}

std::size_t count_commutators(const Presentation& p) {
  std::size_t n = 0;
  for (const auto& r : p.relators)
    if (render_relator(r, p.symbols).front() == '[') ++n;
  return n;
}

const std::string kZZ2 = "<a1,a2 | (a1 a2)^2>";

std::map<std::string, Fingerprint>& target_cache() {
  static std::map<std::string, Fingerprint> cache;
  return cache;
}

// A_n and B_n share the target (equAn) = (equBn).
Fingerprint target_fingerprint(Family f, unsigned n) {
  const std::string key = (f == Family::C ? "C" : "AB") + std::to_string(n);
  auto& cache = target_cache();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, fingerprint(target_presentation(f, n), default_battery(), kCap)).first;
  return it->second;
}

Outcome criterion1() {
  Outcome o;
  const Presentation braid = present(builtin_table("A2"));
  const Presentation printed = lines(4, "",
                                     {"(3 4)^2 = (4 3)^2", "2 = 4 3 4^-1", "1 = 4", "(1 2)^2 = (2 1)^2",
                                      "3 = 2 1 2 1^-1 2^-1", "4 = 3 2 1 2^-1 3^-1", "4 3 2 1"});
  o.require(printed.relators.size() == 7, "printed list does not have seven relators");
  for (const char* rel : {"(3 4)^2 = (4 3)^2", "1 = 4", "4 3 2 1"}) {
    const FreeWord w = canonical_relator(parse_relation(rel, braid.symbols)[0]);
    o.require(std::find(braid.relators.begin(), braid.relators.end(), w) != braid.relators.end(),
              std::string("braid relators lack ") + rel);
  }
  std::string why;
  o.require(closure_contains(printed, braid, why), "braid relators not in printed closure: " + why);
  o.require(closure_contains(braid, printed, why), "printed relators not in braid closure: " + why);
  const Presentation formula = formula_relations(Family::A, 2);
  Presentation formula_numeric = formula;
  formula_numeric.symbols = SymbolTable::numbered(4);
  o.require(closure_contains(printed, formula_numeric, why) && closure_contains(formula_numeric, printed, why),
            "formula relators differ from printed closure: " + why);
  const std::string s = to_string(relabel(simplify(braid)));
  o.require(s == kZZ2, "simplify gave " + s);
  if (o.ok)
    o.detail << braid.relators.size() << " braid relators generate the same normal closure as the 7 printed ones; "
             << "simplify -> " << s;
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const char* id : {"B2", "C2"}) {
    const std::string s = to_string(relabel(simplify(present(builtin_table(id)))));
    o.require(s == kZZ2, std::string(id) + " simplified to " + s);
    if (o.ok) o.detail << id << " -> " << s << "  ";
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto check = [&](const std::string& label, const Presentation& got, Family f, unsigned n,
                         std::size_t commutators) {
    const Presentation s = relabel(simplify(got));
    const Presentation t = relabel(target_presentation(f, n));
    o.require(s.relators == t.relators, label + " simplified to " + to_string(s));
    o.require(count_commutators(s) == commutators,
              label + " has " + std::to_string(count_commutators(s)) + " commutators");
    if (o.ok) o.detail << label << ": " << s.relators.size() << " relators, " << count_commutators(s) << " commutator(s)  ";
  };
  check("C3 braid", present(builtin_table("C3")), Family::C, 3, 1);
  check("C4 formula", formula_relations(Family::C, 4), Family::C, 4, 3);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto battery = default_battery();
  for (Family f : {Family::A, Family::B, Family::C})
    for (unsigned n = 1; n <= 6; ++n) {
      const std::string id = family_name(f) + std::to_string(n);
      const Fingerprint got = fingerprint(simplify(formula_relations(f, n)), battery, kCap);
      const Fingerprint want = target_fingerprint(f, n);
      o.require(got == want, id + ": " + to_string(got) + " vs target " + to_string(want));
      AbelianInvariants expect_ab;
      expect_ab.free_rank = n - 1;
      expect_ab.torsion = {BigInt(2)};
      o.require(got.abelian == expect_ab, id + " abelianization " + to_string(got.abelian));
    }
  if (o.ok) o.detail << "18 cases match their targets; abelianization Z^(n-1) + Z2 for n = 1..6";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto battery = default_battery();
  const std::map<Family, std::vector<std::string>> redundant{{Family::A, {"an5", "an6-an8"}}, {Family::B, {"bn1"}}};
  for (const auto& [f, omit] : redundant)
    for (unsigned n = 2; n <= 5; ++n) {
      const auto groups = formula_relation_groups(f, n);
      const Fingerprint full = fingerprint(simplify(presentation_from_groups(groups, 2 * n)), battery, kCap);
      const Fingerprint part = fingerprint(simplify(presentation_from_groups(groups, 2 * n, omit)), battery, kCap);
      const std::string id = family_name(f) + std::to_string(n);
      o.require(full == part, id + ": full " + to_string(full) + " vs reduced " + to_string(part));
      o.require(full == target_fingerprint(f, n), id + " differs from target");
    }
  if (o.ok) o.detail << "A: dropping an5-an8, B: dropping bn1 leaves fingerprints unchanged for n = 2..5";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto battery = default_battery();
  Presentation z2 = Presentation::numbered(1);
  z2.add_relator(a(1).pow(2));
  const Fingerprint fz2 = fingerprint(z2, battery);
  for (Family f : {Family::A, Family::B, Family::C}) {
    const std::string f1 = family_name(f) + "1";
    o.require(fingerprint(simplify(formula_relations(f, 1)), battery) == fz2, f1 + " is not Z2 by fingerprint");
    for (unsigned n = 2; n <= 5; ++n) {
      const Presentation s = simplify(formula_relations(f, n));
      const auto cert = bigness_certificate(s, {s.generators[0], s.generators[1]}, battery, {}, kCap);
      o.require(cert.ok, family_name(f) + std::to_string(n) + " quotient " + to_string(cert.quotient_fingerprint));
    }
  }
  if (o.ok) o.detail << "each of A,B,C for n = 2..5 surjects onto a group fingerprint-equal to Z * Z2; n = 1 is Z2";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Presentation one = Presentation::numbered(1, "mu");
  one.add_relator(a(1));
  one.projective = a(1);
  Presentation z2 = Presentation::numbered(1);
  z2.add_relator(a(1).pow(2));
  o.require(fingerprint(involution_transform(one)) == fingerprint(z2), "<mu1 | mu1> does not go to Z2");
  std::mt19937 rng(2024);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Presentation p = qmtest::random_arrangement_like(rng);
    AbelianInvariants want = abelianization(p);
    Matrix<BigInt> m(want.torsion.size() + 1, std::vector<BigInt>(want.torsion.size() + 1, 0));
    m[0][0] = 2;
    for (std::size_t k = 0; k < want.torsion.size(); ++k) m[k + 1][k + 1] = want.torsion[k];
    want.torsion = smith_normal_form(m).invariant_factors();
    const AbelianInvariants got = abelianization(involution_transform(p));
    o.require(got == want, to_string(p) + ": got " + to_string(got) + ", want " + to_string(want));
    ++checked;
  }
  if (o.ok)
    o.detail << "<mu1 | mu1> -> Z2; " << checked
             << " random 2-3 generator inputs with zero-exponent-sum relators gain exactly one Z2";
  return o;
}

Outcome criterion8() {
  Outcome o;
  using qmtest::random_braid;
  using qmtest::random_word;
  std::mt19937 rng(8);
  int failures = 0;
  const FreeWord boundary = boundary_word(6, ArtinConvention::upper_conjugates);
  for (int i = 0; i < 1000; ++i)
    if (artin_apply(random_braid(rng, 6, 20), boundary) != boundary) ++failures;
  o.require(failures == 0, std::to_string(failures) + " product-preservation failures");

  failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const unsigned p = static_cast<unsigned>(qmtest::uniform(rng, 2, 6));
    const Braid b1 = random_braid(rng, p, 8), b2 = random_braid(rng, p, 8);
    const FreeWord w = random_word(rng, p, 8);
    if (artin_apply(b1 * b2, w) != artin_apply(b1, artin_apply(b2, w))) ++failures;
    if (artin_apply(b1, artin_apply(b1.inverse(), w)) != w) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " homomorphism/inverse failures");

  failures = 0;
  for (unsigned p = 2; p <= 5; ++p) {
    const Braid d = fulltwist({p, 1, p, 1});
    for (unsigned k = 1; k < p; ++k)
      for (Gen i = 1; i <= p; ++i) {
        const Braid s = Braid::sigma(p, k);
        if (artin_apply(s * d, a(i)) != artin_apply(d * s, a(i))) ++failures;
      }
  }
  o.require(failures == 0, std::to_string(failures) + " centrality failures");

  failures = 0;
  const auto battery = default_battery();
  for (int i = 0; i < 200; ++i) {
    const Presentation p = qmtest::random_presentation(rng);
    if (fingerprint(p, battery) != fingerprint(simplify(p), battery)) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " simplify fingerprint failures");
  if (o.ok) o.detail << "1000 + 1000 + exhaustive p<=5 + 200 cases, zero failures";
  return o;
}

// Brute-force S3 hom count: all |S3|^k assignments, relators evaluated
// letter by letter on explicit permutations of {0,1,2}.
std::uint64_t oracle_s3_homs(const Presentation& p) {
  using Perm = std::array<int, 3>;
  std::vector<Perm> s3;
  Perm q{0, 1, 2};
  do s3.push_back(q);
  while (std::next_permutation(q.begin(), q.end()));
  const auto compose = [](const Perm& x, const Perm& y) { return Perm{x[y[0]], x[y[1]], x[y[2]]}; };
  const auto invert = [](const Perm& x) {
    Perm r{};
    for (int i = 0; i < 3; ++i) r[x[i]] = i;
    return r;
  };
  const std::size_t k = p.generators.size();
  std::map<Gen, std::size_t> slot;
  for (std::size_t i = 0; i < k; ++i) slot[p.generators[i]] = i;
  std::vector<Perm> img(k);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    if (d == k) {
      for (const auto& r : p.relators) {
        Perm v{0, 1, 2};
        for (Letter l : r.letters()) {
          const Perm& x = img[slot.at(static_cast<Gen>(std::abs(l)))];
          v = compose(v, l > 0 ? x : invert(x));
        }
        if (v != Perm{0, 1, 2}) return;
      }
      ++count;
      return;
    }
    for (const auto& e : s3) {
      img[d] = e;
      rec(d + 1);
    }
  };
  rec(0);
  return count;
}

Outcome criterion9() {
  Outcome o;
  const auto battery = default_battery();
  const Presentation equ = target_presentation(Family::A, 3);
  const Presentation free_prod = lines(3, "", {"3^2"});           // F2 * Z2 on b1 = 1, b2 = 2, c = 3
  const Presentation abel_prod = lines(3, "", {"[1, 2]", "3^2"});  // Z^2 * Z2
  const Fingerprint fe = fingerprint(equ, battery), ff = fingerprint(free_prod, battery),
                    fa = fingerprint(abel_prod, battery);
  const std::uint64_t s3_equ = oracle_s3_homs(equ), s3_free = oracle_s3_homs(free_prod),
                      s3_abel = oracle_s3_homs(abel_prod);
  o.require(fe == ff, "(equA3) " + to_string(fe) + " differs from F2 * Z2 " + to_string(ff));
  o.require(s3_equ == s3_free, "oracle S3 counts differ for (equA3) and F2 * Z2");
  o.require(s3_equ == fe.homs.front().second, "oracle S3 count disagrees with count_homs");
  const bool distinguished = fa != fe;
  if (o.ok)
    o.detail << "(equA3) matches F2 * Z2 (" << to_string(fe) << "); Z^2 * Z2 is "
             << (distinguished ? "distinguished" : "NOT distinguished") << ": S3 homs " << s3_abel << " vs " << s3_equ
             << ", abelianization " << to_string(fa.abelian) << " vs " << to_string(fe.abelian);
  return o;
}

}  // namespace

int main() {
  static_assert(kTolerance == 0);
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s (%.1fs) %s\n", i + 1, o.ok ? "PASS" : "FAIL", secs, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
