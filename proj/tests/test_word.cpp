#include <gtest/gtest.h>

#include <vector>

#include "quadmono/parse.hpp"
#include "quadmono/word.hpp"

using namespace quadmono;

namespace {

FreeWord L(std::initializer_list<Letter> ls) { return FreeWord::from_letters(ls); }

// Letter-stack reduction, independent of FreeWord's run-length storage.
std::vector<Letter> naive_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> st;
  for (Letter l : in) {
    if (!st.empty() && st.back() == -l)
      st.pop_back();
    else
      st.push_back(l);
  }
  return st;
}

}  // namespace

TEST(FreeWord, InverseCancels) {
  EXPECT_TRUE(multiply(L({1}), L({-1})).empty());
  EXPECT_TRUE((L({1, 2, -3}) * L({1, 2, -3}).inverse()).empty());
}

TEST(FreeWord, ReductionMatchesStackOracle) {
  const FreeWord w = multiply(L({1, 2, -1}), L({1, -2}));
  EXPECT_EQ(w, L({1}));
  std::vector<Letter> raw{1, 2, -1, 1, -2};
  EXPECT_EQ(w.letters(), naive_reduce(raw));
}

TEST(FreeWord, SyllablesMerge) {
  const FreeWord w = L({2, 2, 2, -1, -1});
  ASSERT_EQ(w.syllables().size(), 2u);
  EXPECT_EQ(w.syllables()[0], (Syllable{2, 3}));
  EXPECT_EQ(w.syllables()[1], (Syllable{1, -2}));
  EXPECT_EQ(w.length(), 5u);
  EXPECT_EQ(w.exponent_sum(2), 3);
  EXPECT_EQ(w.occurrences(1), 2u);
  EXPECT_EQ(w.max_generator(), 2u);
}

TEST(FreeWord, ZeroLetterRejected) { EXPECT_THROW(L({1, 0}), Error); }

TEST(FreeWord, Conjugate) {
  EXPECT_EQ(conjugate(FreeWord::generator(3), FreeWord::generator(4)), L({4, 3, -4}));
}

TEST(FreeWord, Commutator) { EXPECT_EQ(commutator(L({1}), L({2})), L({1, 2, -1, -2})); }

TEST(FreeWord, Powers) {
  const FreeWord w = L({1, 2});
  EXPECT_EQ(w.pow(3), L({1, 2, 1, 2, 1, 2}));
  EXPECT_EQ(w.pow(-1), L({-2, -1}));
  EXPECT_TRUE(w.pow(0).empty());
}

TEST(FreeWord, CyclicReduce) {
  EXPECT_EQ(cyclic_reduce(L({1, 2, 3, -1})), L({2, 3}));
  EXPECT_EQ(cyclic_reduce(L({1, 2, 1})), L({1, 1, 2}));
  EXPECT_EQ(cyclic_reduce(L({-2, 1, 2})), L({1}));
  EXPECT_TRUE(cyclic_reduce(FreeWord{}).empty());
  EXPECT_EQ(cyclic_reduce(L({1, 2})), L({1, 2}));
}

TEST(FreeWord, Substitute) {
  const FreeWord w = L({1, 2, -1});
  EXPECT_EQ(substitute(w, 1, L({3, 4})), L({3, 4, 2, -4, -3}));
  EXPECT_EQ(substitute(w, 5, L({3})), w);
}

TEST(SymbolTable, NumberedAndLookup) {
  SymbolTable t = SymbolTable::numbered(3, "a");
  EXPECT_EQ(t.name(2), "a2");
  EXPECT_EQ(t.lookup("a3"), 3u);
  EXPECT_THROW(t.lookup("b"), Error);
  EXPECT_THROW(t.name(0), IndexError);
  EXPECT_THROW(t.name(4), IndexError);
  EXPECT_EQ(t.add("mu"), 4u);
  EXPECT_THROW(t.add("mu"), Error);
  EXPECT_THROW(SymbolTable({"a", "a"}), Error);
}

TEST(FreeWord, ToString) {
  const SymbolTable t = SymbolTable::numbered(3, "a");
  EXPECT_EQ(to_string(FreeWord{}, t), "e");
  EXPECT_EQ(to_string(L({1, -2, -2, 3}), t), "a1 a2^-2 a3");
}

TEST(Parse, WordRoundTrip) {
  const SymbolTable t = SymbolTable::numbered(3, "a");
  const FreeWord w = L({1, -2, -2, 3});
  EXPECT_EQ(parse_word(to_string(w, t), t), w);
}
