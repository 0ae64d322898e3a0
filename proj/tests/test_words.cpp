#include <doctest.h>

#include <vector>

#include "barytop/words.hpp"

using namespace barytop;

namespace {

// Oracle: the monotone surjection {0..d} ->> {0..d-k} attached to a normal
// word, as a value table.
std::vector<int> sigma_table(Mask w, int d) {
  std::vector<int> t(d + 1);
  for (int m = 0; m <= d; ++m)
    t[m] = m - __builtin_popcount(w & full_word(m));
  return t;
}

Mask letters_of_table(const std::vector<int>& t) {
  Mask w = 0;
  for (std::size_t l = 0; l + 1 < t.size(); ++l)
    if (t[l] == t[l + 1]) w |= Mask{1} << l;
  return w;
}

}  // namespace

TEST_CASE("degeneracy words match the surjection calculus") {
  // s_w at ambient d has letters exactly at the repeat positions
  for (int d = 0; d <= 7; ++d) {
    for (Mask w = 0; w < (Mask{1} << d); ++w) {
      CHECK(letters_of_table(sigma_table(w, d)) == w);
    }
  }
}

TEST_CASE("compose_words equals composition of surjections") {
  for (int d = 1; d <= 7; ++d) {
    for (Mask outer = 0; outer < (Mask{1} << d); ++outer) {
      int p = d - word_size(outer);
      for (Mask inner = 0; inner < (Mask{1} << p); ++inner) {
        // s_outer . s_inner corresponds to sigma_inner o sigma_outer
        std::vector<int> so = sigma_table(outer, d), si = sigma_table(inner, p);
        std::vector<int> comp(d + 1);
        for (int m = 0; m <= d; ++m) comp[m] = si[so[m]];
        CHECK(compose_words(outer, inner) == letters_of_table(comp));
      }
    }
  }
}

TEST_CASE("face_through_word equals face composition of surjections") {
  for (int d = 1; d <= 7; ++d) {
    for (Mask w = 0; w < (Mask{1} << d); ++w) {
      int p = d - word_size(w);
      std::vector<int> sw = sigma_table(w, d);
      for (int i = 0; i <= d; ++i) {
        // delta_i followed by sigma_w
        std::vector<int> comp(d);
        for (int m = 0; m < d; ++m) comp[m] = sw[m < i ? m : m + 1];
        WordFace wf = face_through_word(w, i);
        // monotone with unit steps, starting at 0 and ending at p <=> onto
        bool surjective = comp.front() == 0 && comp.back() == p;
        for (int m = 0; m + 1 < static_cast<int>(comp.size()); ++m)
          if (comp[m + 1] > comp[m] + 1) surjective = false;
        if (surjective) {
          CHECK(wf.face_index == -1);
          CHECK(wf.letters == letters_of_table(comp));
        } else {
          REQUIRE(wf.face_index >= 0);
          // factor comp = delta_v . beta and check both parts
          int v = wf.face_index;
          std::vector<int> beta(comp.size());
          for (std::size_t m = 0; m < comp.size(); ++m)
            beta[m] = comp[m] < v ? comp[m] : comp[m] - 1;
          CHECK(wf.letters == letters_of_table(beta));
          for (int val : comp) CHECK(val != v);
        }
      }
    }
  }
}

TEST_CASE("push_degeneracy pinned identities") {
  // s_0 s_0 = s_1 s_0, s_2 s_0 appended with s_0 gives s_2 s_1 s_0
  CHECK(push_degeneracy(word_from_letters({0}), 0) == word_from_letters({1, 0}));
  CHECK(push_degeneracy(word_from_letters({2, 0}), 0) == word_from_letters({2, 1, 0}));
  CHECK(push_degeneracy(word_from_letters({5, 2}), 3) == word_from_letters({5, 4, 2}));
  CHECK(push_degeneracy(0, 4) == word_from_letters({4}));
}

TEST_CASE("letters round-trip") {
  for (Mask w = 0; w < 64; ++w) {
    auto letters = word_letters_desc(w);
    for (std::size_t i = 1; i < letters.size(); ++i) CHECK(letters[i - 1] > letters[i]);
    CHECK(word_from_letters(letters) == w);
  }
}
