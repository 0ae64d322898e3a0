#include "barytop/words.hpp"

#include <stdexcept>

namespace barytop {

// Uses s_a s_j = s_{j+1} s_a for a <= j: the appended letter moves left past
// every smaller-or-equal letter, gaining one each time.
Mask push_degeneracy(Mask w, int j) {
  int cur = j;
  Mask rest = w;
  while (rest != 0) {
    int a = __builtin_ctz(rest);
    rest &= rest - 1;
    if (a <= cur) ++cur; else break;
  }
  return w | (Mask{1} << cur);
}

Mask compose_words(Mask outer, Mask inner) {
  Mask res = outer;
  // inner applied first; its letters are consumed left to right (descending).
  Mask rest = inner;
  while (rest != 0) {
    int b = 31 - __builtin_clz(rest);
    res = push_degeneracy(res, b);
    rest &= ~(Mask{1} << b);
  }
  return res;
}

// Walks d_i left-to-right through s_{a1}...s_{ak} (a1 > ... > ak) using
//   d_i s_a = s_{a-1} d_i   (i < a)
//   d_i s_a = id            (i == a or i == a+1)
//   d_i s_a = s_a d_{i-1}   (i > a+1)
WordFace face_through_word(Mask w, int i) {
  Mask out = 0;
  int cur = i;
  Mask rest = w;
  while (rest != 0) {
    int a = 31 - __builtin_clz(rest);
    rest &= ~(Mask{1} << a);
    if (cur < a) {
      out |= Mask{1} << (a - 1);
    } else if (cur == a || cur == a + 1) {
      return {out | rest, -1};
    } else {
      out |= Mask{1} << a;
      --cur;
    }
  }
  return {out, cur};
}

std::vector<int> word_letters_desc(Mask w) {
  std::vector<int> out;
  while (w != 0) {
    int a = 31 - __builtin_clz(w);
    out.push_back(a);
    w &= ~(Mask{1} << a);
  }
  return out;
}

Mask word_from_letters(const std::vector<int>& letters) {
  Mask w = 0;
  for (int a : letters) {
    if (a < 0 || a >= 31) throw std::invalid_argument("degeneracy letter out of range");
    w |= Mask{1} << a;
  }
  return w;
}

}  // namespace barytop
