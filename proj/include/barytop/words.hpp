#ifndef BARYTOP_WORDS_HPP
#define BARYTOP_WORDS_HPP

#include <cstdint>
#include <vector>

namespace barytop {

// A degeneracy word in normal form s_{a1} s_{a2} ... s_{ak} with
// a1 > a2 > ... > ak, stored as the bitmask of its letters.  A simplex of
// dimension d over a nondegenerate cell of dimension p carries a word with
// d - p letters, all < d.  The letter set equals the set of positions where
// the associated monotone surjection [d] ->> [p] repeats, so normal-form
// words over a fixed dimension are exactly the subsets of {0,...,d-1}.
using Mask = std::uint32_t;

inline int word_size(Mask w) { return __builtin_popcount(w); }

// Full word of the totally degenerate d-simplex over a vertex.
inline Mask full_word(int d) { return d <= 0 ? 0u : ((Mask{1} << d) - 1u); }

// Normal form of w . s_j  (append one degeneracy on the right).
Mask push_degeneracy(Mask w, int j);

// Normal form of the composite s_outer . s_inner.
Mask compose_words(Mask outer, Mask inner);

// Result of pushing a face operator d_i through a degeneracy word:
// d_i . s_w = s_{letters} (. d_{face_index}).  face_index is -1 when the
// face is absorbed by the word.
struct WordFace {
  Mask letters;
  int face_index;
};

WordFace face_through_word(Mask w, int i);

// Letters as a strictly decreasing list (for serialization).
std::vector<int> word_letters_desc(Mask w);
Mask word_from_letters(const std::vector<int>& letters);

}  // namespace barytop

#endif
