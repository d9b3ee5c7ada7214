#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "qgimli/params.hpp"

namespace qgimli {

/// 3x4 matrix of word_len-bit words; words[row][col].
struct GimliState {
  std::array<std::array<Word, 4>, 3> words{};

  bool operator==(const GimliState&) const = default;
};

Word rotate_word_left(Word w, int amount, int word_len);

/// One column step: rotate x by 24 and y by 9 (mod word_len), apply the
/// nonlinear update with non-cyclic shifts, swap the x and z roles.
/// Returns the new (row0, row1, row2) words.
std::array<Word, 3> sp_box(Word x, Word y, Word z, const Params& params);

/// c XOR round, truncated to word_len bits. Only rounds that are multiples
/// of four carry a constant.
Word round_tweak(int round, const Params& params);

GimliState gimli_permute(const GimliState& state, const Params& params);

/// As above, additionally invoking on_round(r, state) after each round
/// (rounds count down from params.rounds to 1).
GimliState gimli_permute(
    const GimliState& state, const Params& params,
    const std::function<void(int, const GimliState&)>& on_round);

/// Test-vector file line: 12 words row-major (s00..s23) plus one reserved
/// trailing field, lowercase hex, whitespace-separated.
struct StateFileEntry {
  GimliState state;
  Word reserved = 0;

  bool operator==(const StateFileEntry&) const = default;
};

std::vector<StateFileEntry> read_state_file(std::istream& in,
                                            const Params& params);
void write_state_file(std::ostream& out,
                      std::span<const StateFileEntry> entries,
                      const Params& params);

}  // namespace qgimli
