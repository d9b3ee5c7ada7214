#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgimli {

using Word = std::uint64_t;

/// Configuration shared by the reference permutation and the circuit builder.
/// Words are word_len bits wide with bit b weighing 2^b; word_len does not
/// have to be a power of two.
struct Params {
  int rounds = 24;
  int word_len = 32;
  Word constant = 0x9e377900;

  Word word_mask() const {
    return word_len >= 64 ? ~Word{0} : ((Word{1} << word_len) - 1);
  }

  /// Round constant truncated to word_len bits.
  Word effective_constant() const { return constant & word_mask(); }

  void validate() const {
    if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    if (word_len < 4 || word_len > 64)
      throw std::invalid_argument("word_len must be in [4, 64]");
  }

  bool operator==(const Params&) const = default;
};

/// Lowercase hex, zero-padded to `digits` when given.
std::string word_to_hex(Word value, int digits = 0);

}  // namespace qgimli
