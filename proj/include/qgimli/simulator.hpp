#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qgimli/circuit.hpp"
#include "qgimli/gimli_ref.hpp"

namespace qgimli {

/// One classical bit per physical wire.
using BitState = std::vector<std::uint8_t>;

/// Applies X/CNOT/CCNOT/SWAP gates in order, then routes wire w to logical
/// position output_perm[w]. Rejects H/T/T-dagger.
BitState run(const Circuit& circuit, const BitState& input);

/// Bit b of word (row, col) lives on wire (4*row + col) * word_len + b.
BitState pack(const GimliState& state, const Params& params);
GimliState unpack(const BitState& bits, const Params& params);

GimliState random_state(std::mt19937_64& rng, const Params& params);

struct EquivalenceReport {
  Params params;
  std::uint64_t trials = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t seed = 0;
  std::optional<GimliState> first_failure;  // first failing input, if any
};

/// Builds the circuit once and races it against the word-level permutation
/// on pseudo-random states; deterministic for a given seed.
EquivalenceReport verify_equivalence(const Params& params, std::uint64_t trials,
                                     std::uint64_t seed);

std::string to_json(const EquivalenceReport& report);

}  // namespace qgimli
