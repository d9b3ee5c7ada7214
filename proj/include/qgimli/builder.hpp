#pragma once

#include "qgimli/circuit.hpp"
#include "qgimli/label_map.hpp"
#include "qgimli/params.hpp"

namespace qgimli {

/// Appends the depth-5 bit-update block T_k for column `col`. Block k updates
/// bit position word_len-1-k of the column's three words in place, reading
/// only positions below the target; gates whose operand falls off the low end
/// of the word are dropped (the shifted-in bits are zero). Interior blocks
/// are 3 CCNOT + 3 CNOT + 5 X; the last block degenerates to two CNOTs.
void emit_t_block(Circuit& circuit, const LabelMap& labels, int col, int k,
                  const Params& params);

/// Rotates rows 0 and 1 of the column by relabelling, appends all word_len
/// T_k blocks, then swaps the row-0 and row-2 words by relabelling. Touches
/// only the 3*word_len wires of the column.
void emit_sp_box(Circuit& circuit, LabelMap& labels, int col,
                 const Params& params);

/// X gates on word (0,0) for every set bit of round_tweak(round).
void emit_constant_layer(Circuit& circuit, const LabelMap& labels, int round,
                         const Params& params);

struct BuildResult {
  Circuit circuit;
  LabelMap labels;
};

/// Full permutation circuit on exactly 12*word_len wires: X/CNOT/CCNOT only,
/// no ancillas, no SWAP gates; linear layers are relabellings folded into
/// the circuit's output permutation.
BuildResult build_gimli_circuit_with_labels(const Params& params);
Circuit build_gimli_circuit(const Params& params);

/// Gates reversed with T and T-dagger exchanged, wires renamed through the
/// forward circuit's output permutation, and the permutation inverted, so
/// running the result undoes the forward circuit.
Circuit build_inverse(const Circuit& circuit);

}  // namespace qgimli
