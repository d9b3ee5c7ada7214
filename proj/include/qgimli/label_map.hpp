#pragma once

#include <cstdint>
#include <vector>

namespace qgimli {

/// Bijection between logical bit labels (row, col, bit) and physical wires.
/// Rotations and word swaps move labels, never values, and emit no gates;
/// the accumulated displacement is read back as a wire permutation.
class LabelMap {
 public:
  explicit LabelMap(int word_len);

  int word_len() const { return word_len_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(forward_.size()); }

  /// Canonical position of a label: (4*row + col) * word_len + bit.
  std::uint32_t index(int row, int col, int bit) const;

  /// Physical wire currently holding the label.
  std::uint32_t wire(int row, int col, int bit) const;

  /// Canonical position of the label a wire currently carries.
  std::uint32_t label_at(std::uint32_t wire) const;

  /// Cyclic left rotation of word (row, col) by amount: label (row, col, b)
  /// resolves to the wire previously held by (row, col, (b - amount) mod l),
  /// so reading bit b afterwards reads bit b of the rotated word.
  void rotate(int row, int col, int amount);

  /// Exchanges the wire assignments of two word labels bitwise.
  void swap_words(int row, int col, int row2, int col2);

  /// Wire -> logical output position, suitable for Circuit::set_output_perm.
  std::vector<std::uint32_t> final_permutation() const { return backward_; }

 private:
  int word_len_;
  std::vector<std::uint32_t> forward_;   // label index -> wire
  std::vector<std::uint32_t> backward_;  // wire -> label index
};

}  // namespace qgimli
