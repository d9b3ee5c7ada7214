#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgimli {

enum class GateKind : std::uint8_t { X, Cnot, Ccnot, H, T, Tdg, Swap };

int operand_count(GateKind kind);

/// OpenQASM mnemonic: x, cx, ccx, h, t, tdg, swap.
std::string_view gate_name(GateKind kind);

/// One reversible gate. Controls precede the target; operands are pairwise
/// distinct physical wires.
struct Gate {
  GateKind kind{GateKind::X};
  std::array<std::uint32_t, 3> wires{};  // operand_count(kind) leading entries

  static Gate x(std::uint32_t wire);
  static Gate h(std::uint32_t wire);
  static Gate t(std::uint32_t wire);
  static Gate tdg(std::uint32_t wire);
  static Gate cnot(std::uint32_t control, std::uint32_t target);
  static Gate swap(std::uint32_t a, std::uint32_t b);
  static Gate ccnot(std::uint32_t control0, std::uint32_t control1,
                    std::uint32_t target);

  std::span<const std::uint32_t> operands() const {
    return {wires.data(), static_cast<std::size_t>(operand_count(kind))};
  }

  bool operator==(const Gate&) const = default;
};

/// Ordered gate list over a fixed wire count. output_perm maps each physical
/// wire to the logical output position of the bit it finally carries, so
/// relabelled rotations and word swaps cost no gates.
class Circuit {
 public:
  explicit Circuit(std::uint32_t width);

  std::uint32_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::uint32_t>& output_perm() const { return output_perm_; }

  /// Appends at the end; rejects repeated or out-of-range operands.
  void append(const Gate& gate);

  /// Replaces the output permutation; must be a bijection on the wires.
  void set_output_perm(std::vector<std::uint32_t> perm);

 private:
  std::uint32_t width_;
  std::vector<Gate> gates_;
  std::vector<std::uint32_t> output_perm_;
};

struct ResourceReport {
  std::uint32_t width = 0;
  std::uint64_t x = 0;
  std::uint64_t cnot = 0;
  std::uint64_t ccnot = 0;
  std::uint64_t h = 0;
  std::uint64_t t = 0;
  std::uint64_t tdg = 0;
  std::uint64_t swap = 0;
  std::size_t depth = 0;
  std::size_t t_depth = 0;

  std::uint64_t t_and_tdg() const { return t + tdg; }
  std::uint64_t total() const { return x + cnot + ccnot + h + t + tdg + swap; }

  bool operator==(const ResourceReport&) const = default;
};

/// Per-kind tallies only; depth fields stay zero.
ResourceReport gate_counts(const Circuit& circuit);

/// Longest chain in the dependency DAG whose edges connect consecutive gates
/// sharing a wire (ASAP layering under full parallelism).
std::size_t depth(const Circuit& circuit);

/// Same DAG, but only T and T-dagger nodes add weight along a path.
std::size_t t_depth(const Circuit& circuit);

/// Counts plus both depth metrics.
ResourceReport analyze(const Circuit& circuit);

/// Flat JSON object: width, depth, t_depth, total, and one key per gate kind.
std::string to_json(const ResourceReport& report);

}  // namespace qgimli
