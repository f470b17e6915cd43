#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace vba {

using Rng = std::mt19937_64;

/// Outcome of an executable property check. Failures are data: the first
/// violating witness is kept, further violations are only counted.
struct PropertyReport {
  std::string property;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::optional<std::string> witness{};

  bool passed() const noexcept { return violations == 0; }

  void record(bool holds, const std::string& witness_text) {
    ++checks;
    if (holds) return;
    ++violations;
    if (!witness) witness = witness_text;
  }

  template <class MakeWitness>
  void check(bool holds, MakeWitness&& make_witness) {
    ++checks;
    if (holds) return;
    ++violations;
    if (!witness) witness = make_witness();
  }
};

}  // namespace vba
