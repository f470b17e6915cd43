#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace vba {

/// Opaque variable identifier. The numeric value fixes the canonical
/// variable order used for table layouts and lexicographic comparisons.
enum class VarId : std::uint32_t {};

constexpr std::uint32_t index_of(VarId v) noexcept {
  return static_cast<std::uint32_t>(v);
}

/// A finite set of variables: an element of the power-set lattice.
///
/// Variables are kept sorted in canonical order. The defaulted ordering
/// operators compare the sorted sequences lexicographically so domains can
/// key ordered containers; the lattice order is `includes`.
class Domain {
 public:
  Domain() = default;
  Domain(std::initializer_list<VarId> vars);
  explicit Domain(std::vector<VarId> vars);

  /// {VarId(0), ..., VarId(n-1)}
  static Domain first_n(std::uint32_t n);

  const std::vector<VarId>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }
  auto begin() const noexcept { return vars_.begin(); }
  auto end() const noexcept { return vars_.end(); }

  bool contains(VarId v) const;
  /// Lattice order: `other <= *this`.
  bool includes(const Domain& other) const;
  /// Position of `v` in canonical order within this domain; `size()` if absent.
  std::size_t position(VarId v) const;

  friend bool operator==(const Domain&, const Domain&) = default;
  friend auto operator<=>(const Domain&, const Domain&) = default;

 private:
  std::vector<VarId> vars_;
};

Domain join(const Domain& a, const Domain& b);
Domain meet(const Domain& a, const Domain& b);
Domain difference(const Domain& a, const Domain& b);

/// All subsets of `d`, in order of their bitmask over `d`'s variables.
std::vector<Domain> subsets(const Domain& d);

/// Every `t` with `lower <= t <= upper`. Requires `upper.includes(lower)`.
std::vector<Domain> interval(const Domain& lower, const Domain& upper);

/// "{v0,v2}" style rendering with numeric ids; used in error messages.
std::string to_string(const Domain& d);

}  // namespace vba
