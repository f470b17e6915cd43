#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vba/config.hpp"
#include "vba/domain.hpp"

namespace vba::detail {

/// Row-major strides, last position fastest.
inline std::vector<std::size_t> strides_for(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

/// Strides of a table over `sub` expressed per position of `super`;
/// variables outside `sub` get stride 0. `sub_dims` are the sub table dims.
inline std::vector<std::size_t> embedded_strides(const Domain& super, const Domain& sub,
                                                 std::span<const std::size_t> sub_dims) {
  const auto own = strides_for(sub_dims);
  std::vector<std::size_t> out(super.size(), 0);
  for (std::size_t i = 0; i < super.size(); ++i) {
    const std::size_t pos = sub.position(super.vars()[i]);
    if (pos < sub.size()) out[i] = own[pos];
  }
  return out;
}

/// Walks every assignment of `dims` in lexicographic order while keeping
/// one linear offset per strided view.
class Odometer {
 public:
  Odometer(std::vector<std::size_t> dims, std::vector<std::vector<std::size_t>> views,
           std::vector<std::size_t> base = {})
      : dims_(std::move(dims)),
        views_(std::move(views)),
        values_(dims_.size(), 0),
        offsets_(base.empty() ? std::vector<std::size_t>(views_.size(), 0) : std::move(base)) {
    for (std::size_t d : dims_)
      if (d == 0) done_ = true;
  }

  bool done() const noexcept { return done_; }
  std::size_t offset(std::size_t view) const { return offsets_[view]; }
  const std::vector<Value>& values() const noexcept { return values_; }

  void next() {
    for (std::size_t pos = dims_.size(); pos-- > 0;) {
      if (values_[pos] + 1 < dims_[pos]) {
        ++values_[pos];
        for (std::size_t v = 0; v < views_.size(); ++v) offsets_[v] += views_[v][pos];
        return;
      }
      for (std::size_t v = 0; v < views_.size(); ++v)
        offsets_[v] -= views_[v][pos] * values_[pos];
      values_[pos] = 0;
    }
    done_ = true;
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::size_t>> views_;
  std::vector<Value> values_;
  std::vector<std::size_t> offsets_;
  bool done_ = false;
};

}  // namespace vba::detail
