#include "vba/domain.hpp"

#include <algorithm>
#include <iterator>

#include "vba/errors.hpp"

namespace vba {

namespace {

void normalize(std::vector<VarId>& vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
}

}  // namespace

Domain::Domain(std::initializer_list<VarId> vars) : vars_(vars) {
  normalize(vars_);
}

Domain::Domain(std::vector<VarId> vars) : vars_(std::move(vars)) {
  normalize(vars_);
}

Domain Domain::first_n(std::uint32_t n) {
  std::vector<VarId> vars;
  vars.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) vars.push_back(VarId{i});
  return Domain(std::move(vars));
}

bool Domain::contains(VarId v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool Domain::includes(const Domain& other) const {
  return std::includes(vars_.begin(), vars_.end(), other.vars_.begin(),
                       other.vars_.end());
}

std::size_t Domain::position(VarId v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return vars_.size();
  return static_cast<std::size_t>(it - vars_.begin());
}

Domain join(const Domain& a, const Domain& b) {
  std::vector<VarId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return Domain(std::move(out));
}

Domain meet(const Domain& a, const Domain& b) {
  std::vector<VarId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return Domain(std::move(out));
}

Domain difference(const Domain& a, const Domain& b) {
  std::vector<VarId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return Domain(std::move(out));
}

std::vector<Domain> subsets(const Domain& d) {
  if (d.size() > 20) throw DomainError("subsets: domain too large to enumerate");
  const std::size_t n = d.size();
  std::vector<Domain> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<VarId> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) vars.push_back(d.vars()[i]);
    out.emplace_back(std::move(vars));
  }
  return out;
}

std::vector<Domain> interval(const Domain& lower, const Domain& upper) {
  if (!upper.includes(lower))
    throw DomainError("interval: " + to_string(lower) + " is not below " +
                      to_string(upper));
  std::vector<Domain> out;
  for (const Domain& extra : subsets(difference(upper, lower)))
    out.push_back(join(lower, extra));
  return out;
}

std::string to_string(const Domain& d) {
  std::string s = "{";
  bool first = true;
  for (VarId v : d) {
    if (!first) s += ",";
    first = false;
    s += "v" + std::to_string(index_of(v));
  }
  return s + "}";
}

}  // namespace vba
