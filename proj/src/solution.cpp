#include "vba/solution.hpp"

namespace vba {

std::string_view to_string(Picker p) {
  return p == Picker::lexicographic ? "lexicographic" : "first-found";
}

std::optional<Picker> parse_picker(std::string_view name) {
  if (name == "lexicographic") return Picker::lexicographic;
  if (name == "first-found") return Picker::first_found;
  return std::nullopt;
}

}  // namespace vba
