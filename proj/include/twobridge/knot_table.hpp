#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/knot.hpp"

namespace twobridge {

struct NamedKnot {
  std::string name;  // Rolfsen name, e.g. "9_27"
  SchubertForm form;
};

/// Embedded fixture: Rolfsen names of small two-bridge knots.
const std::vector<NamedKnot>& knot_table();

/// Rolfsen name of s up to mirror image, if it is in the table.
std::optional<std::string> knot_name(const SchubertForm& s);

std::optional<SchubertForm> lookup_knot(std::string_view name);

}  // namespace twobridge
