#include "twobridge/knot_table.hpp"

namespace twobridge {

const std::vector<NamedKnot>& knot_table() {
  static const std::vector<NamedKnot> table = [] {
    struct Row {
      const char* name;
      int alpha;
      int beta;
    };
    static constexpr Row rows[] = {
        {"3_1", 3, 1},     {"4_1", 5, 2},     {"5_1", 5, 1},     {"5_2", 7, 3},    {"6_1", 9, 7},
        {"6_2", 11, 3},    {"6_3", 13, 5},    {"7_1", 7, 1},     {"7_2", 11, 5},   {"7_3", 13, 4},
        {"7_4", 15, 4},    {"7_5", 17, 5},    {"7_6", 19, 7},    {"7_7", 21, 8},   {"8_1", 13, 11},
        {"8_3", 17, 4},    {"8_8", 25, 9},    {"8_9", 25, 7},    {"8_12", 29, 12}, {"8_13", 29, 11},
        {"9_14", 37, 14},  {"9_19", 41, 16},  {"9_27", 49, 19},
    };
    std::vector<NamedKnot> out;
    for (const auto& r : rows) out.push_back({r.name, SchubertForm(r.alpha, r.beta)});
    return out;
  }();
  return table;
}

std::optional<std::string> knot_name(const SchubertForm& s) {
  const BigInt key = class_key(s);
  for (const auto& k : knot_table()) {
    if (k.form.alpha() == s.alpha() && class_key(k.form) == key) return k.name;
  }
  return std::nullopt;
}

std::optional<SchubertForm> lookup_knot(std::string_view name) {
  for (const auto& k : knot_table()) {
    if (k.name == name) return k.form;
  }
  return std::nullopt;
}

}  // namespace twobridge
