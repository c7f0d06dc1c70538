#include "artin/artin_run.hpp"

namespace artin {
namespace {

i128 wide(const char* s) { return *parse_i128(s); }

std::vector<RecordInstance> make_builtin_records() {
  std::vector<RecordInstance> out;
  // Gallot's 2004 run: f(X) = 32 X^2 + 39721664 X + 182215381147285848449,
  // g = 593856338459898; 38639 distinct primes, produced by the arguments
  // n = X + 620651 of the completed-square form lying in [620651, 1749283].
  out.push_back({
      "gallot2004",
      Polynomial({wide("182215381147285848449"), wide("39721664"), wide("32")}),
      wide("593856338459898"),
      38639,
      620651,
      1749283,
  });
  return out;
}

}  // namespace

const std::vector<RecordInstance>& builtin_records() {
  static const std::vector<RecordInstance> records = make_builtin_records();
  return records;
}

std::optional<RecordInstance> find_record(std::string_view name) {
  for (const RecordInstance& r : builtin_records())
    if (r.name == name) return r;
  return std::nullopt;
}

}  // namespace artin
