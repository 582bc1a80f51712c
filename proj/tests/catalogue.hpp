#pragma once

// Operator specs shared by the test suites and the acceptance runner.
// Names read (otimes, oplus, z) carrier.

#include <string>
#include <vector>

#include "nondet_agg/opspec.hpp"

namespace nda::testing {

struct Entry {
  std::string name;
  std::string text;
};

inline OpSpec ops_of(const std::string& text) { return parse_opspec(text); }

inline const std::vector<Entry>& catalogue() {
  static const std::vector<Entry> entries{
      {"(+,+,0) mod 5", "carrier_a: mod 5\noplus: x + y\notimes: x + y\nz: 0\n"},
      {"(max,max,0) int 0..3", "carrier_a: int 0..3\noplus: max(x, y)\notimes: max(x, y)\nz: 0\n"},
      {"(+,max,0) int 0..3", "carrier_a: int 0..3\noplus: max(x, y)\notimes: x + y\nz: 0\n"},
      {"(-,+,0) mod 5", "carrier_a: mod 5\noplus: x + y\notimes: x - y\nz: 0\n"},
      {"(+,+,0) mod 7", "carrier_a: mod 7\noplus: x + y\notimes: x + y\nz: 0\n"},
      {"(*,*,1) mod 5", "carrier_a: mod 5\noplus: x * y\notimes: x * y\nz: 1\n"},
      {"(max,+,0) int 0..3", "carrier_a: int 0..3\noplus: x + y\notimes: max(x, y)\nz: 0\n"},
      {"(min,min,3) int 0..3", "carrier_a: int 0..3\noplus: min(x, y)\notimes: min(x, y)\nz: 3\n"},
      {"(+,left,0) mod 2", "carrier_a: mod 2\noplus: x\notimes: x + y\nz: 0\n"},
      {"(left,left,0) mod 3", "carrier_a: mod 3\noplus: x\notimes: x\nz: 0\n"},
      {"(-,-,0) mod 5", "carrier_a: mod 5\noplus: x - y\notimes: x - y\nz: 0\n"},
      {"(+,+1,0) mod 3", "carrier_a: mod 3\noplus: x + y + 1\notimes: x + y\nz: 0\n"},
      {"(+,*,0) mod 4", "carrier_a: mod 4\noplus: x * y\notimes: x + y\nz: 0\n"},
      {"(x+2y,+,0) mod 3", "carrier_a: mod 3\noplus: x + y\notimes: x + 2 * y\nz: 0\n"},
  };
  return entries;
}

}  // namespace nda::testing
