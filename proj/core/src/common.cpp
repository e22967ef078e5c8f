#include "cyclocode/common.hpp"

#include <algorithm>

namespace cyclo {

std::string u128_str(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

int64_t checked_pow(int64_t base, int exp, int64_t limit) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) return -1;
    r *= base;
  }
  return r;
}

}  // namespace cyclo
