#pragma once

#include "doctest.h"
#include "oracles.hpp"

namespace doctest {
template <>
struct StringMaker<ifs_cstar::Point> {
  static String convert(const ifs_cstar::Point& p) { return ifs_cstar::to_string(p).c_str(); }
};
template <>
struct StringMaker<ifs_cstar::IndexWord> {
  static String convert(const ifs_cstar::IndexWord& w) { return ifs_cstar::to_string(w).c_str(); }
};
}  // namespace doctest
