#pragma once

#include <initializer_list>
#include <vector>

#include "hnq/representation.hpp"

namespace testing_support {

inline hnq::RationalMatrix mat(std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
  hnq::RationalMatrix m(rows, cols, hnq::Rational(0));
  std::size_t i = 0;
  for (long e : entries) {
    m(i / cols, i % cols) = e;
    ++i;
  }
  return m;
}

inline hnq::Scalar q(long n, long d = 1) { return hnq::Scalar(hnq::make_rational(n, d)); }

inline std::vector<hnq::Scalar> scalars(std::initializer_list<long> xs) {
  std::vector<hnq::Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace testing_support
