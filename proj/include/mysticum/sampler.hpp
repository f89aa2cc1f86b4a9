#pragma once

#include <cstdint>
#include <vector>

#include "mysticum/klein.hpp"

namespace mysticum {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then
/// the xor-shift-multiply finalizer with 0xbf58476d1ce4e5b9 and
/// 0x94d049bb133111eb. Specified here so other implementations can
/// reproduce campaigns bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Independent stream seed for (campaign seed, trial, resample attempt).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt);

/// Seeded source of bounded rationals, circle parameters and disk points.
///
/// Integers are drawn as next() % range. Rationals have numerator in
/// [-bound, bound] and denominator in [1, bound]. A circle parameter is
/// infinite with probability 1/64.
class RandomRationalSampler {
 public:
  explicit RandomRationalSampler(std::uint64_t seed, std::int64_t bound = 10000);

  std::uint64_t next() { return rng_.next(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

  Rat rational();
  Param param();
  /// k pairwise distinct parameters; sorted along the circle when convex.
  std::vector<Param> distinct_params(std::size_t k, bool convex);
  IdealPoint ideal_point() { return param_point(param()); }
  /// Rejection sample of the open unit disk with coordinates in (-1, 1).
  HPoint interior_point();

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  SplitMix64 rng_;
  std::int64_t bound_;
};

}  // namespace mysticum
