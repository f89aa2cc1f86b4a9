#include "mysticum/sampler.hpp"

#include <algorithm>

namespace mysticum {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt) {
  SplitMix64 a(seed);
  SplitMix64 b(a.next() ^ trial);
  SplitMix64 c(b.next() ^ attempt);
  return c.next();
}

RandomRationalSampler::RandomRationalSampler(std::uint64_t seed, std::int64_t bound) : rng_(seed), bound_(bound) {}

std::int64_t RandomRationalSampler::integer(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rat RandomRationalSampler::rational() {
  const std::int64_t num = integer(-bound_, bound_);
  const std::int64_t den = integer(1, bound_);
  return Rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

Param RandomRationalSampler::param() {
  if (below(64) == 0) return Param::infinity();
  return Param(rational());
}

std::vector<Param> RandomRationalSampler::distinct_params(std::size_t k, bool convex) {
  std::vector<Param> out;
  while (out.size() < k) {
    Param t = param();
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  if (convex) std::sort(out.begin(), out.end());
  return out;
}

HPoint RandomRationalSampler::interior_point() {
  for (;;) {
    const std::int64_t den = integer(1, bound_);
    const Rat x(BigInt(static_cast<long>(integer(-den + 1, den - 1))), BigInt(static_cast<long>(den)));
    const std::int64_t den2 = integer(1, bound_);
    const Rat y(BigInt(static_cast<long>(integer(-den2 + 1, den2 - 1))), BigInt(static_cast<long>(den2)));
    if (x * x + y * y < Rat(1)) return HPoint::affine(x, y);
  }
}

}  // namespace mysticum
