#pragma once

#include <cstdint>
#include <vector>

#include "lfree/core.hpp"
#include "lfree/detect.hpp"

namespace lfree {

/// A 3-AP-free subset of [1,n]: the larger of Behrend's digit-sphere sets
/// (digits < d in base 2d-1, densest squared-norm shell) and the base-3
/// numbers without digit 2. Re-verified before returning.
GroundSet behrend_set(Value n);

/// Behrend-type set as plain sorted values in [0, n).
std::vector<Value> behrend_values(Value n);

struct DeletionOptions {
  /// Fresh derived seeds are tried until |A| > |B| p / 4 or this many attempts ran.
  int max_attempts = 4;
  DetectOptions detect;
};

struct DeletionAttempt {
  std::uint64_t seed = 0;
  std::size_t sampled = 0;
  std::size_t bad = 0;
  std::size_t result = 0;
};

struct DeletionReport {
  Value n = 0;
  Signature signature;
  std::uint64_t seed = 0;
  std::uint64_t seed_used = 0;
  std::size_t behrend_size = 0;
  double omega = 0;
  double p_used = 0;
  GroundSet sampled;
  GroundSet bad;
  GroundSet result;
  std::vector<DeletionAttempt> attempts;
};

/// Samples each element of behrend_set(n) with p = (1/2) n^((r - S - w)/(P - 1)),
/// w = 1 - log|B|/log n, and removes the maximum of every obstruction.
DeletionReport random_deletion(Value n, const Signature& sig, std::uint64_t seed, const DeletionOptions& options = {});

bool is_prime(std::int64_t p);

/// Smallest generator of the multiplicative group mod an odd prime p.
std::int64_t primitive_root(std::int64_t p);

/// {(x1,x2,x3) in [1,p-2]^3 : t^x1 + t^x2 + t^x3 = 1 mod p} in Z_{p-1}^3, t = primitive_root(p).
GroundSet zp3_construction(std::int64_t p);

/// phi(x) = x1 + x2 (2 n1) + x3 (2 n1)(2 n2) + ...; image in [0, 2^(k-1) n1...nk).
Value mixed_radix_value(const Element& x, const std::vector<Value>& moduli);
GroundSet mixed_radix_embed(const GroundSet& a);

/// Largest prime p >= 5 with 4(p-1)^3 <= n.
std::int64_t l222_prime(Value n);

/// zp3_construction(l222_prime(n)) embedded into [0, n).
GroundSet integer_l222_construction(Value n);

}  // namespace lfree
