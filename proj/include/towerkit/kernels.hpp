#pragma once

// Inner loops of permutation arithmetic.
//
// Every kernel has a scalar reference implementation. Wider variants are
// compiled into separate translation units with their own target flags and
// picked once at startup from what the CPU reports. The selection can be
// pinned with TOWERKIT_ISA=scalar|avx2 or force_isa() (tests use this to run
// both paths over identical inputs).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace towerkit::kernels {

using Point = std::uint32_t;

enum class Isa { scalar, avx2 };

struct Ops {
  // out[i] = q[p[i]]; the right-action product p*q.
  void (*compose)(const Point* p, const Point* q, Point* out, std::size_t n);
  // out[p[i]] = i
  void (*invert)(const Point* p, Point* out, std::size_t n);
  bool (*equal)(const Point* a, const Point* b, std::size_t n);
  bool (*is_identity)(const Point* p, std::size_t n);
  // Number of points x with p[x] != x.
  std::size_t (*moved_count)(const Point* p, std::size_t n);
};

const Ops& scalar_ops();
// Null when the variant was not compiled in.
const Ops* avx2_ops();

bool cpu_supports(Isa isa);
Isa active_isa();
const Ops& active();
// Falls back to scalar if `isa` is unavailable; returns the ISA in effect.
Isa force_isa(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace towerkit::kernels
