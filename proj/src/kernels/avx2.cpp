// Built with -mavx2. Nothing here may run before cpu_supports(Isa::avx2).

#include <immintrin.h>

#include "towerkit/kernels.hpp"

namespace towerkit::kernels {
namespace {

constexpr std::size_t kLanes = 8;

void compose_avx2(const Point* p, const Point* q, Point* out, std::size_t n) {
  std::size_t i = 0;
  const auto* base = reinterpret_cast<const int*>(q);
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const __m256i img = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), img);
  }
  for (; i < n; ++i) out[i] = q[p[i]];
}

// AVX2 has no scatter; the scalar loop is already store-bound.
void invert_avx2(const Point* p, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[p[i]] = static_cast<Point>(i);
}

bool equal_avx2(const Point* a, const Point* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(va, vb)) != -1) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline __m256i lane_iota(std::size_t start) {
  const auto s = static_cast<int>(start);
  return _mm256_setr_epi32(s, s + 1, s + 2, s + 3, s + 4, s + 5, s + 6, s + 7);
}

bool is_identity_avx2(const Point* p, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(v, lane_iota(i))) != -1) return false;
  }
  for (; i < n; ++i)
    if (p[i] != i) return false;
  return true;
}

std::size_t moved_count_avx2(const Point* p, std::size_t n) {
  std::size_t moved = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const int fixed = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, lane_iota(i))));
    moved += kLanes - static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(fixed)));
  }
  for (; i < n; ++i) moved += (p[i] != i);
  return moved;
}

constexpr Ops kAvx2{compose_avx2, invert_avx2, equal_avx2, is_identity_avx2,
                    moved_count_avx2};

}  // namespace

const Ops* avx2_ops() { return &kAvx2; }

}  // namespace towerkit::kernels
