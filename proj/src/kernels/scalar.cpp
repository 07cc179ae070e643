#include "towerkit/kernels.hpp"

namespace towerkit::kernels {
namespace {

void compose_scalar(const Point* p, const Point* q, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = q[p[i]];
}

void invert_scalar(const Point* p, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[p[i]] = static_cast<Point>(i);
}

bool equal_scalar(const Point* a, const Point* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_identity_scalar(const Point* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != i) return false;
  return true;
}

std::size_t moved_count_scalar(const Point* p, std::size_t n) {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < n; ++i) moved += (p[i] != i);
  return moved;
}

constexpr Ops kScalar{compose_scalar, invert_scalar, equal_scalar,
                      is_identity_scalar, moved_count_scalar};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

}  // namespace towerkit::kernels
