#include <atomic>
#include <cstdlib>
#include <string>

#include "towerkit/kernels.hpp"

namespace towerkit::kernels {

#ifndef TOWERKIT_HAVE_AVX2
const Ops* avx2_ops() { return nullptr; }
#endif

namespace {

const Ops& ops_for(Isa isa) {
  if (isa == Isa::avx2 && avx2_ops() != nullptr) return *avx2_ops();
  return scalar_ops();
}

Isa detect() {
  if (const char* env = std::getenv("TOWERKIT_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && cpu_supports(Isa::avx2)) return Isa::avx2;
  }
  return cpu_supports(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

struct Selection {
  std::atomic<Isa> isa;
  std::atomic<const Ops*> ops;
  Selection() {
    const Isa picked = detect();
    isa.store(picked);
    ops.store(&ops_for(picked));
  }
};

Selection& selection() {
  static Selection s;
  return s;
}

}  // namespace

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2_ops() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return selection().isa.load(std::memory_order_relaxed); }

const Ops& active() { return *selection().ops.load(std::memory_order_relaxed); }

Isa force_isa(Isa isa) {
  const Isa effective = cpu_supports(isa) ? isa : Isa::scalar;
  selection().isa.store(effective);
  selection().ops.store(&ops_for(effective));
  return effective;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace towerkit::kernels
