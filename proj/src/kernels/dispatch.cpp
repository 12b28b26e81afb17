#include <cstdlib>
#include <string>

#include "harmconv/kernels.hpp"

namespace harmconv::kernels {

std::string_view to_string(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool avx2_available() {
#if defined(HARMCONV_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* env = std::getenv("HARMCONV_ISA");
    const std::string choice = env ? env : "auto";
    if (choice == "scalar") return Isa::Scalar;
    return avx2_available() ? Isa::Avx2 : Isa::Scalar;
  }();
  return isa;
}

void derivatives(const DerivativeParams& params, PointsIn in, DerivativesOut out, Isa isa) {
#if defined(HARMCONV_HAVE_AVX2)
  if (isa == Isa::Avx2 && avx2_available()) {
    derivatives_avx2(params, in, out);
    return;
  }
#endif
  (void)isa;
  derivatives_scalar(params, in, out);
}

}  // namespace harmconv::kernels
