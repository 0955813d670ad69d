#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cliquespec::kernels {

// Dense double-precision primitives behind the eigensolver inner loops.
// A scalar reference implementation always exists; wider variants (AVX2 on
// x86-64, NEON on aarch64) are selected once at runtime from CPU capabilities.
// The selection can be pinned with set_backend() or the CLIQUESPEC_KERNELS
// environment variable ("scalar", "avx2", "neon", "auto").
struct Ops {
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x *= a
  void (*scal)(double a, double* x, std::size_t n);
  // y = A * x, A dense row-major n-by-n
  void (*gemv)(const double* a, const double* x, double* y, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available();
const Ops& avx2_ops();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

// Currently selected backend (resolved on first call).
const Ops& active();

// Pins the backend by name; returns false if the name is unknown or the
// backend is not usable on this machine.
bool set_backend(std::string_view name);

// Names of every backend usable on this machine ("scalar" first).
std::vector<std::string> available_backends();

double nrm2(const double* x, std::size_t n);

}  // namespace cliquespec::kernels
