#include "cliquespec/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace cliquespec::kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void gemv_scalar(const double* a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * n;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

constexpr Ops kScalarOps{dot_scalar, axpy_scalar, scal_scalar, gemv_scalar,
                         "scalar"};

const Ops* pick_default() {
  if (const char* env = std::getenv("CLIQUESPEC_KERNELS")) {
    std::string_view want(env);
    if (want == "scalar") return &kScalarOps;
#if defined(__x86_64__) || defined(_M_X64)
    if (want == "avx2" && avx2_available()) return &avx2_ops();
#endif
#if defined(__aarch64__)
    if (want == "neon") return &neon_ops();
#endif
    // fall through to auto on unknown/unavailable names
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return &avx2_ops();
#endif
#if defined(__aarch64__)
  return &neon_ops();
#endif
  return &kScalarOps;
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops& active() {
  const Ops* ops = g_active.load(std::memory_order_acquire);
  if (!ops) {
    ops = pick_default();
    g_active.store(ops, std::memory_order_release);
  }
  return *ops;
}

bool set_backend(std::string_view name) {
  const Ops* ops = nullptr;
  if (name == "scalar") {
    ops = &kScalarOps;
  } else if (name == "auto") {
    g_active.store(nullptr, std::memory_order_release);
    active();
    return true;
  }
#if defined(__x86_64__) || defined(_M_X64)
  else if (name == "avx2" && avx2_available()) {
    ops = &avx2_ops();
  }
#endif
#if defined(__aarch64__)
  else if (name == "neon") {
    ops = &neon_ops();
  }
#endif
  if (!ops) return false;
  g_active.store(ops, std::memory_order_release);
  return true;
}

std::vector<std::string> available_backends() {
  std::vector<std::string> out{"scalar"};
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) out.push_back("avx2");
#endif
#if defined(__aarch64__)
  out.push_back("neon");
#endif
  return out;
}

double nrm2(const double* x, std::size_t n) {
  return std::sqrt(active().dot(x, x, n));
}

}  // namespace cliquespec::kernels
