#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cliquespec/kernels.hpp"

using namespace cliquespec;

namespace {

std::vector<double> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar backend always reported available") {
  auto names = kernels::available_backends();
  REQUIRE(!names.empty());
  CHECK(names.front() == "scalar");
}

TEST_CASE("wide backends agree with scalar reference") {
  std::mt19937_64 rng(20240811);
  const auto& ref = kernels::scalar_ops();
  for (const auto& name : kernels::available_backends()) {
    if (name == "scalar") continue;
    REQUIRE(kernels::set_backend(name));
    const auto& ops = kernels::active();
    CAPTURE(name);

    // Sizes straddling the vector width, including remainders.
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 64u,
                          100u, 257u}) {
      auto x = random_vec(n, rng);
      auto y = random_vec(n, rng);

      double want = ref.dot(x.data(), y.data(), n);
      double got = ops.dot(x.data(), y.data(), n);
      CHECK(std::abs(want - got) <= 1e-13 * (1.0 + std::abs(want)) * n);

      auto y2 = y;
      ref.axpy(0.37, x.data(), y.data(), n);
      ops.axpy(0.37, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(y[i] == doctest::Approx(y2[i]).epsilon(1e-14));

      auto x2 = x;
      ref.scal(-1.75, x.data(), n);
      ops.scal(-1.75, x2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(x[i] == x2[i]);

      auto a = random_vec(n * n, rng);
      auto v = random_vec(n, rng);
      std::vector<double> w1(n), w2(n);
      ref.gemv(a.data(), v.data(), w1.data(), n);
      ops.gemv(a.data(), v.data(), w2.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(w1[i] - w2[i]) <= 1e-13 * (1.0 + std::abs(w1[i])) * n);
    }
  }
  kernels::set_backend("auto");
}

TEST_CASE("dot is symmetric and nrm2 matches dot") {
  std::mt19937_64 rng(7);
  const auto& ops = kernels::active();
  for (int rep = 0; rep < 20; ++rep) {
    std::size_t n = 1 + rng() % 200;
    auto x = random_vec(n, rng);
    auto y = random_vec(n, rng);
    CHECK(ops.dot(x.data(), y.data(), n) ==
          doctest::Approx(ops.dot(y.data(), x.data(), n)));
    CHECK(kernels::nrm2(x.data(), n) ==
          doctest::Approx(std::sqrt(ops.dot(x.data(), x.data(), n))));
  }
}

TEST_CASE("backend pinning round-trips") {
  REQUIRE(kernels::set_backend("scalar"));
  CHECK(std::string(kernels::active().name) == "scalar");
  CHECK(!kernels::set_backend("no-such-backend"));
  CHECK(std::string(kernels::active().name) == "scalar");
  REQUIRE(kernels::set_backend("auto"));
}
