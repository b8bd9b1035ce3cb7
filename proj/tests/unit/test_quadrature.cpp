#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qtate/errors.hpp"
#include "qtate/grid.hpp"
#include "qtate/parallel.hpp"
#include "qtate/quadrature.hpp"

using namespace qtate;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (std::size_t n : {1u, 2u, 5u, 16u, 40u}) {
    const auto& rule = gauss_legendre(n);
    for (std::size_t p = 0; p < 2 * n; ++p) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], static_cast<double>(p));
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1.0);
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("panel quadrature and refinement") {
  const std::vector<double> edges{0.0, 0.5, 1.0, 2.0};
  const auto value = integrate_panels([](double x) { return std::complex<double>(std::exp(x), 0.0); }, edges, 8);
  CHECK(value.real() == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-14));
  const auto fine = refine_panels(edges);
  CHECK(fine == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0});
  const auto osc = integrate_with_doubling([](double x) { return std::complex<double>(std::cos(40.0 * x), 0.0); },
                                           {0.0, 1.0}, 8, 1e-13);
  CHECK(osc.real() == doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-12));
  CHECK_THROWS_AS(integrate_with_doubling([](double x) { return std::complex<double>(std::cos(1e5 * x), 0.0); },
                                          {0.0, 1.0}, 4, 1e-14, 2),
                  ResolutionError);
}

TEST_CASE("Richardson table removes integer powers of h") {
  // f(h) = 3 + 2h - h^2 + 0.5 h^3 exactly
  std::vector<double> samples;
  for (int k = 0; k < 4; ++k) {
    const double h = 0.1 / std::ldexp(1.0, k);
    samples.push_back(3.0 + 2.0 * h - h * h + 0.5 * h * h * h);
  }
  const auto table = richardson_table(samples);
  REQUIRE(table.size() == 4);
  CHECK(table.back().front() == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("uniform grids") {
  const UniformGrid g = UniformGrid::centered(2.0, 0.25);
  CHECK(g.count == 17);
  CHECK(g.point(8) == 0.0);
  CHECK(g.front() == -2.0);
  CHECK(g.back() == 2.0);
  CHECK(g.symmetric());
  CHECK(g.half_width() == 2.0);
  CHECK_THROWS_AS(UniformGrid::centered(1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(UniformGrid::centered(1.0, -0.5), std::invalid_argument);
  CHECK_FALSE((UniformGrid{0.0, 1.0, 4}).symmetric());
}

TEST_CASE("parallel_for visits each index once and propagates failures") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(100,
                               [](std::size_t i) {
                                 if (i == 37) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
  // nested calls are allowed
  std::atomic<int> total{0};
  parallel_for(4, [&](std::size_t) { parallel_for(5, [&](std::size_t) { total++; }); });
  CHECK(total.load() == 20);
}

TEST_CASE("thread count honours the environment") {
  setenv("QTATE_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  setenv("QTATE_THREADS", "zero", 1);
  CHECK(thread_count() >= 1);
  unsetenv("QTATE_THREADS");
  CHECK(thread_count() >= 1);
}
