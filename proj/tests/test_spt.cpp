#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "ptcs/quad.hpp"
#include "ptcs/spt.hpp"

using namespace ptcs::spt;
using std::numbers::pi;

namespace {

double overlap(const SPTConfig& cfg, unsigned n, unsigned m) {
  return ptcs::quad::integrate_finite([&](double x) { return eigenstate(cfg, n, x) * eigenstate(cfg, m, x); }, 0.0,
                                      cfg.L, 1e-13)
      .value;
}

}  // namespace

TEST(Potential, GeneralFamily) {
  EXPECT_EQ(pt_potential({1.0, 1.0}, 0.7), 0.0);
  EXPECT_NEAR(pt_potential({2.0, 1.0}, pi / 2.0), 1.0, 1e-15);
  for (double nu : {0.3, 1.0, 2.5}) {
    for (double x : {0.2, 1.0, 2.9}) {
      EXPECT_NEAR(pt_potential({nu + 1.0, nu + 1.0}, x), spt_potential({nu}, x), 1e-12 * spt_potential({nu}, x));
    }
  }
  EXPECT_THROW(pt_potential({2.0, 2.0}, 0.0), ptcs::DomainError);
}

TEST(Potential, Symmetric) {
  EXPECT_EQ(spt_potential({0.0}, 1.3), 0.0);
  EXPECT_NEAR(spt_potential({1.0}, pi / 2.0), 2.0, 1e-15);
  EXPECT_NEAR(spt_potential({1.7}, 0.4), spt_potential({1.7}, pi - 0.4), 1e-12);
  EXPECT_THROW(spt_potential({1.0}, pi), ptcs::DomainError);
  EXPECT_THROW(spt_potential({-1.0}, 1.0), ptcs::DomainError);
}

TEST(Eigenvalue, Spectrum) {
  EXPECT_EQ(eigenvalue({0.0}, 0), 1.0);
  EXPECT_EQ(eigenvalue({0.5}, 2), 12.25);
  for (unsigned n = 0; n < 10; ++n) {
    EXPECT_NEAR(eigenvalue({0.7}, n + 1) - eigenvalue({0.7}, n), 2.0 * (n + 0.7) + 3.0, 1e-12);
  }
}

TEST(Eigenstate, SquareWellForm) {
  for (unsigned n = 0; n < 6; ++n) {
    for (double x : {0.1, 1.0, 2.2}) {
      EXPECT_NEAR(eigenstate({0.0}, n, x), std::sqrt(2.0 / pi) * std::sin((n + 1) * x), 1e-15);
    }
  }
  EXPECT_EQ(eigenstate({1.3}, 4, 0.0), 0.0);
  EXPECT_EQ(eigenstate({1.3}, 4, pi), 0.0);
}

TEST(Eigenstate, GegenbauerFormAgreesWithSineAtSmallNu) {
  // nu -> 0 continuity of the Gegenbauer form toward the sine form
  for (unsigned n = 0; n <= 5; ++n) {
    double last = INFINITY;
    for (double nu : {0.1, 0.01, 0.001}) {
      double sup = 0.0;
      for (double x = 0.01; x < pi; x += 0.01) {
        sup = std::max(sup, std::fabs(eigenstate({nu}, n, x) - std::sqrt(2.0 / pi) * std::sin((n + 1) * x)));
      }
      EXPECT_LT(sup, last) << n << " " << nu;
      last = sup;
    }
    EXPECT_LT(last, 1e-2);
  }
}

TEST(Eigenstate, Orthonormality) {
  for (double nu : {0.0, 0.5, 1.0, 2.5}) {
    const SPTConfig cfg{nu};
    for (unsigned n = 0; n <= 15; ++n) {
      for (unsigned m = n; m <= 15; ++m) {
        EXPECT_NEAR(overlap(cfg, n, m), n == m ? 1.0 : 0.0, 1e-9) << nu << " " << n << " " << m;
      }
    }
  }
}

TEST(Eigenstate, GeneralWidth) {
  const SPTConfig cfg{1.5, 2.0, 1.0};
  EXPECT_NEAR(overlap(cfg, 3, 3), 1.0, 1e-11);
  EXPECT_NEAR(overlap(cfg, 2, 3), 0.0, 1e-11);
  EXPECT_NEAR(eigenstate({0.0, 3.0}, 1, 0.5), std::sqrt(2.0 / 3.0) * std::sin(2.0 * pi * 0.5 / 3.0), 1e-15);
}

TEST(Eigenstate, BasisMatchesScalar) {
  for (double nu : {0.0, 0.5, 2.5}) {
    const EigenBasis basis({nu}, 40);
    for (double x : {0.0, 0.3, 1.7, pi}) {
      const auto v = basis.evaluate(x);
      for (unsigned n = 0; n < 40; ++n) EXPECT_NEAR(v[n], eigenstate({nu}, n, x), 1e-13);
    }
  }
}

TEST(EigenstateGrid, Examples) {
  const auto g = eigenstate_grid({0.0}, 0, ptcs::GridSpec{0.0, pi, 3});
  ASSERT_EQ(g.values.size(), 3u);
  EXPECT_EQ(g.values[0].real(), 0.0);
  EXPECT_NEAR(g.values[1].real(), std::sqrt(2.0 / pi), 1e-15);
  EXPECT_EQ(g.values[2].real(), 0.0);
  EXPECT_TRUE(g.consistent());

  const std::vector<double> none;
  EXPECT_TRUE(eigenstate_grid({1.0}, 2, std::span<const double>(none)).values.empty());

  const auto fine = eigenstate_grid({1.0}, 2, ptcs::GridSpec{0.0, pi, 101});
  const double h = pi / 100.0;
  double norm = 0.0;
  for (const auto& v : fine.values) norm += std::norm(v) * h;  // endpoints vanish
  EXPECT_NEAR(norm, 1.0, 1e-3);
}

TEST(EigenstateGrid, ParseSpec) {
  const auto g = ptcs::GridSpec::parse("0:pi:5");
  EXPECT_EQ(g.count, 5u);
  EXPECT_EQ(g.stop, pi);
  EXPECT_NEAR(ptcs::GridSpec::parse("pi/4:3*pi/4:2").start, pi / 4.0, 1e-16);
  EXPECT_EQ(ptcs::GridSpec::parse("-pi:2pi:3").stop, 2.0 * pi);
  EXPECT_THROW(ptcs::GridSpec::parse("1:0:5"), ptcs::DomainError);
  EXPECT_THROW(ptcs::GridSpec::parse("0:pi:1"), ptcs::DomainError);
  EXPECT_THROW(ptcs::GridSpec::parse("0:pi"), ptcs::DomainError);
  EXPECT_THROW(ptcs::GridSpec::parse("0:x:4"), ptcs::DomainError);
}

TEST(Eigenstate, EigenEquationResidual) {
  // five-point central second difference on a 4001-point grid
  for (double nu : {0.5, 1.5}) {
    const SPTConfig cfg{nu};
    const std::size_t count = 4001;
    const double h = pi / (count - 1);
    for (unsigned n = 0; n <= 8; ++n) {
      std::vector<double> phi(count);
      for (std::size_t i = 0; i < count; ++i) phi[i] = eigenstate(cfg, n, i * h);
      double sup = 0.0;
      for (std::size_t i = 2; i + 2 < count; ++i) {
        const double x = i * h;
        if (x < 0.1 || x > pi - 0.1) continue;
        const double d2 = (-phi[i - 2] + 16 * phi[i - 1] - 30 * phi[i] + 16 * phi[i + 1] - phi[i + 2]) / (12 * h * h);
        sup = std::max(sup, std::fabs(-d2 + spt_potential(cfg, x) * phi[i] - eigenvalue(cfg, n) * phi[i]));
      }
      EXPECT_LE(sup, 1e-4) << nu << " " << n;
    }
  }
}
