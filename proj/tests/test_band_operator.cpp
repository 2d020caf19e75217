#include <gtest/gtest.h>

#include "cxosc/band_operator.hpp"

using cxosc::Window;
using Op = cxosc::BandOperator<std::complex<double>>;
using Vec = Op::Vector;

namespace {

Vec ramp(const Window& w) {
  Vec v(w.size());
  for (long n = w.lo; n <= w.hi; ++n) {
    v(w.index(n)) = static_cast<double>(n);
  }
  return v;
}

}  // namespace

TEST(BandOperator, ShiftTracksValidSources) {
  const Window w{-5, 5};
  const auto up = Op::shift(w, 2, Vec::Ones(w.size()));
  EXPECT_EQ(up.valid_lo(), -5);
  EXPECT_EQ(up.valid_hi(), 3);
  EXPECT_EQ(up.margin(), 2);
  EXPECT_EQ(up.coefficient(1, -1), 1.0);
  EXPECT_EQ(up.coefficient(6, 4), 0.0);
  EXPECT_EQ(up.net_shift(), 2);
}

TEST(BandOperator, CompositionMatchesDense) {
  const Window w{-6, 6};
  const auto x = Op::shift(w, 1, ramp(w));
  const auto y = Op::shift(w, -2, Vec::Constant(w.size(), 3.0)) + Op::identity(w);
  const auto xy = x * y;
  const Op::Matrix dense = x.dense() * y.dense();
  for (long src = xy.valid_lo(); src <= xy.valid_hi(); ++src) {
    for (long dst = w.lo; dst <= w.hi; ++dst) {
      EXPECT_EQ(xy.coefficient(dst, src), dense(w.index(dst), w.index(src)));
    }
  }
  // y moves sources down by 2, so x*y loses nothing at the top but the bottom two
  EXPECT_EQ(xy.valid_lo(), w.lo + 2);
}

TEST(BandOperator, InteriorResidual) {
  const Window w{-8, 8};
  const auto a = Op::shift(w, -1, ramp(w));
  EXPECT_EQ(cxosc::interior_residual(a, a), 0.0);
  const auto b = Op::shift(w, -1, ramp(w) * 2.0);
  EXPECT_NEAR(cxosc::interior_residual(a, b), 8.0, 1e-15);
  EXPECT_NEAR(cxosc::interior_norm(Op::identity(w)), 1.0, 1e-15);
  EXPECT_FALSE(cxosc::first_interior_difference(a, a));
  const auto diff = cxosc::first_interior_difference(a, b);
  ASSERT_TRUE(diff);
  EXPECT_EQ(diff->second, -1);
}

TEST(BandOperator, EmptyInteriorThrows) {
  const Window w{-2, 2};
  const auto far = Op::shift(w, 3, Vec::Ones(w.size())) * Op::shift(w, 3, Vec::Ones(w.size()));
  EXPECT_FALSE(far.has_interior());
  EXPECT_THROW(cxosc::interior_residual(far, far), std::domain_error);
}
