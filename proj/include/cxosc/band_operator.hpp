#pragma once

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

namespace cxosc {

/// Contiguous block of basis states |lo⟩..|hi⟩, lo ≤ hi, indices in Z.
struct Window {
  long lo = 0;
  long hi = 0;

  long size() const { return hi - lo + 1; }
  bool contains(long n) const { return n >= lo && n <= hi; }
  Eigen::Index index(long n) const { return static_cast<Eigen::Index>(n - lo); }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Operator on a finite window of basis states, stored as shift bands.
///
/// Band s holds c_s(n) for the action |n⟩ ↦ c_s(n)|n+s⟩, indexed by source
/// state. Each operator also carries the interval of source states on which
/// it is *valid*: states whose images under every intermediate factor of the
/// word that built it stayed inside the window. Coefficients outside that
/// interval are truncation artifacts; they are zeroed and never compared.
template <class Scalar>
class BandOperator {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Bands = std::map<long, Vector>;

  explicit BandOperator(Window window) : window_(window), valid_lo_(window.lo), valid_hi_(window.hi) {}

  static BandOperator identity(Window window) {
    return shift(window, 0, Vector::Constant(window.size(), Scalar(1)));
  }

  /// |n⟩ ↦ coefficients[n − lo] |n + s⟩. Valid on sources whose image stays in the window.
  static BandOperator shift(Window window, long s, Vector coefficients) {
    if (coefficients.size() != window.size()) {
      throw std::invalid_argument("BandOperator::shift: coefficient vector does not match window");
    }
    BandOperator op(window);
    op.valid_lo_ = std::max(window.lo, window.lo - s);
    op.valid_hi_ = std::min(window.hi, window.hi - s);
    op.bands_.emplace(s, std::move(coefficients));
    op.canonicalize();
    return op;
  }

  const Window& window() const { return window_; }
  long valid_lo() const { return valid_lo_; }
  long valid_hi() const { return valid_hi_; }
  bool is_valid(long n) const { return n >= valid_lo_ && n <= valid_hi_; }
  bool has_interior() const { return valid_lo_ <= valid_hi_; }
  /// Number of states trimmed from the more affected window edge.
  long margin() const {
    if (!has_interior()) {
      return window_.size();
    }
    return std::max(valid_lo_ - window_.lo, window_.hi - valid_hi_);
  }

  const Bands& bands() const { return bands_; }

  /// Shift of a single-band operator (a monomial word); empty otherwise.
  std::optional<long> net_shift() const {
    if (bands_.size() == 1) {
      return bands_.begin()->first;
    }
    return std::nullopt;
  }

  /// ⟨target| X |source⟩; zero for invalid sources.
  Scalar coefficient(long target, long source) const {
    if (!window_.contains(source) || !is_valid(source)) {
      return Scalar(0);
    }
    auto it = bands_.find(target - source);
    if (it == bands_.end()) {
      return Scalar(0);
    }
    return it->second(window_.index(source));
  }

  /// Dense window matrix; columns of invalid sources are zero.
  Matrix dense() const {
    const auto n = window_.size();
    Matrix out = Matrix::Constant(n, n, Scalar(0));
    for (const auto& [s, coeffs] : bands_) {
      for (long src = valid_lo_; src <= valid_hi_; ++src) {
        out(window_.index(src + s), window_.index(src)) = coeffs(window_.index(src));
      }
    }
    return out;
  }

  BandOperator& operator+=(const BandOperator& rhs) { return accumulate(rhs, Scalar(1)); }
  BandOperator& operator-=(const BandOperator& rhs) { return accumulate(rhs, Scalar(-1)); }

  BandOperator& operator*=(const Scalar& factor) {
    for (auto& [s, coeffs] : bands_) {
      for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        coeffs(i) = factor * coeffs(i);
      }
    }
    drop_zero_bands();
    return *this;
  }

  friend BandOperator operator+(BandOperator lhs, const BandOperator& rhs) { return lhs += rhs; }
  friend BandOperator operator-(BandOperator lhs, const BandOperator& rhs) { return lhs -= rhs; }
  friend BandOperator operator*(const Scalar& factor, BandOperator op) { return op *= factor; }
  friend BandOperator operator*(BandOperator op, const Scalar& factor) { return op *= factor; }
  BandOperator operator-() const { return Scalar(-1) * *this; }

  /// Composition X·Y (apply Y first).
  friend BandOperator operator*(const BandOperator& x, const BandOperator& y) {
    x.require_same_window(y);
    BandOperator out(x.window_);
    out.valid_lo_ = y.valid_lo_;
    out.valid_hi_ = y.valid_hi_;
    for (const auto& [sy, cy] : y.bands_) {
      out.valid_lo_ = std::max(out.valid_lo_, x.valid_lo_ - sy);
      out.valid_hi_ = std::min(out.valid_hi_, x.valid_hi_ - sy);
    }
    if (!out.has_interior()) {
      return out;
    }
    const auto& w = out.window_;
    const Eigen::Index first = w.index(out.valid_lo_);
    const Eigen::Index length = out.valid_hi_ - out.valid_lo_ + 1;
    for (const auto& [sy, cy] : y.bands_) {
      for (const auto& [sx, cx] : x.bands_) {
        auto [it, inserted] = out.bands_.try_emplace(sx + sy, Vector::Constant(w.size(), Scalar(0)));
        auto target = it->second.segment(first, length);
        for (Eigen::Index i = 0; i < length; ++i) {
          target(i) += cx(first + sy + i) * cy(first + i);
        }
      }
    }
    out.drop_zero_bands();
    return out;
  }

 private:
  void require_same_window(const BandOperator& other) const {
    if (!(window_ == other.window_)) {
      throw std::invalid_argument("BandOperator: operands live on different windows");
    }
  }

  BandOperator& accumulate(const BandOperator& rhs, const Scalar& sign) {
    require_same_window(rhs);
    valid_lo_ = std::max(valid_lo_, rhs.valid_lo_);
    valid_hi_ = std::min(valid_hi_, rhs.valid_hi_);
    for (const auto& [s, coeffs] : rhs.bands_) {
      auto [it, inserted] = bands_.try_emplace(s, Vector::Constant(window_.size(), Scalar(0)));
      for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        it->second(i) += sign * coeffs(i);
      }
    }
    canonicalize();
    return *this;
  }

  void canonicalize() {
    for (auto& [s, coeffs] : bands_) {
      for (long src = window_.lo; src <= window_.hi; ++src) {
        if (!is_valid(src)) {
          coeffs(window_.index(src)) = Scalar(0);
        }
      }
    }
    drop_zero_bands();
  }

  void drop_zero_bands() {
    for (auto it = bands_.begin(); it != bands_.end();) {
      bool zero = true;
      for (Eigen::Index i = 0; i < it->second.size() && zero; ++i) {
        zero = it->second(i) == Scalar(0);
      }
      it = zero ? bands_.erase(it) : std::next(it);
    }
  }

  Window window_;
  long valid_lo_;
  long valid_hi_;
  Bands bands_;
};

template <class Scalar>
BandOperator<Scalar> commutator(const BandOperator<Scalar>& x, const BandOperator<Scalar>& y) {
  return x * y - y * x;
}

/// Sources valid for both operators; throws std::domain_error when empty.
template <class Scalar>
std::pair<long, long> common_interior(const BandOperator<Scalar>& x, const BandOperator<Scalar>& y) {
  const long lo = std::max(x.valid_lo(), y.valid_lo());
  const long hi = std::min(x.valid_hi(), y.valid_hi());
  if (lo > hi) {
    throw std::domain_error("interior_residual: operators share no valid interior states");
  }
  return {lo, hi};
}

/// max over common valid sources n of ‖(X − Y)|n⟩‖₂.
inline double interior_residual(const BandOperator<std::complex<double>>& x,
                                const BandOperator<std::complex<double>>& y) {
  const auto [lo, hi] = common_interior(x, y);
  std::map<long, bool> shifts;
  for (const auto& band : x.bands()) shifts[band.first] = true;
  for (const auto& band : y.bands()) shifts[band.first] = true;
  double worst = 0.0;
  for (long n = lo; n <= hi; ++n) {
    double column = 0.0;
    for (const auto& [s, unused] : shifts) {
      column += std::norm(x.coefficient(n + s, n) - y.coefficient(n + s, n));
    }
    worst = std::max(worst, std::sqrt(column));
  }
  return worst;
}

/// max over common valid sources of ‖X|n⟩‖₂.
inline double interior_norm(const BandOperator<std::complex<double>>& x) {
  return interior_residual(x, BandOperator<std::complex<double>>(x.window()));
}

/// First (source, shift) where X and Y differ on their common interior.
template <class Scalar>
std::optional<std::pair<long, long>> first_interior_difference(const BandOperator<Scalar>& x,
                                                               const BandOperator<Scalar>& y) {
  const auto [lo, hi] = common_interior(x, y);
  std::map<long, bool> shifts;
  for (const auto& band : x.bands()) shifts[band.first] = true;
  for (const auto& band : y.bands()) shifts[band.first] = true;
  for (long n = lo; n <= hi; ++n) {
    for (const auto& [s, unused] : shifts) {
      if (!(x.coefficient(n + s, n) == y.coefficient(n + s, n))) {
        return std::pair{n, s};
      }
    }
  }
  return std::nullopt;
}

}  // namespace cxosc
