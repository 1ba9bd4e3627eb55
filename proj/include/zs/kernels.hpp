#pragma once

// Direct-summation kernels.
//
// sum_range_serial is the reference: one compensated accumulator walked from
// `first` to `last`. sum_range_blocked cuts the range into fixed blocks of
// kBlockSize terms, sums each block like the reference, and folds the block
// partials in block order. The block partition depends only on the range, so
// the OpenMP variant produces the same bits for any thread count.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "zs/core.hpp"

#if defined(ZS_HAVE_OPENMP)
#include <omp.h>
#endif

namespace zs::kernels {

inline constexpr std::int64_t kBlockSize = 4096;
inline constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 16;

namespace detail {

// Neumaier's variant of Kahan summation on one real lane.
struct Lane {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

template <class T>
struct is_complex_array : std::false_type {};
template <std::size_t N>
struct is_complex_array<std::array<Complex, N>> : std::true_type {};

}  // namespace detail

/// Compensated accumulator for Complex or std::array<Complex, N> values.
template <class T>
class CompensatedSum {
public:
  void add(const T& v) {
    if constexpr (std::is_same_v<T, Complex>) {
      lanes_[0].add(v.real());
      lanes_[1].add(v.imag());
    } else {
      static_assert(detail::is_complex_array<T>::value, "unsupported accumulator type");
      for (std::size_t i = 0; i < v.size(); ++i) {
        lanes_[2 * i].add(v[i].real());
        lanes_[2 * i + 1].add(v[i].imag());
      }
    }
  }

  T value() const {
    if constexpr (std::is_same_v<T, Complex>) {
      return {lanes_[0].value(), lanes_[1].value()};
    } else {
      T out{};
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = Complex(lanes_[2 * i].value(), lanes_[2 * i + 1].value());
      return out;
    }
  }

private:
  static constexpr std::size_t lane_count() {
    if constexpr (std::is_same_v<T, Complex>)
      return 2;
    else
      return 2 * std::tuple_size_v<T>;
  }
  std::array<detail::Lane, lane_count()> lanes_{};
};

template <class T>
inline double magnitude(const T& v) {
  if constexpr (std::is_same_v<T, Complex>)
    return std::abs(v);
  else
    return std::abs(v[0]);
}

template <class T>
struct RangeSum {
  T value{};
  double abs_sum = 0.0;  // Σ |term| (first component for arrays), for rounding estimates
  std::int64_t count = 0;
};

/// Reference kernel: Σ_{n=first}^{last} term(n), walked in order.
template <class T, class F>
RangeSum<T> sum_range_serial(std::int64_t first, std::int64_t last, F&& term) {
  RangeSum<T> out;
  if (last < first) return out;
  CompensatedSum<T> acc;
  detail::Lane abs_acc;
  for (std::int64_t n = first; n <= last; ++n) {
    const T t = term(n);
    acc.add(t);
    abs_acc.add(magnitude(t));
  }
  out.value = acc.value();
  out.abs_sum = abs_acc.value();
  out.count = last - first + 1;
  return out;
}

/// Blocked kernel; `parallel` distributes blocks over OpenMP threads.
template <class T, class F>
RangeSum<T> sum_range_blocked(std::int64_t first, std::int64_t last, F&& term, bool parallel) {
  RangeSum<T> out;
  if (last < first) return out;
  const std::int64_t count = last - first + 1;
  const std::int64_t blocks = (count + kBlockSize - 1) / kBlockSize;
  std::vector<RangeSum<T>> partial(static_cast<std::size_t>(blocks));

  auto run_block = [&](std::int64_t b) {
    const std::int64_t lo = first + b * kBlockSize;
    const std::int64_t hi = std::min(last, lo + kBlockSize - 1);
    partial[static_cast<std::size_t>(b)] = sum_range_serial<T>(lo, hi, term);
  };

#if defined(ZS_HAVE_OPENMP)
  if (parallel && blocks > 1) {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    for (std::int64_t b = 0; b < blocks; ++b) run_block(b);
  }
#else
  (void)parallel;
  for (std::int64_t b = 0; b < blocks; ++b) run_block(b);
#endif

  if (blocks == 1) return partial.front();
  CompensatedSum<T> acc;
  detail::Lane abs_acc;
  for (const auto& p : partial) {
    acc.add(p.value);
    abs_acc.add(p.abs_sum);
  }
  out.value = acc.value();
  out.abs_sum = abs_acc.value();
  out.count = count;
  return out;
}

/// Production entry point. Ranges that fit one block go through the
/// reference kernel unchanged; longer ranges use the blocked kernel, threaded
/// once they reach kParallelThreshold terms.
template <class T, class F>
RangeSum<T> sum_range(std::int64_t first, std::int64_t last, F&& term) {
  const std::int64_t count = last - first + 1;
  if (count <= kBlockSize) return sum_range_serial<T>(first, last, term);
  return sum_range_blocked<T>(first, last, term, count >= kParallelThreshold);
}

}  // namespace zs::kernels
