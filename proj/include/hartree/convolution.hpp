// Lumped Hartree convolution G0[w]_i = h^4 sum_j w_j^2 K(pair_i - pair_j),
// as a direct O(M^2) sum (reference) and a zero-padded FFT path.
#pragma once

#include <fftw3.h>

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hartree/field_vector.hpp"
#include "hartree/lattice.hpp"
#include "hartree/potentials.hpp"

namespace hartree {

namespace detail {

inline void check_kernel(const KernelTable& kernel, const LatticeSpec& lat,
                         const char* what) {
  if (kernel.max_offset() != lat.interior_per_side - 1)
    throw std::invalid_argument(std::string(what) +
                                ": kernel table does not match lattice");
}

}  // namespace detail

// Reference path: direct summation of the kernel-weighted squared
// coefficients. Depends on |w_j|^2 only.
inline void lumped_convolution(const FieldVector& w, const KernelTable& kernel,
                               FieldVector& out) {
  detail::check_kernel(kernel, w.lattice(), "lumped convolution");
  check_same_lattice(w, out, "lumped convolution");
  const LatticeSpec& lat = w.lattice();
  const int n = lat.interior_per_side;
  const int mo = kernel.max_offset();
  const double h = lat.spacing;
  const double h4 = (h * h) * (h * h);

  std::vector<double> density(static_cast<size_t>(lat.interior_count));
  const auto wv = w.values();
  for (size_t j = 0; j < density.size(); ++j) density[j] = wv[j] * wv[j];

  auto ov = out.values();
  for (int i2 = 0; i2 < n; ++i2) {
    for (int i1 = 0; i1 < n; ++i1) {
      double s = 0.0;
      for (int j2 = 0; j2 < n; ++j2) {
        const double* krow = kernel.row(i2 - j2) + (mo + i1);
        const double* drow = density.data() + static_cast<size_t>(j2) * n;
        double row_sum = 0.0;
        for (int j1 = 0; j1 < n; ++j1) row_sum += drow[j1] * krow[-j1];
        s += row_sum;
      }
      ov[static_cast<size_t>(i2) * n + i1] = h4 * s;
    }
  }
}

inline FieldVector lumped_convolution(const FieldVector& w,
                                      const KernelTable& kernel) {
  FieldVector out(w.lattice());
  lumped_convolution(w, kernel, out);
  return out;
}

// Accelerated path: circular convolution on an L x L grid with L >= 2n-1 so
// the wrapped kernel offsets stay alias-free on the read indices.
class FastConvolution {
 public:
  FastConvolution(const KernelTable& kernel, const LatticeSpec& lat)
      : lattice_(lat), n_(lat.interior_per_side) {
    detail::check_kernel(kernel, lat, "fast convolution");
    size_ = padded_size(2 * n_ - 1);
    spec_cols_ = size_ / 2 + 1;
    grid_.assign(static_cast<size_t>(size_) * size_, 0.0);
    spectrum_.assign(static_cast<size_t>(size_) * spec_cols_, {0.0, 0.0});
    kernel_spectrum_.assign(spectrum_.size(), {0.0, 0.0});

    forward_ = fftw_plan_dft_r2c_2d(
        size_, size_, grid_.data(),
        reinterpret_cast<fftw_complex*>(spectrum_.data()), FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_c2r_2d(
        size_, size_, reinterpret_cast<fftw_complex*>(spectrum_.data()),
        grid_.data(), FFTW_ESTIMATE);
    if (forward_ == nullptr || inverse_ == nullptr)
      throw std::runtime_error("fast convolution: fftw plan creation failed");

    // Kernel wrapped to circular offsets, premultiplied by h^4 and the
    // inverse-transform normalization.
    const double h = lat.spacing;
    const double scale =
        (h * h) * (h * h) / (static_cast<double>(size_) * size_);
    for (int dy = -(n_ - 1); dy <= n_ - 1; ++dy) {
      const int wy = (dy + size_) % size_;
      for (int dx = -(n_ - 1); dx <= n_ - 1; ++dx) {
        const int wx = (dx + size_) % size_;
        grid_[static_cast<size_t>(wy) * size_ + wx] =
            scale * kernel.unchecked(dx, dy);
      }
    }
    fftw_execute(forward_);
    kernel_spectrum_ = spectrum_;
  }

  FastConvolution(const FastConvolution&) = delete;
  FastConvolution& operator=(const FastConvolution&) = delete;

  FastConvolution(FastConvolution&& other) noexcept { swap(other); }
  FastConvolution& operator=(FastConvolution&& other) noexcept {
    swap(other);
    return *this;
  }

  ~FastConvolution() {
    if (forward_ != nullptr) fftw_destroy_plan(forward_);
    if (inverse_ != nullptr) fftw_destroy_plan(inverse_);
  }

  const LatticeSpec& lattice() const { return lattice_; }

  // Not thread-safe: reuses internal transform buffers.
  void apply(const FieldVector& w, FieldVector& out) {
    if (!same_lattice(w.lattice(), lattice_) ||
        !same_lattice(out.lattice(), lattice_))
      throw std::invalid_argument("fast convolution: lattice mismatch");
    std::fill(grid_.begin(), grid_.end(), 0.0);
    const auto wv = w.values();
    for (int j2 = 0; j2 < n_; ++j2) {
      const double* src = wv.data() + static_cast<size_t>(j2) * n_;
      double* dst = grid_.data() + static_cast<size_t>(j2) * size_;
      for (int j1 = 0; j1 < n_; ++j1) dst[j1] = src[j1] * src[j1];
    }
    fftw_execute(forward_);
    for (size_t k = 0; k < spectrum_.size(); ++k)
      spectrum_[k] *= kernel_spectrum_[k];
    fftw_execute(inverse_);
    auto ov = out.values();
    for (int i2 = 0; i2 < n_; ++i2) {
      const double* src = grid_.data() + static_cast<size_t>(i2) * size_;
      double* dst = ov.data() + static_cast<size_t>(i2) * n_;
      for (int i1 = 0; i1 < n_; ++i1) dst[i1] = src[i1];
    }
  }

 private:
  static int padded_size(int minimum) {
    // Smallest 5-smooth integer >= minimum keeps the FFT sizes fast.
    int l = minimum;
    for (;; ++l) {
      int r = l;
      for (int p : {2, 3, 5})
        while (r % p == 0) r /= p;
      if (r == 1) return l;
    }
  }

  void swap(FastConvolution& other) noexcept {
    std::swap(lattice_, other.lattice_);
    std::swap(n_, other.n_);
    std::swap(size_, other.size_);
    std::swap(spec_cols_, other.spec_cols_);
    std::swap(grid_, other.grid_);
    std::swap(spectrum_, other.spectrum_);
    std::swap(kernel_spectrum_, other.kernel_spectrum_);
    std::swap(forward_, other.forward_);
    std::swap(inverse_, other.inverse_);
  }

  LatticeSpec lattice_{};
  int n_ = 0;
  int size_ = 0;
  int spec_cols_ = 0;
  std::vector<double> grid_;
  std::vector<std::complex<double>> spectrum_;
  std::vector<std::complex<double>> kernel_spectrum_;
  fftw_plan forward_ = nullptr;
  fftw_plan inverse_ = nullptr;
};

enum class ConvolutionPath { direct, fast };

// Path-selecting front end used by the solver; owns a shared reference to the
// kernel table so it stays valid independent of the caller's storage.
class ConvolutionEngine {
 public:
  ConvolutionEngine(std::shared_ptr<const KernelTable> kernel,
                    const LatticeSpec& lat, ConvolutionPath path)
      : kernel_(std::move(kernel)), lattice_(lat), path_(path) {
    if (kernel_ == nullptr)
      throw std::invalid_argument("convolution engine: null kernel");
    detail::check_kernel(*kernel_, lat, "convolution engine");
    if (path_ == ConvolutionPath::fast) fast_.emplace(*kernel_, lat);
  }

  ConvolutionPath path() const { return path_; }
  const KernelTable& kernel() const { return *kernel_; }
  const LatticeSpec& lattice() const { return lattice_; }

  void apply(const FieldVector& w, FieldVector& out) {
    if (path_ == ConvolutionPath::fast)
      fast_->apply(w, out);
    else
      lumped_convolution(w, *kernel_, out);
  }

  FieldVector apply(const FieldVector& w) {
    FieldVector out(w.lattice());
    apply(w, out);
    return out;
  }

 private:
  std::shared_ptr<const KernelTable> kernel_;
  LatticeSpec lattice_;
  ConvolutionPath path_;
  std::optional<FastConvolution> fast_;
};

}  // namespace hartree
