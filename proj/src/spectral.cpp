#include "fnf/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fnf {

namespace {

std::mutex fftw_plan_mutex;  // FFTW planning is not thread-safe

// 2-D transform of an N x N complex matrix. sign is FFTW_FORWARD or
// FFTW_BACKWARD; output is unnormalized in both directions.
ComplexMatrix transform(const ComplexMatrix& m, int sign) {
    const auto n = static_cast<int>(m.rows());
    if (n != m.cols()) throw std::invalid_argument("dft2: matrix not square");
    if (n == 0) return m;

    ComplexMatrix out(n, n);
    // Eigen stores column-major while FFTW assumes row-major; the 2-D DFT
    // kernel is symmetric in its index pairs, so transforming the transpose
    // and reading the result back as a transpose yields the same matrix.
    auto* in_ptr = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(m.data()));
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        // out-of-place c2c preserves its input by default
        plan = fftw_plan_dft_2d(n, n, in_ptr, out_ptr, sign, FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("dft2: FFTW planning failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

ComplexMatrix dft2(const ComplexMatrix& m) { return transform(m, FFTW_FORWARD); }

ComplexMatrix dft2(const Eigen::MatrixXd& m) {
    return transform(m.cast<std::complex<double>>(), FFTW_FORWARD);
}

ComplexMatrix idft2(const ComplexMatrix& m) {
    ComplexMatrix out = transform(m, FFTW_BACKWARD);
    const double n = static_cast<double>(m.rows());
    if (n > 0) out /= n * n;
    return out;
}

IndexSequence lowest_magnitude_indices(const ComplexMatrix& f, std::int64_t m) {
    const auto n = static_cast<std::int64_t>(f.rows());
    const auto total = n * n;
    if (m < 1 || m > total)
        throw std::invalid_argument("lowest_magnitude_indices: m out of range");

    // flat row-major index doubles as the tie-break
    std::vector<std::int64_t> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    auto mag = [&f, n](std::int64_t k) { return std::abs(f(k / n, k % n)); };
    std::partial_sort(idx.begin(), idx.begin() + m, idx.end(),
                      [&mag](std::int64_t a, std::int64_t b) {
                          const double ma = mag(a), mb = mag(b);
                          if (ma != mb) return ma < mb;
                          return a < b;
                      });

    IndexSequence chi;
    chi.reserve(m);
    for (std::int64_t k = 0; k < m; ++k)
        chi.emplace_back(static_cast<std::int32_t>(idx[k] / n),
                         static_cast<std::int32_t>(idx[k] % n));
    return chi;
}

ComplexMatrix place_key(const std::vector<double>& key_values,
                        const IndexSequence& chi, std::int32_t n) {
    if (key_values.size() != chi.size())
        throw std::invalid_argument("place_key: key/positions length mismatch");
    ComplexMatrix w = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < chi.size(); ++k) {
        const auto [i, j] = chi[k];
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("place_key: position out of range");
        if (w(i, j) != std::complex<double>(0.0, 0.0))
            throw std::invalid_argument("place_key: duplicate position");
        w(i, j) = key_values[k];
    }
    return w;
}

Eigen::MatrixXd binarize(const ComplexMatrix& aprime, double threshold) {
    if (threshold < 0) throw std::invalid_argument("binarize: negative threshold");
    const auto n = aprime.rows();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            if (std::abs(aprime(i, j)) > threshold) out(i, j) = 1.0;
    // OR-symmetrization, zero diagonal
    for (Eigen::Index j = 0; j < n; ++j) {
        out(j, j) = 0.0;
        for (Eigen::Index i = 0; i < j; ++i) {
            const double v = std::max(out(i, j), out(j, i));
            out(i, j) = v;
            out(j, i) = v;
        }
    }
    return out;
}

double two_norm(const ComplexMatrix& m) { return m.norm(); }

}  // namespace fnf
