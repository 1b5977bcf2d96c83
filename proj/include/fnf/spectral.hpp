#ifndef FNF_SPECTRAL_HPP
#define FNF_SPECTRAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace fnf {

using ComplexMatrix = Eigen::MatrixXcd;
using IndexSequence = std::vector<std::pair<std::int32_t, std::int32_t>>;

/// Forward 2-D DFT, unnormalized kernel e^{-2*pi*i*(ki+lj)/N}. Arbitrary N.
ComplexMatrix dft2(const ComplexMatrix& m);
ComplexMatrix dft2(const Eigen::MatrixXd& m);

/// Inverse 2-D DFT, kernel (1/N^2) e^{+2*pi*i*(ki+lj)/N}; idft2(dft2(M)) = M.
ComplexMatrix idft2(const ComplexMatrix& m);

/// The m positions of smallest modulus, ascending; ties broken by row-major order.
IndexSequence lowest_magnitude_indices(const ComplexMatrix& f, std::int64_t m);

/// N x N matrix, zero everywhere except entry chi[k] = key_values[k].
ComplexMatrix place_key(const std::vector<double>& key_values,
                        const IndexSequence& chi, std::int32_t n);

/// Thresholds by modulus (strictly > threshold -> 1), then OR-symmetrizes
/// and zeroes the diagonal.
Eigen::MatrixXd binarize(const ComplexMatrix& aprime, double threshold);

/// Entrywise 2-norm: sqrt of the sum of squared moduli.
double two_norm(const ComplexMatrix& m);

}  // namespace fnf

#endif
