#ifndef GNCH_GRID_HPP
#define GNCH_GRID_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "gnch/field.hpp"

namespace gnch {

// Interface / velocity pair on a common grid.
struct State {
    Field zeta;
    Field v;
};

// Periodic uniform grid on [0, L) with n nodes and FFTW-backed spectral
// calculus. One Grid instance is not safe for concurrent use (it owns
// scratch buffers); create one instance per worker thread. Plan creation
// is serialized internally, so constructing Grids from several threads
// is fine.
class Grid {
  public:
    Grid(std::size_t n, double L);
    ~Grid();

    Grid(const Grid&) = delete;
    Grid& operator=(const Grid&) = delete;

    std::size_t n() const { return n_; }
    double L() const { return L_; }
    double dx() const { return dx_; }
    double node(std::size_t i) const { return dx_ * static_cast<double>(i); }
    std::vector<double> nodes() const;
    // Wavenumber of spectral bin j in [0, n/2].
    double k(std::size_t j) const;

    // Spectral derivatives. Odd orders zero the Nyquist bin (its
    // derivative has no well-defined sign on a real grid).
    Field ddx(const Field& f) const;
    Field ddx2(const Field& f) const;
    Field ddx3(const Field& f) const;

    // Bessel potential (1 - d_xx)^{s/2}, i.e. multiplier (1+k^2)^{s/2}.
    Field lambda_s(const Field& f, double s) const;

    // Zero all bins with |k| above two thirds of the Nyquist wavenumber
    // (keep j <= n/3), the usual rule for quadratic nonlinearities.
    Field dealias(const Field& f) const;

    // Apply a real spectral multiplier sym(k_j).
    template <class Sym>
    Field apply_symbol(const Field& f, Sym&& sym) const {
        std::vector<double> m(n_ / 2 + 1);
        for (std::size_t j = 0; j < m.size(); ++j) m[j] = sym(k(j));
        return apply_symbol_table(f, m);
    }
    Field apply_symbol_table(const Field& f, const std::vector<double>& sym) const;

    // f(x - shift), exact to rounding for band-limited data. The Nyquist
    // bin is zeroed since its translate is not representable in general.
    Field translate(const Field& f, double shift) const;

    // Normalized half spectrum F_j = (1/n) sum_i f_i exp(-i k_j x_i),
    // j = 0..n/2.
    std::vector<std::complex<double>> spectrum(const Field& f) const;

    // Quadrature (exact for band-limited integrands via the trapezoid
    // rule on a periodic grid).
    double inner(const Field& f, const Field& g) const;
    double l2_norm(const Field& f) const;
    double mean(const Field& f) const;

    // |f|_{H^s} computed from the spectrum (Parseval, no quadrature
    // error): |f|^2 = L sum_j w_j (1+k_j^2)^s |F_j|^2 with w_j = 2 for
    // interior bins and 1 for j = 0 and j = n/2.
    double sobolev_norm(const Field& f, double s) const;

    // |f|_{H^1_mu}^2 = |f|_{L^2}^2 + mu |f_x|_{L^2}^2.
    double h1mu_norm(const Field& f, double mu) const;

    // |U|_{X^s}^2 = |zeta|_{H^s}^2 + |v|_{H^s}^2 + mu |v_x|_{H^s}^2.
    double xs_norm(const State& U, double s, double mu) const;

  private:
    void check_size(const Field& f) const;
    // Forward transform of f into spec_; returns bin count n/2+1.
    std::size_t forward(const Field& f) const;
    // Inverse transform of spec_ into a new Field (normalized by 1/n).
    Field inverse() const;

    std::size_t n_;
    double L_;
    double dx_;

    // FFTW handles kept opaque so this header does not pull in fftw3.h.
    double* real_;   // fftw-allocated, length n
    void* spec_;     // fftw_complex*, length n/2+1
    void* plan_r2c_;
    void* plan_c2r_;
};

}  // namespace gnch

#endif
