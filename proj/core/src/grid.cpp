#include "gnch/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <string>

#include "gnch/errors.hpp"

namespace gnch {

namespace {
// FFTW plan creation and destruction are not thread safe; execution on
// distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Grid::Grid(std::size_t n, double L) : n_(n), L_(L), dx_(L / static_cast<double>(n)) {
    if (n < 4 || n % 2 != 0)
        fail(ErrorCode::CONFIG_INVALID, "grid size must be even and >= 4, got " + std::to_string(n));
    if (!(L > 0.0))
        fail(ErrorCode::CONFIG_INVALID, "grid length must be positive, got " + std::to_string(L));

    real_ = fftw_alloc_real(n_);
    fftw_complex* spec = fftw_alloc_complex(n_ / 2 + 1);
    spec_ = spec;

    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_r2c_ = fftw_plan_dft_r2c_1d(static_cast<int>(n_), real_, spec, FFTW_ESTIMATE);
    plan_c2r_ = fftw_plan_dft_c2r_1d(static_cast<int>(n_), spec, real_, FFTW_ESTIMATE);
}

Grid::~Grid() {
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(static_cast<fftw_plan>(plan_r2c_));
        fftw_destroy_plan(static_cast<fftw_plan>(plan_c2r_));
    }
    fftw_free(static_cast<fftw_complex*>(spec_));
    fftw_free(real_);
}

std::vector<double> Grid::nodes() const {
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = node(i);
    return x;
}

double Grid::k(std::size_t j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / L_;
}

void Grid::check_size(const Field& f) const {
    if (f.size() != n_)
        fail(ErrorCode::MISMATCH,
             "field has " + std::to_string(f.size()) + " nodes, grid has " + std::to_string(n_));
}

std::size_t Grid::forward(const Field& f) const {
    check_size(f);
    std::memcpy(real_, f.data(), n_ * sizeof(double));
    fftw_execute(static_cast<fftw_plan>(plan_r2c_));
    return n_ / 2 + 1;
}

Field Grid::inverse() const {
    fftw_execute(static_cast<fftw_plan>(plan_c2r_));
    Field out(n_);
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = real_[i] * inv_n;
    return out;
}

Field Grid::ddx(const Field& f) const {
    const std::size_t nc = forward(f);
    fftw_complex* s = static_cast<fftw_complex*>(spec_);
    for (std::size_t j = 0; j < nc; ++j) {
        const double kj = k(j);
        const double re = s[j][0], im = s[j][1];
        s[j][0] = -kj * im;  // multiply by i*k
        s[j][1] = kj * re;
    }
    s[nc - 1][0] = 0.0;
    s[nc - 1][1] = 0.0;
    return inverse();
}

Field Grid::ddx2(const Field& f) const {
    return apply_symbol(f, [](double kj) { return -kj * kj; });
}

Field Grid::ddx3(const Field& f) const {
    const std::size_t nc = forward(f);
    fftw_complex* s = static_cast<fftw_complex*>(spec_);
    for (std::size_t j = 0; j < nc; ++j) {
        const double kj = k(j);
        const double k3 = kj * kj * kj;
        const double re = s[j][0], im = s[j][1];
        s[j][0] = k3 * im;  // multiply by (i*k)^3 = -i k^3
        s[j][1] = -k3 * re;
    }
    s[nc - 1][0] = 0.0;
    s[nc - 1][1] = 0.0;
    return inverse();
}

Field Grid::lambda_s(const Field& f, double s) const {
    const double half_s = 0.5 * s;
    return apply_symbol(f, [half_s](double kj) { return std::pow(1.0 + kj * kj, half_s); });
}

Field Grid::dealias(const Field& f) const {
    const std::size_t cut = n_ / 3;
    const std::size_t nc = forward(f);
    fftw_complex* s = static_cast<fftw_complex*>(spec_);
    for (std::size_t j = cut + 1; j < nc; ++j) {
        s[j][0] = 0.0;
        s[j][1] = 0.0;
    }
    return inverse();
}

Field Grid::apply_symbol_table(const Field& f, const std::vector<double>& sym) const {
    const std::size_t nc = forward(f);
    if (sym.size() != nc) fail(ErrorCode::MISMATCH, "symbol table has wrong bin count");
    fftw_complex* s = static_cast<fftw_complex*>(spec_);
    for (std::size_t j = 0; j < nc; ++j) {
        s[j][0] *= sym[j];
        s[j][1] *= sym[j];
    }
    return inverse();
}

Field Grid::translate(const Field& f, double shift) const {
    const std::size_t nc = forward(f);
    fftw_complex* s = static_cast<fftw_complex*>(spec_);
    for (std::size_t j = 0; j < nc; ++j) {
        const double phase = -k(j) * shift;
        const double c = std::cos(phase), sn = std::sin(phase);
        const double re = s[j][0], im = s[j][1];
        s[j][0] = re * c - im * sn;
        s[j][1] = re * sn + im * c;
    }
    s[nc - 1][0] = 0.0;
    s[nc - 1][1] = 0.0;
    return inverse();
}

std::vector<std::complex<double>> Grid::spectrum(const Field& f) const {
    const std::size_t nc = forward(f);
    const fftw_complex* s = static_cast<const fftw_complex*>(spec_);
    std::vector<std::complex<double>> out(nc);
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (std::size_t j = 0; j < nc; ++j) out[j] = {s[j][0] * inv_n, s[j][1] * inv_n};
    return out;
}

double Grid::inner(const Field& f, const Field& g) const {
    check_size(f);
    check_size(g);
    double acc = 0.0;
    for (std::size_t i = 0; i < n_; ++i) acc += f[i] * g[i];
    return acc * dx_;
}

double Grid::l2_norm(const Field& f) const { return std::sqrt(inner(f, f)); }

double Grid::mean(const Field& f) const {
    check_size(f);
    double acc = 0.0;
    for (double x : f) acc += x;
    return acc / static_cast<double>(n_);
}

double Grid::sobolev_norm(const Field& f, double s) const {
    const std::size_t nc = forward(f);
    const fftw_complex* sp = static_cast<const fftw_complex*>(spec_);
    const double inv_n2 = 1.0 / (static_cast<double>(n_) * static_cast<double>(n_));
    double acc = 0.0;
    for (std::size_t j = 0; j < nc; ++j) {
        const double w = (j == 0 || j == nc - 1) ? 1.0 : 2.0;
        const double kj = k(j);
        const double mag2 = (sp[j][0] * sp[j][0] + sp[j][1] * sp[j][1]) * inv_n2;
        acc += w * std::pow(1.0 + kj * kj, s) * mag2;
    }
    return std::sqrt(L_ * acc);
}

double Grid::h1mu_norm(const Field& f, double mu) const {
    const std::size_t nc = forward(f);
    const fftw_complex* sp = static_cast<const fftw_complex*>(spec_);
    const double inv_n2 = 1.0 / (static_cast<double>(n_) * static_cast<double>(n_));
    double acc = 0.0;
    for (std::size_t j = 0; j < nc; ++j) {
        const double w = (j == 0 || j == nc - 1) ? 1.0 : 2.0;
        const double kj = k(j);
        const double mag2 = (sp[j][0] * sp[j][0] + sp[j][1] * sp[j][1]) * inv_n2;
        acc += w * (1.0 + mu * kj * kj) * mag2;
    }
    return std::sqrt(L_ * acc);
}

double Grid::xs_norm(const State& U, double s, double mu) const {
    const double nz = sobolev_norm(U.zeta, s);
    double acc = nz * nz;

    const std::size_t nc = forward(U.v);
    const fftw_complex* sp = static_cast<const fftw_complex*>(spec_);
    const double inv_n2 = 1.0 / (static_cast<double>(n_) * static_cast<double>(n_));
    double vacc = 0.0;
    for (std::size_t j = 0; j < nc; ++j) {
        const double w = (j == 0 || j == nc - 1) ? 1.0 : 2.0;
        const double k2 = k(j) * k(j);
        const double mag2 = (sp[j][0] * sp[j][0] + sp[j][1] * sp[j][1]) * inv_n2;
        vacc += w * std::pow(1.0 + k2, s) * (1.0 + mu * k2) * mag2;
    }
    acc += L_ * vacc;
    return std::sqrt(acc);
}

}  // namespace gnch
