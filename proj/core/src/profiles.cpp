#include "gnch/profiles.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gnch/errors.hpp"

namespace gnch {

namespace {
Field mean_free(const Grid& g, Field f) {
    const double m = g.mean(f);
    for (double& x : f) x -= m;
    return f;
}
}  // namespace

Field gaussian_profile(const Grid& g, double amplitude, double width, double center) {
    if (!(width > 0.0)) fail(ErrorCode::CONFIG_INVALID, "profile width must be positive");
    Field f(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double r = (g.node(i) - center) / width;
        f[i] = amplitude * std::exp(-r * r);
    }
    return mean_free(g, std::move(f));
}

Field sech2_profile(const Grid& g, double amplitude, double width, double center) {
    if (!(width > 0.0)) fail(ErrorCode::CONFIG_INVALID, "profile width must be positive");
    Field f(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double c = std::cosh((g.node(i) - center) / width);
        f[i] = amplitude / (c * c);
    }
    return mean_free(g, std::move(f));
}

Field cosine_mode(const Grid& g, double amplitude, int mode) {
    if (mode < 0 || static_cast<std::size_t>(mode) > g.n() / 2)
        fail(ErrorCode::CONFIG_INVALID, "mode index outside the resolved range");
    const double k = 2.0 * std::numbers::pi * mode / g.L();
    Field f(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) f[i] = amplitude * std::cos(k * g.node(i));
    return f;
}

Field random_smooth_field(const Grid& g, std::uint32_t seed, int max_mode, double amplitude) {
    if (max_mode < 1 || static_cast<std::size_t>(max_mode) > g.n() / 3)
        fail(ErrorCode::CONFIG_INVALID, "max_mode outside the dealiased range");
    std::mt19937 rng(seed);
    auto uniform = [&rng]() {  // in (-1, 1), identical on every platform
        return 2.0 * (static_cast<double>(rng()) / 4294967296.0) - 1.0;
    };

    Field f(g.n(), 0.0);
    double decay = 1.0;
    for (int m = 1; m <= max_mode; ++m) {
        const double a = uniform() * decay;
        const double b = uniform() * decay;
        const double k = 2.0 * std::numbers::pi * m / g.L();
        for (std::size_t i = 0; i < g.n(); ++i) {
            const double kx = k * g.node(i);
            f[i] += a * std::cos(kx) + b * std::sin(kx);
        }
        decay *= 0.5;
    }
    const double peak = field_max_abs(f);
    if (peak > 0.0) {
        const double scale = amplitude / peak;
        for (double& x : f) x *= scale;
    }
    return f;
}

}  // namespace gnch
