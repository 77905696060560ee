#ifndef GNCH_PROFILES_HPP
#define GNCH_PROFILES_HPP

#include <cstdint>

#include "gnch/field.hpp"
#include "gnch/grid.hpp"

namespace gnch {

// Localized bumps with the grid mean subtracted, so the interface
// displacement carries no net volume.
Field gaussian_profile(const Grid& g, double amplitude, double width, double center);
Field sech2_profile(const Grid& g, double amplitude, double width, double center);

// amplitude * cos(2 pi mode x / L); already mean free for mode >= 1.
Field cosine_mode(const Grid& g, double amplitude, int mode);

// Reproducible band-limited field: modes 1..max_mode with geometrically
// decaying random coefficients, rescaled so max|f| = amplitude. The
// generator avoids distribution adapters so the values are identical
// across standard libraries.
Field random_smooth_field(const Grid& g, std::uint32_t seed, int max_mode, double amplitude);

}  // namespace gnch

#endif
