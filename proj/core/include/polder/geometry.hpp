// Annular body geometries. All bodies lie in the z = 0 plane, centred on the
// z axis; the atom sits on the axis at height h.

#pragma once

#include <stdexcept>
#include <variant>

namespace polder {

// Infinitely thin circular ring of radius a.
struct Ring {
  double a = 1.0;
};

// Flat annular disc with inner radius a and outer radius b.
struct AnnularDisc {
  double a = 1.0;
  double b = 2.0;
};

// Infinite plate with a circular aperture of radius a.
struct AperturedPlate {
  double a = 1.0;
};

using Geometry = std::variant<Ring, AnnularDisc, AperturedPlate>;

inline void validate(const Geometry& g) {
  std::visit(
      [](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if (!(body.a > 0.0)) throw std::invalid_argument("geometry: radius a must be positive");
        if constexpr (std::is_same_v<T, AnnularDisc>) {
          if (!(body.b > body.a))
            throw std::invalid_argument("geometry: outer radius b must exceed inner radius a");
        }
      },
      g);
}

}  // namespace polder
