#pragma once

namespace hardygkz {

// Desk-scale defaults shared by the library and the CLI. The grid keeps at
// least 8x oversampling over the default truncation degree, so every
// polynomial pipeline below stays anti-aliased.
inline constexpr int kDefaultGrid = 4096;
inline constexpr int kDefaultDegree = 256;
inline constexpr double kDefaultTol = 1e-8;
inline constexpr unsigned long long kDefaultSeed = 42;

// Boundary moduli below this are treated as log-non-integrable at grid
// resolution unless the caller routes them through the boundary-zero path.
inline constexpr double kModulusFloor = 1e-10;

// Relative threshold for declaring a grid sample an exact boundary zero.
inline constexpr double kZeroDetectTol = 1e-8;

// Leading Taylor coefficients below this are treated as exact zeros when
// locating the order of vanishing at the origin.
inline constexpr double kOriginZeroTol = 1e-12;

}  // namespace hardygkz
