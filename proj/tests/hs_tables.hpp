#pragma once

#include <array>
#include <cstddef>
#include <string_view>

// Extremal measurement representatives of the HS model, weights times 240,
// one row per class, columns E_0 .. E_23.
inline constexpr std::array<std::array<int, 24>, 15> kHsClasses = {{
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 120, 0, 120, 0, 0, 0, 0, 0},
    {60, 0, 60, 0, 0, 0, 0, 0, 60, 0, 60, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {60, 0, 60, 0, 0, 0, 0, 0, 0, 60, 0, 60, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {30, 30, 0, 0, 0, 0, 0, 0, 0, 0, 30, 30, 0, 0, 0, 0, 0, 0, 60, 0, 0, 0, 0, 60},
    {30, 0, 0, 0, 0, 30, 0, 0, 0, 0, 30, 0, 0, 0, 0, 30, 0, 0, 0, 0, 60, 0, 0, 60},
    {40, 0, 0, 0, 0, 0, 0, 0, 0, 0, 40, 0, 0, 0, 0, 0, 0, 40, 40, 0, 40, 0, 0, 40},
    {30, 30, 0, 0, 0, 0, 30, 0, 30, 0, 30, 0, 0, 0, 0, 30, 0, 0, 0, 0, 0, 0, 0, 60},
    {20, 20, 0, 0, 20, 0, 0, 0, 0, 0, 40, 0, 0, 0, 0, 20, 0, 0, 40, 0, 40, 0, 0, 40},
    {20, 20, 0, 0, 0, 0, 40, 0, 20, 20, 0, 0, 0, 0, 0, 40, 40, 0, 0, 0, 0, 0, 0, 40},
    {40, 20, 0, 0, 0, 0, 20, 0, 0, 20, 0, 40, 0, 0, 20, 0, 0, 0, 40, 0, 0, 0, 0, 40},
    {30, 0, 0, 0, 0, 30, 0, 0, 0, 0, 0, 30, 0, 0, 30, 0, 0, 0, 30, 30, 30, 0, 0, 30},
    {20, 20, 0, 0, 20, 0, 20, 0, 0, 20, 20, 0, 0, 0, 0, 40, 0, 0, 0, 0, 40, 0, 0, 40},
    {15, 15, 0, 0, 15, 0, 30, 0, 0, 30, 0, 0, 0, 0, 0, 45, 30, 0, 0, 0, 30, 0, 0, 30},
    {20, 20, 0, 0, 20, 0, 0, 20, 0, 0, 20, 20, 0, 20, 20, 0, 0, 0, 80, 0, 0, 0, 0, 0},
    {24, 0, 24, 0, 0, 24, 0, 0, 0, 0, 0, 48, 0, 24, 0, 0, 0, 0, 24, 24, 0, 0, 24, 24}
}};

struct HsDimensionRow {
  int measurement;
  int support;
  unsigned d;
  std::string_view witness;  // empty when d = 4
  std::size_t v;
};

// Minimal dimension, witness value against d - 1 and effective vertex count.
inline constexpr std::array<HsDimensionRow, 12> kHsDimensions = {{
    {3, 6, 4, "", 128},
    {4, 6, 4, "", 64},
    {5, 6, 4, "", 465},
    {6, 7, 5, "2", 672},
    {7, 8, 5, "1/3", 60752},
    {8, 8, 5, "8/3", 7616},
    {9, 8, 5, "2", 10040},
    {10, 8, 4, "", 576},
    {11, 9, 5, "4/3", 37136},
    {12, 9, 5, "2", 107504},
    {13, 9, 5, "2/3", 8704},
    {14, 9, 5, "8/5", 488092},
}};
