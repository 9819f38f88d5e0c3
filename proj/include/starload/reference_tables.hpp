#pragma once

#include "model.hpp"

namespace starload::reference {

/// One published overall-speedup table: 11 rows (f = 0.0 .. 1.0 in steps of
/// 0.1) by three columns (local, cloud, combined).
struct SpeedupTable {
    const char* id;
    Protocol protocol;
    bool heterogeneous;
    double cells[11][3];
};

/// One published finish-time table: heterogeneous and homogeneous rows by the
/// same three columns.
struct FinishTable {
    const char* id;
    Protocol protocol;
    double het[3];
    double homo[3];
};

inline constexpr double kFGrid[11] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

inline constexpr FinishTable kFinishTables[3] = {
    {"4.2", Protocol::Sequential, {1.84, 0.522, 0.463}, {1.225, 0.545, 0.446}},
    {"4.5", Protocol::Staggered, {1.767, 0.596, 0.501}, {1.213, 0.628, 0.445}},
    {"4.8", Protocol::Simultaneous, {1.584, 0.522, 0.436}, {1.2, 0.545, 0.428}},
};

inline constexpr SpeedupTable kSpeedupTables[6] = {
    {"4.3",
     Protocol::Sequential,
     true,
     {{1.000, 1.000, 1.000},
      {1.057, 1.095, 1.097},
      {1.121, 1.211, 1.215},
      {1.193, 1.353, 1.361},
      {1.275, 1.533, 1.547},
      {1.369, 1.769, 1.793},
      {1.479, 2.091, 2.130},
      {1.607, 2.556, 2.625},
      {1.760, 3.286, 3.418},
      {1.944, 4.600, 4.899},
      {2.172, 7.667, 8.643}}},
    {"4.4",
     Protocol::Sequential,
     false,
     {{1.000, 1.000, 1.000},
      {1.086, 1.100, 1.103},
      {1.189, 1.222, 1.228},
      {1.314, 1.375, 1.387},
      {1.467, 1.571, 1.592},
      {1.661, 1.833, 1.869},
      {1.914, 2.200, 2.262},
      {2.258, 2.750, 2.864},
      {2.753, 3.667, 3.904},
      {3.525, 5.500, 6.129},
      {4.900, 11.000, 14.248}}},
    {"4.6",
     Protocol::Staggered,
     true,
     {{1.000, 1.000, 1.000},
      {1.059, 1.093, 1.096},
      {1.126, 1.205, 1.212},
      {1.201, 1.343, 1.356},
      {1.288, 1.516, 1.538},
      {1.387, 1.741, 1.777},
      {1.504, 2.043, 2.104},
      {1.642, 2.474, 2.579},
      {1.808, 3.133, 3.330},
      {2.011, 4.273, 4.699},
      {2.265, 6.714, 7.979}}},
    {"4.7",
     Protocol::Staggered,
     false,
     {{1.000, 1.000, 1.000},
      {1.087, 1.098, 1.102},
      {1.190, 1.218, 1.227},
      {1.314, 1.367, 1.385},
      {1.468, 1.558, 1.588},
      {1.663, 1.811, 1.862},
      {1.917, 2.161, 2.250},
      {2.263, 2.680, 2.842},
      {2.762, 3.526, 3.858},
      {3.542, 5.154, 6.001},
      {4.936, 9.571, 13.507}}},
    {"4.9",
     Protocol::Simultaneous,
     true,
     {{1.000, 1.000, 1.000},
      {1.064, 1.095, 1.097},
      {1.137, 1.211, 1.216},
      {1.221, 1.353, 1.362},
      {1.318, 1.533, 1.550},
      {1.432, 1.769, 1.796},
      {1.567, 2.091, 2.137},
      {1.730, 2.556, 2.636},
      {1.932, 3.286, 3.441},
      {2.187, 4.600, 4.951},
      {2.519, 7.667, 8.826}}},
    {"4.10",
     Protocol::Simultaneous,
     false,
     {{1.000, 1.000, 1.000},
      {1.087, 1.100, 1.103},
      {1.190, 1.222, 1.230},
      {1.316, 1.375, 1.389},
      {1.471, 1.571, 1.596},
      {1.667, 1.833, 1.875},
      {1.923, 2.200, 2.273},
      {2.273, 2.750, 2.885},
      {2.778, 3.667, 3.947},
      {3.571, 5.500, 6.250},
      {5.000, 11.000, 15.000}}},
};

}  // namespace starload::reference
