// Published reference quasi-eigenvalues for triangular prisms with L = M = pi,
// listed in ascending order with multiplicities expanded.  Values are quoted to
// at most six significant figures.
#pragma once

#include <array>

namespace sloshing::testing {

inline constexpr std::array<double, 125> kRefQuasi_q2_r3 = {
    0., 0.25, 0.5, 0.707107, 1., 1.25, 1.41421, 1.5,
    1.50486, 2., 2.12132, 2.19003, 2.25, 2.42529, 2.5, 2.82843,
    2.90905, 3., 3.09118, 3.25, 3.38136, 3.5, 3.53553, 3.60779,
    3.75468, 4., 4.05596, 4.24264, 4.25, 4.32015, 4.3546, 4.43323,
    4.5, 4.65705, 4.94975, 5., 5.02255, 5.0396, 5.1284, 5.25,
    5.32785, 5.33676, 5.5, 5.59025, 5.65685, 5.73285, 5.81675, 5.99244,
    6., 6.03043, 6.25, 6.26035, 6.32406, 6.36396, 6.43682, 6.5,
    6.51931, 6.54189, 6.67113, 6.89161, 7., 7.02463, 7.07107, 7.14617,
    7.21318, 7.2145, 7.25, 7.31458, 7.35657, 7.5, 7.50537, 7.56512,
    7.77817, 7.81418, 7.85097, 7.91848, 8., 8.02066, 8.04173, 8.18175,
    8.22909, 8.25, 8.30723, 8.47686, 8.48528, 8.48571, 8.5, 8.5598,
    8.61566, 8.73639, 8.75301, 8.90804, 9., 9.01778, 9.12691, 9.15737,
    9.19239, 9.25, 9.2651, 9.30138, 9.32219, 9.4246, 9.42617, 9.45402,
    9.5, 9.58812, 9.70356, 9.80195, 9.89949, 9.97359, 10., 10.0156,
    10.0215, 10.0434, 10.1256, 10.1386, 10.25, 10.2718, 10.2966, 10.3764,
    10.4353, 10.4654, 10.5, 10.6066, 10.6628,
};

inline constexpr std::array<double, 125> kRefQuasi_q5_r5 = {
    0., 0.309017, 0.309017, 0.618034, 0.618034, 0.809017, 0.809017, 0.927051,
    0.927051, 1., 1., 1.23607, 1.23607, 1.54508, 1.54508, 1.61803,
    1.61803, 1.8541, 1.8541, 2., 2., 2.1275, 2.16312, 2.16312,
    2.42705, 2.42705, 2.47214, 2.47214, 2.50772, 2.78115, 2.78115, 3.,
    3., 3.09017, 3.09017, 3.11168, 3.1222, 3.23607, 3.23607, 3.39919,
    3.39919, 3.43965, 3.7082, 3.7082, 3.96168, 4., 4., 4.01722,
    4.01722, 4.04508, 4.04508, 4.09388, 4.32624, 4.32624, 4.36953, 4.63525,
    4.63525, 4.64126, 4.80983, 4.8541, 4.8541, 4.94427, 4.94427, 5.,
    5., 5.08004, 5.25329, 5.25329, 5.31585, 5.38942, 5.43566, 5.56231,
    5.56231, 5.66312, 5.66312, 5.69526, 5.87132, 5.87132, 6., 6.,
    6.06947, 6.0795, 6.18034, 6.18034, 6.20039, 6.2748, 6.30633, 6.47214,
    6.47214, 6.48936, 6.48936, 6.60734, 6.79837, 6.79837, 6.8106, 6.85278,
    7., 7., 7.05416, 7.06124, 7.10739, 7.10739, 7.22465, 7.24277,
    7.28115, 7.28115, 7.41641, 7.41641, 7.50537, 7.53825, 7.6, 7.68657,
    7.72542, 7.72542, 7.93817, 8., 8., 8.03444, 8.03444, 8.05471,
    8.09017, 8.09017, 8.17183, 8.2172, 8.22908,
};

inline constexpr std::array<double, 250> kRefQuasi_q3_r9 = {
    0., 0.173648, 0.347296, 0.5, 0.5, 0.5, 0.520945, 0.694593,
    0.766044, 0.868241, 0.939693, 1., 1., 1., 1.04189, 1.07607,
    1.21554, 1.38919, 1.5, 1.5, 1.5, 1.53209, 1.55011, 1.56283,
    1.73648, 1.87939, 1.91013, 2., 2., 2., 2.08378, 2.25743,
    2.29813, 2.43107, 2.5, 2.5, 2.5, 2.60472, 2.6057, 2.77837,
    2.81908, 2.92174, 2.95202, 3., 3., 3., 3.06418, 3.12567,
    3.29932, 3.44139, 3.47296, 3.5, 3.5, 3.5, 3.59445, 3.64661,
    3.75877, 3.82026, 3.83022, 3.87386, 3.99391, 4., 4., 4.,
    4.14576, 4.16756, 4.32563, 4.3412, 4.5, 4.5, 4.5, 4.51485,
    4.58171, 4.59627, 4.6885, 4.69846, 4.82312, 4.86215, 4.9277, 5.,
    5., 5., 5.0358, 5.20945, 5.21334, 5.36231, 5.38309, 5.5,
    5.5, 5.5, 5.55674, 5.57119, 5.63816, 5.65082, 5.73039, 5.73531,
    5.78187, 5.90404, 6., 6., 6., 6.07769, 6.1237, 6.12836,
    6.25133, 6.36803, 6.42498, 6.46384, 6.5, 6.5, 6.5, 6.56279,
    6.57785, 6.58394, 6.59863, 6.749, 6.77228, 6.8944, 6.94593, 7.,
    7., 7., 7.05237, 7.0895, 7.11958, 7.14699, 7.29322, 7.33913,
    7.46331, 7.46687, 7.5, 7.5, 7.5, 7.51754, 7.55605, 7.64052,
    7.66044, 7.72258, 7.7963, 7.81417, 7.8794, 7.96999, 7.98782, 7.99483,
    8., 8., 8., 8.16146, 8.25555, 8.33511, 8.36551, 8.42649,
    8.45723, 8.5, 8.5, 8.5, 8.50876, 8.51597, 8.55056, 8.55959,
    8.68241, 8.701, 8.72065, 8.82549, 8.85606, 8.94767, 9., 9.,
    9., 9.02971, 9.19253, 9.19857, 9.20335, 9.21938, 9.28493, 9.29183,
    9.36464, 9.377, 9.39693, 9.5, 9.5, 9.5, 9.54602, 9.55065,
    9.59983, 9.68311, 9.7056, 9.7243, 9.89795, 9.90844, 9.93757, 9.95858,
    9.97268, 10., 10., 10., 10.0716, 10.112, 10.1588, 10.2016,
    10.2175, 10.2452, 10.3366, 10.4189, 10.5, 10.5, 10.5, 10.5069,
    10.5422, 10.5925, 10.6047, 10.6397, 10.6681, 10.7037, 10.7246, 10.7645,
    10.7662, 10.8753, 10.9398, 10.9668, 11., 11., 11., 11.0635,
    11.1135, 11.1302, 11.1605, 11.2763, 11.2871, 11.3567, 11.3861, 11.4344,
    11.4608, 11.4907, 11.5, 11.5, 11.5, 11.509, 11.5189, 11.539,
    11.5868, 11.6344, 11.6553, 11.8081, 11.8471, 11.8487, 11.9452, 11.9817,
    12., 12.,
};

}  // namespace sloshing::testing
