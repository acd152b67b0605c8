#ifndef DOTWEB_TABLE1_REFERENCE_HPP
#define DOTWEB_TABLE1_REFERENCE_HPP

#include <array>

// Published reference maxima for the equivalent-neighbor model, printed
// to three decimals: max C_uu, max C_ud, max C_dd, max tau_dd, max
// Delta_up, max Delta_down per (N, M).  Regression data, version 1.

namespace dotweb {

struct Table1Reference {
    int n_dots;
    int m_up;
    double max_c_uu;
    double max_c_ud;
    double max_c_dd;
    double max_tau_down;
    double max_delta_up;
    double max_delta_down;
};

inline constexpr int kTable1Version = 1;
inline constexpr double kTable1Tolerance = 1.5e-3; // values rounded to 3 decimals

inline constexpr std::array<Table1Reference, 16> kTable1Reference{{
    {4, 2, 0.0, 0.412, 0.0, 1.000, 0.889, 0.889},
    {5, 2, 0.576, 0.338, 0.347, 1.000, 0.967, 0.922},
    {6, 2, 0.372, 0.295, 0.225, 0.919, 0.877, 0.789},
    {7, 2, 0.408, 0.266, 0.182, 0.784, 0.884, 0.632},
    {8, 2, 0.364, 0.244, 0.141, 0.610, 0.849, 0.495},
    {9, 2, 0.307, 0.226, 0.109, 0.502, 0.803, 0.393},
    {10, 2, 0.253, 0.211, 0.084, 0.401, 0.755, 0.311},
    {6, 3, 0.0, 0.275, 0.0, 1.000, 0.960, 0.960},
    {7, 3, 0.129, 0.240, 0.191, 1.000, 0.995, 0.987},
    {8, 3, 0.111, 0.216, 0.115, 0.973, 0.950, 0.928},
    {9, 3, 0.236, 0.199, 0.135, 0.906, 0.955, 0.811},
    {10, 3, 0.205, 0.174, 0.092, 0.643, 0.886, 0.560},
    {8, 4, 0.0, 0.209, 0.0, 1.000, 0.980, 0.980},
    {9, 4, 0.001, 0.188, 0.111, 1.000, 0.999, 0.994},
    {10, 4, 0.000, 0.173, 0.034, 0.993, 0.983, 0.967},
    {11, 4, 0.136, 0.161, 0.097, 0.966, 0.977, 0.898},
}};

} // namespace dotweb

#endif
