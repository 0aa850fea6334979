#pragma once

#include <Eigen/Dense>

#include "spincav/errors.hpp"

namespace spincav {

// Uniform frequency grid in FFT layout: omega_k = -W + k dw, k = 0..n-1,
// dw = 2W/n.  omega = 0 sits exactly at k = n/2 and every interior point has
// its mirror image on the grid (the lone -W endpoint does not; +W is the
// periodic wrap of -W).  Parity tests pair indices k and n-k.
struct FrequencyGrid {
    int n = 8192;   // power of two
    double W = 0.0; // half-width; default elsewhere is 8 pi / T

    double spacing() const { return 2.0 * W / n; }
    double omega(int k) const { return -W + spacing() * k; }
    int zero_index() const { return n / 2; }
    Eigen::VectorXd omegas() const;
};

// Validates n is a power of two >= 1024 and W > 0.
FrequencyGrid make_grid(int n, double W);

// Smallest absolute difference of two angles on the circle, in [0, pi].
double circular_distance(double a, double b);

} // namespace spincav
