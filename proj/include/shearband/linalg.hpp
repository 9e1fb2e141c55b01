#pragma once

#include <array>
#include <cmath>
#include <optional>

namespace shearband {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }

    /// Unit vector with sign fixed so the largest-magnitude entry is positive.
    Vec3 normalized_signed() const {
        double a = std::fabs(x), b = std::fabs(y), c = std::fabs(z);
        double big = x;
        if (b > a && b >= c) big = y;
        else if (c > a && c > b) big = z;
        double s = (big < 0 ? -1.0 : 1.0) / norm();
        return {x * s, y * s, z * s};
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct Mat3 {
    // row-major
    std::array<double, 9> a{};

    double& operator()(int i, int j) { return a[3 * i + j]; }
    double operator()(int i, int j) const { return a[3 * i + j]; }

    Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }

    double trace() const { return a[0] + a[4] + a[8]; }

    double det() const {
        return a[0] * (a[4] * a[8] - a[5] * a[7])
             - a[1] * (a[3] * a[8] - a[5] * a[6])
             + a[2] * (a[3] * a[7] - a[4] * a[6]);
    }

    /// Sum of principal 2x2 minors (second char-poly invariant).
    double minor_sum() const {
        return (a[4] * a[8] - a[5] * a[7])
             + (a[0] * a[8] - a[2] * a[6])
             + (a[0] * a[4] - a[1] * a[3]);
    }

    double frobenius() const {
        double s = 0;
        for (double v : a) s += v * v;
        return std::sqrt(s);
    }
};

/// Real roots of x^3 - t x^2 + s x - d = 0 when all three are real
/// (trigonometric form of Cardano, then Newton-polished on the monic cubic).
/// Returns nullopt if the discriminant indicates a complex pair.
std::optional<std::array<double, 3>> real_cubic_roots(double t, double s, double d);

/// Eigenvalues of a 3x3 real matrix with an all-real spectrum, ascending.
/// Returns nullopt when a complex pair is detected.
std::optional<std::array<double, 3>> eig3_real(const Mat3& J);

}  // namespace shearband
