#include "branchcut/geometry.hpp"

#include <algorithm>

namespace branchcut {

Real cross(const Complex& u, const Complex& v) { return u.re * v.im - u.im * v.re; }
Real dot(const Complex& u, const Complex& v) { return u.re * v.re + u.im * v.im; }

Real dist_point_segment(const Complex& p, const Complex& a, const Complex& b) {
    Complex u = b - a;
    Real len2 = u.norm_sq();
    if (len2 == 0) return abs(p - a);
    Real t = dot(p - a, u) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    return abs(p - (a + Complex(t) * u));
}

Real dist_point_ray(const Complex& p, const Complex& origin, const Complex& dir) {
    Real t = dot(p - origin, dir) / dir.norm_sq();
    if (t < 0) t = 0;
    return abs(p - (origin + Complex(t) * dir));
}

namespace {

// a + s(b-a) = c + t e; returns (s, t) unless nearly parallel
std::optional<std::pair<Real, Real>> solve_params(const Complex& a, const Complex& b, const Complex& c,
                                                  const Complex& e) {
    Complex u = b - a;
    Real den = cross(u, e);
    Real scale = abs(u) * abs(e);
    if (scale == 0 || abs(den) <= scale * pow10(-30)) return std::nullopt;
    Complex rhs = c - a;
    Real s = cross(rhs, e) / den;
    Real t = cross(rhs, u) / den;
    return std::make_pair(s, t);
}

}  // namespace

std::optional<Crossing> segment_crosses_ray(const Complex& a, const Complex& b, const Complex& origin,
                                            const Complex& dir) {
    auto st = solve_params(a, b, origin, dir);
    if (!st) return std::nullopt;
    auto [s, t] = *st;
    Real eps("1e-18");
    if (s < -eps || s > Real(1) + eps || t < -eps) return std::nullopt;
    return Crossing{s, a + Complex(s) * (b - a)};
}

std::optional<Crossing> segment_crosses_segment(const Complex& a, const Complex& b, const Complex& c,
                                                const Complex& d) {
    auto st = solve_params(a, b, c, d - c);
    if (!st) return std::nullopt;
    auto [s, t] = *st;
    Real eps("1e-18");
    if (s < -eps || s > Real(1) + eps || t < -eps || t > Real(1) + eps) return std::nullopt;
    return Crossing{s, a + Complex(s) * (b - a)};
}

}  // namespace branchcut
