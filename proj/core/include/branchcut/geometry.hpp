#pragma once

#include <optional>

#include "branchcut/scalar.hpp"

namespace branchcut {

Real cross(const Complex& u, const Complex& v);
Real dot(const Complex& u, const Complex& v);

Real dist_point_segment(const Complex& p, const Complex& a, const Complex& b);
Real dist_point_ray(const Complex& p, const Complex& origin, const Complex& dir);

struct Crossing {
    Real s;  // parameter along the probing segment, in [0, 1]
    Complex at;
};

// crossing of segment [a,b] with the ray origin + t*dir (t >= 0)
std::optional<Crossing> segment_crosses_ray(const Complex& a, const Complex& b, const Complex& origin,
                                            const Complex& dir);
// crossing of segment [a,b] with segment [c,d]
std::optional<Crossing> segment_crosses_segment(const Complex& a, const Complex& b, const Complex& c,
                                                const Complex& d);

}  // namespace branchcut
