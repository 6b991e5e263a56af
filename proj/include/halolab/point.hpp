#pragma once

#include "halolab/numeric.hpp"

#include <string>
#include <vector>

namespace halolab {

using Vec = std::vector<BigInt>;

Vec zero_vec(int d);
Vec unit_vec(int d, int i, int sign = 1);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
BigInt l1_norm(const Vec& a);
bool vec_is_zero(const Vec& a);
int vec_cmp(const Vec& a, const Vec& b);  // lexicographic
std::string vec_str(const Vec& a);
Vec parse_vec(const std::string& s, int d);

/// A lamp site: a base vector plus a slot index in {1..r} (slot 1 when r = 1).
struct Point {
  Vec pos;
  int slot = 1;
};

/// Canonical point order: lexicographic on (vector, slot).
int point_cmp(const Point& a, const Point& b);
bool operator<(const Point& a, const Point& b);
bool operator==(const Point& a, const Point& b);
bool operator!=(const Point& a, const Point& b);
std::string point_str(const Point& p);
Point translate(const Point& p, const Vec& by);

}  // namespace halolab
