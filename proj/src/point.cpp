#include "halolab/point.hpp"

#include "halolab/errors.hpp"

#include <sstream>

namespace halolab {

Vec zero_vec(int d) { return Vec(static_cast<std::size_t>(d), BigInt(0)); }

Vec unit_vec(int d, int i, int sign) {
  Vec v = zero_vec(d);
  v[static_cast<std::size_t>(i)] = sign;
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r = a;
  for (auto& c : r) c = -c;
  return r;
}

BigInt l1_norm(const Vec& a) {
  BigInt s = 0;
  for (const auto& c : a) s += big_abs(c);
  return s;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

int vec_cmp(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

std::string vec_str(const Vec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  s += ")";
  return s;
}

Vec parse_vec(const std::string& s, int d) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw InvalidInput("parse_vec: expected (..): " + s);
  Vec v;
  std::stringstream ss(s.substr(1, s.size() - 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) v.emplace_back(tok);
  if (static_cast<int>(v.size()) != d)
    throw InvalidInput("parse_vec: wrong dimension in " + s);
  return v;
}

int point_cmp(const Point& a, const Point& b) {
  int c = vec_cmp(a.pos, b.pos);
  if (c) return c;
  if (a.slot < b.slot) return -1;
  return a.slot > b.slot ? 1 : 0;
}

bool operator<(const Point& a, const Point& b) { return point_cmp(a, b) < 0; }
bool operator==(const Point& a, const Point& b) { return point_cmp(a, b) == 0; }
bool operator!=(const Point& a, const Point& b) { return point_cmp(a, b) != 0; }

std::string point_str(const Point& p) {
  return vec_str(p.pos) + ";" + std::to_string(p.slot);
}

Point translate(const Point& p, const Vec& by) {
  return Point{vec_add(p.pos, by), p.slot};
}

}  // namespace halolab
