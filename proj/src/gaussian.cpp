#include "rcl/gaussian.hpp"

namespace rcl {

namespace {

Wide wnorm2(FreqPoint n) {
  return Wide(n.re) * n.re + Wide(n.im) * n.im;
}

std::int64_t narrow(Wide v, const char* what) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) throw LatticeOverflow(what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t norm2(FreqPoint n) { return narrow(wnorm2(n), "norm2 overflow"); }

std::int64_t dot(FreqPoint a, FreqPoint b) {
  return narrow(Wide(a.re) * b.re + Wide(a.im) * b.im, "dot overflow");
}

std::int64_t omega4(FreqPoint n1, FreqPoint n2, FreqPoint n3, FreqPoint n) {
  Wide w = wnorm2(n1) - wnorm2(n2) + wnorm2(n3) - wnorm2(n);
  return narrow(w, "omega4 overflow");
}

bool is_resonant(FreqPoint n1, FreqPoint n2, FreqPoint n3, FreqPoint n) {
  if (n1 - n2 + n3 != n) return false;
  if (n1 == n || n3 == n) return false;
  return wnorm2(n1) - wnorm2(n2) + wnorm2(n3) - wnorm2(n) == 0;
}

bool is_rectangle(FreqPoint n1, FreqPoint n2, FreqPoint n3, FreqPoint n) {
  // Parallelogram with diagonals (n1,n3), (n2,n); then one right angle
  // forces a rectangle. Repeated points are degenerate.
  if (n1 + n3 != n2 + n) return false;
  if (n1 == n2 || n1 == n3 || n1 == n || n2 == n3 || n2 == n || n3 == n) return false;
  FreqPoint u = n1 - n2;
  FreqPoint v = n3 - n2;
  return Wide(u.re) * v.re + Wide(u.im) * v.im == 0;
}

bool right_angle_at(FreqPoint a, FreqPoint b, FreqPoint c) {
  if (a == b || a == c || b == c)
    throw std::invalid_argument("right_angle_at: points must be distinct");
  FreqPoint u = b - a;
  FreqPoint v = c - a;
  return Wide(u.re) * v.re + Wide(u.im) * v.im == 0;
}

}  // namespace rcl
