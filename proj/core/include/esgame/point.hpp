#pragma once

#include <span>
#include <string>
#include <vector>

#include "esgame/rational.hpp"

namespace esg {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// Lexicographic order on (x, y).
bool lex_less(const Point& a, const Point& b);

struct LexLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);
Point midpoint(const Point& a, const Point& b);

// z-component of u x v.
Rational cross(const Point& u, const Point& v);

enum class Orientation : int {
  Clockwise = -1,
  Collinear = 0,
  CounterClockwise = 1,
};

// Sign of (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

inline int to_int(Orientation o) { return static_cast<int>(o); }

std::string to_string(const Point& p);
std::string to_string(Orientation o);

// Throws Error{DuplicatePoint} when two entries coincide.
void require_distinct(std::span<const Point> points);

// Throws Error{DuplicatePoint} or Error{DegenerateInput} (collinear triple).
void require_general_position(std::span<const Point> points);

bool in_general_position(std::span<const Point> points);

}  // namespace esg
