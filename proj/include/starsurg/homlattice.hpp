#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "starsurg/integer.hpp"

namespace starsurg {

// Label of an exceptional class. A single index renders as "e3", a tuple as
// "e(2,3)". Ordered lexicographically on the index tuple.
struct ExcLabel {
  std::vector<int> parts;

  ExcLabel() = default;
  explicit ExcLabel(int index) : parts{index} {}
  explicit ExcLabel(std::vector<int> p) : parts(std::move(p)) {}

  auto operator<=>(const ExcLabel&) const = default;
  bool operator==(const ExcLabel&) const = default;

  std::string to_string() const;
};

// Element of H_2 of CP^2 # N(-CP^2): h-coefficient plus finitely many
// exceptional coefficients. Zero coefficients are never stored.
class LatticeClass {
 public:
  LatticeClass() = default;
  explicit LatticeClass(Integer h) : h_(std::move(h)) {}

  static LatticeClass line() { return LatticeClass(1); }
  static LatticeClass exceptional(const ExcLabel& label);
  static LatticeClass exceptional(int index) { return exceptional(ExcLabel(index)); }

  const Integer& h() const { return h_; }
  void set_h(Integer h) { h_ = std::move(h); }

  Integer coefficient(const ExcLabel& label) const;
  void set_coefficient(const ExcLabel& label, const Integer& value);
  void add_coefficient(const ExcLabel& label, const Integer& delta);

  const std::map<ExcLabel, Integer>& exceptional_part() const { return exc_; }
  std::vector<ExcLabel> support() const;

  LatticeClass& operator+=(const LatticeClass& other);
  LatticeClass& operator-=(const LatticeClass& other);
  LatticeClass& operator*=(const Integer& scalar);
  friend LatticeClass operator+(LatticeClass a, const LatticeClass& b) { return a += b; }
  friend LatticeClass operator-(LatticeClass a, const LatticeClass& b) { return a -= b; }
  friend LatticeClass operator*(const Integer& s, LatticeClass a) { return a *= s; }
  LatticeClass operator-() const;

  bool operator==(const LatticeClass&) const = default;

  // "h - e1 - e(2,3)", "2h + 3e1", "0".
  std::string to_string() const;

 private:
  Integer h_ = 0;
  std::map<ExcLabel, Integer> exc_;
};

// The form diag(+1, -1, ..., -1).
Integer pairing(const LatticeClass& x, const LatticeClass& y);
Integer self_intersection(const LatticeClass& x);

// Evaluation of c_1 = 3h - sum(e) on x.
Integer c1_pairing(const LatticeClass& x);

// c1(x) - x.x - 2; zero for classes of embedded symplectic spheres.
Integer adjunction_defect(const LatticeClass& x);

// Inverse of LatticeClass::to_string. Throws ParseError.
LatticeClass parse_lattice_class(std::string_view text);
ExcLabel parse_exc_label(std::string_view text);

}  // namespace starsurg
