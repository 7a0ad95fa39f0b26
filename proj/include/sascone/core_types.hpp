#pragma once

#include <string>

#include "sascone/integer.hpp"
#include "sascone/rational.hpp"

namespace sascone {

// The regular quotient N of the Sasaki manifold M. Only the monotone case
// c1(N) = c1_coeff * [omega_N] is representable; `monotone == false` marks a
// base whose first Chern class has further components, which the quotient
// and classification routines reject.
struct BaseManifold {
  Int dim_c = 1;
  Int c1_coeff = 2;
  std::string label;
  bool monotone = true;

  bool is_fano() const { return c1_coeff > 0; }

  // CP^p: dim_c = p, Fano index p + 1.
  static BaseManifold projective_space(Int p);
  // Riemann surface of genus g: c1 = 2 - 2g.
  static BaseManifold riemann_surface(Int genus);
  static BaseManifold custom(Int dim_c, Int c1_coeff, std::string label = {});

  // "CP<p>", "CP^<p>", "Sigma<g>", "custom:<dim>:<c1>".
  static BaseManifold parse(const std::string& text);

  friend bool operator==(const BaseManifold&, const BaseManifold&) = default;
};

enum class Smoothness {
  // Reject gcd(l2, l1*w1*w2) != 1.
  Enforce,
  // Keep the algebraic formulas available for non-smooth parameter choices
  // (some published tables list them).
  Relaxed,
};

// Join data (l1, l2, w1, w2) over a base N. Construct with validate_join.
class JoinParams {
 public:
  const BaseManifold& base() const { return base_; }
  Int l1() const { return l1_; }
  Int l2() const { return l2_; }
  Int w1() const { return w1_; }
  Int w2() const { return w2_; }
  Int w_total() const { return w1_ + w2_; }
  // True when the caller supplied the weights in ascending order.
  bool weights_swapped() const { return swapped_; }
  bool smooth() const;

  friend bool operator==(const JoinParams&, const JoinParams&) = default;

 private:
  friend JoinParams validate_join(Int, Int, Int, Int, const BaseManifold&,
                                  Smoothness);
  friend JoinParams validate_join(const JoinParams&, Smoothness);
  BaseManifold base_;
  Int l1_ = 1, l2_ = 1, w1_ = 1, w2_ = 1;
  bool swapped_ = false;
};

JoinParams validate_join(Int l1, Int l2, Int w1, Int w2,
                         const BaseManifold& base,
                         Smoothness smoothness = Smoothness::Enforce);

// Re-validates an existing join; a fixed point of validate_join.
JoinParams validate_join(const JoinParams& join,
                         Smoothness smoothness = Smoothness::Enforce);

// Quasi-regular Reeb ray (v1, v2) with coprime positive components.
class ReebRay {
 public:
  ReebRay(Int v1, Int v2);

  // Divides out gcd(a, b); accepts any positive pair.
  static ReebRay canonical(Int a, Int b);

  Int v1() const { return v1_; }
  Int v2() const { return v2_; }
  Rational ratio() const { return Rational(v1_, v2_); }

  friend bool operator==(const ReebRay&, const ReebRay&) = default;

 private:
  Int v1_, v2_;
};

}  // namespace sascone
