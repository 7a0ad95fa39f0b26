#include "sascone/core_types.hpp"

#include <numeric>
#include <utility>

#include "sascone/error.hpp"

namespace sascone {
namespace {

void require_positive(Int value, const char* name) {
  if (value <= 0 || value > kMaxParameter) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(name) + " must be a positive integer <= " +
                    std::to_string(kMaxParameter) + ", got " +
                    std::to_string(value));
  }
}

std::string parse_suffix_error(const std::string& text) {
  return "unrecognized base '" + text +
         "' (expected CP<p>, Sigma<g> or custom:<dim>:<c1>)";
}

}  // namespace

BaseManifold BaseManifold::projective_space(Int p) {
  require_positive(p, "p");
  return {p, p + 1, "CP" + std::to_string(p), true};
}

BaseManifold BaseManifold::riemann_surface(Int genus) {
  if (genus < 0 || genus > kMaxParameter / 2) {
    throw Error(ErrorKind::InvalidArgument, "genus out of range");
  }
  return {1, 2 - 2 * genus, "Sigma" + std::to_string(genus), true};
}

BaseManifold BaseManifold::custom(Int dim_c, Int c1_coeff, std::string label) {
  require_positive(dim_c, "dim_c");
  if (c1_coeff > kMaxParameter || c1_coeff < -kMaxParameter) {
    throw Error(ErrorKind::InvalidArgument, "c1 coefficient out of range");
  }
  if (label.empty()) {
    label = "custom(" + std::to_string(dim_c) + "," + std::to_string(c1_coeff) + ")";
  }
  return {dim_c, c1_coeff, std::move(label), true};
}

BaseManifold BaseManifold::parse(const std::string& text) {
  try {
    if (text.rfind("CP^", 0) == 0) return projective_space(parse_int(text.substr(3)));
    if (text.rfind("CP", 0) == 0) return projective_space(parse_int(text.substr(2)));
    if (text.rfind("Sigma", 0) == 0) return riemann_surface(parse_int(text.substr(5)));
    if (text.rfind("custom:", 0) == 0) {
      const auto rest = text.substr(7);
      const auto colon = rest.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorKind::InvalidArgument, parse_suffix_error(text));
      }
      return custom(parse_int(rest.substr(0, colon)),
                    parse_int(rest.substr(colon + 1)));
    }
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidArgument,
                parse_suffix_error(text) + ": " + e.what());
  }
  throw Error(ErrorKind::InvalidArgument, parse_suffix_error(text));
}

bool JoinParams::smooth() const {
  const WideInt product = static_cast<WideInt>(l1_) * w1_ * w2_;
  return gcd_wide(l2_, product) == 1;
}

JoinParams validate_join(Int l1, Int l2, Int w1, Int w2,
                         const BaseManifold& base, Smoothness smoothness) {
  require_positive(l1, "l1");
  require_positive(l2, "l2");
  require_positive(w1, "w1");
  require_positive(w2, "w2");
  if (base.dim_c < 1) {
    throw Error(ErrorKind::InvalidArgument, "base dim_c must be >= 1");
  }
  if (std::gcd(l1, l2) != 1) {
    throw Error(ErrorKind::NotCoprime,
                "l1 and l2 are not coprime: gcd(" + std::to_string(l1) + ", " +
                    std::to_string(l2) + ") = " + std::to_string(std::gcd(l1, l2)));
  }
  if (std::gcd(w1, w2) != 1) {
    throw Error(ErrorKind::NotCoprime,
                "w1 and w2 are not coprime: gcd(" + std::to_string(w1) + ", " +
                    std::to_string(w2) + ") = " + std::to_string(std::gcd(w1, w2)));
  }
  JoinParams join;
  join.base_ = base;
  join.l1_ = l1;
  join.l2_ = l2;
  join.w1_ = w1;
  join.w2_ = w2;
  if (w1 < w2) {
    std::swap(join.w1_, join.w2_);
    join.swapped_ = true;
  }
  if (smoothness == Smoothness::Enforce && !join.smooth()) {
    throw Error(ErrorKind::SmoothnessViolation,
                "gcd(l2, l1*w1*w2) != 1 for l2=" + std::to_string(l2) +
                    ", l1*w1*w2=" + to_string_wide(static_cast<WideInt>(l1) * w1 * w2));
  }
  return join;
}

JoinParams validate_join(const JoinParams& join, Smoothness smoothness) {
  JoinParams out = validate_join(join.l1(), join.l2(), join.w1(), join.w2(),
                                 join.base(), smoothness);
  out.swapped_ = join.swapped_;
  return out;
}

ReebRay::ReebRay(Int v1, Int v2) : v1_(v1), v2_(v2) {
  require_positive(v1, "v1");
  require_positive(v2, "v2");
  if (std::gcd(v1, v2) != 1) {
    throw Error(ErrorKind::NotCoprime,
                "ray components are not coprime: (" + std::to_string(v1) + ", " +
                    std::to_string(v2) + ")");
  }
}

ReebRay ReebRay::canonical(Int a, Int b) {
  require_positive(a, "v1");
  require_positive(b, "v2");
  const Int g = std::gcd(a, b);
  return ReebRay(a / g, b / g);
}

}  // namespace sascone
