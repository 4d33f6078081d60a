#pragma once

#include <string>
#include <utility>

#include "kellerscope/bipoly.hpp"

namespace kellerscope {

// The plane polynomial map F = (P, Q) in source variables (x, y).
class PolyMap {
public:
  PolyMap(BiPoly P, BiPoly Q) : P_(std::move(P)), Q_(std::move(Q)) {
    require(!P_.is_zero() && !Q_.is_zero(), "map components must be nonzero");
    P_.check_vars(Q_);
    deg_P_ = P_.total_degree();
    deg_Q_ = Q_.total_degree();
  }

  static PolyMap identity() { return PolyMap(BiPoly::var_x(), BiPoly::var_y()); }

  const BiPoly& P() const { return P_; }
  const BiPoly& Q() const { return Q_; }
  int deg_P() const { return deg_P_; }
  int deg_Q() const { return deg_Q_; }
  int degree() const { return std::max(deg_P_, deg_Q_); }

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.P_ == b.P_ && a.Q_ == b.Q_;
  }
  friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }

private:
  BiPoly P_, Q_;
  int deg_P_, deg_Q_;
};

struct KellerCertificate {
  BiPoly jacobian;
  bool is_keller = false;
  Rat constant_value;  // meaningful only when is_keller
};

BiPoly jacobian(const PolyMap& F);
KellerCertificate keller_check(const PolyMap& F);

// (F o G)(x, y) = F(G(x, y)).
PolyMap compose(const PolyMap& F, const PolyMap& G);
std::pair<Rat, Rat> evaluate(const PolyMap& F, const std::pair<Rat, Rat>& point);

// Expression grammar (ASCII), with position-annotated diagnostics:
//   expr     := ('-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nonneg-integer)?
//   base     := variable | rational | '(' expr ')'
//   rational := integer ('/' positive-integer)?
// Variables are x and y; implicit multiplication is rejected. The leading
// unary minus is an extension so that printed polynomials re-parse.
BiPoly parse_poly(const std::string& text);
// A map is "P ; Q".
PolyMap parse_map(const std::string& text);
std::string print_poly(const BiPoly& p);
std::string print_map(const PolyMap& F);

}  // namespace kellerscope
