#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kellerscope/errors.hpp"
#include "kellerscope/rat.hpp"
#include "kellerscope/ratfunc.hpp"
#include "kellerscope/unipoly.hpp"

namespace kellerscope {

// Towers of algebraic field extensions over a base field B (Rat or RatFunc).
// A tower is a shared_ptr chain of immutable levels; nullptr is the base field.
// Compatibility of elements is by level identity: an element may combine with
// elements of the same level chain or any ancestor (lifted by constant
// embedding). Structurally identical but separately built towers are distinct.

template <class B>
class TElem;

template <class B>
struct TowerLevel {
  std::shared_ptr<const TowerLevel<B>> below;  // nullptr = base field
  std::vector<TElem<B>> minpoly;               // dense ascending over `below`, monic
  std::string gen;                             // generator display name
  int height = 1;                              // levels including this one
  bool involves_t = false;                     // some minpoly coefficient is not t-free

  int degree() const { return static_cast<int>(minpoly.size()) - 1; }
};

template <class B>
using Tower = std::shared_ptr<const TowerLevel<B>>;

inline bool scalar_is_t_free(const Rat&) { return true; }
inline bool scalar_is_t_free(const RatFunc& r) { return r.is_constant(); }
inline Rat scalar_to_rat(const Rat& r) { return r; }
inline Rat scalar_to_rat(const RatFunc& r) { return r.to_rat(); }

template <class B>
bool same_level(const Tower<B>& a, const Tower<B>& b) {
  return a.get() == b.get();
}

// True when `anc` is `t` itself or an ancestor of `t` (nullptr under everything).
template <class B>
bool level_in_ancestry(const Tower<B>& anc, const Tower<B>& t) {
  if (!anc) return true;
  for (const TowerLevel<B>* p = t.get(); p; p = p->below.get())
    if (p == anc.get()) return true;
  return false;
}

template <class B>
int tower_degree(const Tower<B>& t) {
  return t ? t->degree() * tower_degree(t->below) : 1;
}

template <class B>
int tower_height(const Tower<B>& t) {
  return t ? t->height : 0;
}

// Element of an extension tower. Canonical form: a value lying in a lower
// level is stored there (coefficient vectors are trimmed and never of size
// <= 1), so zero is always the base-field zero and representations of equal
// values in one tower family coincide.
template <class B>
class TElem {
public:
  TElem() : base_(0) {}
  TElem(int n) : base_(n) {}
  explicit TElem(B v) : base_(std::move(v)) {}

  static TElem generator(const Tower<B>& lvl) {
    require(lvl != nullptr, "generator of the base field requested");
    ensure(lvl->degree() >= 2, "tower level with trivial degree");
    return make(lvl, {TElem(0), TElem(1)});
  }

  // Builds an element from coefficients over lvl->below; reduces mod minpoly.
  static TElem from_coeffs(const Tower<B>& lvl, std::vector<TElem> c) {
    require(lvl != nullptr, "from_coeffs needs a tower level");
    for (const TElem& e : c)
      ensure(level_in_ancestry(e.lvl_, lvl->below), "coefficient outside the tower level");
    reduce_mod(c, *lvl);
    return make(lvl, std::move(c));
  }

  const Tower<B>& level() const { return lvl_; }
  bool is_zero() const { return !lvl_ && base_.is_zero(); }
  bool is_one() const { return !lvl_ && base_ == B(1); }

  // The base-field value of an element that collapsed to the base field.
  const B& to_base() const {
    ensure(!lvl_, "tower element does not lie in the base field");
    return base_;
  }

  // Coefficients over lvl->below when viewed at level `lvl` (which must be the
  // element's level or a descendant of it).
  std::vector<TElem> coeffs_at(const Tower<B>& lvl) const {
    ensure(lvl != nullptr, "coeffs_at the base field");
    ensure(level_in_ancestry(lvl_, lvl), "element outside the requested level");
    if (same_level(lvl_, lvl)) return c_;
    return {*this};
  }

  TElem operator-() const {
    if (!lvl_) return TElem(B(0) - base_);
    std::vector<TElem> c;
    c.reserve(c_.size());
    for (const TElem& e : c_) c.push_back(-e);
    return make(lvl_, std::move(c));
  }

  friend TElem operator+(const TElem& a, const TElem& b) {
    Tower<B> lvl = join_level(a, b);
    if (!lvl) return TElem(a.base_ + b.base_);
    std::vector<TElem> ca = a.coeffs_at(lvl), cb = b.coeffs_at(lvl);
    if (cb.size() > ca.size()) ca.resize(cb.size(), TElem(0));
    for (std::size_t i = 0; i < cb.size(); ++i) ca[i] = ca[i] + cb[i];
    return make(lvl, std::move(ca));
  }
  friend TElem operator-(const TElem& a, const TElem& b) { return a + (-b); }

  friend TElem operator*(const TElem& a, const TElem& b) {
    Tower<B> lvl = join_level(a, b);
    if (!lvl) return TElem(a.base_ * b.base_);
    std::vector<TElem> ca = a.coeffs_at(lvl), cb = b.coeffs_at(lvl);
    std::vector<TElem> prod(ca.size() + cb.size() - 1, TElem(0));
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i].is_zero()) continue;
      for (std::size_t j = 0; j < cb.size(); ++j)
        prod[i + j] = prod[i + j] + ca[i] * cb[j];
    }
    reduce_mod(prod, *lvl);
    return make(lvl, std::move(prod));
  }

  // Inverse via the extended Euclidean algorithm against the level minpoly.
  // A nontrivial gcd means the minpoly was reducible; that contract violation
  // surfaces here as an internal error rather than a wrong answer.
  TElem inv() const {
    require(!is_zero(), "inverse of zero tower element");
    if (!lvl_) return TElem(B(1) / base_);
    using P = UniPoly<TElem>;
    P m("@", lvl_->minpoly), r1("@", c_);
    P r0 = m, t0("@"), t1 = P::constant("@", TElem(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      P t2 = t0 - q * t1;
      r0 = r1;
      r1 = r;
      t0 = t1;
      t1 = t2;
    }
    ensure(r0.degree() == 0, "zero divisor: tower minimal polynomial is reducible");
    P invp = t0.scaled(r0.coeff(0).inv());
    return from_coeffs(lvl_, invp.coeffs());
  }

  friend TElem operator/(const TElem& a, const TElem& b) { return a * b.inv(); }

  TElem pow(int e) const {
    if (e < 0) return inv().pow(-e);
    TElem r(1), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = (e >>= 1) > 0 ? base * base : base;
    }
    return r;
  }

  friend bool operator==(const TElem& a, const TElem& b) { return (a - b).is_zero(); }
  friend bool operator!=(const TElem& a, const TElem& b) { return !(a == b); }

  std::string str() const {
    if (!lvl_) return coeff_str(base_);
    return UniPoly<TElem>(lvl_->gen, c_).str();
  }

private:
  Tower<B> lvl_;
  B base_;                 // meaningful when lvl_ is null
  std::vector<TElem> c_;   // over lvl_->below, reduced, trimmed, size >= 2

  static TElem make(Tower<B> lvl, std::vector<TElem> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) return TElem();
    if (c.size() == 1) return std::move(c.front());
    TElem r;
    r.lvl_ = std::move(lvl);
    r.c_ = std::move(c);
    return r;
  }

  static void reduce_mod(std::vector<TElem>& v, const TowerLevel<B>& lvl) {
    const int d = lvl.degree();
    ensure(d >= 1, "tower level with empty minimal polynomial");
    while (static_cast<int>(v.size()) > d) {
      TElem f = std::move(v.back());
      v.pop_back();
      if (f.is_zero()) continue;
      const std::size_t at = v.size() - static_cast<std::size_t>(d);
      for (int i = 0; i < d; ++i) v[at + i] = v[at + i] - f * lvl.minpoly[i];
    }
  }

  static Tower<B> join_level(const TElem& a, const TElem& b) {
    if (same_level(a.lvl_, b.lvl_)) return a.lvl_;
    if (level_in_ancestry(a.lvl_, b.lvl_)) return b.lvl_;
    if (level_in_ancestry(b.lvl_, a.lvl_)) return a.lvl_;
    throw InternalError("elements of incompatible towers combined");
  }
};

template <class B>
bool coeff_is_zero(const TElem<B>& e) { return e.is_zero(); }
template <class B>
std::string coeff_str(const TElem<B>& e) { return e.str(); }
template <class B>
TElem<B> exact_div(const TElem<B>& a, const TElem<B>& b) { return a / b; }

// Syntactic t-freeness: true when the element manifestly does not involve the
// pencil parameter. A level whose minpoly involves t makes its generator (and
// every element genuinely at that level) count as involving t.
template <class B>
bool is_t_free(const TElem<B>& e) {
  if (!e.level()) return scalar_is_t_free(e.to_base());
  if (e.level()->involves_t) return false;
  for (const TElem<B>& c : e.coeffs_at(e.level()))
    if (!is_t_free(c)) return false;
  return true;
}

// Adjoins a root of `minpoly` (monic over `below`). Irreducibility is the
// caller's contract; expansion code always factors before extending, and a
// violation is caught at the first inversion of a zero divisor.
template <class B>
Tower<B> extend_field(const Tower<B>& below, std::vector<TElem<B>> minpoly,
                      std::string gen, const Caps& caps) {
  const int d = static_cast<int>(minpoly.size()) - 1;
  require(d >= 2, "tower extension of degree below 2");
  if (d > caps.ext_degree)
    throw CapacityError("extension degree " + std::to_string(d) +
                        " exceeds cap ext_degree = " + std::to_string(caps.ext_degree));
  const int h = tower_height(below) + 1;
  if (h > caps.tower_height)
    throw CapacityError("tower height " + std::to_string(h) +
                        " exceeds cap tower_height = " + std::to_string(caps.tower_height));
  ensure(minpoly.back().is_one(), "tower minimal polynomial is not monic");
  bool tfree = true;
  for (const TElem<B>& c : minpoly) {
    ensure(level_in_ancestry(c.level(), below), "minpoly coefficient outside the base tower");
    if (!is_t_free(c)) tfree = false;
  }
  auto lvl = std::make_shared<TowerLevel<B>>();
  lvl->below = below;
  lvl->minpoly = std::move(minpoly);
  lvl->gen = gen.empty() ? "a" + std::to_string(h) : std::move(gen);
  lvl->height = h;
  lvl->involves_t = !tfree;
  return lvl;
}

// Generator/minpoly display strings from the bottom level up.
template <class B>
std::vector<std::pair<std::string, std::string>> tower_description(const Tower<B>& t) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const TowerLevel<B>* p = t.get(); p; p = p->below.get())
    out.emplace_back(p->gen, UniPoly<TElem<B>>(p->gen, p->minpoly).str());
  std::reverse(out.begin(), out.end());
  return out;
}

// Coordinates of `a` over the monomial basis of the tower `lvl`; basis index
// is generator-exponent major from the top level down, so block i of the top
// generator holds the coordinates of coefficient i over the tower below.
template <class B>
std::vector<B> flatten(const TElem<B>& a, const Tower<B>& lvl) {
  ensure(level_in_ancestry(a.level(), lvl), "element outside the tower being flattened");
  if (!lvl) return {a.to_base()};
  const int sub = tower_degree(lvl->below);
  std::vector<B> out(static_cast<std::size_t>(lvl->degree()) * sub, B(0));
  std::vector<TElem<B>> c = a.coeffs_at(lvl);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<B> block = flatten(c[i], lvl->below);
    std::copy(block.begin(), block.end(), out.begin() + static_cast<std::ptrdiff_t>(i * sub));
  }
  return out;
}

// Degree over Q of the subfield generated by `gens`, all of which must be
// t-free so their coordinates are rational. Computed as the dimension of the
// multiplicative closure of the Q-span of 1 under the generators.
template <class B>
int subfield_degree_over_q(const std::vector<TElem<B>>& gens, const Tower<B>& lvl) {
  const int n = tower_degree(lvl);
  std::vector<std::vector<Rat>> rows;
  std::vector<int> pivots;
  auto try_insert = [&](const TElem<B>& e) -> bool {
    std::vector<B> co = flatten(e, lvl);
    std::vector<Rat> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = scalar_to_rat(co[static_cast<std::size_t>(i)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rat x = v[static_cast<std::size_t>(pivots[r])];
      if (x.is_zero()) continue;
      for (int c = 0; c < n; ++c)
        v[static_cast<std::size_t>(c)] -= x * rows[r][static_cast<std::size_t>(c)];
    }
    int p = -1;
    for (int c = 0; c < n && p < 0; ++c)
      if (!v[static_cast<std::size_t>(c)].is_zero()) p = c;
    if (p < 0) return false;
    Rat s = v[static_cast<std::size_t>(p)].inv();
    for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(c)] *= s;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  };
  std::vector<TElem<B>> queue;
  TElem<B> one(1);
  if (try_insert(one)) queue.push_back(one);
  while (!queue.empty()) {
    TElem<B> e = std::move(queue.back());
    queue.pop_back();
    for (const TElem<B>& g : gens) {
      ensure(is_t_free(g), "subfield degree of an element involving t");
      TElem<B> p = e * g;
      if (try_insert(p)) queue.push_back(p);
    }
  }
  return static_cast<int>(rows.size());
}

// Monic minimal polynomial of `a` over the base field B, found as the first
// linear dependence among flattened powers of `a`.
template <class B>
UniPoly<B> minpoly_over_base(const TElem<B>& a, const Tower<B>& lvl, const std::string& var = "z") {
  const int n = tower_degree(lvl);
  std::vector<std::vector<B>> rows;
  std::vector<std::vector<B>> combos;  // combos[r][j]: coefficient of a^j in row r
  std::vector<int> pivots;
  TElem<B> p(1);
  for (int k = 0;; ++k) {
    ensure(k <= n, "minimal polynomial search exceeded the tower degree");
    std::vector<B> v = flatten(p, lvl);
    std::vector<B> combo(static_cast<std::size_t>(k) + 1, B(0));
    combo.back() = B(1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      B x = v[static_cast<std::size_t>(pivots[r])];
      if (coeff_is_zero(x)) continue;
      for (int c = 0; c < n; ++c)
        v[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(c)] - x * rows[r][static_cast<std::size_t>(c)];
      for (std::size_t j = 0; j < combos[r].size(); ++j)
        combo[j] = combo[j] - x * combos[r][j];
    }
    int piv = -1;
    for (int c = 0; c < n && piv < 0; ++c)
      if (!coeff_is_zero(v[static_cast<std::size_t>(c)])) piv = c;
    if (piv < 0) return UniPoly<B>(var, std::move(combo));
    B s = B(1) / v[static_cast<std::size_t>(piv)];
    for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(c)] * s;
    for (auto& x : combo) x = x * s;
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(piv);
    p = p * a;
  }
}

}  // namespace kellerscope
