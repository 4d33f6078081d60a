#include "kellerscope/puiseux.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

namespace kellerscope {

namespace {

constexpr int kExact = 1 << 28;

template <class B>
void curve_add(TCurve<B>& m, int j, int k, const TElem<B>& c) {
  if (c.is_zero()) return;
  auto it = m.find({j, k});
  if (it == m.end()) {
    m.emplace(std::make_pair(j, k), c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
}

Rat binom_rat(int n, int i) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
  return Rat(b);
}

// ---------- Newton polygon ----------

struct HullPt {
  int k, j;
};

// Lower convex hull of the support in the (solved-var exponent, small-var
// exponent) plane; branch exponents are read off its edges.
template <class B>
std::vector<HullPt> lower_hull_pts(const TCurve<B>& poly) {
  std::map<int, int> jmin;
  for (const auto& [jk, c] : poly) {
    auto it = jmin.find(jk.second);
    if (it == jmin.end() || jk.first < it->second) jmin[jk.second] = jk.first;
  }
  std::vector<HullPt> h;
  for (const auto& [k, j] : jmin) {
    HullPt p{k, j};
    while (h.size() >= 2) {
      const HullPt& a = h[h.size() - 2];
      const HullPt& b = h.back();
      long cr = static_cast<long>(b.k - a.k) * (p.j - a.j) -
                static_cast<long>(b.j - a.j) * (p.k - a.k);
      if (cr <= 0)
        h.pop_back();
      else
        break;
    }
    h.push_back(p);
  }
  return h;
}

struct NEdge {
  int k1, j1, k2, j2;
  int P, Q;  // slope P/Q in lowest terms, Q > 0: solved ~ c * small^(P/Q)
};

template <class B>
std::vector<NEdge> hull_edges(const TCurve<B>& poly) {
  std::vector<HullPt> h = lower_hull_pts(poly);
  std::vector<NEdge> out;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    NEdge e{h[i].k, h[i].j, h[i + 1].k, h[i + 1].j, 0, 1};
    int num = e.j1 - e.j2, den = e.k2 - e.k1;
    int g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    e.P = num / g;
    e.Q = den / g;
    out.push_back(e);
  }
  return out;
}

template <class B>
UniPoly<TElem<B>> edge_char_poly(const TCurve<B>& poly, const NEdge& e) {
  UniPoly<TElem<B>> phi("z");
  for (const auto& [jk, c] : poly) {
    int j = jk.first, k = jk.second;
    if (k < e.k1 || k > e.k2) continue;
    if (static_cast<long>(j - e.j1) * (e.k2 - e.k1) !=
        static_cast<long>(e.j2 - e.j1) * (k - e.k1))
      continue;
    ensure((k - e.k1) % e.Q == 0, "off-lattice support point on a polygon edge");
    int d = (k - e.k1) / e.Q;
    phi.set_coeff(d, phi.coeff(d) + c);
  }
  ensure(phi.degree() == (e.k2 - e.k1) / e.Q, "polygon edge lost its endpoints");
  return phi;
}

// r*Q - s*P == 1 for coprime Q > 0, P.
std::pair<long, long> bezout_rq(int Q, int P) {
  long r0 = Q, r1 = P, a0 = 1, a1 = 0, b0 = 0, b1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long t;
    t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = a0 - q * a1;
    a0 = a1;
    a1 = t;
    t = b0 - q * b1;
    b0 = b1;
    b1 = t;
  }
  ensure(r0 == 1 || r0 == -1, "polygon edge slope was not in lowest terms");
  if (r0 == -1) {
    a0 = -a0;
    b0 = -b0;
  }
  return {a0, -b0};
}

// ---------- branch state carried down the expansion tree ----------

template <class B>
struct BranchState {
  Tower<B> tower;
  int E = 1;
  TElem<B> U{1};
  std::vector<std::pair<int, TElem<B>>> series;
  TElem<B> fc{1};  // pending corrections enter as fc * W^fm * Y
  int fm = 0;
  int f = 1;
  int entry_node = -1;
  int entry_m = 0;
  std::vector<TElem<B>> prefix;
};

template <class B>
struct ExpandCtx {
  const Caps* caps = nullptr;
  bool pencil = false;
  std::vector<PuiseuxPlace<B>>* out = nullptr;
  Chart chart = Chart::YofX;
  int next_node = 0;
  int nodes_used = 0;
};

// Re-expresses the state after the parameter change W_old = zbar^s * W_new^Q.
template <class B>
void rescale_state(BranchState<B>& st, int Q, long s, const TElem<B>& zbar) {
  if (s != 0) {
    st.U = st.U * zbar.pow(static_cast<int>(s * st.E));
    for (auto& [m, c] : st.series) c = c * zbar.pow(static_cast<int>(s * m));
    st.fc = st.fc * zbar.pow(static_cast<int>(s * st.fm));
  }
  if (Q != 1) {
    st.E *= Q;
    for (auto& [m, c] : st.series) m *= Q;
    st.fm *= Q;
    st.entry_m *= Q;
  }
}

template <class B>
TCurve<B> duval_subst(const TCurve<B>& poly, const TElem<B>& zbar, int P, int Q, long r, long s) {
  long tau = LONG_MAX;
  for (const auto& [jk, c] : poly)
    tau = std::min(tau, static_cast<long>(jk.first) * Q + static_cast<long>(jk.second) * P);
  std::map<long, TElem<B>> cache;
  auto zpow = [&](long e) -> const TElem<B>& {
    auto it = cache.find(e);
    if (it == cache.end()) {
      require(e <= INT_MAX && e >= INT_MIN, "exponent overflow in substitution");
      it = cache.emplace(e, zbar.pow(static_cast<int>(e))).first;
    }
    return it->second;
  };
  TCurve<B> out;
  for (const auto& [jk, c] : poly) {
    long j = jk.first, k = jk.second;
    long wexp = j * Q + k * P - tau;
    require(wexp <= INT_MAX, "exponent overflow in substitution");
    TElem<B> base = c * zpow(s * j);
    for (int i = 0; i <= k; ++i) {
      TElem<B> add = base * zpow(r * (k - i));
      if (i > 0 && i < k) add = add * TElem<B>(B(binom_rat(static_cast<int>(k), i)));
      curve_add(out, static_cast<int>(wexp), i, add);
    }
  }
  return out;
}

template <class B>
void emit_place(ExpandCtx<B>& C, BranchState<B> st, bool exact, std::shared_ptr<IftState<B>> cont,
                int known) {
  PuiseuxPlace<B> pl;
  pl.chart = C.chart;
  pl.cycle = st.E;
  pl.unit = st.U;
  pl.series = std::move(st.series);
  pl.tower = st.tower;
  pl.conj = st.f;
  pl.exact = exact;
  pl.known_upto = exact ? kExact : known;
  pl.entry_node = st.entry_node;
  pl.entry_m = st.entry_m;
  pl.prefix = std::move(st.prefix);
  pl.cont = std::move(cont);
  C.out->push_back(std::move(pl));
}

template <class B>
void expand_node(ExpandCtx<B>& C, TCurve<B> poly, const BranchState<B>& st, int node, bool top);

template <class B>
void expand_factor(ExpandCtx<B>& C, const TCurve<B>& poly, const BranchState<B>& st, int node,
                   const NEdge& e, const UniPoly<TElem<B>>& M, int mult) {
  BranchState<B> ch = st;
  TElem<B> zbar(0);
  if (M.degree() == 1) {
    zbar = -M.coeff(0);
  } else {
    ch.tower = extend_field<B>(st.tower, M.coeffs(), "", *C.caps);
    zbar = TElem<B>::generator(ch.tower);
    ch.f *= M.degree();
  }
  bool step_t = false;
  for (const auto& c : M.coeffs())
    if (!is_t_free(c)) {
      step_t = true;
      break;
    }
  bool entering = C.pencil && ch.entry_node < 0 && step_t;
  if (entering) {
    ch.entry_node = node;
    ch.prefix.clear();
    for (const auto& [m, c] : st.series) ch.prefix.push_back(c);
  }
  auto [r, s] = bezout_rq(e.Q, e.P);
  rescale_state(ch, e.Q, s, zbar);
  int m_new = ch.fm + e.P;
  ch.series.emplace_back(m_new, ch.fc * zbar.pow(static_cast<int>(r)));
  if (entering) ch.entry_m = m_new;
  ch.fm = m_new;
  TCurve<B> bp = duval_subst(poly, zbar, e.P, e.Q, r, s);
  if (mult == 1) {
    bool has_k0 = false;
    for (const auto& [jk, c] : bp)
      if (jk.second == 0) {
        has_k0 = true;
        break;
      }
    if (!has_k0) {  // Y divides B': the branch terminates exactly
      emit_place<B>(C, std::move(ch), true, nullptr, 0);
      return;
    }
    auto ift = std::make_shared<IftState<B>>();
    ensure(bp.count({0, 1}) == 1 && bp.count({0, 0}) == 0,
           "simple factor did not produce a simple root");
    ift->poly = std::move(bp);
    ift->prefac_c = ch.fc;
    ift->prefac_m = ch.fm;
    ift->yser = UniPoly<TElem<B>>("W");
    ift->prec = 1;
    ift->base_terms = ch.series.size();
    ift->node = C.next_node++;
    int known = ch.fm + 1;
    emit_place(C, std::move(ch), false, std::move(ift), known);
  } else {
    int cnode = C.next_node++;
    expand_node(C, std::move(bp), ch, cnode, false);
  }
}

template <class B>
void expand_node(ExpandCtx<B>& C, TCurve<B> poly, const BranchState<B>& st, int node, bool top) {
  C.caps->check_deadline("place expansion");
  ensure(++C.nodes_used <= 20000, "place expansion did not terminate");
  ensure(!poly.empty(), "empty polynomial in place expansion");
  BranchState<B> cur = st;
  if (!top) {
    int kmin = INT_MAX;
    for (const auto& [jk, c] : poly) kmin = std::min(kmin, jk.second);
    if (kmin >= 1) {  // Y | B': one exact branch, keep expanding the cofactor
      ensure(kmin == 1, "repeated branch in a squarefree expansion");
      emit_place<B>(C, BranchState<B>(cur), true, nullptr, 0);
      TCurve<B> q;
      for (const auto& [jk, c] : poly) q.emplace(std::make_pair(jk.first, jk.second - 1), c);
      poly = std::move(q);
      bool any_k = false;
      for (const auto& [jk, c] : poly)
        if (jk.second > 0) {
          any_k = true;
          break;
        }
      if (!any_k) return;
    }
  }
  for (const NEdge& e : hull_edges(poly)) {
    if (top) {
      if (C.chart == Chart::YofX ? (e.P < -e.Q) : (e.P <= -e.Q)) continue;
    } else {
      if (e.P <= 0) continue;
    }
    UniPoly<TElem<B>> phi = edge_char_poly(poly, e);
    auto fac = factor_over_tower<B>(phi, cur.tower, *C.caps);
    for (const auto& [M, mult] : fac.factors) expand_factor(C, poly, cur, node, e, M, mult);
  }
}

// ---------- series extension in the implicit-function regime ----------

template <class B>
UniPoly<TElem<B>> ser_trunc(const UniPoly<TElem<B>>& p, int n) {
  if (p.degree() < n) return p;
  std::vector<TElem<B>> c(p.coeffs().begin(), p.coeffs().begin() + n);
  return UniPoly<TElem<B>>(p.var(), std::move(c));
}

template <class B>
UniPoly<TElem<B>> ser_inv(const UniPoly<TElem<B>>& d, int n) {
  TElem<B> d0 = d.coeff(0);
  ensure(!d0.is_zero(), "series inversion of a non-unit");
  UniPoly<TElem<B>> I = UniPoly<TElem<B>>::constant(d.var(), d0.inv());
  int m = 1;
  while (m < n) {
    m = std::min(2 * m, n);
    I = ser_trunc(I + I * (UniPoly<TElem<B>>(1) - ser_trunc(d, m) * I), m);
  }
  return I;
}

template <class B>
UniPoly<TElem<B>> eval_rows(const std::map<int, UniPoly<TElem<B>>>& rows,
                            const UniPoly<TElem<B>>& y, int n) {
  UniPoly<TElem<B>> acc(y.var());
  int prev = -1;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (prev < 0) {
      acc = ser_trunc(it->second, n);
    } else {
      for (int g = 0; g < prev - it->first; ++g) acc = ser_trunc(acc * y, n);
      acc = ser_trunc(acc + it->second, n);
    }
    prev = it->first;
  }
  for (int g = 0; g < prev; ++g) acc = ser_trunc(acc * y, n);
  return acc;
}

template <class B>
void ift_newton(IftState<B>& st, int need, const Caps& caps) {
  if (st.prec >= need) return;
  std::map<int, UniPoly<TElem<B>>> rows, drows;
  for (const auto& [jk, c] : st.poly) {
    auto& row = rows.emplace(jk.second, UniPoly<TElem<B>>("W")).first->second;
    row.set_coeff(jk.first, row.coeff(jk.first) + c);
    if (jk.second > 0) {
      auto& drow = drows.emplace(jk.second - 1, UniPoly<TElem<B>>("W")).first->second;
      drow.set_coeff(jk.first, drow.coeff(jk.first) + c * TElem<B>(jk.second));
    }
  }
  while (st.prec < need) {
    caps.check_deadline("place series extension");
    int n = std::min(2 * st.prec, need);
    UniPoly<TElem<B>> fv = eval_rows(rows, st.yser, n);
    UniPoly<TElem<B>> fp = eval_rows(drows, st.yser, n);
    st.yser = ser_trunc(st.yser - fv * ser_inv(fp, n), n);
    st.prec = n;
  }
}

// ---------- chart transforms and the top-level driver ----------

template <class B>
TCurve<B> chart_transform(const BiPoly& c, Chart ch, bool pencil) {
  int d = (ch == Chart::YofX) ? c.deg_x() : c.deg_y();
  TCurve<B> r;
  for (const auto& [k, a] : c.terms()) {
    int j = (ch == Chart::YofX) ? d - k.first : d - k.second;
    int kk = (ch == Chart::YofX) ? k.second : k.first;
    curve_add(r, j, kk, TElem<B>(B(a)));
  }
  if (pencil) {
    if constexpr (std::is_same_v<B, RatFunc>) {
      curve_add(r, d, 0, TElem<RatFunc>(RatFunc(-UniPoly<Rat>::variable("t"))));
    } else {
      throw InternalError("pencil expansion over a parameter-free field");
    }
  }
  return r;
}

template <class B>
PuiseuxPlace<B> axis_place(Chart ch) {
  PuiseuxPlace<B> pl;
  pl.chart = ch;
  pl.axis = true;
  pl.exact = true;
  pl.known_upto = kExact;
  return pl;
}

template <class B>
void scan_entry(PuiseuxPlace<B>& pl) {
  if (pl.entry_node >= 0) return;
  for (const auto& [m, c] : pl.series) {
    if (!is_t_free(c)) {
      pl.entry_node = pl.cont ? pl.cont->node : -1;
      pl.entry_m = m;
      pl.prefix.clear();
      for (const auto& [pm, pc] : pl.series) {
        if (pm >= m) break;
        pl.prefix.push_back(pc);
      }
      return;
    }
  }
}

template <class B>
std::vector<PuiseuxPlace<B>> expand_curve(const BiPoly& curve, bool pencil, const Caps& caps,
                                          const PuiseuxOptions& opt) {
  require(!curve.is_zero() && curve.total_degree() >= 1,
          "places at infinity need a nonconstant curve");
  BiPoly c = pencil ? curve : squarefree_part_bi(curve);
  std::vector<PuiseuxPlace<B>> out;
  if (!pencil) {
    bool ydiv = true, xdiv = true;
    for (const auto& [k, a] : c.terms()) {
      if (k.second == 0) ydiv = false;
      if (k.first == 0) xdiv = false;
    }
    BiPoly stripped(c.xname(), c.yname());
    for (const auto& [k, a] : c.terms())
      stripped.add_term(k.first - (xdiv ? 1 : 0), k.second - (ydiv ? 1 : 0), a);
    if (ydiv) out.push_back(axis_place<B>(Chart::YofX));
    if (xdiv) out.push_back(axis_place<B>(Chart::XofY));
    c = stripped;
    if (c.is_constant()) return out;
  }
  ExpandCtx<B> C;
  C.caps = &caps;
  C.pencil = pencil;
  C.out = &out;
  for (Chart ch : {Chart::YofX, Chart::XofY}) {
    C.chart = ch;
    int root = C.next_node++;
    expand_node(C, chart_transform<B>(c, ch, pencil), BranchState<B>{}, root, true);
  }
  for (auto& pl : out) {
    if (!pl.exact && pl.known_upto < opt.min_exponent) extend_place(pl, opt.min_exponent, caps);
  }
  if (pencil) {
    for (auto& pl : out) {
      int step = 4, guard = 0;
      while (!pl.exact && pl.entry_node < 0) {
        ensure(++guard <= 64, "parameter never entered a pencil expansion");
        extend_place(pl, pl.known_upto + step, caps);
        step *= 2;
      }
      ensure(pl.entry_node >= 0, "pencil place without parameter entry");
    }
  }
  return out;
}

template <class B>
std::string spow_str(int m) {
  if (m == 0) return "";
  if (m == 1) return "S";
  return "S^" + std::to_string(m);
}

template <class B>
void append_term(std::string& s, const TElem<B>& c, int m) {
  std::string cs = c.str();
  bool wrap = cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos ||
              cs.find('-', 1) != std::string::npos;
  bool neg = false;
  if (!wrap && !cs.empty() && cs[0] == '-') {
    neg = true;
    cs = cs.substr(1);
  }
  std::string pw = spow_str<B>(m);
  std::string body;
  if (pw.empty())
    body = wrap ? "(" + cs + ")" : cs;
  else if (cs == "1")
    body = pw;
  else
    body = (wrap ? "(" + cs + ")" : cs) + "*" + pw;
  if (s.empty())
    s = (neg ? "-" : "") + body;
  else
    s += (neg ? " - " : " + ") + body;
}

}  // namespace

std::vector<PuiseuxPlace<Rat>> places_at_infinity(const BiPoly& curve, const Caps& caps,
                                                  const PuiseuxOptions& opt) {
  return expand_curve<Rat>(curve, false, caps, opt);
}

std::vector<PuiseuxPlace<RatFunc>> pencil_places(const BiPoly& p, const Caps& caps,
                                                 const PuiseuxOptions& opt) {
  return expand_curve<RatFunc>(p, true, caps, opt);
}

template <class B>
void extend_place(PuiseuxPlace<B>& pl, int target, const Caps& caps) {
  if (pl.exact || !pl.cont || pl.known_upto >= target) return;
  IftState<B>& st = *pl.cont;
  ift_newton(st, target - st.prefac_m, caps);
  pl.series.resize(st.base_terms);
  for (int i = 1; i < st.prec; ++i) {
    TElem<B> c = st.yser.coeff(i);
    if (c.is_zero()) continue;
    pl.series.emplace_back(st.prefac_m + i, st.prefac_c * c);
  }
  pl.known_upto = st.prefac_m + st.prec;
  scan_entry(pl);
}

template void extend_place<Rat>(PuiseuxPlace<Rat>&, int, const Caps&);
template void extend_place<RatFunc>(PuiseuxPlace<RatFunc>&, int, const Caps&);

PencilAnalysis analyze_pencil(const BiPoly& p, const Caps& caps) {
  PencilAnalysis R;
  R.places = pencil_places(p, caps, {});
  std::map<std::pair<int, Rat>, std::vector<int>> groups;
  for (std::size_t i = 0; i < R.places.size(); ++i) {
    const auto& pl = R.places[i];
    R.total_places += pl.conj;
    groups[{pl.entry_node, pl.t_entry_exponent()}].push_back(static_cast<int>(i));
  }
  R.simple = true;
  for (const auto& [key, idxs] : groups) {
    const auto& first = R.places[static_cast<std::size_t>(idxs.front())];
    int fn = first.prefix.empty() ? 1 : subfield_degree_over_q(first.prefix, first.tower);
    int sumf = 0;
    for (int i : idxs) sumf += R.places[static_cast<std::size_t>(i)].conj;
    ensure(sumf % fn == 0, "component conjugacy does not divide the place count");
    int rdeg = sumf / fn;
    if (rdeg > 1) R.simple = false;
    for (int ci = 0; ci < fn; ++ci) {
      HorizontalComponent hc;
      hc.t_entry = key.second;
      hc.restriction_degree = rdeg;
      hc.conjugates = fn;
      hc.conjugate_index = ci;
      hc.places = idxs;
      R.components.push_back(std::move(hc));
    }
  }
  return R;
}

bool is_simple(const BiPoly& p, const Caps& caps) { return analyze_pencil(p, caps).simple; }

template <class B>
std::string place_param_small(const PuiseuxPlace<B>& pl) {
  std::string name = pl.chart == Chart::YofX ? "x" : "y";
  std::string body;
  append_term<B>(body, pl.unit.inv(), -pl.cycle);
  return name + " = " + body;
}

template <class B>
std::string place_param_big(const PuiseuxPlace<B>& pl) {
  std::string name = pl.chart == Chart::YofX ? "y" : "x";
  std::string body;
  for (const auto& [m, c] : pl.series) append_term<B>(body, c, m);
  if (body.empty()) body = "0";
  if (!pl.exact) body += " + O(S^" + std::to_string(pl.known_upto) + ")";
  return name + " = " + body;
}

template std::string place_param_small<Rat>(const PuiseuxPlace<Rat>&);
template std::string place_param_small<RatFunc>(const PuiseuxPlace<RatFunc>&);
template std::string place_param_big<Rat>(const PuiseuxPlace<Rat>&);
template std::string place_param_big<RatFunc>(const PuiseuxPlace<RatFunc>&);

template <class B>
std::pair<TruncSeries<B>, TruncSeries<B>> place_coordinate_series(const PuiseuxPlace<B>& pl) {
  TruncSeries<B> small;
  small.floor = TruncSeries<B>::kExactFloor;
  small.terms.emplace(pl.cycle, pl.unit);
  TruncSeries<B> big;
  big.floor = pl.exact ? TruncSeries<B>::kExactFloor : pl.known_upto;
  for (const auto& [m, c] : pl.series) big.terms.emplace(m, c);
  return {std::move(small), std::move(big)};
}

template <class B>
std::pair<TruncSeries<B>, TruncSeries<B>> place_xy_series(const PuiseuxPlace<B>& pl) {
  auto [small, big] = place_coordinate_series(pl);
  TruncSeries<B> inv_small;
  inv_small.floor = TruncSeries<B>::kExactFloor;
  inv_small.terms.emplace(-pl.cycle, pl.unit.inv());
  if (pl.chart == Chart::YofX) return {std::move(inv_small), std::move(big)};
  return {std::move(big), std::move(inv_small)};
}

template std::pair<TruncSeries<Rat>, TruncSeries<Rat>> place_coordinate_series<Rat>(
    const PuiseuxPlace<Rat>&);
template std::pair<TruncSeries<RatFunc>, TruncSeries<RatFunc>> place_coordinate_series<RatFunc>(
    const PuiseuxPlace<RatFunc>&);
template std::pair<TruncSeries<Rat>, TruncSeries<Rat>> place_xy_series<Rat>(
    const PuiseuxPlace<Rat>&);
template std::pair<TruncSeries<RatFunc>, TruncSeries<RatFunc>> place_xy_series<RatFunc>(
    const PuiseuxPlace<RatFunc>&);

namespace {

template <class B>
TruncSeries<B> ts_pow(const TruncSeries<B>& a, int e) {
  TruncSeries<B> r = ts_constant(TElem<B>(1));
  for (int i = 0; i < e; ++i) r = ts_mul(r, a);
  return r;
}

}  // namespace

template <class B>
TruncSeries<B> eval_on_place(const BiPoly& f, const TruncSeries<B>& xs, const TruncSeries<B>& ys) {
  std::map<int, std::map<int, Rat>> by_beta;
  for (const auto& [k, a] : f.terms()) by_beta[k.second][k.first] = a;
  TruncSeries<B> acc = ts_constant(TElem<B>(0));
  int prev_beta = -1;
  for (auto it = by_beta.rbegin(); it != by_beta.rend(); ++it) {
    TruncSeries<B> row = ts_constant(TElem<B>(0));
    int prev_alpha = -1;
    for (auto jt = it->second.rbegin(); jt != it->second.rend(); ++jt) {
      TruncSeries<B> cterm = ts_constant(TElem<B>(B(jt->second)));
      row = prev_alpha < 0 ? cterm : ts_add(ts_mul(row, ts_pow(xs, prev_alpha - jt->first)), cterm);
      prev_alpha = jt->first;
    }
    if (prev_alpha > 0) row = ts_mul(row, ts_pow(xs, prev_alpha));
    acc = prev_beta < 0 ? row : ts_add(ts_mul(acc, ts_pow(ys, prev_beta - it->first)), row);
    prev_beta = it->first;
  }
  if (prev_beta > 0) acc = ts_mul(acc, ts_pow(ys, prev_beta));
  return acc;
}

template TruncSeries<Rat> eval_on_place<Rat>(const BiPoly&, const TruncSeries<Rat>&,
                                             const TruncSeries<Rat>&);
template TruncSeries<RatFunc> eval_on_place<RatFunc>(const BiPoly&, const TruncSeries<RatFunc>&,
                                                     const TruncSeries<RatFunc>&);

}  // namespace kellerscope
