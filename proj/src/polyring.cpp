#include "goodfact/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace goodfact {

namespace {

int sign_of(const Int& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

// Positive divisors of |n|, ascending.  n != 0.
std::vector<Int> positive_divisors(const Int& n) {
  Int m = int_abs(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int isqrt_ceil(const Int& n) {
  if (n <= 0) return 0;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n ? r : Int(r + 1);
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const Int& c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

IntPoly IntPoly::monomial(const Int& coeff, int power) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(power + 1, Int(0));
    p.c_[power] = coeff;
  }
  return p;
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw error(errc::invalid_input, "leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(const Int& s, const IntPoly& f) {
  IntPoly r = f;
  for (auto& v : r.c_) v *= s;
  r.normalize();
  return r;
}

int IntPoly::compare(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
  }
  return 0;
}

IntPoly IntPoly::times_power(int k) const {
  if (is_zero()) return IntPoly();
  std::vector<Int> c(c_.size() + k, Int(0));
  std::copy(c_.begin(), c_.end(), c.begin() + k);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(i) * c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> c(c_.rbegin(), c_.rend());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::at_neg_t() const {
  IntPoly r = *this;
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  IntPoly r = *this;
  for (auto& v : r.c_) v /= g;
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

Int IntPoly::eval_int(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw error(errc::invalid_input, "division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const Int& lb = bc.back();
  int db = b.degree();
  std::vector<Int> q(a.degree() - db + 1, Int(0));
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Int lead = rem[k + db];
    if (lead == 0) continue;
    if (lead % lb != 0) return std::nullopt;
    Int qk = lead / lb;
    q[k] = qk;
    for (int i = 0; i <= db; ++i) rem[k + i] -= qk * bc[i];
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw error(errc::non_exact_division, "non-exact division: (" + a.str() + ") / (" + b.str() + ")");
  return *q;
}

bool divides(const IntPoly& b, const IntPoly& a) { return try_divide(a, b).has_value(); }

// Primitive pseudo-remainder sequence.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly f = a.primitive_part(), g = b.primitive_part();
  if (f.is_zero()) std::swap(f, g);
  if (g.is_zero()) {
    if (!f.is_zero() && f.leading() < 0) f = -f;
    return f;
  }
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    // Pseudo-remainder of f by g, scaled by a positive power so each
    // elimination step stays integral; positive scaling keeps signs usable.
    int delta = f.degree() - g.degree();
    Int scale = 1;
    for (int i = 0; i <= delta; ++i) scale *= g.leading();
    if (scale < 0) scale = -scale;
    IntPoly r = scale * f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
      Int qk = r.leading() / g.leading();
      int shift = r.degree() - g.degree();
      if (qk == 0) break;  // cannot happen after scaling, guard anyway
      r = r - qk * g.times_power(shift);
    }
    f = g;
    g = r.is_zero() ? IntPoly() : r.primitive_part();
  }
  if (!f.is_zero() && f.leading() < 0) f = -f;
  return f;
}

IntPoly Factorization::reassemble() const {
  IntPoly acc = IntPoly::constant(unit);
  for (const auto& [p, m] : factors)
    for (int i = 0; i < m; ++i) acc *= p;
  return acc;
}

// Yun's algorithm on the primitive positive-leading part.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw error(errc::invalid_input, "squarefree decomposition of zero");
  std::vector<std::pair<IntPoly, int>> parts;
  IntPoly g = f.primitive_part();
  if (g.leading() < 0) g = -g;
  if (g.degree() == 0) return parts;
  IntPoly d0 = g.derivative();
  IntPoly a = poly_gcd(g, d0);
  IntPoly c = exact_divide(g, a);
  IntPoly d = exact_divide(d0, a) - c.derivative();
  int mult = 1;
  while (c.degree() >= 1) {
    IntPoly p = poly_gcd(c, d);
    if (p.degree() >= 1) parts.emplace_back(p, mult);
    c = exact_divide(c, p);
    d = exact_divide(d, p) - c.derivative();
    ++mult;
  }
  return parts;
}

Int mignotte_coeff_bound(const IntPoly& f, int d) {
  Int norm2 = 0;
  for (const auto& v : f.coeffs()) norm2 += v * v;
  return binomial(d, d / 2) * (isqrt_ceil(norm2) + int_abs(f.leading()));
}

std::vector<Rat> rational_roots(const IntPoly& f) {
  if (f.is_zero()) throw error(errc::invalid_input, "rational roots of zero polynomial");
  std::vector<Rat> roots;
  IntPoly g = f.primitive_part();
  size_t low = 0;
  while (g.coeff(static_cast<int>(low)) == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  Int a0 = g.coeff(static_cast<int>(low));
  Int an = g.leading();
  if (g.degree() > static_cast<int>(low) || low == g.coeffs().size()) {
    for (const Int& q : positive_divisors(an)) {
      for (const Int& p : positive_divisors(a0)) {
        if (boost::multiprecision::gcd(p, q) != 1) continue;
        for (int s : {1, -1}) {
          Rat cand(s * p, q);
          if (g.eval(cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

// Signed divisors delta of n with |delta| <= cap, |delta| ascending.
std::vector<Int> signed_divisors_capped(const Int& n, const Int& cap) {
  std::vector<Int> out;
  for (const Int& v : positive_divisors(n)) {
    if (v > cap) break;
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

// Divisor-tuple search used for d >= 5, where the coefficient box is too
// large to scan.  A degree-d divisor h satisfies h(x) | g(x) at d+1 integer
// points, so we enumerate divisor choices at 0, 1, -1, 2, -2, ... by depth
// first search, extending a Newton divided-difference row one point at a
// time.  Divided differences of an integer polynomial at integer nodes are
// integers, so any non-exact division prunes the whole subtree.  Leaves are
// filtered by lc(h) | lc(g) and the coefficient bound before trial division.
class DivisorTupleSearch {
 public:
  DivisorTupleSearch(const IntPoly& g, int d, Int bound)
      : g_(g), d_(d), bound_(std::move(bound)) {
    for (Int x = 0; static_cast<int>(xs_.size()) <= d;) {
      xs_.push_back(x);
      Int val = g.eval_int(x);
      std::vector<Int> opts;
      for (const Int& v : positive_divisors(val)) {
        opts.push_back(v);
        opts.push_back(-v);
      }
      options_.push_back(std::move(opts));
      x = x > 0 ? Int(-x) : Int(1 - x);
    }
    rows_.resize(static_cast<size_t>(d) + 1);
  }

  std::optional<IntPoly> run() {
    descend(0);
    return found_;
  }

 private:
  bool descend(size_t k) {
    for (const Int& v : options_[k]) {
      auto& row = rows_[k];
      row.assign(1, v);
      bool ok = true;
      for (size_t i = 1; i <= k; ++i) {
        Int num = row[i - 1] - rows_[k - 1][i - 1];
        Int den = xs_[k] - xs_[k - i];
        if (num % den != 0) {
          ok = false;
          break;
        }
        row.push_back(num / den);
      }
      if (!ok) continue;
      if (k < static_cast<size_t>(d_)) {
        if (descend(k + 1)) return true;
        continue;
      }
      const Int& lead = row[k];
      if (lead == 0 || g_.leading() % lead != 0) continue;
      if (check_leaf()) return true;
    }
    return false;
  }

  bool check_leaf() {
    // expand the Newton form sum_k diag_k prod_{j<k}(t - x_j)
    IntPoly h, basis = IntPoly::constant(1);
    for (size_t k = 0; k < rows_.size(); ++k) {
      h = h + basis * IntPoly::constant(rows_[k][k]);
      basis = basis * IntPoly{std::vector<Int>{-xs_[k], 1}};
    }
    if (h.degree() != d_) return false;
    if (h.leading() < 0) h = -h;
    for (const Int& c : h.coeffs())
      if (c > bound_ || c < -bound_) return false;
    if (!divides(h, g_)) return false;
    found_ = h;
    return true;
  }

  const IntPoly& g_;
  int d_;
  Int bound_;
  std::vector<Int> xs_;
  std::vector<std::vector<Int>> options_;
  std::vector<std::vector<Int>> rows_;  // rows_[k][i] = f[x_{k-i}..x_k]
  std::optional<IntPoly> found_;
};

// Search for a degree-d divisor of g in Z[t].  The candidate space is the
// Landau-Mignotte coefficient box: leading coefficient over positive divisors
// of lc(g), constant term over divisors of g(0), middle coefficients in
// [-bound, bound].  Any divisor h must satisfy h(x) | g(x) at every integer
// x, so the two highest middle coefficients are recovered from divisor pairs
// of (g(1), g(-1)) instead of being scanned, and h(2) | g(2), h(-2) | g(-2)
// prune survivors before trial division.  g is primitive, squarefree, has
// positive leading coefficient and no rational roots (those are stripped
// first), so g(0), g(+-1), g(+-2) are all nonzero.
std::optional<IntPoly> search_degree_d_factor(const IntPoly& g, int d) {
  Int bound = mignotte_coeff_bound(g, d);
  if (d >= 5) return DivisorTupleSearch(g, d, bound).run();
  Int g1 = g.eval_int(1), gm1 = g.eval_int(-1);
  Int g2 = g.eval_int(2), gm2 = g.eval_int(-2);
  Int eval_cap = bound * (d + 1);  // crude bound on |h(+-1)|
  std::vector<Int> d1 = signed_divisors_capped(g1, eval_cap);
  std::vector<Int> dm1 = signed_divisors_capped(gm1, eval_cap);
  std::vector<Int> lead_choices;
  for (const Int& v : positive_divisors(g.leading()))
    if (v <= bound) lead_choices.push_back(v);
  std::vector<Int> const_choices = signed_divisors_capped(g.constant_term(), bound);
  int sign_d = d % 2 == 0 ? 1 : -1;  // (-1)^d
  std::vector<Int> d2cands;  // candidates for h(2) when d >= 4
  if (d >= 4) d2cands = signed_divisors_capped(g2, bound * ((Int(1) << (d + 1)) - 1));

  std::vector<Int> hc(static_cast<size_t>(d) + 1);
  auto finish_candidate = [&](const IntPoly& h) -> bool {
    Int h2 = h.eval_int(2), hm2 = h.eval_int(-2);
    if (h2 == 0 || hm2 == 0 || g2 % h2 != 0 || gm2 % hm2 != 0) return false;
    return divides(h, g);
  };

  for (const Int& lc : lead_choices) {
    hc[d] = lc;
    for (const Int& c0 : const_choices) {
      hc[0] = c0;
      if (d == 1) {
        IntPoly h{std::vector<Int>(hc)};
        Int h1 = h.eval_int(1), hm1 = h.eval_int(-1);
        if (h1 != 0 && hm1 != 0 && g1 % h1 == 0 && gm1 % hm1 == 0 && divides(h, g)) return h;
        continue;
      }
      if (d == 2) {
        for (const Int& e1 : d1) {
          Int m1 = e1 - c0 - lc;
          if (m1 < -bound || m1 > bound) continue;
          hc[1] = m1;
          IntPoly h{std::vector<Int>(hc)};
          Int hm1 = h.eval_int(-1);
          if (hm1 == 0 || gm1 % hm1 != 0) continue;
          if (finish_candidate(h)) return h;
        }
        continue;
      }
      if (d == 3) {
        // mid_1, mid_2 solved from h(1) = e1, h(-1) = em1
        for (const Int& e1 : d1) {
          Int s = e1 - c0 - lc;  // mid_1 + mid_2
          for (const Int& em1 : dm1) {
            Int u = em1 - c0 - sign_d * lc;  // (-1)^d (mid_1 - mid_2)
            Int diff = sign_d * u;
            if ((s + diff) % 2 != 0) continue;
            Int a = (s + diff) / 2, b = (s - diff) / 2;
            if (a < -bound || a > bound || b < -bound || b > bound) continue;
            hc[1] = a;
            hc[2] = b;
            if (auto h = IntPoly{std::vector<Int>(hc)}; finish_candidate(h)) return h;
          }
        }
        continue;
      }
      // d >= 4: odometer over mid_1..mid_{d-4}; the top three middle
      // coefficients are solved from h(1) = e1, h(-1) = em1, h(2) = e2.
      Int w = sign_d;  // (-1)^d
      Int p2d3 = Int(1) << (d - 3);
      std::vector<Int> prefix(static_cast<size_t>(d) - 4, -bound);
      while (true) {
        Int pre_sum = 0, pre_alt = 0, pre_two = 0;  // sums of mid_i, (-1)^i mid_i, 2^i mid_i
        for (size_t i = 0; i < prefix.size(); ++i) {
          int pw = static_cast<int>(i) + 1;
          pre_sum += prefix[i];
          pre_alt += (pw % 2 == 0 ? prefix[i] : Int(-prefix[i]));
          pre_two += (Int(1) << pw) * prefix[i];
        }
        for (const Int& e1 : d1) {
          Int s = e1 - c0 - lc - pre_sum;  // x + y + z for mids at d-3, d-2, d-1
          for (const Int& em1 : dm1) {
            // (-1)^{d-3} x + (-1)^{d-2} y + (-1)^{d-1} z = -w(x - y + z)
            Int ap = -w * (em1 - c0 - w * lc - pre_alt);  // x - y + z
            if ((s + ap) % 2 != 0) continue;
            Int xz = (s + ap) / 2;  // x + z
            Int y = s - xz;
            if (y < -bound || y > bound) continue;
            for (const Int& e2 : d2cands) {
              Int tt = e2 - c0 - (Int(1) << d) * lc - pre_two;  // 2^{d-3}(x + 2y + 4z)
              if (tt % p2d3 != 0) continue;
              Int tp = tt / p2d3;
              Int z3 = tp - 2 * y - xz;  // 3z
              if (z3 % 3 != 0) continue;
              Int z = z3 / 3;
              Int x = xz - z;
              if (x < -bound || x > bound || z < -bound || z > bound) continue;
              for (size_t i = 0; i < prefix.size(); ++i) hc[i + 1] = prefix[i];
              hc[d - 3] = x;
              hc[d - 2] = y;
              hc[d - 1] = z;
              IntPoly h{std::vector<Int>(hc)};
              if (finish_candidate(h)) return h;
            }
          }
        }
        size_t i = prefix.size();
        bool done = prefix.empty();
        while (i > 0) {
          --i;
          if (prefix[i] < bound) {
            ++prefix[i];
            break;
          }
          prefix[i] = -bound;
          if (i == 0) done = true;
        }
        if (done) break;
      }
    }
  }
  return std::nullopt;
}

// g primitive, squarefree, positive leading coefficient, degree >= 1.
std::vector<IntPoly> factor_squarefree(IntPoly g) {
  std::vector<IntPoly> out;
  for (const Rat& root : rational_roots(g)) {
    IntPoly lin{std::vector<Int>{-boost::multiprecision::numerator(root),
                                 boost::multiprecision::denominator(root)}};
    g = exact_divide(g, lin);
    out.push_back(lin);
  }
  for (int d = 2; 2 * d <= g.degree();) {
    if (auto h = search_degree_d_factor(g, d)) {
      g = exact_divide(g, *h);
      out.push_back(*h);
    } else {
      ++d;
    }
  }
  if (g.degree() >= 1) out.push_back(g);
  return out;
}

}  // namespace

Factorization factor(const IntPoly& f, int degree_cap) {
  if (f.is_zero()) throw error(errc::invalid_input, "factor of zero polynomial");
  if (f.degree() > degree_cap)
    throw error(errc::degree_cap_exceeded,
                "degree " + std::to_string(f.degree()) + " exceeds factorization cap " + std::to_string(degree_cap));
  Factorization result;
  Int cont = f.content();
  result.unit = f.leading() < 0 ? Int(-cont) : cont;
  if (f.degree() == 0) return result;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (IntPoly& irr : factor_squarefree(part)) result.factors.emplace_back(std::move(irr), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return IntPoly::compare(a.first, b.first) < 0; });
  return result;
}

bool is_irreducible(const IntPoly& f, int degree_cap) {
  if (f.degree() < 1) throw error(errc::invalid_input, "irreducibility is about nonconstant polynomials");
  Factorization fac = factor(f, degree_cap);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

// ----- text form -----

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos == s.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw error(errc::invalid_input, "polynomial parse error at offset " + std::to_string(pos) + ": " + what);
  }
  Int read_uint() {
    skip_ws();
    if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
    Int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }
  // power of t, with the 't' already known to be next
  int read_t_power() {
    ++pos;  // 't'
    size_t save = pos;
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      Int p = read_uint();
      if (p > 100000) fail("exponent too large");
      return static_cast<int>(p);
    }
    pos = save;
    return 1;
  }
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
  Parser in{text};
  if (in.at_end()) in.fail("empty input");
  std::map<int, Int> acc;
  int sign = 1;
  in.skip_ws();
  if (in.s[in.pos] == '+' || in.s[in.pos] == '-') {
    sign = in.s[in.pos] == '-' ? -1 : 1;
    ++in.pos;
  }
  while (true) {
    in.skip_ws();
    if (in.pos == in.s.size()) in.fail("expected term");
    Int coeff = 1;
    int power = 0;
    char c = in.s[in.pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = in.read_uint();
      size_t save = in.pos;
      in.skip_ws();
      if (in.pos < in.s.size() && in.s[in.pos] == '*') {
        ++in.pos;
        in.skip_ws();
        if (in.pos == in.s.size() || in.s[in.pos] != 't') in.fail("expected 't' after '*'");
        power = in.read_t_power();
      } else if (in.pos < in.s.size() && in.s[in.pos] == 't') {
        power = in.read_t_power();
      } else {
        in.pos = save;
      }
    } else if (c == 't') {
      power = in.read_t_power();
    } else {
      in.fail("expected term");
    }
    acc[power] += sign * coeff;
    if (in.at_end()) break;
    char op = in.s[in.pos];
    if (op != '+' && op != '-') in.fail("expected '+' or '-'");
    sign = op == '-' ? -1 : 1;
    ++in.pos;
  }
  std::vector<Int> c(acc.empty() ? 0 : acc.rbegin()->first + 1, Int(0));
  for (const auto& [p, v] : acc) c[p] = v;
  return IntPoly(std::move(c));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] == 0) continue;
    bool neg = c_[i] < 0;
    Int mag = int_abs(c_[i]);
    std::string body;
    if (i == 0) {
      body = mag.str();
    } else {
      if (mag != 1) body = mag.str() + "*";
      body += "t";
      if (i != 1) body += "^" + std::to_string(i);
    }
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace goodfact
