#include "adeq/exactnum.hpp"

#include <algorithm>
#include <sstream>

namespace adeq {

const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrKind::EndpointRoot: return "EndpointRoot";
    case ErrKind::ZeroOrMultipleRoots: return "ZeroOrMultipleRoots";
    case ErrKind::NegativeRadicand: return "NegativeRadicand";
    case ErrKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrKind::HypothesisViolated: return "HypothesisViolated";
    case ErrKind::Unresolved: return "Unresolved";
    case ErrKind::Indistinguishable: return "Indistinguishable";
    case ErrKind::NormTooLarge: return "NormTooLarge";
    case ErrKind::WrongPrime: return "WrongPrime";
    case ErrKind::CapExceeded: return "CapExceeded";
    case ErrKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrKind::BudgetExceeded: return "BudgetExceeded";
    case ErrKind::AmbiguousEquality: return "AmbiguousEquality";
    case ErrKind::ZeroTarget: return "ZeroTarget";
    case ErrKind::BackendMismatch: return "BackendMismatch";
    case ErrKind::TowerMismatch: return "TowerMismatch";
    case ErrKind::RadicalDependency: return "RadicalDependency";
    case ErrKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrKind::NoDerivation: return "NoDerivation";
    case ErrKind::BadInput: return "BadInput";
    case ErrKind::Internal: return "Internal";
  }
  return "Unknown";
}

Rat make_rat(const BigInt& n, const BigInt& d) {
  if (d == 0) fail(ErrKind::BadInput, "zero denominator");
  Rat r(n);
  r /= Rat(d);
  return r;
}

BigInt isqrt_floor(const BigInt& z) {
  if (z < 0) fail(ErrKind::BadInput, "isqrt of negative");
  return boost::multiprecision::sqrt(z);
}

bool perfect_square(const BigInt& z, BigInt* root) {
  if (z < 0) return false;
  BigInt r = isqrt_floor(z);
  if (r * r == z) {
    if (root) *root = r;
    return true;
  }
  return false;
}

bool rat_sqrt_exact(const Rat& q, Rat* root) {
  if (q < 0) return false;
  BigInt rn, rd;
  if (!perfect_square(rat_num(q), &rn)) return false;
  if (!perfect_square(rat_den(q), &rd)) return false;
  if (root) *root = make_rat(rn, rd);
  return true;
}

long rat_valuation(const Rat& q, long p) {
  if (q == 0) fail(ErrKind::BadInput, "valuation of zero");
  long v = 0;
  BigInt n = rat_num(q);
  BigInt d = rat_den(q);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << rat_num(q);
  if (rat_den(q) != 1) os << "/" << rat_den(q);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    return make_rat(n, d);
  } catch (const std::exception&) {
    fail(ErrKind::BadInput, "malformed rational '" + s + "'");
  }
}

Interval::Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) fail(ErrKind::BadInput, "interval with lo > hi");
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

IntPoly IntPoly::x() { return IntPoly({0, 1}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::coeff(size_t i) const {
  static const BigInt kZero = 0;
  return i < c_.size() ? c_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) fail(ErrKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

Rat IntPoly::eval(const Rat& x) const {
  // P(p/q) = (a_n p^n + a_{n-1} p^{n-1} q + ... + a_0 q^n) / q^n
  if (c_.empty()) return Rat(0);
  const BigInt p = rat_num(x), q = rat_den(x);
  BigInt acc = c_.back();
  BigInt qpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    qpow *= q;
    acc = acc * p + c_[i] * qpow;
  }
  return make_rat(acc, qpow);
}

BigInt IntPoly::eval_int(const BigInt& x) const {
  BigInt acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

int IntPoly::sign_at(const Rat& x) const { return eval(x).sign(); }

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> r(c_);
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return IntPoly();
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const BigInt& k) const {
  std::vector<BigInt> r(c_);
  for (auto& v : r) v *= k;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly acc;
  for (int i = degree(); i >= 0; --i) acc = acc * inner + IntPoly::constant(c_[i]);
  return acc;
}

IntPoly IntPoly::reversed() const {
  std::vector<BigInt> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
  return g < 0 ? BigInt(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return IntPoly();
  BigInt g = content();
  std::vector<BigInt> r(c_);
  for (auto& v : r) v /= g;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::canonical() const {
  IntPoly p = primitive_part();
  if (!p.c_.empty() && p.c_.back() < 0)
    for (auto& v : p.c_) v = -v;
  return p;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  if (d.is_zero()) fail(ErrKind::BadInput, "division by zero polynomial");
  if (is_zero()) return IntPoly();
  // Rational long division, then exactness check.
  RatPoly q, r;
  RatPoly(*this).divmod(RatPoly(d), &q, &r);
  if (!r.is_zero()) fail(ErrKind::Internal, "divexact with nonzero remainder");
  std::vector<BigInt> out;
  out.reserve(q.coeffs().size());
  for (const Rat& c : q.coeffs()) {
    if (rat_den(c) != 1) fail(ErrKind::Internal, "divexact quotient not integral");
    out.push_back(rat_num(c));
  }
  return IntPoly(std::move(out));
}

bool IntPoly::divides(const IntPoly& d) const {
  if (d.is_zero()) return false;
  if (is_zero()) return true;
  RatPoly q, r;
  RatPoly(*this).divmod(RatPoly(d), &q, &r);
  return r.is_zero();
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  os << "[";
  if (c_.empty()) os << "0";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

IntPoly poly_from_string(const std::string& s) {
  std::string t = s;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    fail(ErrKind::BadInput, "polynomial must look like [c0,c1,...]: '" + s + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<BigInt> coeffs;
  if (!t.empty()) {
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        coeffs.emplace_back(item);
      } catch (const std::exception&) {
        fail(ErrKind::BadInput, "bad coefficient '" + item + "'");
      }
    }
  }
  return IntPoly(std::move(coeffs));
}

Rat poly_eval(const IntPoly& p, const Rat& x) { return p.eval(x); }

IntPoly poly_derivative(const IntPoly& p) {
  if (p.degree() <= 0) return IntPoly();
  std::vector<BigInt> r(p.degree());
  for (int i = 1; i <= p.degree(); ++i) r[i - 1] = p.coeff(i) * i;
  return IntPoly(std::move(r));
}

namespace {

// Pseudo-remainder with an even power of the leading coefficient, so the
// remainder keeps the sign of lc^even * a mod b. Used by both gcd and Sturm.
IntPoly prem_even(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  const BigInt& lc = b.leading();
  int mult = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    BigInt c = r.leading();
    // lc * r - c * x^shift * b
    std::vector<BigInt> nb(b.coeffs());
    IntPoly shifted;
    {
      std::vector<BigInt> sc(shift, BigInt(0));
      sc.insert(sc.end(), nb.begin(), nb.end());
      shifted = IntPoly(std::move(sc));
    }
    r = r.scaled(lc) - shifted.scaled(c);
    ++mult;
  }
  if (mult % 2 == 1 && lc < 0) r = r.scaled(lc);
  return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrKind::BadInput, "gcd of two zero polynomials");
  IntPoly u = a.canonical();
  IntPoly v = b.canonical();
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = prem_even(u, v).primitive_part();
    u = v;
    v = r;
  }
  return u.canonical();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) fail(ErrKind::ZeroPolynomial, "squarefree part of zero");
  if (p.degree() == 0) return IntPoly::constant(1);
  IntPoly g = poly_gcd(p, poly_derivative(p));
  return p.canonical().divexact(g).canonical();
}

namespace {

// Sturm chain of a squarefree polynomial, primitive pseudo-remainders with
// sign control.
std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain;
  chain.push_back(p);
  IntPoly d = poly_derivative(p);
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain[chain.size() - 1];
    if (b.degree() < 1) break;
    IntPoly r = prem_even(a, b);
    if (r.is_zero()) break;
    r = -r;
    r = r.primitive_part();
    chain.push_back(r);
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& s : chain) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

}  // namespace

long sturm_count(const IntPoly& p, const Interval& iv) {
  if (p.is_zero()) fail(ErrKind::ZeroPolynomial, "sturm_count on zero polynomial");
  if (p.sign_at(iv.lo) == 0 || p.sign_at(iv.hi) == 0)
    fail(ErrKind::EndpointRoot, "interval endpoint is a root");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
}

Rat cauchy_root_bound(const IntPoly& p) {
  if (p.degree() < 1) fail(ErrKind::BadInput, "root bound needs degree >= 1");
  BigInt m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigInt a = p.coeff(i) < 0 ? BigInt(-p.coeff(i)) : p.coeff(i);
    if (a > m) m = a;
  }
  BigInt lead = p.leading() < 0 ? BigInt(-p.leading()) : p.leading();
  return Rat(1) + make_rat(m, lead);
}

namespace {

struct IsolationState {
  const IntPoly* p;
  const std::vector<IntPoly>* chain;
  std::vector<Interval> out;

  long count(const Rat& lo, const Rat& hi) {
    return sign_variations(*chain, lo) - sign_variations(*chain, hi);
  }

  // Both endpoints are non-roots.
  void split(const Rat& lo, const Rat& hi) {
    long c = count(lo, hi);
    if (c == 0) return;
    if (c == 1) {
      out.emplace_back(lo, hi);
      return;
    }
    Rat mid = (lo + hi) / 2;
    if (p->sign_at(mid) != 0) {
      split(lo, mid);
      split(mid, hi);
      return;
    }
    // The midpoint is a root; carve out a private interval around it.
    Rat delta = (hi - lo) / 4;
    while (true) {
      Rat a = mid - delta, b = mid + delta;
      if (p->sign_at(a) != 0 && p->sign_at(b) != 0 && count(a, b) == 1) {
        out.emplace_back(a, b);
        split(lo, a);
        split(b, hi);
        return;
      }
      delta /= 2;
    }
  }
};

}  // namespace

std::vector<Interval> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) fail(ErrKind::ZeroPolynomial, "isolate_real_roots on zero");
  IntPoly q = squarefree_part(p);
  if (q.degree() < 1) return {};
  // Power-of-two bound keeps every bisection endpoint dyadic.
  Rat bound = cauchy_root_bound(q);
  BigInt b = 1;
  while (Rat(b) < bound) b *= 2;
  IsolationState st;
  auto chain = sturm_chain(q);
  st.p = &q;
  st.chain = &chain;
  st.split(Rat(-b), Rat(b));
  std::sort(st.out.begin(), st.out.end(),
            [](const Interval& a, const Interval& c) { return a.lo < c.lo; });
  return st.out;
}

Interval refine_interval(const IntPoly& p, const Interval& iv, const Rat& width) {
  if (width <= 0) fail(ErrKind::BadInput, "refine width must be positive");
  int slo = p.sign_at(iv.lo), shi = p.sign_at(iv.hi);
  if (slo == 0 || shi == 0) fail(ErrKind::EndpointRoot, "refine endpoint is a root");
  if (slo == shi) fail(ErrKind::BadInput, "interval does not bracket a sign change");
  Rat lo = iv.lo, hi = iv.hi;
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    int sm = p.sign_at(mid);
    if (sm == 0) {
      // The root is exactly mid; shrink symmetrically around it.
      Rat d = hi - lo;
      Rat quarter = std::min(width, d) / 4;
      Rat a = mid - quarter, b = mid + quarter;
      while (p.sign_at(a) == 0 || p.sign_at(b) == 0 || p.sign_at(a) == p.sign_at(b)) {
        quarter /= 2;
        a = mid - quarter;
        b = mid + quarter;
      }
      lo = a;
      hi = b;
      continue;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return Interval(lo, hi);
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

RatPoly RatPoly::constant(const Rat& c) {
  RatPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(size_t i) const {
  static const Rat kZero = 0;
  return i < c_.size() ? c_[i] : kZero;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v = -v;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (c_.empty() || o.c_.empty()) return RatPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rat& k) const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v *= k;
  return RatPoly(std::move(r));
}

void RatPoly::divmod(const RatPoly& d, RatPoly* q, RatPoly* r) const {
  if (d.is_zero()) fail(ErrKind::BadInput, "polynomial division by zero");
  std::vector<Rat> rem(c_);
  std::vector<Rat> quot;
  int dd = d.degree();
  const Rat& lead = d.coeff(dd);
  int rd = static_cast<int>(rem.size()) - 1;
  if (rd >= dd) quot.assign(rd - dd + 1, Rat(0));
  while (rd >= dd) {
    if (rem[rd] != 0) {
      Rat f = rem[rd] / lead;
      quot[rd - dd] = f;
      for (int i = 0; i <= dd; ++i) rem[rd - dd + i] -= f * d.coeff(i);
    }
    --rd;
  }
  if (q) *q = RatPoly(std::move(quot));
  if (r) *r = RatPoly(std::move(rem));
}

RatPoly RatPoly::mod(const RatPoly& m) const {
  RatPoly q, r;
  divmod(m, &q, &r);
  return r;
}

IntPoly RatPoly::cleared(BigInt* denom) const {
  BigInt l = 1;
  for (const auto& v : c_) l = boost::multiprecision::lcm(l, rat_den(v));
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(rat_num(v) * (l / rat_den(v)));
  if (denom) *denom = l;
  return IntPoly(std::move(out));
}

std::string RatPoly::to_string() const {
  std::ostringstream os;
  os << "[";
  if (c_.empty()) os << "0";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(c_[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace adeq
