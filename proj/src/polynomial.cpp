#include "torusjump/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "torusjump/errors.hpp"

namespace torusjump {

LaurentRing::LaurentRing(int num_vars, CoeffDomain coeff)
    : nvars_(num_vars), coeff_(std::move(coeff)) {
  if (num_vars < 1) throw DomainError("ring needs at least one variable");
}

LaurentRing LaurentRing::extended(int extra) const {
  return LaurentRing(nvars_ + extra, coeff_);
}

std::string LaurentRing::variable_name(int i) const {
  return "t" + std::to_string(i + 1);
}

std::string LaurentRing::to_string() const {
  std::string s = coeff_.to_string() + "[";
  for (int i = 0; i < nvars_; ++i) {
    if (i) s += ",";
    s += variable_name(i);
  }
  return s + "]";
}

namespace {

const MonomialOrder kStorageOrder = MonomialOrder::degrevlex();

void check_same_ring(const LaurentRing& a, const LaurentRing& b) {
  if (!(a == b))
    throw RingMismatchError("operands live in " + a.to_string() + " and " +
                            b.to_string());
}

}  // namespace

Polynomial Polynomial::constant(const LaurentRing& r, const mpq_class& c) {
  return monomial(r, Monomial(r.num_vars()), c);
}

Polynomial Polynomial::variable(const LaurentRing& r, int i) {
  if (i < 0 || i >= r.num_vars())
    throw DomainError("variable index out of range: " + std::to_string(i));
  Monomial m(r.num_vars());
  m[i] = 1;
  return monomial(r, m, 1);
}

Polynomial Polynomial::monomial(const LaurentRing& r, Monomial m,
                                const mpq_class& c) {
  if (static_cast<int>(m.nvars()) != r.num_vars())
    throw RingMismatchError("monomial has wrong variable count");
  return from_terms(r, {Term{std::move(m), c}});
}

Polynomial Polynomial::from_terms(const LaurentRing& r,
                                  std::vector<Term> terms) {
  const CoeffDomain& dom = r.coeff();
  for (Term& t : terms) {
    if (static_cast<int>(t.mono.nvars()) != r.num_vars())
      throw RingMismatchError("term has wrong variable count");
    t.coeff = dom.normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return kStorageOrder.greater(a.mono, b.mono);
  });
  Polynomial f(r);
  for (Term& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = dom.add(f.terms_.back().coeff, t.coeff);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (t.coeff != 0) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

std::uint64_t Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty())
    throw DomainError("zero polynomial has no leading term");
  if (order == kStorageOrder) return terms_.front();
  const Term* best = &terms_.front();
  for (const Term& t : terms_)
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  const CoeffDomain& dom = ring_.coeff();
  for (Term& t : r.terms_) t.coeff = dom.neg(t.coeff);
  return r;
}

namespace {

Polynomial merge_sum(const Polynomial& f, const Polynomial& g, bool subtract) {
  const CoeffDomain& dom = f.ring().coeff();
  Polynomial r(f.ring());
  std::vector<Term> out;
  out.reserve(f.terms().size() + g.terms().size());
  std::size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = MonomialOrder::degrevlex().compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      mpq_class v = subtract ? dom.neg(b[j].coeff) : b[j].coeff;
      out.push_back(Term{b[j].mono, std::move(v)});
      ++j;
    } else {
      mpq_class v = subtract ? dom.sub(a[i].coeff, b[j].coeff)
                             : dom.add(a[i].coeff, b[j].coeff);
      if (v != 0) out.push_back(Term{a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_same_ring(ring_, g.ring_);
  return merge_sum(*this, g, false);
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  check_same_ring(ring_, g.ring_);
  return merge_sum(*this, g, true);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_same_ring(ring_, g.ring_);
  const CoeffDomain& dom = ring_.coeff();
  auto desc = [](const Monomial& a, const Monomial& b) {
    return kStorageOrder.greater(a, b);
  };
  std::map<Monomial, mpq_class, decltype(desc)> acc(desc);
  for (const Term& s : terms_)
    for (const Term& t : g.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    mpq_class v = dom.normalize(c);
    if (v != 0) out.push_back(Term{m, std::move(v)});
  }
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
  return ring_ == g.ring_ && terms_ == g.terms_;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  const CoeffDomain& dom = ring_.coeff();
  mpq_class cc = dom.normalize(c);
  if (cc == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = dom.mul(t.coeff, cc);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m,
                                      const mpq_class& c) const {
  const CoeffDomain& dom = ring_.coeff();
  mpq_class cc = dom.normalize(c);
  if (cc == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    r.terms_.push_back(Term{t.mono * m, dom.mul(t.coeff, cc)});
  return r;
}

Polynomial Polynomial::exact_div(const Polynomial& g) const {
  check_same_ring(ring_, g.ring_);
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const CoeffDomain& dom = ring_.coeff();
  Polynomial r(*this);
  std::vector<Term> quot;
  const Term& glt = g.terms_.front();
  while (!r.is_zero()) {
    const Term& rlt = r.terms_.front();
    if (!glt.mono.divides(rlt.mono))
      throw DomainError("not an exact polynomial quotient");
    mpq_class c = rlt.coeff / glt.coeff;
    if (dom.kind() == CoeffKind::Integer && c.get_den() != 1)
      throw DomainError("not an exact polynomial quotient");
    c = dom.normalize(c);
    Monomial m = rlt.mono.quotient_by(glt.mono);
    quot.push_back(Term{m, c});
    r = r - g.times_monomial(m, c);
  }
  return from_terms(ring_, std::move(quot));
}

mpq_class Polynomial::evaluate(std::span<const mpq_class> point) const {
  if (static_cast<int>(point.size()) != ring_.num_vars())
    throw ShapeError("point has wrong coordinate count");
  const CoeffDomain& dom = ring_.coeff();
  std::vector<mpq_class> p;
  p.reserve(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    mpq_class c = dom.normalize(point[i]);
    if (c == 0)
      throw DomainError("coordinate " + std::to_string(i + 1) +
                        " is zero; not a torus point");
    if (!dom.is_invertible(c))
      throw DomainError("coordinate " + std::to_string(i + 1) +
                        " is not a unit; not a torus point");
    p.push_back(std::move(c));
  }
  mpq_class total = 0;
  for (const Term& t : terms_) {
    mpq_class v = t.coeff;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (t.mono[i]) v = dom.mul(v, dom.pow(p[i], t.mono[i]));
    total = dom.add(total, v);
  }
  return total;
}

Polynomial Polynomial::scale_vars(std::span<const mpq_class> lambda) const {
  if (static_cast<int>(lambda.size()) != ring_.num_vars())
    throw ShapeError("scaling vector has wrong coordinate count");
  const CoeffDomain& dom = ring_.coeff();
  std::vector<mpq_class> l;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    mpq_class c = dom.normalize(lambda[i]);
    if (!dom.is_invertible(c))
      throw DomainError("scaling coordinate " + std::to_string(i + 1) +
                        " is not a unit");
    l.push_back(std::move(c));
  }
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    mpq_class c = t.coeff;
    for (std::size_t i = 0; i < l.size(); ++i)
      if (t.mono[i]) c = dom.mul(c, dom.pow(l[i], t.mono[i]));
    r.terms_.push_back(Term{t.mono, std::move(c)});
  }
  return r;
}

Polynomial Polynomial::reduce_coefficients(const CoeffDomain& target) const {
  if (ring_.coeff().kind() != CoeffKind::Integer)
    throw DomainError("coefficient reduction starts from integer coefficients");
  if (!target.is_field())
    throw DomainError("coefficient reduction targets a field");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(t);
  return from_terms(ring_.with_coeff(target), std::move(out));
}

Polynomial Polynomial::lift_to(const LaurentRing& bigger) const {
  if (bigger.num_vars() < ring_.num_vars() ||
      !(bigger.coeff() == ring_.coeff()))
    throw RingMismatchError("lift target must extend the ring");
  Polynomial r(bigger);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<std::uint32_t> e = t.mono.exponents();
    e.resize(bigger.num_vars(), 0);
    r.terms_.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return r;
}

Polynomial Polynomial::restrict_to(const LaurentRing& smaller) const {
  if (smaller.num_vars() > ring_.num_vars() ||
      !(smaller.coeff() == ring_.coeff()))
    throw RingMismatchError("restriction target must be a subring");
  Polynomial r(smaller);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    for (int i = smaller.num_vars(); i < ring_.num_vars(); ++i)
      if (t.mono[i] != 0)
        throw DomainError("polynomial involves an eliminated variable");
    std::vector<std::uint32_t> e(t.mono.exponents().begin(),
                                 t.mono.exponents().begin() +
                                     smaller.num_vars());
    r.terms_.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    mpq_class mag = negative ? mpq_class(-c) : c;
    if (t.mono.is_one()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      bool firstvar = true;
      for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!firstvar) out << "*";
        firstvar = false;
        out << ring_.variable_name(static_cast<int>(i));
        if (t.mono[i] > 1) out << "^" << t.mono[i];
      }
    }
  }
  return out.str();
}

namespace {

constexpr std::uint32_t kMaxExponent = 1000000;

struct PolyParser {
  const LaurentRing& ring;
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " (at offset " + std::to_string(pos) + " in \"" +
                     std::string(s) + "\")");
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() const { return pos == s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class read_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::size_t start = pos;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    return mpz_class(std::string(s.substr(start, pos - start)), 10);
  }

  Term read_term(int sign) {
    mpq_class coeff(sign);
    Monomial mono(ring.num_vars());
    while (true) {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        mpz_class num = read_uint();
        if (eat('/')) {
          mpz_class den = read_uint();
          if (den == 0) fail("zero denominator");
          mpq_class q(num, den);
          q.canonicalize();
          coeff *= q;
        } else {
          coeff *= mpq_class(num);
        }
      } else if (peek() == 't') {
        ++pos;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected a variable index after 't'");
        mpz_class idx = read_uint();
        if (idx < 1 || idx > ring.num_vars())
          fail("variable index out of range for " + ring.to_string());
        std::size_t v = idx.get_ui() - 1;
        std::uint32_t exp = 1;
        skip_ws();
        if (eat('^')) {
          skip_ws();
          if (peek() == '-')
            fail("negative exponents are not supported; invert via "
                 "saturation at the product of the variables");
          mpz_class e = read_uint();
          if (e > kMaxExponent) fail("exponent too large");
          exp = static_cast<std::uint32_t>(e.get_ui());
        }
        if (mono[v] > kMaxExponent - exp) fail("exponent too large");
        mono[v] += exp;
      } else {
        fail("expected a coefficient or a variable");
      }
      skip_ws();
      if (!eat('*')) break;
    }
    return Term{std::move(mono), std::move(coeff)};
  }
};

}  // namespace

Polynomial Polynomial::parse(const LaurentRing& r, std::string_view text) {
  PolyParser p{r, text};
  std::vector<Term> terms;
  p.skip_ws();
  if (p.at_end()) p.fail("empty polynomial");
  int sign = 1;
  if (p.eat('-'))
    sign = -1;
  else
    p.eat('+');
  while (true) {
    p.skip_ws();
    terms.push_back(p.read_term(sign));
    p.skip_ws();
    if (p.at_end()) break;
    if (p.eat('-'))
      sign = -1;
    else if (p.eat('+'))
      sign = 1;
    else
      p.fail("expected '+' or '-' between terms");
  }
  return from_terms(r, std::move(terms));
}

bool poly_less(const Polynomial& f, const Polynomial& g) {
  const auto& a = f.terms();
  const auto& b = g.terms();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (int c = MonomialOrder::degrevlex().compare(a[i].mono, b[i].mono))
      return c < 0;
    if (int c = cmp(a[i].coeff, b[i].coeff)) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace torusjump
