#include "borelkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

#include "borelkit/errors.hpp"

namespace borelkit {
namespace {

unsigned degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

const std::vector<std::string>& default_aliases() {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  return names;
}

// Parser for
//   expr   := term (('+'|'-') term)*
//   term   := [sign] coeff? ('*'? factor)*
//   factor := var ('^' uint)? | '(' expr ')'
//   var    := 'x' uint | alias
//   coeff  := uint | uint '/' uint
class Parser {
 public:
  Parser(std::string_view text, int nvars, const VariableNames& names)
      : text_(text), nvars_(nvars), aliases_(names.aliases()) {}

  Polynomial run() {
    skip_space();
    if (at_end()) fail("empty input");
    Polynomial p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at position " << pos_ << " in \"" << text_ << "\": " << msg;
    throw InputError(os.str());
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    Polynomial total = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return total;
      ++pos_;
      Polynomial t = term();
      if (c == '+')
        total += t;
      else
        total -= t;
    }
  }

  mpz_class read_uint() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected unsigned integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  bool starts_factor() {
    skip_space();
    char c = peek();
    if (c == '(') return true;
    if (c == 'x' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) return true;
    return match_alias() >= 0;
  }

  // Index (0-based into aliases_) of the longest alias at the cursor, or -1.
  int match_alias() const {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t a = 0; a < aliases_.size(); ++a) {
      const auto& name = aliases_[a];
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best = static_cast<int>(a);
        best_len = name.size();
      }
    }
    return best;
  }

  Polynomial term() {
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    Polynomial result = Polynomial::constant(nvars_, 1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = read_uint();
      mpz_class den = 1;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        den = read_uint();
        if (den == 0) fail("zero denominator");
      }
      result *= Rational(num, den);
      any = true;
    }
    for (;;) {
      skip_space();
      std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        if (!starts_factor()) {
          pos_ = save + 1;
          fail("expected factor after '*'");
        }
      } else if (!starts_factor()) {
        break;
      }
      result = result * factor();
      any = true;
    }
    if (!any) fail("expected coefficient, variable or '('");
    return negative ? -result : result;
  }

  Polynomial factor() {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    int index = 0;
    std::size_t var_start = pos_;
    if (peek() == 'x' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      mpz_class k = read_uint();
      if (k < 1 || k > nvars_) {
        pos_ = var_start;
        fail("variable x" + k.get_str() + " outside x1..x" + std::to_string(nvars_));
      }
      index = static_cast<int>(k.get_si());
    } else {
      int alias = match_alias();
      if (alias < 0) fail("expected variable");
      if (alias >= nvars_) fail("variable '" + aliases_[alias] + "' needs r >= " + std::to_string(alias + 1));
      pos_ += aliases_[alias].size();
      index = alias + 1;
    }
    unsigned exponent = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      mpz_class e = read_uint();
      if (!e.fits_uint_p()) fail("exponent too large");
      exponent = static_cast<unsigned>(e.get_ui());
    }
    Monomial m(nvars_, 0);
    m[index - 1] = exponent;
    return Polynomial::monomial(1, std::move(m));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int nvars_;
  const std::vector<std::string>& aliases_;
};

using Univariate = std::vector<Rational>;  // low degree first

void trim(Univariate& u) {
  while (!u.empty() && sgn(u.back()) == 0) u.pop_back();
}

Univariate uni_mod(Univariate a, const Univariate& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate uni_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

std::string VariableNames::name(int k, int nvars) const {
  if (!names_.empty() && k <= static_cast<int>(names_.size())) return names_[k - 1];
  if (names_.empty() && nvars <= 4) return default_aliases()[k - 1];
  return "x" + std::to_string(k);
}

const std::vector<std::string>& VariableNames::aliases() const {
  return names_.empty() ? default_aliases() : names_;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw InputError("polynomial ring needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) p.terms_.emplace(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
  if (k < 1 || k > nvars) throw InputError("variable index out of range");
  Monomial m(nvars, 0);
  m[k - 1] = 1;
  return monomial(1, std::move(m));
}

Polynomial Polynomial::monomial(const Rational& c, Monomial exponents) {
  Polynomial p(static_cast<int>(exponents.size()));
  if (sgn(c) != 0) p.terms_.emplace(std::move(exponents), c);
  return p;
}

Polynomial Polynomial::parse(std::string_view text, int nvars, const VariableNames& names) {
  if (nvars < 1) throw InputError("polynomial ring needs at least one variable");
  return Parser(text, nvars, names).run();
}

bool Polynomial::is_constant() const { return terms_.empty() || degree_of(terms_.begin()->first) == 0; }

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(degree_of(terms_.begin()->first));
}

Homogeneity Polynomial::homogeneity() const {
  if (terms_.empty()) return {Homogeneity::Kind::zero};
  // Grlex puts the largest degree first and the smallest last.
  unsigned top = degree_of(terms_.begin()->first);
  unsigned bottom = degree_of(terms_.rbegin()->first);
  if (top != bottom) return {Homogeneity::Kind::inhomogeneous};
  return {Homogeneity::Kind::homogeneous, static_cast<int>(top)};
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw InputError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw InputError("polynomials in different rings (r=" + std::to_string(nvars_) + " vs r=" +
                     std::to_string(other.nvars_) + ")");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial out(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) m[k] = ma[k] + mb[k];
      Rational c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  for (unsigned k = 0; k < e; ++k) result = result * *this;
  return result;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  check_same_ring(divisor);
  if (divisor.is_zero()) throw InputError("division by the zero polynomial");
  const auto& [lead_m, lead_c] = *divisor.terms_.begin();
  Polynomial quotient(nvars_);
  Polynomial rest = *this;
  Monomial q(nvars_);
  while (!rest.is_zero()) {
    const auto& [rm, rc] = *rest.terms_.begin();
    for (int k = 0; k < nvars_; ++k) {
      if (rm[k] < lead_m[k]) throw InputError("inexact polynomial division");
      q[k] = rm[k] - lead_m[k];
    }
    Polynomial step = monomial(rc / lead_c, q);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

bool Polynomial::divides(const Polynomial& other) const {
  try {
    (void)other.divide_exact(*this);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw InputError("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (int k = 0; k < nvars_; ++k)
      for (unsigned e = 0; e < m[k]; ++e) value *= point[k];
    total += value;
  }
  return total;
}

ModP Polynomial::evaluate(std::span<const ModP> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw InputError("evaluation point has wrong length");
  const std::uint64_t prime = point.empty() ? kDefaultPrime : point[0].modulus();
  ModP total(0, prime);
  for (const auto& [m, c] : terms_) {
    ModP value = ModP::from_rational(c, prime);
    for (int k = 0; k < nvars_; ++k)
      for (unsigned e = 0; e < m[k]; ++e) value = value * point[k];
    total = total + value;
  }
  return total;
}

std::uint64_t Polynomial::evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t prime) const {
  if (!is_prime(prime)) throw InputError("modulus " + std::to_string(prime) + " is not prime");
  std::vector<ModP> values;
  for (auto v : point) values.emplace_back(v, prime);
  return evaluate(std::span<const ModP>(values)).value();
}

Polynomial Polynomial::extended(int extra) const {
  if (extra < 0) throw InputError("cannot remove variables");
  Polynomial out(nvars_ + extra);
  for (const auto& [m, c] : terms_) {
    Monomial wide = m;
    wide.resize(nvars_ + extra, 0);
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

Polynomial Polynomial::scaled_variables(const Rational& lambda) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational factor = 1;
    for (unsigned e = 0; e < degree_of(m); ++e) factor *= lambda;
    Rational v = c * factor;
    if (sgn(v) != 0) out.terms_.emplace(m, v);
  }
  return out;
}

std::string Polynomial::str(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = degree_of(m) == 0;
    bool wrote = false;
    if (constant_term || magnitude != 1) {
      os << magnitude.get_str();
      wrote = true;
    }
    for (int k = 0; k < nvars_; ++k) {
      if (m[k] == 0) continue;
      if (wrote) os << '*';
      os << names.name(k + 1, nvars_);
      if (m[k] > 1) os << '^' << m[k];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial bivariate_homogeneous_gcd(std::span<const Polynomial> polys) {
  std::optional<Univariate> common;
  unsigned min_x = ~0u, min_y = ~0u;
  for (const auto& p : polys) {
    if (p.nvars() != 2) throw InputError("bivariate gcd needs polynomials in exactly two variables");
    auto h = p.homogeneity();
    if (h.kind == Homogeneity::Kind::zero) continue;
    if (h.kind != Homogeneity::Kind::homogeneous) throw InputError("bivariate gcd input is not homogeneous: " + p.str());
    unsigned vx = ~0u, vy = ~0u;
    for (const auto& [m, c] : p.terms()) {
      vx = std::min(vx, m[0]);
      vy = std::min(vy, m[1]);
    }
    min_x = std::min(min_x, vx);
    min_y = std::min(min_y, vy);
    // Strip x^vx y^vy, then dehomogenize at y = 1.
    Univariate u(static_cast<std::size_t>(h.degree) - vx - vy + 1);
    for (const auto& [m, c] : p.terms()) u[m[0] - vx] = c;
    common = common ? uni_gcd(*common, u) : uni_gcd(u, {});
  }
  if (!common) throw InputError("gcd of zero polynomials is undefined");
  const unsigned g = static_cast<unsigned>(common->size() - 1);
  Polynomial out(2);
  for (unsigned a = 0; a <= g; ++a)
    if (sgn((*common)[a]) != 0) out += Polynomial::monomial((*common)[a], {a + min_x, g - a + min_y});
  return out;
}

}  // namespace borelkit
