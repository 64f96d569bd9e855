#ifndef BORELKIT_SCALAR_HPP
#define BORELKIT_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace borelkit {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational unit_like(const Rational&) { return Rational(1); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
std::string to_string(const Rational& x);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

inline constexpr std::uint64_t kDefaultPrime = 1'000'000'007ULL;

/// Element of Z/pZ. The modulus travels with the value so matrices of ModP
/// need no global state.
class ModP {
 public:
  ModP(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}
  /// Reduces an integer-valued rational; throws if p divides the denominator.
  static ModP from_rational(const Rational& x, std::uint64_t modulus);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  ModP inverse() const;

  friend ModP operator+(ModP a, ModP b) { return {a.v_ + b.v_ >= a.p_ ? a.v_ + b.v_ - a.p_ : a.v_ + b.v_, a.p_}; }
  friend ModP operator-(ModP a, ModP b) { return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_}; }
  friend ModP operator*(ModP a, ModP b) {
    return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % a.p_), a.p_};
  }
  ModP operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  std::uint64_t v_;
  std::uint64_t p_;
};

inline bool is_zero(const ModP& x) { return x.value() == 0; }
inline ModP unit_like(const ModP& x) { return {1, x.modulus()}; }
inline ModP exact_div(const ModP& a, const ModP& b) { return a * b.inverse(); }

}  // namespace borelkit

#endif  // BORELKIT_SCALAR_HPP
