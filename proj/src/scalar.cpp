#include "borelkit/scalar.hpp"

#include "borelkit/errors.hpp"

namespace borelkit {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t m) {
  mpz_class r;
  mpz_class mod;
  mpz_import(mod.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ModP ModP::from_rational(const Rational& x, std::uint64_t modulus) {
  std::uint64_t num = mpz_mod_u64(x.get_num(), modulus);
  std::uint64_t den = mpz_mod_u64(x.get_den(), modulus);
  if (den == 0) throw InputError("denominator " + x.get_den().get_str() + " vanishes modulo the prime");
  return ModP(num, modulus) * ModP(den, modulus).inverse();
}

ModP ModP::inverse() const {
  if (v_ == 0) throw InputError("division by zero in prime field");
  return {pow_mod(v_, p_ - 2, p_), p_};
}

}  // namespace borelkit
