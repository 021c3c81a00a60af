#include "seqforge/closedforms.hpp"

#include <stdexcept>

#include "seqforge/arith.hpp"

namespace seqforge::closedforms {

BigInt pancake(std::uint64_t n) {
  BigInt v = from_u64(n);
  return v * (v + 1) / 2 + 1;
}

BigInt bagel(std::uint64_t n) {
  if (n == 0) throw std::domain_error("bagel: formula holds for n >= 1 only");
  BigInt v = from_u64(n);
  BigInt num = v * (v * v + 3 * v + 8);
  if (!mpz_divisible_ui_p(num.get_mpz_t(), 6)) throw std::logic_error("bagel: non-integral value");
  return num / 6;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt catalan(std::uint64_t n) { return binomial(2 * n, n) / from_u64(n + 1); }

Terms catalan_by_recurrence(std::uint64_t count) {
  Terms out;
  if (count == 0) return out;
  out.reserve(count);
  out.emplace_back(1);
  for (std::uint64_t n = 1; n < count; ++n) {
    BigInt num = 2 * (2 * from_u64(n) - 1) * out.back();
    BigInt q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), n + 1);
    if (r != 0) throw std::logic_error("catalan recurrence: inexact division at n=" + std::to_string(n));
    out.push_back(std::move(q));
  }
  return out;
}

IdentityReport binomial_identity(std::uint64_t n) {
  IdentityReport rep;
  rep.n = n;
  rep.lhs = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    BigInt c = binomial(2 * n, k);
    rep.lhs += c * c;
  }
  BigInt central = binomial(2 * n, n);
  // C(4n,2n) - C(2n,n)^2 is even (the two halves of a symmetric sum), so
  // halving the difference keeps everything integral.
  rep.rhs = (binomial(4 * n, 2 * n) - central * central) / 2;
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

BigInt sigma_gap(std::uint64_t n) {
  if (n < 3) throw std::domain_error("sigma_gap: n must be at least 3");
  BigInt v = from_u64(n);
  return arith::isqrt(v * v * v) - arith::sigma(v);
}

}  // namespace seqforge::closedforms
