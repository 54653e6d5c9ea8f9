#include "swdeg/formulas.hpp"

#include "swdeg/errors.hpp"
#include "swdeg/numutil.hpp"

namespace swdeg {

CoveringData make_covering_data(Group group, long m, long k) {
  if (m <= 0) throw PreconditionError("b+ of the base must be positive (m > 0)");
  if (k < 0) throw PreconditionError("k = -sigma/16 must be nonnegative (sigma <= 0)");
  auto [mx, kx] = covering_invariants(m, k, group.order());
  return CoveringData{std::move(group), m, k, mx, kx};
}

std::pair<long, long> covering_invariants(long m, long k, long order) {
  if (order < 1) throw PreconditionError("covering order must be >= 1");
  return {order * (m + 1) - 1, order * k};
}

Pin2Elem furuta_degree(long m, long k) {
  long e = m - 2 * k - 1;
  if (e < 0) {
    throw PreconditionError("non-integral Furuta coefficient (m-2k-1 = " +
                            std::to_string(e) + ")");
  }
  return Pin2Elem(pow2(e)) * (Pin2Elem(1) - Pin2Elem::c());
}

EquivElem zp_degree(long p, long m, long k) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw PreconditionError("p must be an odd prime, got " + std::to_string(p));
  }
  long d = m - 2 * k - 1;
  if (d < 0) {
    throw PreconditionError("non-integral Furuta coefficient (m-2k-1 = " +
                            std::to_string(d) + ")");
  }
  mpz_class y = pow2(d);
  mpz_class numerator = pow2((d + 2) * p - 2) - y;
  mpz_class x, rem;
  mpz_fdiv_qr(x.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(),
              mpz_class(p).get_mpz_t());
  if (rem != 0) {
    // Fermat's little theorem makes the numerator a multiple of p; reaching
    // this is a bug.
    throw InternalError("bracket coefficient (2^{(m-2k+1)p-2} - 2^{m-2k-1})/p "
                        "is not integral for p=" + std::to_string(p));
  }
  Group zp = Group::abelian({p});
  VirtualRep bracket = VirtualRep::regular(zp) * x + VirtualRep::trivial(zp) * y;
  return EquivElem::from_virtual(bracket, Pin2Elem(1) - Pin2Elem::c());
}

EquivElem bryan_degree(long q, long m, long k) {
  if (q < 1) throw PreconditionError("q must be >= 1");
  if (q > 20) throw PreconditionError("q too large");
  long exponent = (1L << q) * (m - 2 * k + 1) - 2 - q;
  if (exponent < 0) {
    throw PreconditionError("negative exponent 2^q(m-2k+1)-2-q = " +
                            std::to_string(exponent));
  }
  Group g = Group::abelian(std::vector<long>(q, 2));
  VirtualRep rep = VirtualRep::regular(g) * pow2(exponent);
  return EquivElem::from_virtual(rep, Pin2Elem(1) - Pin2Elem::c());
}

VirtualRep odd_sum_alpha0(const Group& group, long m, long k) {
  if (group.order() % 2 == 0) {
    throw PreconditionError("the group order must be odd, got " +
                            std::to_string(group.order()));
  }
  if (m - 2 * k < 0) {
    throw PreconditionError("m - 2k must be nonnegative, got " +
                            std::to_string(m - 2 * k));
  }
  long n = group.order();
  mpz_class numerator = pow2(static_cast<unsigned long>(n - 1) *
                             static_cast<unsigned long>(m - 2 * k + 1)) -
                        1;
  mpz_class x, rem;
  mpz_fdiv_qr(x.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(),
              mpz_class(n).get_mpz_t());
  if (rem != 0) {
    mpq_class ratio(numerator, mpz_class(n));
    ratio.canonicalize();
    throw PreconditionError(
        "inconsistent covering data for this group: (2^{(#G-1)(m-2k+1)}-1)/#G = " +
        ratio.get_str() + " is not an integer");
  }
  VirtualRep rep = VirtualRep::regular(group) * x + VirtualRep::trivial(group);
  return rep * pow2(m - 2 * k);
}

namespace {

void check_z6_data(long m_x, long k_x) {
  if ((m_x + 1) % 6 != 0) {
    throw PreconditionError("not Z6 covering data: 6 does not divide m_X+1 = " +
                            std::to_string(m_x + 1));
  }
  if ((2 * k_x) % 6 != 0) {
    throw PreconditionError("not Z6 covering data: 6 does not divide 2k_X = " +
                            std::to_string(2 * k_x));
  }
  if (m_x - 2 * k_x + 1 < 6) {
    throw PreconditionError("not Z6 covering data: m_X-2k_X+1 = " +
                            std::to_string(m_x - 2 * k_x + 1) + " < 6");
  }
}

}  // namespace

Z6Constants z6_constants(long m_x, long k_x) {
  check_z6_data(m_x, k_x);
  long s = m_x - 2 * k_x;        // s+1 is divisible by 6
  long t = (s + 1) / 3;          // exponent (m_X-2k_X+1)/3
  Pin2Elem one_minus_c = Pin2Elem(1) - Pin2Elem::c();
  mpz_class b_num = pow2(s - 1) + pow2(t - 1);
  mpz_class c_num = pow2(s - 1) - pow2(t - 2);
  if (b_num % 3 != 0 || c_num % 3 != 0) {
    throw InternalError("B or C coefficient is not divisible by 3");
  }
  Z6Constants z;
  z.a = Pin2Elem(pow2(s - 2)) * one_minus_c;
  z.b = Pin2Elem(mpz_class(b_num / 3)) * one_minus_c;
  z.c = Pin2Elem(mpz_class(c_num / 3)) * one_minus_c;
  return z;
}

Z6Betas z6_solve(long m_x, long k_x, const Pin2Elem& beta0, const Pin2Elem& beta1) {
  Z6Constants z = z6_constants(m_x, k_x);
  Z6Betas out;
  out.beta2 = z.a - z.c - beta0 + beta1;
  out.beta3 = z.b - beta0;
  out.beta4 = z.c - beta1;
  out.beta5 = -z.a + z.c + z.c + beta0 - beta1;
  // The defining sum constraints hold identically in beta0, beta1.
  if (beta0 + out.beta2 + out.beta4 != z.a || beta1 + out.beta3 + out.beta5 != z.a ||
      beta0 + out.beta3 != z.b || beta1 + out.beta4 != z.c ||
      out.beta2 + out.beta5 != z.c) {
    throw InternalError("Z6 solution violates its defining constraints");
  }
  return out;
}

}  // namespace swdeg
