#pragma once

#include <utility>

#include "swdeg/equivariant.hpp"

namespace swdeg {

/// Covering bookkeeping: m = b+ of the base manifold, k = -sigma/16, and the
/// covering-space invariants m_X + 1 = (m+1)*#Gamma, k_X = k*#Gamma.
struct CoveringData {
  Group group;
  long m;
  long k;
  long m_x;
  long k_x;
};

/// Validates m > 0, k >= 0 and fills in the derived invariants.
CoveringData make_covering_data(Group group, long m, long k);

/// (m_X, k_X) for a covering of the given order.
std::pair<long, long> covering_invariants(long m, long k, long order);

/// The Pin(2)-degree of the base Seiberg-Witten map: 2^{m-2k-1} (1 - c).
/// Requires m - 2k - 1 >= 0.
Pin2Elem furuta_degree(long m, long k);

/// The degree over Z_p for odd prime p:
///   ( (2^{(m-2k+1)p-2} - 2^{m-2k-1}) / p [L^2(Z_p)] + 2^{m-2k-1} rho_triv ) (1 - c).
/// The bracket coefficient's divisibility by p (Fermat) is machine-checked.
EquivElem zp_degree(long p, long m, long k);

/// Bryan's degree over (Z_2)^q: 2^{2^q(m-2k+1)-2-q} [L^2((Z_2)^q)] (1 - c).
/// The geometric hypothesis b+(X) != b+(X/<g>) for nontrivial g cannot be
/// derived from (q, m, k); callers assert it (see the CLI's
/// --assert-bryan-hypothesis flag).
EquivElem bryan_degree(long q, long m, long k);

/// For Gamma of odd order, the constraint
///   alpha_0 + alpha~_0 = 2^{m-2k} ( (2^{(#G-1)(m-2k+1)} - 1)/#G [L^2(G)] + rho_triv ).
/// Integrality of the [L^2] coefficient is a checked precondition; failure
/// reports the rational value.
VirtualRep odd_sum_alpha0(const Group& group, long m, long k);

struct Z6Constants {
  Pin2Elem a;
  Pin2Elem b;
  Pin2Elem c;
};

/// The constants of the index-six covering system:
///   A = 2^{m_X-2k_X-2} (1-c)
///   B = (2^{m_X-2k_X-1} + 2^{(m_X-2k_X+1)/3-1})/3 (1-c)
///   C = (2^{m_X-2k_X-1} - 2^{(m_X-2k_X+1)/3-2})/3 (1-c)
/// Requires 6 | m_X+1 and 6 | 2k_X (which force 6 | m_X-2k_X+1) and
/// m_X-2k_X+1 >= 6; the B and C coefficients are asserted integral.
Z6Constants z6_constants(long m_x, long k_x);

struct Z6Betas {
  Pin2Elem beta2;
  Pin2Elem beta3;
  Pin2Elem beta4;
  Pin2Elem beta5;
};

/// Solves the Z6 linear system given the two free coefficients:
///   beta2 = A - C - beta0 + beta1,  beta3 = B - beta0,
///   beta4 = C - beta1,              beta5 = -A + 2C + beta0 - beta1.
Z6Betas z6_solve(long m_x, long k_x, const Pin2Elem& beta0, const Pin2Elem& beta1);

}  // namespace swdeg
