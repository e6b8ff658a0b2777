#include "jackleaf/closedforms.hpp"

namespace jackleaf {

namespace {

constexpr int kFormulaCap = 8;

MultiPoly R() { return MultiPoly::variable(Var::r); }
MultiPoly Y() { return MultiPoly::variable(Var::y); }
MultiPoly Z() { return MultiPoly::variable(Var::z); }
MultiPoly TH() { return MultiPoly::variable(Var::theta); }

Rat binom_rat(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return Rat(static_cast<long>(out));
}

void check_cap(int u, int d) {
  if (u < 0 || d < 0)
    fail(Errc::InvalidOverlap, "row counts must be nonnegative");
  if (u > kFormulaCap || d > kFormulaCap)
    fail(Errc::ScaleLimit,
         "closed forms capped at u,d <= " + std::to_string(kFormulaCap));
}

}  // namespace

MultiPoly closed_leaf(int u, int d, int m, const MultiPoly& y) {
  check_cap(u, d);
  if (m < 0 || m > d)
    fail(Errc::InvalidOverlap,
         "need 0 <= m <= d, got m=" + std::to_string(m) +
             " d=" + std::to_string(d));
  const int dp = d - m;
  MultiPoly sum(0);
  for (int l = 0; l <= dp; ++l) {
    MultiPoly term(binom_rat(dp, l));
    for (int i = 0; i < l; ++i)
      term *= (MultiPoly(m + i + 1) - R()) * (MultiPoly(i) + R());
    for (int j = l + 1; j <= dp; ++j)
      term *= (y + MultiPoly(dp - j) + R()) * (y + MultiPoly(u + j) + R());
    sum += term;
  }
  return sum;
}

MultiPoly closed_leaf(const LeafFormulaInput& input) {
  return closed_leaf(input.u, input.d, input.m, input.y);
}

MultiPoly q_gap(int u, int d) { return closed_leaf(u, d, 0, Y()); }

MultiPoly p_overlap(int u, int d, int m) {
  if (m < 1 || m > std::min(u, d))
    fail(Errc::InvalidOverlap,
         "overlap case needs 1 <= m <= min(u,d)");
  return closed_leaf(u, d, m, MultiPoly(0));
}

MultiPoly m_aux(int u, int d) {
  check_cap(u, d);
  MultiPoly sum(0);
  for (int k = 0; k <= d; ++k) {
    MultiPoly term(binom_rat(d, k));
    for (int i = 0; i < k; ++i) {
      Rat rho_sq = Rat(2 * i + 1, 2) * Rat(2 * i + 1, 2);
      term *= TH() + MultiPoly(rho_sq);
    }
    for (int j = k + 1; j <= d; ++j)
      term *= (Z() - MultiPoly(j)) * (Z() + MultiPoly(j + u - d));
    sum += term;
  }
  return sum;
}

MultiPoly n_shifted(int u, int d, int m) {
  check_cap(u, d);
  MultiPoly sum(0);
  for (int k = 0; k <= d; ++k) {
    MultiPoly term(binom_rat(d, k));
    for (int i = 0; i < k; ++i)
      term *= (MultiPoly(m + i + 1) - R()) * (MultiPoly(i) + R());
    for (int j = k + 1; j <= d; ++j)
      term *= (MultiPoly(d - j) + R()) * (MultiPoly(u + j) + R());
    sum += term;
  }
  return sum;
}

MultiPoly phi_prod(int k) {
  MultiPoly out(1);
  for (int i = 1; i <= k; ++i)
    out *= (Y() + MultiPoly(i)) *
           (Y() + MultiPoly(i - 1) + MultiPoly(2) * R());
  return out;
}

MultiPoly psi_prod(int k, int x) {
  MultiPoly out(1);
  for (int i = 1; i <= k; ++i)
    out *= MultiPoly(x + i) *
           (MultiPoly(i - 1) + MultiPoly(2) * R());
  return out;
}

MultiPoly psi_prod_symbolic(int k) {
  MultiPoly out(1);
  for (int i = 1; i <= k; ++i)
    out *= (Y() + MultiPoly(i)) *
           (MultiPoly(i - 1) + MultiPoly(2) * R());
  return out;
}

ReducedLeaf reduced_leaf(const LeafFormulaInput& input) {
  if (input.u < input.m || input.d < input.m)
    fail(Errc::InvalidOverlap, "reduced leaf needs u,d >= m");
  ReducedLeaf out;
  out.leaf = closed_leaf(input);
  out.divisor = MultiPoly(1);
  for (int i = 1; i <= input.d - input.m; ++i)
    out.divisor *= (input.y + MultiPoly(input.m + i)) *
                   (input.y + MultiPoly(i - 1) + MultiPoly(2) * R());
  try {
    out.quotient = MultiPoly::exact_div(out.leaf, out.divisor);
  } catch (const Error& e) {
    if (e.code() != Errc::InexactDivision) throw;
  }
  return out;
}

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

namespace {

std::string tuple_str(int u, int d, int m = -1) {
  std::string s = "u=" + std::to_string(u) + " d=" + std::to_string(d);
  if (m >= 0) s += " m=" + std::to_string(m);
  return s;
}

void push_residual(SuiteReport& rep, const std::string& identity,
                   const std::string& params, const MultiPoly& residual) {
  SuiteCheck c;
  c.identity = identity;
  c.params = params;
  c.pass = residual.is_zero();
  if (!c.pass) c.residual = residual.str();
  rep.checks.push_back(std::move(c));
}

// P-family value with the m = 0 boundary wired to the gap family at y = 0.
MultiPoly p_value(int u, int d, int m) {
  return closed_leaf(u, d, m, MultiPoly(0));
}

MultiPoly shift_y(const MultiPoly& p) {
  return p.subst({{Var::y, MultiPoly::variable(Var::y) + MultiPoly(1)}});
}

void q_recurrence(SuiteReport& rep, const SuiteCaps& caps) {
  for (int u = 0; u <= caps.u_max; ++u)
    for (int d = 0; d <= caps.d_max; ++d) {
      MultiPoly a0 = MultiPoly(u + d) * (Y() + MultiPoly(u) + R());
      MultiPoly res = a0 * q_gap(u, d);
      if (u > 0) {
        MultiPoly a1 = MultiPoly(u) * (Y() + MultiPoly(u + d) + R());
        res -= a1 * q_gap(u - 1, d);
      }
      if (d > 0) {
        MultiPoly a2 = MultiPoly(d) * (Y() + R()) *
                       (Y() + MultiPoly(u + 1)) *
                       (Y() + MultiPoly(u) + MultiPoly(2) * R());
        res -= a2 * shift_y(q_gap(u, d - 1));
      }
      push_residual(rep, "Q-recurrence", tuple_str(u, d), res);
    }
}

void q_dual(SuiteReport& rep, const SuiteCaps& caps) {
  for (int u = 0; u <= caps.u_max; ++u)
    for (int d = 0; d <= caps.d_max; ++d) {
      MultiPoly a0 = MultiPoly(u + d) * (Y() + MultiPoly(d) + R());
      MultiPoly res = a0 * q_gap(u, d);
      if (u > 0) {
        MultiPoly a1 = MultiPoly(u) * (Y() + R());
        res -= a1 * shift_y(q_gap(u - 1, d));
      }
      if (d > 0) {
        MultiPoly a2 = MultiPoly(d) *
                       (Y() + MultiPoly(u + d) + R()) *
                       (Y() + MultiPoly(d - 1) + MultiPoly(2) * R()) *
                       (Y() + MultiPoly(d));
        res -= a2 * q_gap(u, d - 1);
      }
      push_residual(rep, "Q-dual", tuple_str(u, d), res);
    }
}

MultiPoly theta_shift_factor(int u, int d) {
  // θ + (z + ρ_{u-d})², ρ_i = i + 1/2
  MultiPoly zrho = Z() + MultiPoly(Rat(2 * (u - d) + 1, 2));
  return TH() + zrho * zrho;
}

void m_recurrence(SuiteReport& rep, const SuiteCaps& caps) {
  for (int u = 0; u <= caps.u_max; ++u)
    for (int d = 0; d <= caps.d_max; ++d) {
      MultiPoly a0 = MultiPoly(u + d) * (Z() + MultiPoly(u - d));
      MultiPoly res = a0 * m_aux(u, d);
      if (u > 0) res -= MultiPoly(u) * (Z() + MultiPoly(u)) * m_aux(u - 1, d);
      if (d > 0)
        res -= MultiPoly(d) * (Z() - MultiPoly(d)) *
               theta_shift_factor(u, d) * m_aux(u, d - 1);
      push_residual(rep, "M-recurrence", tuple_str(u, d), res);
    }
}

void m_lemma(SuiteReport& rep, const SuiteCaps& caps) {
  for (int u = 0; u <= caps.u_max; ++u)
    for (int d = 1; d <= caps.d_max; ++d) {
      MultiPoly res = m_aux(u, d) - theta_shift_factor(u, d) * m_aux(u, d - 1);
      if (u > 0)
        res += MultiPoly(u) * (Z() + MultiPoly(u)) * m_aux(u - 1, d - 1);
      push_residual(rep, "M-lemma", tuple_str(u, d), res);
    }
}

void substitution(SuiteReport& rep, const SuiteCaps& caps) {
  MultiPoly half(Rat(1, 2));
  MultiPoly theta_img = -((R() - half) * (R() - half));
  for (int u = 0; u <= caps.u_max; ++u)
    for (int d = 0; d <= caps.d_max; ++d) {
      MultiPoly z_img = Y() + MultiPoly(d) + R();
      MultiPoly res = q_gap(u, d) -
                      m_aux(u, d).subst({{Var::z, z_img},
                                         {Var::theta, theta_img}});
      push_residual(rep, "substitution", tuple_str(u, d), res);
    }
}

void p_recurrence(SuiteReport& rep, const SuiteCaps& caps) {
  for (int u = 1; u <= caps.u_max; ++u)
    for (int d = 1; d <= caps.d_max; ++d)
      for (int m = 1; m <= std::min({u, d, caps.m_max}); ++m) {
        MultiPoly b0 = MultiPoly(u + d) * (MultiPoly(u - m) + R());
        MultiPoly res = b0 * p_value(u, d, m);
        if (u > m) {
          MultiPoly b1 = MultiPoly(u - m) * (MultiPoly(u + d - m) + R());
          res -= b1 * p_value(u - 1, d, m);
        }
        MultiPoly b2 =
            MultiPoly(d) * (MultiPoly(u - m) + MultiPoly(2) * R());
        res -= b2 * p_value(u, d - 1, m - 1);
        push_residual(rep, "P-recurrence", tuple_str(u, d, m), res);
      }
}

void p_dual(SuiteReport& rep, const SuiteCaps& caps) {
  for (int u = 1; u <= caps.u_max; ++u)
    for (int d = 1; d <= caps.d_max; ++d)
      for (int m = 1; m <= std::min({u, d, caps.m_max}); ++m) {
        MultiPoly b0 = MultiPoly(u + d) * (MultiPoly(d - m) + R());
        MultiPoly res = b0 * p_value(u, d, m) - p_value(u - 1, d, m - 1);
        if (d > m) {
          MultiPoly b2 = MultiPoly(d * (d - m)) *
                         (MultiPoly(u + d - m) + R()) *
                         (MultiPoly(d - m - 1) + MultiPoly(2) * R());
          res -= b2 * p_value(u, d - 1, m);
        }
        push_residual(rep, "P-dual", tuple_str(u, d, m), res);
      }
}

void phi_identities(SuiteReport& rep, const SuiteCaps& caps) {
  MultiPoly two_r = MultiPoly(2) * R();
  for (int d = 1; d <= caps.d_max; ++d) {
    MultiPoly res1 = phi_prod(d) -
                     (Y() + MultiPoly(1)) * (Y() + two_r) *
                         shift_y(phi_prod(d - 1));
    push_residual(rep, "phi-shift-argument", "d=" + std::to_string(d), res1);

    MultiPoly res2 = phi_prod(d) -
                     (Y() + MultiPoly(d)) *
                         (Y() + MultiPoly(d - 1) + two_r) * phi_prod(d - 1);
    push_residual(rep, "phi-peel-top", "d=" + std::to_string(d), res2);

    MultiPoly res3 = shift_y(phi_prod(d)) * (Y() + MultiPoly(1)) *
                         (Y() + two_r) -
                     (Y() + MultiPoly(d + 1)) * (Y() + MultiPoly(d) + two_r) *
                         phi_prod(d);
    push_residual(rep, "phi-shift-cleared", "d=" + std::to_string(d), res3);
  }
}

void psi_identities(SuiteReport& rep, const SuiteCaps& caps) {
  for (int d = 1; d <= caps.d_max; ++d)
    for (int m = 1; m <= std::min(d, caps.m_max); ++m) {
      MultiPoly res = MultiPoly(m) * psi_prod(d - m, m) -
                      MultiPoly(d) * psi_prod(d - m, m - 1);
      push_residual(rep, "psi-ratio-cleared",
                    "d=" + std::to_string(d) + " m=" + std::to_string(m),
                    res);
    }
  for (int u = 1; u <= caps.u_max; ++u)
    for (int m = 1; m <= std::min(u, caps.m_max); ++m) {
      MultiPoly res = psi_prod(u - m + 1, m - 1) -
                      MultiPoly(m) *
                          (MultiPoly(u - m) + MultiPoly(2) * R()) *
                          psi_prod(u - m, m);
      push_residual(rep, "psi-index-up",
                    "u=" + std::to_string(u) + " m=" + std::to_string(m), res);
    }
  for (int u = 1; u <= caps.u_max; ++u)
    for (int m = 0; m < u && m <= caps.m_max; ++m) {
      MultiPoly res = psi_prod(u - m, m) -
                      MultiPoly(u) *
                          (MultiPoly(u - m - 1) + MultiPoly(2) * R()) *
                          psi_prod(u - m - 1, m);
      push_residual(rep, "psi-index-down",
                    "u=" + std::to_string(u) + " m=" + std::to_string(m), res);
    }
}

void sym_q(SuiteReport& rep, const SuiteCaps& caps) {
  for (int u = 0; u <= caps.u_max; ++u)
    for (int d = 0; d <= caps.d_max; ++d) {
      MultiPoly res = q_gap(u, d) * phi_prod(u) - q_gap(d, u) * phi_prod(d);
      push_residual(rep, "symQ", tuple_str(u, d), res);
    }
}

void sym_p(SuiteReport& rep, const SuiteCaps& caps) {
  for (int u = 1; u <= caps.u_max; ++u)
    for (int d = 1; d <= caps.d_max; ++d)
      for (int m = 1; m <= std::min({u, d, caps.m_max}); ++m) {
        MultiPoly res = p_value(u, d, m) * psi_prod(u - m, m) -
                        p_value(d, u, m) * psi_prod(d - m, m);
        push_residual(rep, "symP", tuple_str(u, d, m), res);
      }
}

void tilde_sym(SuiteReport& rep, const SuiteCaps& caps) {
  // gap regime: m = 0, symbolic critical hook; the normalizing product is
  // Π_{i=1}^{t}(y+i)(y+i-1+2r), i.e. the phi family
  for (int u = 0; u <= caps.u_max; ++u)
    for (int d = 0; d <= caps.d_max; ++d) {
      MultiPoly res = closed_leaf(u, d, 0, Y()) * phi_prod(u) -
                      closed_leaf(d, u, 0, Y()) * phi_prod(d);
      push_residual(rep, "tilde-sym-gap", tuple_str(u, d), res);
    }
  // overlap regime: y = 0, m >= 1
  for (int u = 1; u <= caps.u_max; ++u)
    for (int d = 1; d <= caps.d_max; ++d)
      for (int m = 1; m <= std::min({u, d, caps.m_max}); ++m) {
        MultiPoly res = p_value(u, d, m) * psi_prod(u - m, m) -
                        p_value(d, u, m) * psi_prod(d - m, m);
        push_residual(rep, "tilde-sym-overlap", tuple_str(u, d, m), res);
      }
}

void corollary(SuiteReport& rep, const SuiteCaps& caps) {
  for (int d = 1; d <= caps.d_max; ++d)
    for (int m = 1; m <= std::min(d, caps.m_max); ++m) {
      MultiPoly res = p_value(m, d, m) - psi_prod(d - m, m);
      push_residual(rep, "corollary",
                    "d=" + std::to_string(d) + " m=" + std::to_string(m),
                    res);
    }
}

void n_relabel(SuiteReport& rep, const SuiteCaps& caps) {
  for (int u = 1; u <= caps.u_max; ++u)
    for (int d = 1; d <= caps.d_max; ++d)
      for (int m = 1; m <= std::min({u, d, caps.m_max}); ++m) {
        MultiPoly res = p_value(u, d, m) - n_shifted(u, d - m, m);
        push_residual(rep, "N-relabel", tuple_str(u, d, m), res);
      }
}

}  // namespace

std::vector<std::string> identity_suite_names() {
  return {"Q-recurrence", "Q-dual",     "M-recurrence",   "M-lemma",
          "substitution", "P-recurrence", "P-dual",       "phi-identities",
          "psi-identities", "symQ",     "symP",           "tilde-sym",
          "corollary",    "N-relabel"};
}

SuiteReport identity_suite(const std::string& name, const SuiteCaps& caps) {
  SuiteReport rep;
  rep.suite = name;
  if (name == "Q-recurrence") q_recurrence(rep, caps);
  else if (name == "Q-dual") q_dual(rep, caps);
  else if (name == "M-recurrence") m_recurrence(rep, caps);
  else if (name == "M-lemma") m_lemma(rep, caps);
  else if (name == "substitution") substitution(rep, caps);
  else if (name == "P-recurrence") p_recurrence(rep, caps);
  else if (name == "P-dual") p_dual(rep, caps);
  else if (name == "phi-identities") phi_identities(rep, caps);
  else if (name == "psi-identities") psi_identities(rep, caps);
  else if (name == "symQ") sym_q(rep, caps);
  else if (name == "symP") sym_p(rep, caps);
  else if (name == "tilde-sym") tilde_sym(rep, caps);
  else if (name == "corollary") corollary(rep, caps);
  else if (name == "N-relabel") n_relabel(rep, caps);
  else if (name == "all") {
    for (const std::string& s : identity_suite_names()) {
      if (s == "all") continue;
      SuiteReport sub = identity_suite(s, caps);
      for (auto& c : sub.checks) rep.checks.push_back(std::move(c));
    }
  } else {
    fail(Errc::UnknownSuite, "unknown identity suite '" + name + "'");
  }
  return rep;
}

}  // namespace jackleaf
