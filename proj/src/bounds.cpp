#include "leibniz/bounds.hpp"

namespace leibniz {

std::string claim_name(Claim c) {
  switch (c) {
    case Claim::theorem_a: return "theorem_a";
    case Claim::theorem_b: return "theorem_b";
    case Claim::schur_leibniz: return "schur_leibniz";
    case Claim::schur_lie: return "schur_lie";
    case Claim::hegarty_leibniz: return "hegarty_leibniz";
    case Claim::hegarty_lie: return "hegarty_lie";
    case Claim::baer_leibniz: return "baer_leibniz";
    case Claim::baer_lie: return "baer_lie";
    case Claim::codim_step: return "codim_step";
  }
  throw Error("unknown claim");
}

Int beta(const Int& k, std::size_t m, const Int& t) {
  if (m < 1) throw Error("beta needs m >= 1");
  if (k < 0 || t < 0) throw Error("beta needs k, t >= 0");
  Int b = t * (k + t);
  for (std::size_t i = 1; i < m; ++i) b = b * (k + b);
  return b;
}

namespace {

Int dim_int(const Subspace& s) { return Int(s.dim()); }

BoundReport make_report(Claim claim, std::vector<std::pair<std::string, Int>> quantities,
                        const Int& lhs, const Int& rhs, bool applicable = true) {
  BoundReport r;
  r.claim = claim;
  r.quantities = std::move(quantities);
  r.lhs = lhs;
  r.rhs = rhs;
  r.applicable = applicable;
  r.holds = applicable && lhs <= rhs;
  return r;
}

Int codim_adl(const DerivationSet& d) {
  return Int(d.dim()) - dim_int(ad_left(d.algebra).space);
}

}  // namespace

BoundReport verify_theorem_a(const LeibnizAlgebra& a, const DerivationSet& d) {
  Int t = Int(a.dim()) - dim_int(d_center(d));
  Int k = codim_adl(d);
  Int lhs = dim_int(d_derived(d));
  return make_report(Claim::theorem_a, {{"t", t}, {"k", k}}, lhs, t * (k + t));
}

BoundReport verify_theorem_b(const LeibnizAlgebra& a, const DerivationSet& d) {
  SeriesResult upper = upper_d_central_series(a, d);
  std::size_t m = upper.zl();
  Int t = Int(a.dim()) - dim_int(upper.hypercenter());
  Int k = codim_adl(d);
  std::vector<std::pair<std::string, Int>> q{{"t", t}, {"k", k}, {"m", Int(m)}};
  if (m < 1) return make_report(Claim::theorem_b, std::move(q), 0, 0, false);
  Int lhs = dim_int(lower_d_central_series(a, d).gamma(m + 1));
  return make_report(Claim::theorem_b, std::move(q), lhs, beta(k, m, t));
}

BoundReport verify_codim_step(const LeibnizAlgebra& a, const DerivationSet& d) {
  Int t = Int(a.dim()) - dim_int(d_center(d));
  Int k = codim_adl(d);
  Subspace derived = derived_subalgebra(a);
  Int lhs = dim_int(subspace_sum(d_derived(d), derived)) - dim_int(derived);
  return make_report(Claim::codim_step, {{"t", t}, {"k", k}}, lhs, t * k);
}

std::vector<BoundReport> verify_corollaries(const LeibnizAlgebra& a, std::size_t series_index) {
  if (series_index < 1) throw Error("series index must be at least 1");
  bool lie = a.is_lie();
  Int n = Int(a.dim());
  std::vector<BoundReport> out;

  Centers c = centers(a);
  Int dim_derived = dim_int(derived_subalgebra(a));
  {
    Int t = n - dim_int(c.center);
    out.push_back(make_report(Claim::schur_leibniz, {{"t", t}}, dim_derived, t * t));
    out.push_back(
        make_report(Claim::schur_lie, {{"t", t}}, dim_derived, t * (t + 1) / 2, lie));
  }

  DerivationSet der = derivation_algebra(a);
  {
    Int t = n - dim_int(d_center(der));
    Int k = codim_adl(der);
    Int lhs = dim_int(d_derived(der));
    out.push_back(
        make_report(Claim::hegarty_leibniz, {{"t", t}, {"k", k}}, lhs, t * (t + 1)));
    out.push_back(
        make_report(Claim::hegarty_lie, {{"t", t}, {"k", k}}, lhs, t * (t + 1) / 2, lie));
  }

  DerivationSet adl = adl_set(a);
  {
    std::size_t s = series_index;
    Int t = n - dim_int(upper_d_central_series(a, adl).zeta(s));
    Int lhs = dim_int(lower_d_central_series(a, adl).gamma(s + 1));
    Int pow_t_s = 1;
    for (std::size_t i = 0; i < s; ++i) pow_t_s *= t;
    Int pow_t_s1 = pow_t_s * t;
    Int pow2 = Int(1) << (s - 1);
    std::vector<std::pair<std::string, Int>> q{{"series_index", Int(s)}, {"t", t}};
    out.push_back(make_report(Claim::baer_leibniz, q, lhs, pow2 * pow_t_s1));
    out.push_back(make_report(Claim::baer_lie, q, lhs, pow_t_s * (t + 1) / 2, lie));
  }
  return out;
}

}  // namespace leibniz
