#include "leibniz/analyze.hpp"

#include <sstream>

#include "leibniz/io.hpp"

namespace leibniz {

Analysis analyze(const LeibnizAlgebra& a) {
  Analysis an;
  an.dim = a.dim();
  an.field = a.field();
  an.lie = a.is_lie();

  Centers c = centers(a);
  an.center_left = c.left.dim();
  an.center_right = c.right.dim();
  an.center = c.center.dim();
  an.derived = derived_subalgebra(a).dim();
  an.der = derivation_algebra(a).dim();

  DerivationSet adl = adl_set(a);
  an.adl = adl.dim();
  SeriesResult upper = upper_d_central_series(a, adl);
  for (const Subspace& s : upper.terms) an.upper_dims.push_back(s.dim());
  an.zl = upper.zl();
  an.hypercenter = upper.hypercenter().dim();
  SeriesResult lower = lower_d_central_series(a, adl);
  for (const Subspace& s : lower.terms) an.lower_dims.push_back(s.dim());
  return an;
}

std::string render_analysis_kv(const Analysis& an) {
  std::ostringstream out;
  out << "dim = " << an.dim << "\n";
  out << "field = " << render_field_token(an.field) << "\n";
  out << "lie = " << (an.lie ? "true" : "false") << "\n";
  out << "center_left.dim = " << an.center_left << "\n";
  out << "center_right.dim = " << an.center_right << "\n";
  out << "center.dim = " << an.center << "\n";
  out << "derived.dim = " << an.derived << "\n";
  out << "der.dim = " << an.der << "\n";
  out << "adl.dim = " << an.adl << "\n";
  auto dims = [](const std::vector<std::size_t>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
    return s.str();
  };
  out << "upper.dims = " << dims(an.upper_dims) << "\n";
  out << "upper.zl = " << an.zl << "\n";
  out << "upper.hypercenter.dim = " << an.hypercenter << "\n";
  out << "lower.dims = " << dims(an.lower_dims) << "\n";
  return out.str();
}

}  // namespace leibniz
