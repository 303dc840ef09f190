#include "biqo/report.hpp"

#include "biqo/capacity.hpp"
#include "biqo/cloning.hpp"
#include "biqo/ensemble.hpp"
#include "biqo/tradeoff.hpp"

namespace biqo {

MeasureReport make_measure_report(double x) {
  const TwoStateEnsemble e = make_ensemble(x);
  MeasureReport r;
  r.x = x;
  r.p_e = helstrom_error(e);
  r.c1 = c1_closed(x);
  r.c_inf = c_inf_closed(x);
  r.q = quantumness_q(x);
  r.d_at_mi = d_at_max_info(x);
  r.f_g = global_fidelity_closed(x);
  r.f_l = local_fidelity_closed(x);
  return r;
}

} // namespace biqo
