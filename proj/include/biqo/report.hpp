#ifndef BIQO_REPORT_HPP
#define BIQO_REPORT_HPP

namespace biqo {

// Every closed-form measure evaluated at one overlap. Each field is exactly
// the value returned by the owning module's closed form at the same x; no
// arithmetic happens here.
struct MeasureReport {
  double x = 0.0;
  double p_e = 0.0;     // minimum discrimination error
  double c1 = 0.0;      // single-signal capacity, bits
  double c_inf = 0.0;   // collective-measurement capacity, bits
  double q = 0.0;       // c_inf - c1
  double d_at_mi = 0.0; // minimum disturbance at maximum information
  double f_g = 0.0;     // optimal global cloning fidelity
  double f_l = 0.0;     // optimal local cloning fidelity
};

MeasureReport make_measure_report(double x);

} // namespace biqo

#endif
