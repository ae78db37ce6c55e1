#include "treenergy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "treenergy/errors.hpp"

namespace treenergy {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  double fv1[7], fv2[7];

  const double fc = f(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jk = 2 * j + 1;
    const double absc = hlgth * kXgk[jk];
    fv1[jk] = f(centr - absc);
    fv2[jk] = f(centr + absc);
    const double fsum = fv1[jk] + fv2[jk];
    resg += kWg[j] * fsum;
    resk += kWgk[jk] * fsum;
    resabs += kWgk[jk] * (std::fabs(fv1[jk]) + std::fabs(fv2[jk]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jk = 2 * j;
    const double absc = hlgth * kXgk[jk];
    fv1[jk] = f(centr - absc);
    fv2[jk] = f(centr + absc);
    const double fsum = fv1[jk] + fv2[jk];
    resk += kWgk[jk] * fsum;
    resabs += kWgk[jk] * (std::fabs(fv1[jk]) + std::fabs(fv2[jk]));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  }
  resabs *= std::fabs(hlgth);
  resasc *= std::fabs(hlgth);

  double abserr = std::fabs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  abserr = std::max(abserr, 50.0 * eps * resabs);
  return Panel{a, b, resk * hlgth, abserr};
}

struct WorstFirst {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // ties: leftmost panel first
  }
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureOptions& opts) {
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
  queue.push(evaluate_panel(f, a, b));
  double total_error = queue.top().error;
  int panels = 1;
  while (total_error > opts.abs_tol) {
    if (panels >= opts.max_panels) {
      throw QuadratureFailure("quadrature tolerance not reached: error estimate " +
                              std::to_string(total_error) + " over " +
                              std::to_string(panels) + " panels");
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Panel width at rounding limit; keep its estimate and stop splitting it.
      // Re-checking the budget with the panel excluded avoids a spin loop.
      double rest = total_error - worst.error;
      if (rest <= opts.abs_tol) {
        queue.push(worst);
        break;
      }
      throw QuadratureFailure("quadrature stalled at machine precision");
    }
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  std::vector<Panel> all;
  all.reserve(panels);
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double value = 0, comp = 0, err = 0;
  for (const Panel& p : all) {  // Kahan summation, fixed order
    double yv = p.value - comp;
    double t = value + yv;
    comp = (t - value) - yv;
    value = t;
    err += p.error;
  }
  return {value, err, static_cast<int>(all.size())};
}

}  // namespace treenergy
