#include "topoforge/bounds.hpp"

#include "topoforge/error.hpp"

namespace topoforge {

namespace {

void check_params(int n, int k) {
  if (n < 2 || k < 2 || (static_cast<long long>(n) * k) % 2 != 0)
    throw Error(errc::bad_params, "bounds need n >= 2, k >= 2, n*k even");
}

}  // namespace

ShellProfile shell_profile(int n, int k) {
  check_params(n, k);
  ShellProfile p;
  p.n = n;
  p.k = k;
  long long remaining = n - 1;
  long long capacity = k;  // shell i capacity = k(k-1)^(i-1); saturates at remaining
  while (remaining > 0) {
    long long take = std::min(capacity, remaining);
    p.shell_sizes.push_back(take);
    remaining -= take;
    if (capacity < remaining) capacity *= (k - 1);  // no overflow: grows past need first
  }
  return p;
}

Rational mpl_lower_bound(int n, int k) {
  ShellProfile p = shell_profile(n, k);
  long long weighted = 0;
  for (size_t i = 0; i < p.shell_sizes.size(); ++i)
    weighted += static_cast<long long>(i + 1) * p.shell_sizes[i];
  return Rational(weighted, n - 1);
}

int diameter_lower_bound(int n, int k) {
  ShellProfile p = shell_profile(n, k);
  return static_cast<int>(p.shell_sizes.size());
}

BoundReport gap_report(const RegularGraph& g) { return gap_report(g, compute_metrics(g)); }

BoundReport gap_report(const RegularGraph& g, const GraphMetrics& m) {
  BoundReport r;
  r.mpl_lower = mpl_lower_bound(g.n, g.k);
  r.diameter_lower = diameter_lower_bound(g.n, g.k);
  r.mpl_gap = m.mpl - r.mpl_lower;
  r.diameter_gap = m.diameter - r.diameter_lower;
  return r;
}

}  // namespace topoforge
