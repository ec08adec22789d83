#pragma once

#include <functional>
#include <vector>

namespace garchmimic {

struct NelderMeadOptions {
  double tolerance = 1e-8;  // stop when the simplex collapses below this size
  int max_evaluations = 2000;
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Downhill-simplex minimisation (reflection/expansion/contraction/shrink).
NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> start,
                                      const NelderMeadOptions& options = {});

}  // namespace garchmimic
