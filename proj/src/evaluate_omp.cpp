#include <cstdlib>
#include <exception>
#include <limits>
#include <string>

#include "evaluate_detail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dualsys {

int worker_count() {
#ifdef _OPENMP
  int workers = omp_get_max_threads();
  if (const char* env = std::getenv("DUALSYS_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0 && cap < workers) workers = cap;
    } catch (const std::exception&) {
      // unparseable value: keep the OpenMP default
    }
  }
  return workers;
#else
  return 1;
#endif
}

std::vector<LogWeight> evaluate_log_weights_parallel(const LogLikelihood& loglik,
                                                     std::int64_t n_first, std::int64_t count) {
  std::vector<LogWeight> out(static_cast<std::size_t>(count));
  std::int64_t first_failure = std::numeric_limits<std::int64_t>::max();
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = detail::checked_eval(loglik, n_first + i);
    } catch (...) {
#pragma omp critical(dualsys_eval_failure)
      {
        if (i < first_failure) {
          first_failure = i;
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace dualsys
