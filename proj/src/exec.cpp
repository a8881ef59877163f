#include "twist/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twist {

ExecMode default_exec_mode() {
#ifdef _OPENMP
  return omp_get_max_threads() > 1 ? ExecMode::Parallel : ExecMode::Serial;
#else
  return ExecMode::Serial;
#endif
}

}  // namespace twist
