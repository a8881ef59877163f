// Execution mode selection for the parallelizable kernels. Every parallel
// kernel has a serial twin that produces byte-identical results; the serial
// paths are the reference implementations used by the tests.
#pragma once

namespace twist {

enum class ExecMode { Serial, Parallel };

// Parallel when built with OpenMP and more than one thread is available,
// Serial otherwise.
ExecMode default_exec_mode();

}  // namespace twist
