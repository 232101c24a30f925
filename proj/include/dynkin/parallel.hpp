#pragma once

namespace dynkin::par {

// The box scans, crystal BFS expansion and oracle accumulation each come in
// a serial and an OpenMP flavor. The serial ones are the reference kept for
// testing; kernel() selects what the dispatching wrappers run.
enum class Kernel { Serial, OpenMP };

Kernel kernel();
void set_kernel(Kernel k);

// Worker count for the OpenMP kernels (the CLI --jobs flag). 0 = runtime
// default.
int jobs();
void set_jobs(int n);

bool openmp_available();

}  // namespace dynkin::par
