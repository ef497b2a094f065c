#pragma once

namespace hchain {

/// Selects between the OpenMP kernels and their serial reference versions.
enum class Execution { Serial, Parallel };

/// Caps OpenMP parallelism for subsequent kernels; n <= 0 leaves the runtime default.
void set_thread_limit(int n);
int thread_limit();

}  // namespace hchain
