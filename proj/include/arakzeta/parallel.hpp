#pragma once

namespace arakzeta {

// Thread count honoring ARAKZETA_THREADS (read once); 1 without OpenMP.
int thread_count();

// Apply ARAKZETA_THREADS to the OpenMP runtime. Idempotent.
void apply_thread_cap();

}  // namespace arakzeta
