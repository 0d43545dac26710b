#ifndef QALG_PARALLEL_HPP
#define QALG_PARALLEL_HPP

namespace qalg {

// Runtime switch between the serial reference kernels and the OpenMP ones.
// Both produce bit-identical results; the switch exists so tests can compare
// the two paths and the benchmark can time them.
void set_parallel(bool on);
bool parallel_enabled();

int hardware_threads();

}  // namespace qalg

#endif
