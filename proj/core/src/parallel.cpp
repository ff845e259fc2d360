#include "fitkernel/parallel.hpp"

#include <cstdlib>
#include <string>

namespace fitkernel {

unsigned worker_threads() {
  if (const char* env = std::getenv("FITKERNEL_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace fitkernel
