#include "binedge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace binedge {

int default_thread_count() {
  const char* env = std::getenv("BINEDGE_THREADS");
  if (env == nullptr) return 1;
  try {
    const int n = std::stoi(env);
    return n < 1 ? 1 : n;
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace binedge
