#include "aelab/parallel.hpp"

#include <atomic>

namespace aelab {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) {
    g_max_threads.store(n < 0 ? 0 : n);
}

int max_threads() {
    return g_max_threads.load();
}

}  // namespace aelab
