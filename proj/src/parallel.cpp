#include "nodoid/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace nodoid {

int thread_limit() {
    int limit = max_threads();
    if (const char* env = std::getenv("NODOID_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) limit = std::min(limit, cap);
        } catch (const std::exception&) {
            // Unparseable values are ignored.
        }
    }
    return std::max(1, limit);
}

}  // namespace nodoid
