#ifndef DOTWEB_PARALLEL_HPP
#define DOTWEB_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace dotweb {

// Worker count: DOTWEB_THREADS if set and positive, hardware otherwise.
inline unsigned thread_count() {
    if (const char* env = std::getenv("DOTWEB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Static round-robin parallel loop over [0, count).  Tasks must be
// independent; results keyed by index stay deterministic.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const unsigned workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace dotweb

#endif
