#include "parallel.hpp"

#include <cstdlib>

namespace ytab::detail {

int thread_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("STRAIGHT_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1)
                return v;
        }
        unsigned hc = std::thread::hardware_concurrency();
        return hc > 0 ? static_cast<int>(hc) : 1;
    }();
    return cap;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int workers = thread_cap();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    if (static_cast<std::size_t>(workers) > count)
        workers = static_cast<int>(count);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace ytab::detail
