#include "eulerpath/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eulerpath {

unsigned configured_threads() {
    const char* env = std::getenv("EULER_THREADS");
    if (env == nullptr) return 1;
    unsigned v = 0;
    const char* end = env;
    while (*end != '\0') ++end;
    const auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || ptr != end || v == 0) return 1;
    return std::min(v, 256u);
}

void parallel_ranges(std::uint64_t n,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (n == 0) return;
    const std::uint64_t workers =
        std::min<std::uint64_t>(configured_threads(), n);
    if (workers <= 1) {
        fn(0, 0, n);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = n / workers;
    const std::uint64_t extra = n % workers;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
        threads.emplace_back([&, w, begin, end] {
            try {
                fn(static_cast<unsigned>(w), begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
        begin = end;
    }
    for (std::thread& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace eulerpath
