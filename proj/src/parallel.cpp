#include "zetascan/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zetascan {

void parallel_for_index(std::uint64_t n, int workers,
                        const std::function<void(std::uint64_t)>& fn) {
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (std::uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;

    auto body = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const std::uint64_t thread_count =
        std::min<std::uint64_t>(std::uint64_t(workers), n);
    std::vector<std::thread> pool;
    pool.reserve(size_t(thread_count));
    for (std::uint64_t t = 0; t < thread_count; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace zetascan
