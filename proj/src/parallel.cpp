#include <gadgetforge/parallel.hpp>
#include <gadgetforge/rng.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace gadgetforge {

auto Rng::sample(std::uint64_t n, std::uint64_t k) -> std::vector<std::uint64_t>
{
    // Floyd's algorithm: k draws regardless of n.
    std::set<std::uint64_t> chosen;
    for (auto j = n - k; j < n; ++j) {
        auto t = below(j + 1);
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

auto thread_count() -> std::size_t
{
    std::size_t count = std::max(1u, std::thread::hardware_concurrency());
    if (const char *cap = std::getenv("GADGETFORGE_THREADS")) {
        try {
            auto parsed = std::stoul(cap);
            if (parsed > 0)
                count = std::min<std::size_t>(count, parsed);
        } catch (const std::exception &) {
        }
    }
    return count;
}

void parallel_for(std::size_t tasks, const std::function<void(std::size_t)> &body)
{
    auto workers = std::min(thread_count(), tasks);
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (auto i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = tasks;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w)
            pool.emplace_back(run);
        run();
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace gadgetforge
