#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hankel1/numerics.hpp"

namespace hankel1
{

namespace
{

thread_local bool in_parallel_region = false;

constexpr std::size_t min_items_per_thread = 32;

}  // namespace

std::size_t thread_limit()
{
    if (const char* env = std::getenv("HANKEL1_THREADS"))
    {
        try
        {
            const long v = std::stol(env);
            return v <= 0 ? 1 : static_cast<std::size_t>(v);
        }
        catch (const std::exception&)
        {
            return 1;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    std::size_t workers = in_parallel_region ? 1 : std::min(thread_limit(), n / min_items_per_thread);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&](std::size_t begin, std::size_t end) {
        in_parallel_region = true;
        try
        {
            for (std::size_t i = begin; i < end; ++i)
                body(i);
        }
        catch (...)
        {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
        in_parallel_region = false;
    };

    std::vector<std::thread> threads;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 1; w < workers; ++w)
    {
        const std::size_t begin = w * chunk;
        if (begin >= n)
            break;
        threads.emplace_back(run, begin, std::min(n, begin + chunk));
    }
    run(0, std::min(n, chunk));
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace hankel1
