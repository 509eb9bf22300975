#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace arithgraph {

// Runs body(worker) for worker in [0, jobs). The first exception is rethrown.
inline void run_workers(unsigned jobs, const std::function<void(unsigned)>& body) {
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        body(0);
        return;
    }
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                body(w);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace arithgraph
