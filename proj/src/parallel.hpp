// SPDX-License-Identifier: Apache-2.0
//
// polardict: polar-domain dictionaries for near-field planar arrays
// Copyright (C) 2026 The polardict authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef POLARDICT_PARALLEL_HPP
#define POLARDICT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polardict::detail
{
    inline unsigned resolve_threads(unsigned threads)
    {
        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        return threads;
    }

    // Calls body(chunk_begin, chunk_end, worker) over [0, n) in chunks handed out dynamically.
    // Callers must make their results independent of which worker runs which chunk.
    template <typename Body>
    void parallel_chunks(std::size_t n, std::size_t chunk, unsigned threads, Body &&body)
    {
        threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(1, (n + chunk - 1) / chunk)));
        if (threads <= 1)
        {
            for (std::size_t b = 0; b < n; b += chunk)
                body(b, std::min(n, b + chunk), 0u);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&](unsigned id) {
            try
            {
                for (;;)
                {
                    const std::size_t b = next.fetch_add(chunk);
                    if (b >= n)
                        break;
                    body(b, std::min(n, b + chunk), id);
                }
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next.store(n);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker, t);
        for (auto &th : pool)
            th.join();
        if (error)
            std::rethrow_exception(error);
    }

    // Number of workers parallel_chunks will use, for sizing per-worker scratch
    inline unsigned worker_count(std::size_t n, std::size_t chunk, unsigned threads)
    {
        return static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(1, (n + chunk - 1) / chunk)));
    }
}

#endif
