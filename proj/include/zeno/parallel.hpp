#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zeno {

inline unsigned default_thread_count()
{
	return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(i) for i in [0, n) on up to `threads` workers. Results must be
// written to per-index slots; the first exception thrown is rethrown here.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn)
{
	if (threads == 0)
		threads = default_thread_count();
	threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
	if (threads <= 1) {
		for (std::size_t i = 0; i < n; ++i)
			fn(i);
		return;
	}

	std::atomic<std::size_t> next{0};
	std::exception_ptr error;
	std::mutex error_mutex;
	auto worker = [&] {
		for (;;) {
			const std::size_t i = next.fetch_add(1);
			if (i >= n)
				return;
			try {
				fn(i);
			} catch (...) {
				std::lock_guard lock(error_mutex);
				if (!error)
					error = std::current_exception();
				next.store(n);
				return;
			}
		}
	};
	{
		std::vector<std::jthread> pool;
		pool.reserve(threads);
		for (unsigned t = 0; t < threads; ++t)
			pool.emplace_back(worker);
	}
	if (error)
		std::rethrow_exception(error);
}

} // namespace zeno
