#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace pencils {

/// Contiguous, near-equal chunks covering [0, total). Depends only on
/// the arguments, never on scheduling.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>>
chunk_ranges(std::uint64_t total, int threads) {
    if (threads < 1) threads = 1;
    std::uint64_t parts = static_cast<std::uint64_t>(threads);
    if (parts > total) parts = total ? total : 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(parts);
    std::uint64_t base = total / parts, extra = total % parts, begin = 0;
    for (std::uint64_t i = 0; i < parts; ++i) {
        std::uint64_t len = base + (i < extra ? 1 : 0);
        out.emplace_back(begin, begin + len);
        begin += len;
    }
    return out;
}

/// Runs worker(chunk_index, begin, end) for each chunk on its own thread.
/// Callers that merge per-chunk results in chunk order get output that is
/// independent of the thread count and of scheduling.
template <typename Worker>
void parallel_chunks(std::uint64_t total, int threads, Worker&& worker) {
    auto ranges = chunk_ranges(total, threads);
    if (ranges.size() <= 1) {
        if (!ranges.empty() && ranges[0].second > ranges[0].first)
            worker(std::size_t{0}, ranges[0].first, ranges[0].second);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t c = 0; c < ranges.size(); ++c)
        pool.emplace_back([&, c] { worker(c, ranges[c].first, ranges[c].second); });
    for (auto& t : pool) t.join();
}

/// Smallest index in [0, total) accepted by pred, or nullopt. Scans in
/// parallel; workers abandon their chunk once every remaining index
/// exceeds the best hit so far, so the answer is exact and the wall time
/// still benefits from the abort.
template <typename Pred>
std::optional<std::uint64_t> find_first_index(std::uint64_t total, int threads,
                                              Pred&& pred) {
    constexpr std::uint64_t kNone = ~std::uint64_t(0);
    std::atomic<std::uint64_t> best{kNone};
    parallel_chunks(total, threads, [&](std::size_t, std::uint64_t begin,
                                        std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            if ((i & 1023) == 0 && best.load(std::memory_order_relaxed) < i)
                return;
            if (pred(i)) {
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (i < cur &&
                       !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                }
                return;
            }
        }
    });
    std::uint64_t found = best.load();
    if (found == kNone) return std::nullopt;
    return found;
}

} // namespace pencils
