#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lip/assets.hpp"
#include "lip/config.hpp"

namespace lip {

struct LatencyBucket {
    std::string label;  // "<=50", "51-200", "201+"
    std::size_t samples = 0;
    std::uint64_t p50_us = 0;
    std::uint64_t p90_us = 0;
    std::uint64_t p99_us = 0;
};

struct LatencyReport {
    std::string hardware;
    std::size_t iterations = 0;
    bool below_minimum = false;  // fewer than 1000 iterations
    std::vector<LatencyBucket> buckets;
    std::map<std::string, std::uint64_t> per_stage_p50_us;  // over the <=50 bucket
    std::uint64_t asset_footprint_bytes = 0;
    std::map<std::string, std::uint64_t> asset_breakdown;
    std::uint64_t resident_before_bytes = 0;
    std::uint64_t resident_after_bytes = 0;
    bool footprint_stable = true;

    std::string to_json() const;
};

// Processes corpus lines round-robin for the given number of iterations,
// single-threaded, after an untimed warmup pass. Latencies bucket by message
// grapheme count. Throws ValidationError on an empty corpus.
LatencyReport run_bench(const std::filesystem::path& corpus, std::size_t iterations,
                        const Config& config, const AssetBundle& bundle);

std::string hardware_descriptor();

}  // namespace lip
