#include "lip/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include <json.hpp>

#include "lip/errors.hpp"
#include "lip/pipeline.hpp"
#include "lip/segmentation.hpp"

#ifdef __linux__
#include <sys/utsname.h>
#endif

namespace lip {

namespace {

std::uint64_t percentile(std::vector<std::uint64_t>& sorted, double p) {
    if (sorted.empty()) {
        return 0;
    }
    auto rank = static_cast<std::size_t>(p * static_cast<double>(sorted.size()));
    if (rank >= sorted.size()) {
        rank = sorted.size() - 1;
    }
    return sorted[rank];
}

std::uint64_t resident_bytes() {
#ifdef __linux__
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line)) {
        if (line.rfind("VmRSS:", 0) == 0) {
            std::uint64_t kb = 0;
            for (char c : line) {
                if (c >= '0' && c <= '9') {
                    kb = kb * 10 + static_cast<std::uint64_t>(c - '0');
                }
            }
            return kb * 1024;
        }
    }
#endif
    return 0;
}

std::size_t bucket_index(std::size_t graphemes) {
    if (graphemes <= 50) {
        return 0;
    }
    if (graphemes <= 200) {
        return 1;
    }
    return 2;
}

}  // namespace

std::string hardware_descriptor() {
    std::string descriptor;
#ifdef __linux__
    utsname info{};
    if (uname(&info) == 0) {
        descriptor = std::string(info.sysname) + " " + info.release + " " + info.machine;
    }
    std::ifstream cpuinfo("/proc/cpuinfo");
    std::string line;
    while (std::getline(cpuinfo, line)) {
        if (line.rfind("model name", 0) == 0) {
            auto colon = line.find(':');
            if (colon != std::string::npos) {
                descriptor += ", " + line.substr(colon + 2);
            }
            break;
        }
    }
#endif
    return descriptor.empty() ? "unknown" : descriptor;
}

LatencyReport run_bench(const std::filesystem::path& corpus, std::size_t iterations,
                        const Config& config, const AssetBundle& bundle) {
    std::ifstream in(corpus);
    if (!in) {
        throw LoadError("cannot open corpus " + corpus.string());
    }
    std::vector<std::string> messages;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            messages.push_back(line);
        }
    }
    if (messages.empty()) {
        throw ValidationError("bench corpus is empty: " + corpus.string());
    }
    if (iterations == 0) {
        throw ValidationError("bench needs at least one iteration");
    }

    std::vector<std::size_t> buckets(messages.size());
    for (std::size_t i = 0; i < messages.size(); ++i) {
        buckets[i] = bucket_index(segment(messages[i]).size());
    }

    LatencyReport report;
    report.hardware = hardware_descriptor();
    report.iterations = iterations;
    report.below_minimum = iterations < 1000;
    report.asset_footprint_bytes = asset_footprint(bundle);
    report.asset_breakdown = bundle.footprint_breakdown;
    report.resident_before_bytes = resident_bytes();

    // Warmup pass, untimed.
    const std::size_t warmup = std::min<std::size_t>(messages.size(), 256);
    for (std::size_t i = 0; i < warmup; ++i) {
        (void)preprocess(messages[i], config, bundle);
    }

    const std::uint64_t footprint_before = asset_footprint(bundle);
    std::array<std::vector<std::uint64_t>, 3> samples;
    std::map<std::string, std::vector<std::uint64_t>> stage_samples;

    for (std::size_t it = 0; it < iterations; ++it) {
        const std::size_t idx = it % messages.size();
        auto start = std::chrono::steady_clock::now();
        ProcessedMessage msg = preprocess_with_report(messages[idx], config, bundle);
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        samples[buckets[idx]].push_back(static_cast<std::uint64_t>(us));
        if (buckets[idx] == 0) {
            for (const auto& timing : msg.stage_timings) {
                stage_samples[timing.stage].push_back(timing.micros);
            }
        }
    }
    report.footprint_stable = asset_footprint(bundle) == footprint_before;
    report.resident_after_bytes = resident_bytes();

    const char* labels[3] = {"<=50", "51-200", "201+"};
    for (std::size_t b = 0; b < 3; ++b) {
        if (samples[b].empty()) {
            continue;
        }
        std::sort(samples[b].begin(), samples[b].end());
        LatencyBucket bucket;
        bucket.label = labels[b];
        bucket.samples = samples[b].size();
        bucket.p50_us = percentile(samples[b], 0.50);
        bucket.p90_us = percentile(samples[b], 0.90);
        bucket.p99_us = percentile(samples[b], 0.99);
        report.buckets.push_back(std::move(bucket));
    }
    for (auto& [stage, values] : stage_samples) {
        std::sort(values.begin(), values.end());
        report.per_stage_p50_us[stage] = percentile(values, 0.50);
    }
    return report;
}

std::string LatencyReport::to_json() const {
    nlohmann::json doc;
    doc["hardware"] = hardware;
    doc["iterations"] = iterations;
    doc["below_minimum"] = below_minimum;
    doc["asset_footprint_bytes"] = asset_footprint_bytes;
    doc["asset_breakdown"] = asset_breakdown;
    doc["resident_before_bytes"] = resident_before_bytes;
    doc["resident_after_bytes"] = resident_after_bytes;
    doc["footprint_stable"] = footprint_stable;
    doc["buckets"] = nlohmann::json::array();
    for (const auto& bucket : buckets) {
        doc["buckets"].push_back({{"bucket", bucket.label},
                                  {"samples", bucket.samples},
                                  {"p50_us", bucket.p50_us},
                                  {"p90_us", bucket.p90_us},
                                  {"p99_us", bucket.p99_us}});
    }
    doc["per_stage_p50_us"] = per_stage_p50_us;
    return doc.dump(2);
}

}  // namespace lip
