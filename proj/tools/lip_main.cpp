#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lip/assets.hpp"
#include "lip/bench.hpp"
#include "lip/config.hpp"
#include "lip/errors.hpp"
#include "lip/goldens.hpp"
#include "lip/pipeline.hpp"

namespace {

struct FlagOptions {
    std::optional<std::string> config_file;
    std::optional<std::string> asset_dir;
    std::map<std::string, std::string> overrides;
};

void add_config_options(CLI::App* app, FlagOptions& flags) {
    app->add_option_function<std::string>(
           "--config", [&flags](const std::string& v) { flags.config_file = v; },
           "JSON config file of flag overrides");
    app->add_option_function<std::string>(
           "--assets", [&flags](const std::string& v) { flags.asset_dir = v; },
           "Asset directory (default: assets, or LIP_ASSET_DIR)");

    auto flag = [app, &flags](const std::string& name, const std::string& key) {
        app->add_flag_function(
            "--" + name + ",!--no-" + name,
            [&flags, key](std::int64_t count) { flags.overrides[key] = count > 0 ? "true" : "false"; },
            "Set " + key);
    };
    flag("allow-punctuation-spamming", "allow_punctuation_spamming");
    flag("allow-emoji-spamming", "allow_emoji_spamming");
    flag("disable-pii-masking", "disable_pii_masking");
    flag("show-phonenumber", "show_phonenumber");
    flag("rm-common-abbr", "rm_common_abbr");
}

lip::Config build_config(const FlagOptions& flags) {
    std::map<std::string, std::string> cli = flags.overrides;
    if (flags.asset_dir) {
        cli["asset_dir"] = *flags.asset_dir;
    }
    std::optional<std::filesystem::path> file;
    if (flags.config_file) {
        file = *flags.config_file;
    }
    return lip::load_config(file, lip::env_config_overrides(), cli);
}

int run_batch(const lip::Config& config, const lip::AssetBundle& bundle) {
    std::string line;
    while (std::getline(std::cin, line)) {
        nlohmann::json out;
        try {
            nlohmann::json doc = nlohmann::json::parse(line);
            out["id"] = doc.value("id", nlohmann::json());
            lip::ProcessedMessage msg =
                lip::preprocess(doc.at("text").get<std::string>(), config, bundle);
            out["tts_text"] = msg.tts_text;
            out["have_char"] = msg.have_char;
            out["emoji_count"] = msg.unique_emoji_count;
        } catch (const std::exception& e) {
            out["error"] = e.what();
        }
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int run_goldens_cmd(const std::string& fixtures, const lip::Config& config,
                    const lip::AssetBundle& bundle) {
    auto cases = lip::load_goldens(fixtures);
    auto results = lip::run_goldens(cases, config, bundle);
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.passed) {
            ++passed;
            std::cout << "PASS " << r.id << "\n";
        } else {
            std::cout << "FAIL " << r.id << "\n  expected: " << r.expected
                      << "\n  actual:   " << r.actual << "\n";
        }
    }
    std::cout << passed << "/" << results.size() << " passed\n";
    return passed == results.size() ? 0 : 1;
}

int run_assets_cmd(const lip::AssetBundle& bundle) {
    for (const auto& [file, bytes] : bundle.footprint_breakdown) {
        std::cout << file << "\t" << bytes << "\n";
    }
    std::cout << "total_on_disk\t" << lip::asset_footprint(bundle) << "\n";
    std::cout << "resident_estimate\t" << bundle.resident_estimate_bytes() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lip - rewrites raw chat messages into TTS-friendly prose"};
    app.require_subcommand(1);

    FlagOptions flags;

    auto* process_cmd = app.add_subcommand("process", "Process one message and print the result");
    std::string process_text;
    process_cmd->add_option("text", process_text, "Message text");
    bool show_timings = false;
    process_cmd->add_flag("--timings", show_timings, "Print per-stage timings to stderr");
    add_config_options(process_cmd, flags);

    auto* batch_cmd =
        app.add_subcommand("batch", "Read JSONL {id, text} on stdin, write results as JSONL");
    add_config_options(batch_cmd, flags);

    auto* goldens_cmd = app.add_subcommand("goldens", "Run the golden fixture suite");
    std::string fixtures = "data/goldens.json";
    goldens_cmd->add_option("--fixtures", fixtures, "Fixture file (JSON array)");
    add_config_options(goldens_cmd, flags);

    auto* bench_cmd = app.add_subcommand("bench", "Measure per-message latency percentiles");
    std::string corpus;
    std::size_t iterations = 10000;
    bench_cmd->add_option("--corpus", corpus, "Corpus file, one message per line")->required();
    bench_cmd->add_option("--iters", iterations, "Iterations (default 10000)");
    add_config_options(bench_cmd, flags);

    auto* assets_cmd = app.add_subcommand("assets", "Print the asset footprint breakdown");
    add_config_options(assets_cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        lip::Config config = build_config(flags);
        lip::AssetBundle bundle = lip::load_assets(config.asset_dir);

        if (process_cmd->parsed()) {
            lip::ProcessedMessage msg = show_timings
                                            ? lip::preprocess_with_report(process_text, config, bundle)
                                            : lip::preprocess(process_text, config, bundle);
            std::cout << msg.tts_text << "\n";
            if (show_timings) {
                for (const auto& t : msg.stage_timings) {
                    std::cerr << t.stage << "\t" << t.micros << "us\n";
                }
            }
            return 0;
        }
        if (batch_cmd->parsed()) {
            return run_batch(config, bundle);
        }
        if (goldens_cmd->parsed()) {
            return run_goldens_cmd(fixtures, config, bundle);
        }
        if (bench_cmd->parsed()) {
            lip::LatencyReport report = lip::run_bench(corpus, iterations, config, bundle);
            std::cout << report.to_json() << "\n";
            return 0;
        }
        if (assets_cmd->parsed()) {
            return run_assets_cmd(bundle);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
