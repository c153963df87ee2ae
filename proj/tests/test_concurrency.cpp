#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "lip/pipeline.hpp"
#include "test_support.hpp"

using namespace lip;

// Config and AssetBundle are immutable after construction; preprocess keeps
// no global state, so concurrent workers over one shared bundle must agree
// with the single-threaded answers.
TEST_CASE("concurrent preprocess over a shared bundle stays deterministic") {
    const AssetBundle& bundle = test_bundle();
    const Config config = test_config();

    std::vector<std::string> inputs = {
        "Yesss!!!! It's holiday today \U0001F973\U0001F973\U0001F973",
        "My phone number is 9321673878",
        "I hv sent u a msg on fb, plz chk it n let me knw",
        "!@#$%^&* \U0001F602\U0001F923\U0001F60A\U0001F389\U0001F60E",
        "This is my email address - mohan@gmail.com and Aadhar card number is 3675 9834 6012",
        "Oh!!! Shit...I missed that question??",
        "I will be there in 4️⃣ \U0001F923\U0001F923 hours.",
    };
    std::vector<std::string> expected;
    expected.reserve(inputs.size());
    for (const auto& input : inputs) {
        expected.push_back(preprocess(input, config, bundle).tts_text);
    }

    std::atomic<int> mismatches{0};
    auto worker = [&](unsigned seed) {
        for (int round = 0; round < 200; ++round) {
            std::size_t idx = (seed + static_cast<unsigned>(round)) % inputs.size();
            if (preprocess(inputs[idx], config, bundle).tts_text != expected[idx]) {
                ++mismatches;
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < 8; ++t) {
        threads.emplace_back(worker, t);
    }
    for (auto& t : threads) {
        t.join();
    }
    CHECK(mismatches.load() == 0);
}
