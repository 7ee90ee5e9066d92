#include <doctest.h>

#include "doc_runner.hpp"

TEST_CASE("README console examples match byte for byte") {
    const auto outcomes = doc::run_examples(HIRZLOG_SOURCE_DIR "/README.md", HIRZLOG_CLI_PATH, HIRZLOG_SOURCE_DIR);
    CHECK(outcomes.size() >= 10);
    for (const auto& o : outcomes) {
        CAPTURE(o.example.line);
        CAPTURE(o.example.command);
        CHECK(o.actual == o.example.expected);
        CHECK(o.actual_exit == o.example.expected_exit);
    }
}
