#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hodgeforge/constructor.hpp"

namespace hodgeforge::cli {

// Exit codes shared by all commands.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;     // bad input, malformed JSON, schema violation
inline constexpr int kMathFailure = 2;    // verification failed

inline constexpr const char* kTestElementEnv = "HODGEFORGE_TEST_ELEMENT";

// Parses "x/y" into the torus element (x, y); both parts are integers.
TorusElement parse_test_element(const std::string& text);

// Default options, with the primary element overridden by
// HODGEFORGE_TEST_ELEMENT when set. Throws std::invalid_argument if the
// variable is malformed or names a degenerate element.
VerifyOptions options_from_environment();

int cmd_construct(const std::string& input_path, Mode mode, const std::string& output_path, bool json,
                  std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& cert_path, bool json, std::ostream& out, std::ostream& err);
int cmd_calc(const std::string& expr, bool json, std::ostream& out, std::ostream& err);
int cmd_classify(const std::optional<std::string>& input_path, const std::optional<std::string>& expr, bool json,
                 std::ostream& out, std::ostream& err);

// Full command-line dispatch; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgeforge::cli
