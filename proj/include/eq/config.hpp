#pragma once

#include "eq/controller.hpp"
#include "eq/converter.hpp"
#include "eq/scenario.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace eq {

// One swept parameter: the values are applied through the same path as
// config-file keys, so anything settable in the file can be swept.
struct SweepAxis {
    std::string section;
    std::string key;
    std::vector<std::string> values;
};

struct SimSetup {
    Scenario scenario;
    EqualizerConfig equalizer;
    ConverterParams converter;
    std::vector<SweepAxis> sweep_axes;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses the sectioned key-value format, or JSON when the first non-blank
// character is '{'. Unknown sections and keys are rejected by name. Values
// are applied in file order; later lines override earlier ones, and
// [cells] defaults apply to every cell while indexed keys (r0_3) override a
// single cell afterward.
SimSetup parse_config(const std::string& text);

SimSetup load_config_file(const std::string& path);

// Routes one key to its field; shared by the parser and the sweep runner.
// Throws ConfigError naming [section].key for unknown keys or bad values.
void apply_key(SimSetup& setup, const std::string& section, const std::string& key,
               const std::string& value);

}  // namespace eq
