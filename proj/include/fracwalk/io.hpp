#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fracwalk/kernels.hpp"
#include "fracwalk/lattice.hpp"
#include "fracwalk/montecarlo.hpp"

namespace fracwalk {

class io_error : public std::runtime_error {
  public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Doubles serialized with 17 significant digits: round-trip exact.
std::string format_double(double v);

// Exact parse of decimals and rationals like "1/64"; throws on junk.
double parse_real(const std::string& text);
std::vector<double> parse_real_list(const std::string& csv);

// Write-to-temp + atomic rename; partial output never lands at `path`.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);
void write_bytes_atomic(const std::filesystem::path& path, const void* data, std::size_t size);

std::string kernel_csv(const TransitionKernel& kernel);
nlohmann::json kernel_json(const TransitionKernel& kernel);

std::string profile_csv(const LatticeState& state);
nlohmann::json profile_sidecar(const LatticeState& state, const TransitionKernel& kernel);

std::string samples_csv(const SampleSet& samples);
std::vector<std::uint8_t> samples_f64le(const SampleSet& samples);
nlohmann::json samples_sidecar(const SampleSet& samples);

// One manifest per artifact-producing run, written next to the outputs.
// The timestamp sits in its own field so everything else is reproducible
// byte-for-byte.
struct RunManifest {
    std::string command;
    nlohmann::json parameters;
    std::uint64_t seed = 0;
    std::string tool_version;
    double realized_tn = 0.0;   // 0 when not applicable
    std::vector<std::string> output_paths;
};

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

}  // namespace fracwalk
