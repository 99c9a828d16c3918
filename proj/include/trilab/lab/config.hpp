#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trilab/sets.hpp"

namespace trilab::lab {

enum class Kind { kSum, kEnergy, kAuditBounds, kExpansion, kIdentitySuite };
enum class Format { kCsv, kJson };

Kind parse_kind(std::string_view name);
std::string_view kind_name(Kind kind);
Format parse_format(std::string_view name);

struct ExperimentConfig {
  Kind kind = Kind::kIdentitySuite;
  std::vector<std::uint32_t> primes;
  std::vector<std::string> sets;  // set-spec strings; empty means the kind's default corpus
  WeightScheme weights = WeightScheme::kRandomUnimodular;
  std::uint64_t seed = 1;
  std::uint32_t reps = 1;
  std::string out;  // empty writes to stdout
  std::uint32_t threads = 1;
  Format format = Format::kCsv;
  bool timing = false;  // fill the ms column; off keeps reports byte-stable
};

/// Defaults for a kind: primes, reps and set specs.
ExperimentConfig default_config(Kind kind);

/// Overlays a JSON object onto `base`. Unknown keys and ill-typed values are
/// kConfigError.
ExperimentConfig parse_config_json(std::string_view text, ExperimentConfig base);
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base);

/// Throws kConfigError unless every prime is valid, reps >= 1, threads >= 1,
/// and every set spec parses at every prime.
void validate(const ExperimentConfig& config);

}  // namespace trilab::lab
