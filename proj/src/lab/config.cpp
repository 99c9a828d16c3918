#include "trilab/lab/config.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "trilab/error.hpp"

namespace trilab::lab {
namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::kConfigError, msg); }

template <typename T>
T get_unsigned(const json& v, const char* key) {
  if (!v.is_number_unsigned()) config_error(std::string(key) + " must be a non-negative integer");
  const auto x = v.get<std::uint64_t>();
  if (x > std::numeric_limits<T>::max()) config_error(std::string(key) + " is out of range");
  return static_cast<T>(x);
}

std::string get_string(const json& v, const char* key) {
  if (!v.is_string()) config_error(std::string(key) + " must be a string");
  return v.get<std::string>();
}

}  // namespace

Kind parse_kind(std::string_view name) {
  if (name == "sum") return Kind::kSum;
  if (name == "energy") return Kind::kEnergy;
  if (name == "audit-bounds") return Kind::kAuditBounds;
  if (name == "expansion") return Kind::kExpansion;
  if (name == "identity-suite") return Kind::kIdentitySuite;
  config_error("unknown experiment kind '" + std::string(name) + "'");
}

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kSum: return "sum";
    case Kind::kEnergy: return "energy";
    case Kind::kAuditBounds: return "audit-bounds";
    case Kind::kExpansion: return "expansion";
    case Kind::kIdentitySuite: return "identity-suite";
  }
  return "?";
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  config_error("unknown format '" + std::string(name) + "'");
}

ExperimentConfig default_config(Kind kind) {
  ExperimentConfig c;
  c.kind = kind;
  switch (kind) {
    case Kind::kSum:
      c.primes = {31, 101, 257};
      c.sets = {"random:12:1", "random:10:2", "random:8:3"};
      c.reps = 10;
      break;
    case Kind::kEnergy:
      c.primes = {31, 101};
      c.sets = {"random:8:1", "random:8:2", "random:8:3"};
      c.reps = 1;
      break;
    case Kind::kAuditBounds:
      c.primes = {31, 101, 257};
      c.reps = 2;
      break;
    case Kind::kExpansion:
      c.primes = {31, 101};
      c.sets = {"random:8:1", "random:6:2", "random:5:3", "random:8:4", "random:8:5"};
      c.reps = 1;
      break;
    case Kind::kIdentitySuite:
      c.primes = {7, 31, 101};
      c.reps = 3;
      break;
  }
  return c;
}

ExperimentConfig parse_config_json(std::string_view text, ExperimentConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    config_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) config_error("config must be a JSON object");
  ExperimentConfig c = std::move(base);
  for (const auto& [key, v] : j.items()) {
    if (key == "kind") {
      c.kind = parse_kind(get_string(v, "kind"));
    } else if (key == "p") {
      if (!v.is_array()) config_error("p must be an array of primes");
      c.primes.clear();
      for (const auto& x : v) c.primes.push_back(get_unsigned<std::uint32_t>(x, "p"));
    } else if (key == "sets") {
      if (!v.is_array()) config_error("sets must be an array of set specs");
      c.sets.clear();
      for (const auto& x : v) c.sets.push_back(get_string(x, "sets"));
    } else if (key == "weights") {
      try {
        c.weights = parse_weight_scheme(get_string(v, "weights"));
      } catch (const Error& e) {
        config_error(e.what());
      }
    } else if (key == "seed") {
      c.seed = get_unsigned<std::uint64_t>(v, "seed");
    } else if (key == "reps") {
      c.reps = get_unsigned<std::uint32_t>(v, "reps");
    } else if (key == "out") {
      c.out = get_string(v, "out");
    } else if (key == "threads") {
      c.threads = get_unsigned<std::uint32_t>(v, "threads");
    } else if (key == "format") {
      c.format = parse_format(get_string(v, "format"));
    } else {
      config_error("unknown config key '" + key + "'");
    }
  }
  return c;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) config_error("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_json(ss.str(), std::move(base));
}

void validate(const ExperimentConfig& config) {
  if (config.primes.empty()) config_error("p list is empty");
  if (config.reps < 1) config_error("reps must be >= 1");
  if (config.threads < 1) config_error("threads must be >= 1");
  for (std::uint32_t p : config.primes) {
    Field field;
    try {
      field = make_field(p);
    } catch (const Error& e) {
      config_error("p = " + std::to_string(p) + ": " + e.what());
    }
    for (const auto& spec : config.sets) {
      try {
        parse_set_spec(field, spec);
      } catch (const Error& e) {
        config_error("set '" + spec + "' at p = " + std::to_string(p) + ": " + e.what());
      }
    }
  }
}

}  // namespace trilab::lab
