// Copyright 2026 The qcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcs/config.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qcs/errors.hpp"
#include "qcs/units.hpp"

namespace qcs {

using nlohmann::json;

ConfigError::ConfigError(std::string field, const std::string& what, int line, int column)
    : std::runtime_error(field.empty() || what.starts_with(field + ": ") ? what
                                                                        : field + ": " + what),
      field_(std::move(field)),
      line_(line),
      column_(column) {}

namespace {

const json& require_object(const json& node, const std::string& path) {
  if (!node.is_object()) throw ConfigError(path, "expected a JSON object");
  return node;
}

void reject_unknown(const json& node, const std::string& path,
                    const std::set<std::string>& allowed) {
  for (const auto& [key, value] : node.items()) {
    if (!allowed.contains(key)) {
      const std::string field = path.empty() ? key : path + "." + key;
      throw ConfigError(field, "unknown key '" + key + "'");
    }
  }
}

double number(const json& node, const std::string& path, const std::string& key) {
  const std::string field = path + "." + key;
  if (!node.contains(key)) throw ConfigError(field, "missing required key");
  const json& value = node.at(key);
  if (!value.is_number()) throw ConfigError(field, "expected a number");
  return value.get<double>();
}

QubitParams parse_qubit(const json& node, const std::string& path) {
  require_object(node, path);
  reject_unknown(node, path, {"c_total", "ej", "omega"});
  QubitParams q;
  q.c_total = number(node, path, "c_total");
  const bool has_ej = node.contains("ej");
  const bool has_omega = node.contains("omega");
  if (has_ej == has_omega) {
    throw ConfigError(path, "exactly one of 'ej' or 'omega' must be given");
  }
  if (has_ej) {
    q.ej = units::ghz_to_angular(number(node, path, "ej"));
  } else {
    const double omega = number(node, path, "omega");
    if (!(q.c_total > 0.0)) throw ConfigError(path + ".c_total", "must be positive");
    if (!(omega > 0.0)) throw ConfigError(path + ".omega", "must be positive");
    q.ej = qubit_ej_for_frequency(q.c_total, units::ghz_to_angular(omega));
  }
  return q;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json to_json_value(const DeviceConfig& d) {
  auto qubit = [](const QubitParams& q) {
    return json{{"c_total", q.c_total}, {"ej", units::angular_to_ghz(q.ej)}};
  };
  return json{
      {"qubit1", qubit(d.qubit1)},
      {"qubit2", qubit(d.qubit2)},
      {"line", {{"length", d.line.length}, {"c0", d.line.c0}, {"l0", d.line.l0}}},
      {"squid",
       {{"ej1", units::angular_to_ghz(d.squid.ej1)},
        {"ej2", units::angular_to_ghz(d.squid.ej2)},
        {"cs", d.squid.cs}}},
      {"caps", {{"c12", d.caps.c12}, {"c1c", d.caps.c1c}, {"c2c", d.caps.c2c}, {"cc", d.caps.cc}}},
  };
}

}  // namespace

DeviceConfig parse_device_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::ostringstream msg;
    msg << "JSON parse error at line " << line << ", column " << column << ": " << e.what();
    throw ConfigError("", msg.str(), line, column);
  }

  require_object(root, "");
  reject_unknown(root, "", {"qubit1", "qubit2", "line", "squid", "caps"});
  for (const char* key : {"qubit1", "qubit2", "line", "squid", "caps"}) {
    if (!root.contains(key)) throw ConfigError(key, "missing required section");
  }

  DeviceConfig d;
  d.qubit1 = parse_qubit(root.at("qubit1"), "qubit1");
  d.qubit2 = parse_qubit(root.at("qubit2"), "qubit2");

  const json& line = require_object(root.at("line"), "line");
  reject_unknown(line, "line", {"length", "c0", "l0"});
  d.line = {number(line, "line", "length"), number(line, "line", "c0"),
            number(line, "line", "l0")};

  const json& squid = require_object(root.at("squid"), "squid");
  reject_unknown(squid, "squid", {"ej1", "ej2", "cs"});
  d.squid = {units::ghz_to_angular(number(squid, "squid", "ej1")),
             units::ghz_to_angular(number(squid, "squid", "ej2")), number(squid, "squid", "cs")};

  const json& caps = require_object(root.at("caps"), "caps");
  reject_unknown(caps, "caps", {"c12", "c1c", "c2c", "cc"});
  d.caps = {number(caps, "caps", "c12"), number(caps, "caps", "c1c"),
            number(caps, "caps", "c2c"), number(caps, "caps", "cc")};

  try {
    validate(d);
  } catch (const InvariantError& e) {
    throw ConfigError(e.field(), e.what());
  }
  return d;
}

DeviceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_device_config(buffer.str());
}

std::string device_to_json(const DeviceConfig& device) {
  return to_json_value(device).dump(2) + "\n";
}

std::string device_hash(const DeviceConfig& device) {
  const std::string canonical = to_json_value(device).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace qcs
