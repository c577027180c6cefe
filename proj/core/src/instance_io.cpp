// Copyright 2026 The lrsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lrsched/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lrsched {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw InstanceFormatError(field + ": " + why);
}

long get_int(const json& node, const std::string& field) {
  if (!node.is_number_integer()) bad(field, "expected an integer");
  return node.get<long>();
}

Rational get_rational(const json& node, const std::string& field) {
  if (node.is_number_integer()) return Rational(node.get<long>());
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const std::invalid_argument& e) {
      bad(field, e.what());
    }
  }
  bad(field, "expected an integer or a \"num/den\" string");
}

ExtValue get_value(const json& node, const std::string& field) {
  if (node.is_string() && node.get<std::string>() == "inf") {
    return ExtValue::infinity();
  }
  const Rational q = get_rational(node, field);
  if (sgn(q) < 0) bad(field, "cost values must be non-negative");
  return ExtValue(q);
}

json value_to_json(const ExtValue& v) {
  if (v.is_infinite()) return "inf";
  if (v.value().get_den() == 1 && v.value().get_num().fits_slong_p()) {
    return v.value().get_num().get_si();
  }
  return v.str();
}

CostFunction expand_cost(const json& node, const std::string& field, Time T,
                         Time release) {
  if (!node.is_object()) bad(field, "expected an object");
  if (!node.contains("type") || !node["type"].is_string()) {
    bad(field + ".type", "missing cost type");
  }
  const std::string type = node["type"].get<std::string>();
  std::vector<ExtValue> v(static_cast<std::size_t>(T) + 1);

  if (type == "table") {
    const std::string vf = field + ".values";
    if (!node.contains("values") || !node["values"].is_array()) {
      bad(vf, "expected an array");
    }
    const auto& arr = node["values"];
    if (arr.size() != v.size()) {
      bad(vf, "expected " + std::to_string(v.size()) + " entries (horizon + 1), got " +
                  std::to_string(arr.size()));
    }
    for (std::size_t t = 0; t < arr.size(); ++t) {
      v[t] = get_value(arr[t], vf + "[" + std::to_string(t) + "]");
    }
  } else if (type == "step") {
    const std::string bf = field + ".breaks";
    if (!node.contains("breaks") || !node["breaks"].is_array()) {
      bad(bf, "expected an array");
    }
    Time prev = -1;
    ExtValue level;
    std::size_t next = 0;
    const auto& arr = node["breaks"];
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string kf = bf + "[" + std::to_string(k) + "]";
      if (!arr[k].is_array() || arr[k].size() != 2) bad(kf, "expected [t, v]");
      const long at = get_int(arr[k][0], kf);
      if (at <= prev || at < 0 || at > T) bad(kf, "break times must increase within [0, T]");
      const ExtValue val = get_value(arr[k][1], kf);
      for (; next < static_cast<std::size_t>(at); ++next) v[next] = level;
      level = val;
      prev = static_cast<Time>(at);
    }
    for (; next < v.size(); ++next) v[next] = level;
  } else if (type == "weighted_completion" || type == "weighted_tardiness") {
    if (!node.contains("w")) bad(field + ".w", "missing weight");
    const Rational w = get_rational(node["w"], field + ".w");
    if (sgn(w) < 0) bad(field + ".w", "weight must be non-negative");
    Time from = release;
    if (type == "weighted_tardiness") {
      if (!node.contains("d")) bad(field + ".d", "missing due date");
      from = static_cast<Time>(get_int(node["d"], field + ".d"));
    }
    for (Time t = 0; t <= T; ++t) {
      v[static_cast<std::size_t>(t)] =
          ExtValue(Rational(w * std::max(0, t - from)));
    }
  } else {
    bad(field + ".type", "unknown cost type '" + type + "'");
  }
  return CostFunction(std::move(v));
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InstanceFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("<root>", "expected an object");
  if (!doc.contains("jobs") || !doc["jobs"].is_array()) {
    bad("jobs", "expected an array");
  }

  std::vector<Job> jobs;
  const auto& arr = doc["jobs"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string jf = "jobs[" + std::to_string(i) + "]";
    const auto& node = arr[i];
    if (!node.is_object()) bad(jf, "expected an object");
    Job job;
    job.id = node.contains("id") ? static_cast<int>(get_int(node["id"], jf + ".id"))
                                 : static_cast<int>(i) + 1;
    if (!node.contains("p")) bad(jf + ".p", "missing processing time");
    const long p = get_int(node["p"], jf + ".p");
    if (p < 1) bad(jf + ".p", "processing time must be >= 1, got " + std::to_string(p));
    job.ptime = static_cast<int>(p);
    const long r = node.contains("r") ? get_int(node["r"], jf + ".r") : 0;
    if (r < 0) bad(jf + ".r", "release date must be >= 0, got " + std::to_string(r));
    job.rdate = static_cast<int>(r);
    jobs.push_back(job);
  }

  Time T = Instance::natural_horizon(jobs);
  if (doc.contains("horizon")) {
    const long h = get_int(doc["horizon"], "horizon");
    if (h < 0) bad("horizon", "must be >= 0");
    T = static_cast<Time>(h);
  }

  std::vector<CostFunction> costs;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string cf = "jobs[" + std::to_string(i) + "].cost";
    if (!arr[i].contains("cost")) bad(cf, "missing cost function");
    costs.push_back(expand_cost(arr[i]["cost"], cf, T, jobs[i].rdate));
  }
  return Instance(std::move(jobs), std::move(costs), T);
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["horizon"] = inst.horizon();
  json jobs = json::array();
  for (JobIndex j = 0; j < inst.num_jobs(); ++j) {
    json values = json::array();
    for (const auto& v : inst.cost(j).values()) values.push_back(value_to_json(v));
    jobs.push_back({{"id", inst.job(j).id},
                    {"p", inst.ptime(j)},
                    {"r", inst.rdate(j)},
                    {"cost", {{"type", "table"}, {"values", std::move(values)}}}});
  }
  doc["jobs"] = std::move(jobs);
  return doc.dump() + "\n";
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_instance(inst);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace lrsched
