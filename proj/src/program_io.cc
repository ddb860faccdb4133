// Copyright 2026 The dqprog Authors.
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

#include "dqprog/program_io.h"

#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "dqprog/error.h"

namespace dqprog {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw DqError(ErrorCode::kParse, field + ": " + what);
}

const json& Field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) Fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(path + "." + key, "missing");
  return *it;
}

double Number(const json& obj, const std::string& key, const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_number()) Fail(path + "." + key, "expected a number");
  return v.get<double>();
}

std::string String(const json& obj, const std::string& key, const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_string()) Fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::size_t Count(const json& obj, const std::string& key, const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_number_unsigned()) Fail(path + "." + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

// Named-enum parsers throw their own error codes; rethrow them as parse
// errors that name the field.
template <typename F>
auto Named(const std::string& field, F parse) {
  try {
    return parse();
  } catch (const DqError& e) {
    Fail(field, e.what());
  }
}

json ToJson(const DqConstraint& q) {
  json j;
  j["metric"] = std::string(MetricName(q.metric));
  j["bound_kind"] = std::string(BoundKindName(q.bound_kind));
  j["transform"] = {{"kind", TransformName(q.transform.kind)},
                    {"lag", q.transform.lag},
                    {"source_length", q.transform.source_length}};
  j["theta_l"] = q.theta_l ? json(*q.theta_l) : json(nullptr);
  j["theta_u"] = q.theta_u;
  j["beta"] = q.beta;
  j["mu"] = q.mu;
  j["sigma"] = q.sigma;
  j["fpr_bound"] = q.fpr_bound;
  return j;
}

DqConstraint ConstraintFromJson(const json& j, const std::string& path) {
  DqConstraint q;
  const std::string metric = String(j, "metric", path);
  q.metric = Named(path + ".metric", [&] { return ParseMetric(metric); });
  const std::string bound = String(j, "bound_kind", path);
  q.bound_kind = Named(path + ".bound_kind", [&] { return ParseBoundKind(bound); });
  const json& t = Field(j, "transform", path);
  const std::string tpath = path + ".transform";
  const std::string kind = String(t, "kind", tpath);
  q.transform.kind = Named(tpath + ".kind", [&] { return ParseTransformKind(kind); });
  const json& lag = Field(t, "lag", tpath);
  if (!lag.is_number_integer() || lag.get<long long>() < 0 || lag.get<long long>() > 1 << 20) {
    Fail(tpath + ".lag", "expected a small non-negative integer");
  }
  q.transform.lag = lag.get<int>();
  if (t.contains("source_length")) q.transform.source_length = Count(t, "source_length", tpath);
  const json& lo = Field(j, "theta_l", path);
  if (lo.is_null()) {
    q.theta_l = std::nullopt;
  } else if (lo.is_number()) {
    q.theta_l = lo.get<double>();
  } else {
    Fail(path + ".theta_l", "expected a number or null");
  }
  q.theta_u = Number(j, "theta_u", path);
  q.beta = Number(j, "beta", path);
  q.mu = Number(j, "mu", path);
  q.sigma = Number(j, "sigma", path);
  q.fpr_bound = Number(j, "fpr_bound", path);
  return q;
}

}  // namespace

std::string SerializeProgram(const DqProgram& program) {
  json j;
  j["format_version"] = kProgramFormatVersion;
  j["column_id"] = program.column_id;
  j["dtype"] = std::string(DtypeName(program.dtype));
  j["delta"] = program.delta;
  j["fpr_total"] = program.fpr_total;
  j["recall_covered"] = program.recall_covered;
  j["constraints"] = json::array();
  for (const auto& q : program.constraints) j["constraints"].push_back(ToJson(q));
  j["transform_context"] = json::object();
  for (const auto& [metric, tail] : program.transform_context) {
    j["transform_context"][std::string(MetricName(metric))] = tail;
  }
  return j.dump(2) + "\n";
}

DqProgram DeserializeProgram(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DqError(ErrorCode::kParse, std::string("program: ") + e.what());
  }
  const std::string root = "program";
  const json& version = Field(j, "format_version", root);
  if (!version.is_number_integer()) Fail("format_version", "expected an integer");
  if (version.get<long long>() != kProgramFormatVersion) {
    throw DqError(ErrorCode::kFormatVersion,
                  "format_version " + version.dump() + " is not supported (expected " +
                      std::to_string(kProgramFormatVersion) + ")");
  }
  DqProgram p;
  p.column_id = String(j, "column_id", root);
  const std::string dtype = String(j, "dtype", root);
  p.dtype = Named("dtype", [&] { return ParseDtype(dtype); });
  p.delta = Number(j, "delta", root);
  p.fpr_total = Number(j, "fpr_total", root);
  if (j.contains("recall_covered")) p.recall_covered = Count(j, "recall_covered", root);
  const json& constraints = Field(j, "constraints", root);
  if (!constraints.is_array()) Fail("constraints", "expected an array");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    p.constraints.push_back(
        ConstraintFromJson(constraints[i], "constraints[" + std::to_string(i) + "]"));
  }
  const json& context = Field(j, "transform_context", root);
  if (!context.is_object()) Fail("transform_context", "expected an object");
  for (const auto& [name, tail] : context.items()) {
    const std::string path = "transform_context." + name;
    const MetricId metric = Named(path, [&] { return ParseMetric(name); });
    if (!tail.is_array()) Fail(path, "expected an array of numbers");
    std::vector<double> values;
    for (const auto& v : tail) {
      if (!v.is_number()) Fail(path, "expected an array of numbers");
      values.push_back(v.get<double>());
    }
    p.transform_context[metric] = std::move(values);
  }
  return p;
}

void SaveProgram(const DqProgram& program, const std::filesystem::path& path) {
  WriteFileAtomic(path, SerializeProgram(program));
}

DqProgram LoadProgram(const std::filesystem::path& path) {
  return DeserializeProgram(ReadFile(path));
}

void WriteFileAtomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DqError(ErrorCode::kIo, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw DqError(ErrorCode::kIo, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw DqError(ErrorCode::kIo, "cannot rename into " + path.string());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DqError(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace dqprog
