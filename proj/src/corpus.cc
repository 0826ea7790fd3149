// Copyright 2026 The parenteval Authors.
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

#include "parenteval/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace parenteval {
namespace {

using nlohmann::json;

TokenSequence SplitLower(std::string_view raw, bool split_underscore) {
  TokenSequence out;
  std::string current;
  for (char c : raw) {
    const bool sep = std::isspace(static_cast<unsigned char>(c)) ||
                     (split_underscore && c == '_');
    if (sep) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

absl::StatusOr<std::string> GetString(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) return absl::InvalidArgumentError(
      absl::StrCat("missing field \"", key, "\""));
  if (!it->is_string()) return absl::InvalidArgumentError(
      absl::StrCat("field \"", key, "\" must be a string"));
  return it->get<std::string>();
}

absl::StatusOr<TokenSequence> NonEmptyText(const json& j, const char* key) {
  auto raw = GetString(j, key);
  if (!raw.ok()) return raw.status();
  TokenSequence tokens = Tokenize(*raw);
  if (tokens.empty()) return absl::InvalidArgumentError(
      absl::StrCat("field \"", key, "\" is empty"));
  return tokens;
}

}  // namespace

TokenSequence Tokenize(std::string_view raw) { return SplitLower(raw, false); }

absl::StatusOr<TokenSequence> AttributeTokens(std::string_view raw) {
  TokenSequence tokens = SplitLower(raw, true);
  if (tokens.empty()) {
    return absl::InvalidArgumentError("attribute name is empty");
  }
  return tokens;
}

TokenSet TableLexicalItems(const Table& table) {
  TokenSet items;
  for (const Record& r : table.records) {
    items.insert(r.attribute.begin(), r.attribute.end());
    items.insert(r.value.begin(), r.value.end());
  }
  return items;
}

std::string JoinTokens(const TokenSequence& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

absl::StatusOr<Table> ParseTable(const json& j) {
  if (!j.is_array()) {
    return absl::InvalidArgumentError("\"table\" must be an array of records");
  }
  if (j.empty()) return absl::InvalidArgumentError("table has no records");
  Table table;
  table.records.reserve(j.size());
  for (size_t k = 0; k < j.size(); ++k) {
    const json& rec = j[k];
    if (!rec.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat("table record ", k, " is not an object"));
    }
    auto attr = GetString(rec, "attribute");
    if (!attr.ok()) return attr.status();
    auto attr_tokens = AttributeTokens(*attr);
    if (!attr_tokens.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("table record ", k, ": ", attr_tokens.status().message()));
    }
    auto value = NonEmptyText(rec, "value");
    if (!value.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("table record ", k, ": ", value.status().message()));
    }
    table.records.push_back({std::move(*attr_tokens), std::move(*value)});
  }
  return table;
}

absl::StatusOr<EvalInstance> ParseInstance(const json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("expected an object");
  EvalInstance inst;
  auto table_it = j.find("table");
  if (table_it == j.end()) {
    return absl::InvalidArgumentError("missing field \"table\"");
  }
  auto table = ParseTable(*table_it);
  if (!table.ok()) return table.status();
  inst.table = std::move(*table);

  auto refs_it = j.find("references");
  if (refs_it == j.end() || !refs_it->is_array()) {
    return absl::InvalidArgumentError("\"references\" must be an array");
  }
  if (refs_it->empty()) return absl::InvalidArgumentError("no references");
  for (size_t r = 0; r < refs_it->size(); ++r) {
    const json& ref = (*refs_it)[r];
    if (!ref.is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat("reference ", r, " is not a string"));
    }
    TokenSequence tokens = Tokenize(ref.get<std::string>());
    if (tokens.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("reference ", r, " is empty"));
    }
    inst.references.push_back(std::move(tokens));
  }

  auto gen = GetString(j, "generation");
  if (!gen.ok()) return gen.status();
  inst.generation = Tokenize(*gen);

  if (j.contains("instance_id")) {
    auto id = GetString(j, "instance_id");
    if (!id.ok()) return id.status();
    inst.instance_id = std::move(*id);
  }
  if (j.contains("system")) {
    auto sys = GetString(j, "system");
    if (!sys.ok()) return sys.status();
    inst.system = std::move(*sys);
  }
  return inst;
}

absl::StatusOr<TrainingPair> ParsePair(const json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("expected an object");
  auto table_it = j.find("table");
  if (table_it == j.end()) {
    return absl::InvalidArgumentError("missing field \"table\"");
  }
  auto table = ParseTable(*table_it);
  if (!table.ok()) return table.status();
  auto ref = NonEmptyText(j, "reference");
  if (!ref.ok()) return ref.status();
  return TrainingPair{std::move(*table), std::move(*ref)};
}

absl::StatusOr<Comparison> ParseComparison(const json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("expected an object");
  Comparison c;
  auto id = GetString(j, "instance_id");
  if (!id.ok()) return id.status();
  auto a = GetString(j, "system_a");
  if (!a.ok()) return a.status();
  auto b = GetString(j, "system_b");
  if (!b.ok()) return b.status();
  auto winner = GetString(j, "winner");
  if (!winner.ok()) return winner.status();
  if (a->empty() || b->empty()) {
    return absl::InvalidArgumentError("empty system id");
  }
  if (*a == *b) {
    return absl::InvalidArgumentError(
        absl::StrCat("system \"", *a, "\" compared against itself"));
  }
  if (*winner == "a") {
    c.winner = Winner::kA;
  } else if (*winner == "b") {
    c.winner = Winner::kB;
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown winner \"", *winner, "\" (expected \"a\" or \"b\")"));
  }
  c.instance_id = std::move(*id);
  c.system_a = std::move(*a);
  c.system_b = std::move(*b);
  return c;
}

json TableToJson(const Table& table) {
  json records = json::array();
  for (const Record& r : table.records) {
    records.push_back(
        {{"attribute", JoinTokens(r.attribute)}, {"value", JoinTokens(r.value)}});
  }
  return records;
}

json InstanceToJson(const EvalInstance& instance) {
  json j;
  j["table"] = TableToJson(instance.table);
  json refs = json::array();
  for (const auto& r : instance.references) refs.push_back(JoinTokens(r));
  j["references"] = std::move(refs);
  j["generation"] = JoinTokens(instance.generation);
  if (!instance.instance_id.empty()) j["instance_id"] = instance.instance_id;
  if (!instance.system.empty()) j["system"] = instance.system;
  return j;
}

absl::Status ForEachJsonLine(
    const std::string& path,
    const std::function<absl::Status(int, const json&)>& fn) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) {
          return std::isspace(c);
        })) {
      continue;
    }
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ":", line_no, ": malformed JSON"));
    }
    absl::Status s = fn(line_no, j);
    if (!s.ok()) {
      return absl::Status(s.code(),
                          absl::StrCat(path, ":", line_no, ": ", s.message()));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<EvalInstance>> LoadInstances(
    const std::string& path) {
  std::vector<EvalInstance> out;
  absl::Status s = ForEachJsonLine(path, [&](int, const json& j) {
    auto inst = ParseInstance(j);
    if (!inst.ok()) return inst.status();
    out.push_back(std::move(*inst));
    return absl::OkStatus();
  });
  if (!s.ok()) return s;
  return out;
}

absl::StatusOr<std::vector<TrainingPair>> LoadPairs(const std::string& path) {
  std::vector<TrainingPair> out;
  absl::Status s = ForEachJsonLine(path, [&](int, const json& j) {
    auto pair = ParsePair(j);
    if (!pair.ok()) return pair.status();
    out.push_back(std::move(*pair));
    return absl::OkStatus();
  });
  if (!s.ok()) return s;
  return out;
}

JudgmentSet MakeJudgmentSet(std::vector<Comparison> comparisons) {
  JudgmentSet set;
  std::unordered_set<std::string> seen;
  for (const Comparison& c : comparisons) {
    for (const std::string* id : {&c.system_a, &c.system_b}) {
      if (seen.insert(*id).second) set.systems.push_back(*id);
    }
  }
  set.comparisons = std::move(comparisons);
  return set;
}

absl::StatusOr<JudgmentSet> LoadJudgments(const std::string& path) {
  std::vector<Comparison> comparisons;
  absl::Status s = ForEachJsonLine(path, [&](int, const json& j) {
    auto c = ParseComparison(j);
    if (!c.ok()) return c.status();
    comparisons.push_back(std::move(*c));
    return absl::OkStatus();
  });
  if (!s.ok()) return s;
  return MakeJudgmentSet(std::move(comparisons));
}

absl::Status SaveInstances(const std::vector<EvalInstance>& instances,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot write ", path));
  for (const EvalInstance& inst : instances) {
    out << InstanceToJson(inst).dump() << '\n';
  }
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("write failed: ", path));
}

}  // namespace parenteval
