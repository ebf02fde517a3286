#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "predred/oracle.hpp"
#include "predred/parse_tree.hpp"
#include "predred/util.hpp"

namespace predred {

/// Per-reduction metrics. queries counts cache-miss oracle calls;
/// candidates_total/valid count every tested candidate (cache hits included);
/// wall_ms covers the reduction only and is written as 0 in deterministic
/// runs so outputs stay byte-identical.
struct TraceRecord {
  std::string program_id;
  std::string label;
  std::string model_id;
  std::string reducer_id;
  int tokens_before{0};
  int tokens_after{0};
  double reduction_ratio{0.0};
  int queries{0};
  int accepted_steps{0};
  int candidates_total{0};
  int candidates_valid{0};
  std::int64_t wall_ms{0};
  bool truncated{false};
  std::vector<StepEntry> step_log;
};

struct ReductionOutcome {
  std::string reduced_text;
  NodePtr reduced_tree;  // null when the reduced text does not parse
  TraceRecord trace;
};

inline nlohmann::ordered_json trace_to_json(const TraceRecord& t) {
  nlohmann::ordered_json j;
  j["program_id"] = t.program_id;
  j["label"] = t.label;
  j["model_id"] = t.model_id;
  j["reducer_id"] = t.reducer_id;
  j["tokens_before"] = t.tokens_before;
  j["tokens_after"] = t.tokens_after;
  j["reduction_ratio"] = t.reduction_ratio;
  j["queries"] = t.queries;
  j["accepted_steps"] = t.accepted_steps;
  j["candidates_total"] = t.candidates_total;
  j["candidates_valid"] = t.candidates_valid;
  j["wall_ms"] = t.wall_ms;
  j["truncated"] = t.truncated;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const StepEntry& s : t.step_log) {
    nlohmann::ordered_json e;
    e["candidate_hash"] = hex64(s.candidate_hash);
    e["verdict"] = s.pass ? "Pass" : "Fail";
    e["valid_parse"] = s.valid_parse;
    steps.push_back(std::move(e));
  }
  j["step_log"] = std::move(steps);
  return j;
}

inline TraceRecord trace_from_json(const nlohmann::json& j) {
  TraceRecord t;
  t.program_id = j.at("program_id").get<std::string>();
  t.label = j.at("label").get<std::string>();
  t.model_id = j.at("model_id").get<std::string>();
  t.reducer_id = j.at("reducer_id").get<std::string>();
  t.tokens_before = j.at("tokens_before").get<int>();
  t.tokens_after = j.at("tokens_after").get<int>();
  t.reduction_ratio = j.at("reduction_ratio").get<double>();
  t.queries = j.at("queries").get<int>();
  t.accepted_steps = j.at("accepted_steps").get<int>();
  t.candidates_total = j.at("candidates_total").get<int>();
  t.candidates_valid = j.at("candidates_valid").get<int>();
  t.wall_ms = j.at("wall_ms").get<std::int64_t>();
  t.truncated = j.at("truncated").get<bool>();
  for (const auto& e : j.at("step_log")) {
    StepEntry s;
    s.candidate_hash =
        std::stoull(e.at("candidate_hash").get<std::string>(), nullptr, 16);
    s.pass = e.at("verdict").get<std::string>() == "Pass";
    s.valid_parse = e.at("valid_parse").get<bool>();
    t.step_log.push_back(s);
  }
  return t;
}

inline void write_traces_jsonl(const std::string& path,
                               const std::vector<TraceRecord>& traces) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const TraceRecord& t : traces) out << trace_to_json(t).dump() << "\n";
}

inline std::vector<TraceRecord> read_traces_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<TraceRecord> traces;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    traces.push_back(trace_from_json(nlohmann::json::parse(line)));
  }
  return traces;
}

/// Fills the session-derived fields of a trace.
inline void fill_trace_counters(TraceRecord& t, const OracleSession& session) {
  t.queries = session.queries();
  t.accepted_steps = session.accepted_steps;
  t.candidates_total = session.candidates_total();
  t.candidates_valid = session.candidates_valid();
  t.truncated = session.truncated();
  t.step_log = session.step_log();
}

}  // namespace predred
