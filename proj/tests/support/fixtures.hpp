#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "predred/predred.hpp"

#ifndef PREDRED_DATA_DIR
#error "PREDRED_DATA_DIR must point at the bundled data directory"
#endif

namespace testsupport {

inline std::string data_path(const std::string& rel) {
  return (std::filesystem::path(PREDRED_DATA_DIR) / rel).string();
}

inline const predred::Grammar& mini_grammar() {
  static const predred::Grammar g =
      predred::Grammar::load(predred::read_file(data_path("minijava.g")));
  return g;
}

inline const predred::Parser& mini_parser() {
  static const predred::Parser p{mini_grammar()};
  return p;
}

inline const predred::SignatureModel& bundled_model() {
  static const predred::SignatureModel m =
      predred::SignatureModel::load_file(data_path("models/minijava.sig"));
  return m;
}

/// Oracle that predicts the same label for every candidate, so every
/// candidate passes. Used to exercise pure size minimization.
class ConstOracle final : public predred::Oracle {
 public:
  const std::string& model_id() const override { return id_; }
  predred::Prediction predict_label(const std::string&) override {
    return {label_, false, false};
  }
  const std::string& label() const { return label_; }

 private:
  std::string id_{"const"};
  std::string label_{"yes"};
};

inline predred::SignatureOracle make_sig_oracle(const std::string& table) {
  return predred::SignatureOracle(
      predred::SignatureModel::parse(table, "test"));
}

inline predred::ReductionProblem make_problem(std::string program,
                                              predred::Oracle& oracle) {
  predred::ReductionProblem p;
  p.program = std::move(program);
  p.oracle = &oracle;
  p.baseline = oracle.predict_label(p.program).label;
  return p;
}

inline std::vector<std::string> token_texts(const std::string& text) {
  std::vector<std::string> out;
  for (const predred::Token& t : predred::tokenize(text).tokens)
    out.push_back(t.text);
  return out;
}

inline std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

/// Scratch directory under the system temp root, wiped on construction.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& name) {
    path = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  std::string str() const { return path.string(); }
  std::string sub(const std::string& rel) const {
    return (path / rel).string();
  }
};

}  // namespace testsupport
