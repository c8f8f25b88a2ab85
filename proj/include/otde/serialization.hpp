#pragma once

#include "otde/ensemble.hpp"
#include "otde/individual.hpp"
#include "otde/sfa.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

// JSON layouts use the field names of the corresponding types.
//
//   TransformParams  {"window_length", "coefficient_count", "alphabet_size", "normalize", "numerosity_reduction"}
//   BinningModel     {"alphabet_size", "thresholds": [[beta_1, ...], ...]}
//   IndividualOTDE   {"params", "binning", "train_labels", "num_classes", "dims", "length", "distance",
//                     "train_histograms": [[[word, count], ...], ...]}
//   ensemble manifest {"format": "otde-ensemble", "version", "num_classes", "mode", "class_names",
//                      "members": [{"file", "train_mae", "weight"}], "history": [...]}

namespace otde {

void to_json(nlohmann::json &j, const TransformParams &p);
void from_json(const nlohmann::json &j, TransformParams &p);
void to_json(nlohmann::json &j, const BinningModel &b);
void from_json(const nlohmann::json &j, BinningModel &b);

[[nodiscard]] nlohmann::json model_to_json(const IndividualOTDE &model);
[[nodiscard]] IndividualOTDE model_from_json(const nlohmann::json &j);

[[nodiscard]] std::string to_string(VoteMode mode);
[[nodiscard]] VoteMode parse_vote_mode(const std::string &text);
[[nodiscard]] std::string to_string(HistogramDistance distance);
[[nodiscard]] HistogramDistance parse_distance(const std::string &text);

/// Writes the manifest plus one `<stem>.memberNNN.json` file per member beside it.
void save_ensemble(const OTDEnsemble &ensemble, const std::filesystem::path &manifest);
[[nodiscard]] OTDEnsemble load_ensemble(const std::filesystem::path &manifest);

} // namespace otde
