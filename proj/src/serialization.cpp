#include "otde/serialization.hpp"

#include "otde/error.hpp"

#include <cstdio>
#include <fstream>

namespace otde {

using nlohmann::json;

void to_json(json &j, const TransformParams &p) {
    j = json{{"window_length", p.window_length},
             {"coefficient_count", p.coefficient_count},
             {"alphabet_size", p.alphabet_size},
             {"normalize", p.normalize},
             {"numerosity_reduction", p.numerosity_reduction}};
}

void from_json(const json &j, TransformParams &p) {
    j.at("window_length").get_to(p.window_length);
    j.at("coefficient_count").get_to(p.coefficient_count);
    j.at("alphabet_size").get_to(p.alphabet_size);
    j.at("normalize").get_to(p.normalize);
    j.at("numerosity_reduction").get_to(p.numerosity_reduction);
}

void to_json(json &j, const BinningModel &b) {
    j = json{{"alphabet_size", b.alphabet_size}, {"thresholds", b.thresholds}};
}

void from_json(const json &j, BinningModel &b) {
    j.at("alphabet_size").get_to(b.alphabet_size);
    j.at("thresholds").get_to(b.thresholds);
}

std::string to_string(VoteMode mode) { return mode == VoteMode::Ordinal ? "ordinal" : "nominal"; }

VoteMode parse_vote_mode(const std::string &text) {
    if (text == "ordinal") {
        return VoteMode::Ordinal;
    }
    if (text == "nominal") {
        return VoteMode::Nominal;
    }
    throw Error(ErrorKind::InvalidArgument, "mode must be 'ordinal' or 'nominal', got '" + text + "'");
}

std::string to_string(HistogramDistance distance) {
    return distance == HistogramDistance::Intersection ? "intersection" : "squared_difference";
}

HistogramDistance parse_distance(const std::string &text) {
    if (text == "intersection") {
        return HistogramDistance::Intersection;
    }
    if (text == "squared_difference") {
        return HistogramDistance::SquaredDifference;
    }
    throw Error(ErrorKind::InvalidArgument, "distance must be 'intersection' or 'squared_difference'");
}

json model_to_json(const IndividualOTDE &model) {
    json histograms = json::array();
    for (const auto &h : model.train_histograms()) {
        json entries = json::array();
        for (const auto &[word, count] : h.entries()) {
            entries.push_back(json::array({word, count}));
        }
        histograms.push_back(std::move(entries));
    }
    return json{{"params", model.params()},
                {"binning", model.binning()},
                {"train_labels", model.train_labels()},
                {"num_classes", model.num_classes()},
                {"dims", model.dims()},
                {"length", model.length()},
                {"distance", to_string(model.distance())},
                {"train_histograms", std::move(histograms)}};
}

IndividualOTDE model_from_json(const json &j) {
    std::vector<WordHistogram> histograms;
    for (const auto &entries : j.at("train_histograms")) {
        std::vector<WordHistogram::Entry> parsed;
        for (const auto &e : entries) {
            parsed.emplace_back(e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint32_t>());
        }
        histograms.push_back(WordHistogram::from_entries(std::move(parsed)));
    }
    return {j.at("params").get<TransformParams>(),
            j.at("binning").get<BinningModel>(),
            std::move(histograms),
            j.at("train_labels").get<std::vector<int>>(),
            j.at("num_classes").get<int>(),
            j.at("dims").get<std::size_t>(),
            j.at("length").get<std::size_t>(),
            parse_distance(j.value("distance", std::string("intersection")))};
}

namespace {

void write_json(const std::filesystem::path &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
    out << j.dump(1) << '\n';
    if (!out) {
        throw Error(ErrorKind::IoError, "write failed for " + path.string());
    }
}

json read_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidArgument, path.string() + ": " + e.what());
    }
}

std::string member_file_name(const std::filesystem::path &manifest, std::size_t index) {
    char suffix[32];
    std::snprintf(suffix, sizeof(suffix), ".member%03zu.json", index);
    return manifest.stem().string() + suffix;
}

} // namespace

void save_ensemble(const OTDEnsemble &ensemble, const std::filesystem::path &manifest) {
    json members = json::array();
    for (std::size_t i = 0; i < ensemble.members().size(); ++i) {
        const auto &m = ensemble.members()[i];
        const auto file = member_file_name(manifest, i);
        write_json(manifest.parent_path() / file, model_to_json(m.model));
        members.push_back(json{{"file", file}, {"train_mae", m.train_mae}, {"weight", m.weight}});
    }
    json history = json::array();
    for (const auto &step : ensemble.history()) {
        history.push_back(json{{"params", step.params},
                               {"loo_mae", step.loo_mae},
                               {"guided", step.guided},
                               {"predicted_mae", step.predicted_mae}});
    }
    write_json(manifest, json{{"format", "otde-ensemble"},
                              {"version", 1},
                              {"num_classes", ensemble.num_classes()},
                              {"mode", to_string(ensemble.mode())},
                              {"class_names", ensemble.class_names()},
                              {"members", std::move(members)},
                              {"history", std::move(history)}});
}

OTDEnsemble load_ensemble(const std::filesystem::path &manifest) {
    const json j = read_json(manifest);
    try {
        if (j.value("format", std::string()) != "otde-ensemble") {
            throw Error(ErrorKind::InvalidArgument, manifest.string() + " is not an ensemble manifest");
        }
        std::vector<EnsembleMember> members;
        for (const auto &m : j.at("members")) {
            const auto path = manifest.parent_path() / m.at("file").get<std::string>();
            members.push_back({model_from_json(read_json(path)), m.at("train_mae").get<double>(),
                               m.at("weight").get<double>()});
        }
        std::vector<SearchStep> history;
        for (const auto &s : j.value("history", json::array())) {
            history.push_back({s.at("params").get<TransformParams>(), s.at("loo_mae").get<double>(),
                               s.at("guided").get<bool>(), s.at("predicted_mae").get<double>()});
        }
        return {std::move(members), j.at("num_classes").get<int>(), parse_vote_mode(j.at("mode").get<std::string>()),
                j.at("class_names").get<std::vector<std::string>>(), std::move(history)};
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidArgument, manifest.string() + ": " + e.what());
    }
}

} // namespace otde
