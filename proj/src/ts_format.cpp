#include "otde/ts_format.hpp"

#include "otde/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace otde {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return value;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool parse_bool(const std::string &token, std::size_t line_no) {
    const auto t = lower(token);
    if (t == "true") {
        return true;
    }
    if (t == "false") {
        return false;
    }
    throw Error(ErrorKind::MalformedDataset, "line " + std::to_string(line_no) + ": expected true/false");
}

[[noreturn]] void malformed(std::size_t line_no, const std::string &what) {
    throw Error(ErrorKind::MalformedDataset, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<double> parse_values(std::string_view field, std::size_t line_no) {
    std::vector<double> values;
    for (auto tok : split(field, ',')) {
        tok = trim(tok);
        if (tok == "?" || tok == "NaN" || tok == "nan") {
            malformed(line_no, "missing values are not supported");
        }
        const auto v = parse_number(tok);
        if (!v) {
            malformed(line_no, "cannot parse value '" + std::string(tok) + "'");
        }
        values.push_back(*v);
    }
    return values;
}

/// Maps record label tokens onto canonical class indices.
std::vector<int> encode_labels(const std::vector<std::string> &record_labels,
                               const std::vector<std::string> &classes) {
    std::map<std::string, int> exact;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        exact.emplace(classes[k], static_cast<int>(k));
    }
    std::vector<std::optional<double>> numeric;
    for (const auto &c : classes) {
        numeric.push_back(parse_number(c));
    }
    std::vector<int> labels;
    labels.reserve(record_labels.size());
    for (const auto &tok : record_labels) {
        if (auto it = exact.find(tok); it != exact.end()) {
            labels.push_back(it->second);
            continue;
        }
        // "1.0" matches a header token "1"
        const auto v = parse_number(tok);
        int found = -1;
        for (std::size_t k = 0; v && k < classes.size(); ++k) {
            if (numeric[k] && *numeric[k] == *v) {
                found = static_cast<int>(k);
                break;
            }
        }
        if (found < 0) {
            throw Error(ErrorKind::UnknownLabel, "label '" + tok + "' not declared in the header");
        }
        labels.push_back(found);
    }
    return labels;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return {buf, ptr};
}

std::vector<std::string> canonical_class_order(std::vector<std::string> tokens) {
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    const bool all_numeric =
        std::all_of(tokens.begin(), tokens.end(), [](const std::string &t) { return parse_number(t).has_value(); });
    if (all_numeric) {
        std::stable_sort(tokens.begin(), tokens.end(), [](const std::string &a, const std::string &b) {
            return *parse_number(a) < *parse_number(b);
        });
    }
    return tokens;
}

TsContents parse_ts_contents(std::istream &in) {
    TsContents out;
    std::optional<std::size_t> declared_dims, declared_length;
    bool has_targets = false;
    bool in_data = false;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        if (!in_data) {
            if (body.front() != '@') {
                malformed(line_no, "expected a header line before @data");
            }
            auto words = split_whitespace(body);
            const auto key = lower(words.front());
            if (key == "@data") {
                in_data = true;
            } else if (key == "@problemname") {
                out.name = words.size() > 1 ? words[1] : "";
            } else if (key == "@dimensions" || key == "@serieslength") {
                if (words.size() != 2) {
                    malformed(line_no, key + " takes one value");
                }
                const auto v = parse_number(words[1]);
                if (!v || *v < 1 || *v != static_cast<double>(static_cast<std::size_t>(*v))) {
                    malformed(line_no, key + " must be a positive integer");
                }
                (key == "@dimensions" ? declared_dims : declared_length) = static_cast<std::size_t>(*v);
            } else if (key == "@classlabel") {
                if (words.size() < 2) {
                    malformed(line_no, "@classLabel needs true/false");
                }
                if (parse_bool(words[1], line_no)) {
                    std::vector<std::string> tokens(words.begin() + 2, words.end());
                    if (tokens.empty()) {
                        malformed(line_no, "@classLabel true declares no labels");
                    }
                    out.class_tokens = std::move(tokens);
                }
            } else if (key == "@targetlabel") {
                if (words.size() < 2) {
                    malformed(line_no, "@targetLabel needs true/false");
                }
                has_targets = parse_bool(words[1], line_no);
            } else if (key == "@missing") {
                if (words.size() > 1 && parse_bool(words[1], line_no)) {
                    malformed(line_no, "missing values are not supported");
                }
            } else if (key == "@equallength") {
                if (words.size() > 1 && !parse_bool(words[1], line_no)) {
                    malformed(line_no, "unequal-length series are not supported");
                }
            }
            // other header keys (@timeStamps, @univariate, ...) carry nothing we need
            continue;
        }

        if (body.front() == '@') {
            malformed(line_no, "header line after @data");
        }
        auto fields = split(body, ':');
        const bool labeled = out.class_tokens.has_value() || has_targets;
        std::string label;
        if (labeled) {
            if (fields.size() < 2) {
                malformed(line_no, "record has no label field");
            }
            label = std::string(trim(fields.back()));
            fields.pop_back();
        }
        const std::size_t dims = fields.size();
        std::vector<double> values;
        std::size_t length = 0;
        for (std::size_t d = 0; d < dims; ++d) {
            auto channel = parse_values(fields[d], line_no);
            if (d == 0) {
                length = channel.size();
            } else if (channel.size() != length) {
                malformed(line_no, "dimensions of one record have different lengths");
            }
            values.insert(values.end(), channel.begin(), channel.end());
        }
        if (out.series.empty()) {
            out.dims = declared_dims.value_or(dims);
            out.length = declared_length.value_or(length);
        }
        if (dims != out.dims) {
            malformed(line_no, "record has " + std::to_string(dims) + " dimensions, expected " +
                                   std::to_string(out.dims));
        }
        if (length != out.length) {
            malformed(line_no, "record has length " + std::to_string(length) + ", expected " +
                                   std::to_string(out.length));
        }
        out.series.emplace_back(dims, length, std::move(values));
        if (has_targets) {
            const auto v = parse_number(label);
            if (!v) {
                malformed(line_no, "target '" + label + "' is not numeric");
            }
            out.targets.push_back(*v);
        } else if (labeled) {
            out.record_labels.push_back(std::move(label));
        }
    }

    if (!in_data) {
        throw Error(ErrorKind::MalformedDataset, "no @data section");
    }
    return out;
}

TimeSeriesDataset parse_ts_text(std::istream &in) {
    auto contents = parse_ts_contents(in);
    if (!contents.class_tokens) {
        throw Error(ErrorKind::MalformedDataset, "file declares no class labels");
    }
    auto classes = canonical_class_order(*contents.class_tokens);
    auto labels = encode_labels(contents.record_labels, classes);
    return {contents.name, std::move(contents.series), std::move(labels), std::move(classes)};
}

TimeSeriesDataset parse_ts_text(const std::string &text) {
    std::istringstream in(text);
    return parse_ts_text(in);
}

RegressionDataset parse_ts_regression(std::istream &in) {
    auto contents = parse_ts_contents(in);
    if (contents.targets.size() != contents.series.size() || contents.series.empty()) {
        throw Error(ErrorKind::MalformedDataset, "file declares no regression targets");
    }
    return {contents.name, std::move(contents.series), std::move(contents.targets)};
}

void write_ts_text(std::ostream &out, const TimeSeriesDataset &dataset) {
    out << "@problemName " << (dataset.name().empty() ? "unnamed" : dataset.name()) << '\n';
    out << "@timeStamps false\n@missing false\n";
    out << "@univariate " << (dataset.dims() == 1 ? "true" : "false") << '\n';
    out << "@dimensions " << dataset.dims() << '\n';
    out << "@equalLength true\n";
    out << "@seriesLength " << dataset.length() << '\n';
    out << "@classLabel true";
    for (const auto &c : dataset.class_names()) {
        out << ' ' << c;
    }
    out << "\n@data\n";
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto &s = dataset.series()[i];
        for (std::size_t d = 0; d < s.dims(); ++d) {
            const auto channel = s.channel(d);
            for (std::size_t t = 0; t < channel.size(); ++t) {
                if (t > 0) {
                    out << ',';
                }
                out << format_double(channel[t]);
            }
            out << ':';
        }
        out << dataset.class_names()[static_cast<std::size_t>(dataset.labels()[i])] << '\n';
    }
}

std::string to_ts_text(const TimeSeriesDataset &dataset) {
    std::ostringstream out;
    write_ts_text(out, dataset);
    return out.str();
}

TimeSeriesDataset parse_csv_text(std::istream &in, const std::string &name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorKind::MalformedDataset, "empty CSV");
    }
    const auto header = split(trim(line), ',');
    if (header.size() < 2) {
        throw Error(ErrorKind::MalformedDataset, "CSV needs value columns and a label column");
    }
    const std::size_t n_values = header.size() - 1;
    std::size_t dims = 1;
    {
        std::size_t max_dim = 0;
        bool patterned = true;
        for (std::size_t j = 0; j < n_values && patterned; ++j) {
            const auto col = trim(header[j]);
            const auto us = col.find('_');
            if (col.size() < 4 || col.front() != 'c' || us == std::string_view::npos) {
                patterned = false;
                break;
            }
            const auto d = parse_number(col.substr(1, us - 1));
            if (!d) {
                patterned = false;
                break;
            }
            max_dim = std::max(max_dim, static_cast<std::size_t>(*d));
        }
        if (patterned) {
            dims = max_dim + 1;
        }
    }
    if (n_values % dims != 0) {
        throw Error(ErrorKind::MalformedDataset, "CSV value columns do not split evenly over dimensions");
    }
    const std::size_t length = n_values / dims;

    std::vector<Series> series;
    std::vector<std::string> tokens;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        auto cells = split(body, ',');
        if (cells.size() != header.size()) {
            malformed(line_no, "row has " + std::to_string(cells.size()) + " columns, expected " +
                                   std::to_string(header.size()));
        }
        std::vector<double> values;
        values.reserve(n_values);
        for (std::size_t j = 0; j < n_values; ++j) {
            const auto v = parse_number(cells[j]);
            if (!v) {
                malformed(line_no, "cannot parse value '" + std::string(cells[j]) + "'");
            }
            values.push_back(*v);
        }
        series.emplace_back(dims, length, std::move(values));
        tokens.emplace_back(trim(cells.back()));
    }
    auto classes = canonical_class_order(tokens);
    auto labels = encode_labels(tokens, classes);
    return {name, std::move(series), std::move(labels), std::move(classes)};
}

void write_csv_text(std::ostream &out, const TimeSeriesDataset &dataset) {
    for (std::size_t d = 0; d < dataset.dims(); ++d) {
        for (std::size_t t = 0; t < dataset.length(); ++t) {
            out << 'c' << d << '_' << t << ',';
        }
    }
    out << "label\n";
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        for (double v : dataset.series()[i].values()) {
            out << format_double(v) << ',';
        }
        out << dataset.class_names()[static_cast<std::size_t>(dataset.labels()[i])] << '\n';
    }
}

TimeSeriesDataset read_dataset(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    if (path.extension() == ".csv") {
        return parse_csv_text(in, path.stem().string());
    }
    return parse_ts_text(in);
}

void write_dataset(const std::filesystem::path &path, const TimeSeriesDataset &dataset) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
    if (path.extension() == ".csv") {
        write_csv_text(out, dataset);
    } else {
        write_ts_text(out, dataset);
    }
    if (!out) {
        throw Error(ErrorKind::IoError, "write failed for " + path.string());
    }
}

} // namespace otde
