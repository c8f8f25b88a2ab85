#include "otde/cdd.hpp"

#include "otde/error.hpp"
#include "otde/ts_format.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace otde {

CddData make_cdd_data(const RankTable &table, const std::vector<std::vector<std::size_t>> &cliques) {
    CddData data;
    for (std::size_t m : table.order()) {
        data.methods.push_back(table.methods[m]);
        data.average_ranks.push_back(table.average_ranks[m]);
    }
    for (const auto &c : cliques) {
        std::vector<std::string> names;
        for (std::size_t m : c) {
            names.push_back(table.methods.at(m));
        }
        data.cliques.push_back(std::move(names));
    }
    return data;
}

namespace {

std::string escape_xml(const std::string &s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string render_cdd_svg(const CddData &data, const std::string &title) {
    const std::size_t m = data.methods.size();
    const double width = 640.0;
    const double left = 160.0;
    const double right = width - 160.0;
    const double axis_y = 60.0;
    const double line_gap = 22.0;
    const double max_rank = std::max<double>(2.0, static_cast<double>(m));
    auto x_of = [&](double rank) { return left + (rank - 1.0) / (max_rank - 1.0) * (right - left); };

    std::size_t bars = 0;
    for (const auto &c : data.cliques) {
        bars += c.size() >= 2;
    }
    const std::size_t left_count = (m + 1) / 2;
    const double labels_top = axis_y + 30.0 + static_cast<double>(bars) * 10.0;
    const double height = labels_top + static_cast<double>(std::max(left_count, m - left_count)) * line_gap + 20.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) {
        svg << "<text x=\"" << fmt(width / 2.0) << "\" y=\"18\" text-anchor=\"middle\">" << escape_xml(title)
            << "</text>\n";
    }
    svg << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(axis_y) << "\" x2=\"" << fmt(right) << "\" y2=\""
        << fmt(axis_y) << "\" stroke=\"black\"/>\n";
    for (int r = 1; r <= static_cast<int>(max_rank); ++r) {
        const double x = x_of(r);
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(axis_y - 6) << "\" x2=\"" << fmt(x) << "\" y2=\""
            << fmt(axis_y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(axis_y - 10) << "\" text-anchor=\"middle\">" << r
            << "</text>\n";
    }

    std::size_t bar = 0;
    for (const auto &c : data.cliques) {
        if (c.size() < 2) {
            continue;
        }
        double lo = max_rank, hi = 1.0;
        for (const auto &name : c) {
            const auto idx = static_cast<std::size_t>(std::find(data.methods.begin(), data.methods.end(), name) -
                                                      data.methods.begin());
            if (idx < m) {
                lo = std::min(lo, data.average_ranks[idx]);
                hi = std::max(hi, data.average_ranks[idx]);
            }
        }
        const double y = axis_y + 14.0 + static_cast<double>(bar++) * 10.0;
        svg << "<line x1=\"" << fmt(x_of(lo) - 3) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x_of(hi) + 3)
            << "\" y2=\"" << fmt(y) << "\" stroke=\"black\" stroke-width=\"4\"/>\n";
    }

    for (std::size_t i = 0; i < m; ++i) {
        const bool on_left = i < left_count;
        const std::size_t row = on_left ? i : m - 1 - i;
        const double y = labels_top + static_cast<double>(row) * line_gap;
        const double x = x_of(data.average_ranks[i]);
        const double end_x = on_left ? left - 10.0 : right + 10.0;
        svg << "<polyline points=\"" << fmt(x) << "," << fmt(axis_y) << " " << fmt(x) << "," << fmt(y) << " "
            << fmt(end_x) << "," << fmt(y) << "\" fill=\"none\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(on_left ? end_x - 4 : end_x + 4) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\""
            << (on_left ? "end" : "start") << "\">" << escape_xml(data.methods[i]) << " (" << fmt(data.average_ranks[i])
            << ")</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string cdd_tsv(const CddData &data) {
    std::ostringstream out;
    for (std::size_t i = 0; i < data.methods.size(); ++i) {
        out << "rank\t" << data.methods[i] << '\t' << format_double(data.average_ranks[i]) << '\n';
    }
    for (std::size_t c = 0; c < data.cliques.size(); ++c) {
        out << "clique\t" << c << '\t';
        for (std::size_t k = 0; k < data.cliques[c].size(); ++k) {
            out << (k ? "," : "") << data.cliques[c][k];
        }
        out << '\n';
    }
    return out.str();
}

CddData parse_cdd_tsv(const std::string &text) {
    CddData data;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cols;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, '\t')) {
            cols.push_back(cell);
        }
        if (cols.size() != 3) {
            throw Error(ErrorKind::MalformedDataset, "CDD TSV rows have three columns");
        }
        if (cols[0] == "rank") {
            double v = 0.0;
            std::from_chars(cols[2].data(), cols[2].data() + cols[2].size(), v);
            data.methods.push_back(cols[1]);
            data.average_ranks.push_back(v);
        } else if (cols[0] == "clique") {
            std::vector<std::string> names;
            std::istringstream members(cols[2]);
            while (std::getline(members, cell, ',')) {
                names.push_back(cell);
            }
            data.cliques.push_back(std::move(names));
        } else {
            throw Error(ErrorKind::MalformedDataset, "unknown CDD TSV row kind '" + cols[0] + "'");
        }
    }
    return data;
}

void emit_cdd(const RankTable &table, const std::vector<std::vector<std::size_t>> &cliques,
              const std::filesystem::path &path, const std::string &title) {
    const auto data = make_cdd_data(table, cliques);
    auto tsv_path = path;
    tsv_path.replace_extension(".tsv");
    for (const auto &[target, body] : {std::pair{path, render_cdd_svg(data, title)}, std::pair{tsv_path, cdd_tsv(data)}}) {
        std::ofstream out(target, std::ios::binary);
        if (!out || !(out << body) || !out.flush()) {
            throw Error(ErrorKind::IoError, "cannot write " + target.string());
        }
    }
}

} // namespace otde
