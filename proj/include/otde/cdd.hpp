#pragma once

#include "otde/stats.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace otde {

/** Machine-readable content of a critical-difference diagram. */
struct CddData {
    std::vector<std::string> methods;
    std::vector<double> average_ranks;
    std::vector<std::vector<std::string>> cliques; ///< method names, rank order

    friend bool operator==(const CddData &, const CddData &) = default;
};

[[nodiscard]] CddData make_cdd_data(const RankTable &table, const std::vector<std::vector<std::size_t>> &cliques);

/**
 * Fixed layout: a rank axis from 1 to M with integer ticks, each method
 * joined to its average rank by an elbow line (better half labelled on the
 * left, worse half on the right) and one horizontal bar per clique of two or
 * more methods under the axis.
 */
[[nodiscard]] std::string render_cdd_svg(const CddData &data, const std::string &title);

/// Rows `rank<TAB>method<TAB>average_rank` and `clique<TAB>index<TAB>m1,m2,...`.
[[nodiscard]] std::string cdd_tsv(const CddData &data);
[[nodiscard]] CddData parse_cdd_tsv(const std::string &text);

/// Writes `<path>` (SVG) and `<path>` with extension `.tsv`. Throws IoError when unwritable.
void emit_cdd(const RankTable &table, const std::vector<std::vector<std::size_t>> &cliques,
              const std::filesystem::path &path, const std::string &title = "");

} // namespace otde
