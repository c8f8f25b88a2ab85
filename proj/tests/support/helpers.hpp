#pragma once

#include "otde/error.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace testing {

/// Kind of the otde::Error thrown by f, or nullopt when f returns normally.
template <typename F>
std::optional<otde::ErrorKind> error_kind(F &&f) {
    try {
        f();
    } catch (const otde::Error &e) {
        return e.kind();
    }
    return std::nullopt;
}

inline std::filesystem::path fixture(const std::string &name) { return std::filesystem::path(OTDE_FIXTURE_DIR) / name; }

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string &tag) {
    auto dir = std::filesystem::temp_directory_path() / ("otde_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace testing
