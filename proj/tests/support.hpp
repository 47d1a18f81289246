#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "itemsum/document.hpp"

namespace testing {

inline std::filesystem::path data_path(const std::string& rel) {
    return std::filesystem::path(ITEMSUM_TEST_DATA) / rel;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("itemsum_" + tag + "_" + std::to_string(rd()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& content) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    f << content;
}

/// Pre-segmented document, one sentence per entry.
inline itemsum::Document lines_document(const std::vector<std::string>& sentences, std::string id = "doc") {
    std::string raw;
    for (const auto& s : sentences) raw += s + "\n";
    return itemsum::parse_document(raw, itemsum::SourceFormat::pre_segmented, std::move(id));
}

}  // namespace testing
