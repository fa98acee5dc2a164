#pragma once

#include <filesystem>
#include <random>
#include <string>

namespace testsupport {

/// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path();
        std::random_device rd;
        path_ = base / (tag + "-" + std::to_string(rd()) + "-" + std::to_string(rd() % 9973));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline std::string random_word(std::mt19937& rng, std::size_t min_len = 1,
                               std::size_t max_len = 10) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> ch('a', 'z');
    std::string word;
    std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) word += static_cast<char>(ch(rng));
    return word;
}

inline std::string random_text(std::mt19937& rng, std::size_t max_words = 12) {
    std::uniform_int_distribution<std::size_t> n_dist(0, max_words);
    std::string text;
    std::size_t n = n_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
        if (!text.empty()) text += ' ';
        text += random_word(rng);
    }
    return text;
}

}  // namespace testsupport
