#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fogllm/local/gguf.hpp"

namespace fogllm::local {

/// Model store rooted at <root>/models/<model_id>/model.gguf with a
/// manifest.json per entry ({model_id, checksum, size_bytes,
/// format_version}). Entries become visible only after passing format
/// validation; corrupted files are quarantined on startup revalidation, never
/// served. Mutations are serialized; reads are safe concurrently.
class ModelCatalog {
public:
    /// Opens (creating directories as needed) and revalidates every entry;
    /// anything corrupted is quarantined immediately and reported via
    /// startup_quarantined().
    explicit ModelCatalog(std::filesystem::path root);

    std::optional<ModelFile> find(const std::string& model_id) const;
    std::vector<ModelFile> list() const;
    bool contains(const std::string& model_id) const { return find(model_id).has_value(); }

    /// Fetches url to a temp path (resuming any partial from an earlier
    /// attempt with a ranged request), verifies the SHA-256, then atomically
    /// renames into the catalog. Re-invoking with an already-cataloged id is
    /// a no-op returning the cached entry without network traffic.
    ///
    /// Throws ChecksumMismatch (temp file deleted), NetworkError (partial
    /// kept for resume), BadMagic/UnsupportedVersion for non-GGUF payloads.
    ModelFile download(const std::string& model_id, const std::string& url,
                       const std::string& expected_sha256);

    /// Registers an existing local GGUF file by copying it into the catalog.
    ModelFile import_file(const std::string& model_id, const std::filesystem::path& source);

    /// Re-validates every entry; corrupted entries move to <root>/quarantine
    /// and are reported back.
    std::vector<std::string> revalidate();

    const std::vector<std::string>& startup_quarantined() const { return startup_quarantined_; }

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path model_dir(const std::string& model_id) const;
    std::filesystem::path partial_path(const std::string& model_id) const;

private:
    ModelFile finalize(const std::string& model_id, const std::filesystem::path& staged,
                       const std::string& expected_sha256);
    void write_manifest(const ModelFile& file) const;

    std::filesystem::path root_;
    mutable std::mutex mutex_;
    std::vector<std::string> startup_quarantined_;
};

}  // namespace fogllm::local
