#include "fogllm/local/catalog.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

namespace fogllm::local {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct ParsedUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;
};

ParsedUrl split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw NetworkError("unsupported url: " + url);
    }
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        return {url, "/"};
    }
    return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

ModelCatalog::ModelCatalog(fs::path root) : root_(std::move(root)) {
    fs::create_directories(root_ / "models");
    fs::create_directories(root_ / "tmp");
    startup_quarantined_ = revalidate();
}

fs::path ModelCatalog::model_dir(const std::string& model_id) const {
    return root_ / "models" / model_id;
}

fs::path ModelCatalog::partial_path(const std::string& model_id) const {
    return root_ / "tmp" / (model_id + ".part");
}

std::optional<ModelFile> ModelCatalog::find(const std::string& model_id) const {
    fs::path manifest_path = model_dir(model_id) / "manifest.json";
    fs::path model_path = model_dir(model_id) / "model.gguf";
    if (!fs::exists(manifest_path) || !fs::exists(model_path)) {
        return std::nullopt;
    }
    std::ifstream in(manifest_path);
    json manifest;
    try {
        in >> manifest;
    } catch (const json::parse_error&) {
        return std::nullopt;
    }
    ModelFile file;
    file.model_id = manifest.value("model_id", model_id);
    file.path = model_path;
    file.size_bytes = manifest.value("size_bytes", std::uint64_t{0});
    file.format_version = manifest.value("format_version", 0u);
    file.checksum = manifest.value("checksum", "");
    return file;
}

std::vector<ModelFile> ModelCatalog::list() const {
    std::vector<ModelFile> files;
    fs::path models = root_ / "models";
    if (!fs::exists(models)) return files;
    for (const auto& entry : fs::directory_iterator(models)) {
        if (!entry.is_directory()) continue;
        if (auto file = find(entry.path().filename().string())) {
            files.push_back(std::move(*file));
        }
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.model_id < b.model_id; });
    return files;
}

void ModelCatalog::write_manifest(const ModelFile& file) const {
    json manifest;
    manifest["model_id"] = file.model_id;
    manifest["checksum"] = file.checksum;
    manifest["size_bytes"] = file.size_bytes;
    manifest["format_version"] = file.format_version;
    std::ofstream out(model_dir(file.model_id) / "manifest.json");
    out << manifest.dump(2) << "\n";
}

ModelFile ModelCatalog::finalize(const std::string& model_id, const fs::path& staged,
                                 const std::string& expected_sha256) {
    std::string checksum = sha256_file_hex(staged);
    if (!expected_sha256.empty() && checksum != expected_sha256) {
        fs::remove(staged);
        throw ChecksumMismatch("downloaded file checksum " + checksum + " != expected " +
                               expected_sha256);
    }

    ModelFile file = validate_model_file(staged, model_id);

    fs::create_directories(model_dir(model_id));
    fs::path final_path = model_dir(model_id) / "model.gguf";
    fs::rename(staged, final_path);
    file.path = final_path;
    write_manifest(file);
    return file;
}

ModelFile ModelCatalog::download(const std::string& model_id, const std::string& url,
                                 const std::string& expected_sha256) {
    std::lock_guard lock(mutex_);

    if (auto cached = find(model_id)) {
        return *cached;
    }

    ParsedUrl parsed = split_url(url);
    fs::path partial = partial_path(model_id);

    std::uint64_t offset = 0;
    if (fs::exists(partial)) {
        offset = fs::file_size(partial);
    }

    httplib::Client client(parsed.origin);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);

    httplib::Headers headers;
    if (offset > 0) {
        headers.emplace("Range", "bytes=" + std::to_string(offset) + "-");
    }

    std::ofstream out(partial, std::ios::binary | std::ios::app);
    if (!out) {
        throw IoError("cannot open partial file: " + partial.string());
    }

    int observed_status = 0;
    auto res = client.Get(
        parsed.path, headers,
        [&](const httplib::Response& response) {
            observed_status = response.status;
            if (offset > 0 && response.status == 200) {
                // Server ignored the range; start over.
                out.close();
                out.open(partial, std::ios::binary | std::ios::trunc);
            }
            return response.status == 200 || response.status == 206;
        },
        [&](const char* data, std::size_t len) {
            out.write(data, static_cast<std::streamsize>(len));
            return out.good();
        });
    out.close();

    // 416 with a staged partial means there is nothing left to fetch; the
    // checksum decides whether the staged bytes are the whole file.
    if (!(observed_status == 416 && offset > 0)) {
        if (observed_status != 0 && observed_status != 200 && observed_status != 206) {
            throw NetworkError("download failed with status " + std::to_string(observed_status));
        }
        if (!res) {
            // Partial stays on disk so a later call can resume.
            throw NetworkError("download interrupted: " + httplib::to_string(res.error()));
        }
    }

    return finalize(model_id, partial, expected_sha256);
}

ModelFile ModelCatalog::import_file(const std::string& model_id, const fs::path& source) {
    std::lock_guard lock(mutex_);
    if (auto cached = find(model_id)) {
        return *cached;
    }
    validate_model_file(source, model_id);
    fs::path staged = partial_path(model_id);
    fs::copy_file(source, staged, fs::copy_options::overwrite_existing);
    return finalize(model_id, staged, "");
}

std::vector<std::string> ModelCatalog::revalidate() {
    std::lock_guard lock(mutex_);
    std::vector<std::string> quarantined;
    fs::path models = root_ / "models";
    if (!fs::exists(models)) return quarantined;

    for (const auto& entry : fs::directory_iterator(models)) {
        if (!entry.is_directory()) continue;
        const std::string model_id = entry.path().filename().string();
        bool ok = false;
        auto manifest = find(model_id);
        if (manifest) {
            try {
                ModelFile fresh = validate_model_file(entry.path() / "model.gguf", model_id);
                ok = fresh.checksum == manifest->checksum;
            } catch (const Error&) {
                ok = false;
            }
        }
        if (!ok) {
            fs::path quarantine = root_ / "quarantine";
            fs::create_directories(quarantine);
            fs::path target = quarantine / model_id;
            for (int n = 2; fs::exists(target); ++n) {
                target = quarantine / (model_id + "." + std::to_string(n));
            }
            fs::rename(entry.path(), target);
            quarantined.push_back(model_id);
        }
    }
    return quarantined;
}

}  // namespace fogllm::local
