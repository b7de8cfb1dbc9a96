#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace tricm::cli {

using Json = nlohmann::ordered_json;

/// On-disk store of finished result fragments. Entries are keyed by the
/// SHA-256 of their key material and carry the tool version; an entry written
/// by another version, or whose key material differs, is a miss.
class Cache {
public:
    Cache() = default;
    explicit Cache(std::filesystem::path dir);

    bool enabled() const noexcept { return !dir_.empty(); }
    std::optional<Json> load(const std::string& key_material) const;
    /// Write-temp-then-rename; failures to write are ignored (the cache is
    /// advisory).
    void store(const std::string& key_material, const Json& value) const;

    std::filesystem::path entry_path(const std::string& key_material) const;

private:
    std::filesystem::path dir_;
};

std::string sha256_hex(const std::string& data);
std::string tool_version();

}  // namespace tricm::cli
