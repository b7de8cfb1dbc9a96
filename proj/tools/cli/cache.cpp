#include "cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace tricm::cli {

std::string tool_version() { return TRICM_VERSION; }

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path Cache::entry_path(const std::string& key_material) const {
    return dir_ / (sha256_hex(key_material) + ".json");
}

std::optional<Json> Cache::load(const std::string& key_material) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(entry_path(key_material));
    if (!in) return std::nullopt;
    try {
        const Json entry = Json::parse(in);
        if (entry.at("version") != tool_version() || entry.at("key") != key_material) return std::nullopt;
        return entry.at("value");
    } catch (const Json::exception&) {
        return std::nullopt;
    }
}

void Cache::store(const std::string& key_material, const Json& value) const {
    if (!enabled()) return;
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto target = entry_path(key_material);
    auto temp = target;
    temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(temp);
        if (!out) return;
        Json entry;
        entry["version"] = tool_version();
        entry["key"] = key_material;
        entry["value"] = value;
        out << entry.dump() << '\n';
        if (!out) {
            std::filesystem::remove(temp, ec);
            return;
        }
    }
    std::filesystem::rename(temp, target, ec);
    if (ec) std::filesystem::remove(temp, ec);
}

}  // namespace tricm::cli
