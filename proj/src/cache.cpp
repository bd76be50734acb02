#include "binomsum/cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace binomsum {

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto parsed = nlohmann::json::parse(buffer.str(), nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    loaded_cleanly_ = false;
    load_warning_ = "cache file " + path_.string() + " is unreadable; recomputing";
    return;
  }
  if (parsed.value("version", std::string()) != kVersion) {
    loaded_cleanly_ = false;
    load_warning_ = "cache file " + path_.string() + " has version '" +
                    parsed.value("version", std::string("?")) + "', expected '" + kVersion +
                    "'; recomputing";
    return;
  }
  for (const auto& [key, value] : parsed.at("entries").items()) {
    if (value.is_string()) entries_[key] = value.get<std::string>();
  }
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const std::string& key, std::string bytes) { entries_[key] = std::move(bytes); }

void ResultCache::save() const {
  nlohmann::json doc = {{"version", kVersion}, {"entries", entries_}};
  if (path_.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
  std::ofstream out(path_, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file " + path_.string());
  out << doc.dump(1) << '\n';
  if (!out) throw std::runtime_error("cannot write cache file " + path_.string());
}

}  // namespace binomsum
