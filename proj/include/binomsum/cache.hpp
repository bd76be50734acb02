#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace binomsum {

/// Serialized results keyed by (kind, parameters), persisted as one JSON file.
/// A file written by a different format version is discarded on load.
class ResultCache {
 public:
  static constexpr const char* kVersion = "binomsum-cache-1";

  explicit ResultCache(std::filesystem::path path);

  /// False when the file existed but was unreadable or had another version.
  bool loaded_cleanly() const { return loaded_cleanly_; }
  const std::string& load_warning() const { return load_warning_; }

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, std::string bytes);
  /// Writes the whole cache; throws std::runtime_error if the path is unwritable.
  void save() const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::filesystem::path path_;
  std::map<std::string, std::string> entries_;
  bool loaded_cleanly_ = true;
  std::string load_warning_;
};

}  // namespace binomsum
