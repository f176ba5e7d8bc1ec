#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

namespace optb {

// Line-delimited scan results on disk: a versioned JSON header line, then
// one JSON record per manifold, keyed by m. Re-running a scan against the
// same file recomputes nothing that is already present and appends the
// rest, so extending m_max is incremental.
class ScanStore {
  public:
    static constexpr int kFormatVersion = 1;

    // Loads an existing store (validating format, version and beta) or
    // creates a fresh one with just the header.
    static ScanStore open(const std::filesystem::path& path, std::int64_t beta);

    std::int64_t beta() const noexcept { return beta_; }
    bool has(std::int64_t m) const { return records_.count(m) != 0; }
    const nlohmann::json& get(std::int64_t m) const { return records_.at(m); }
    std::size_t size() const noexcept { return records_.size(); }

    // Persists one record (must carry an "m" key) and indexes it.
    void append(const nlohmann::json& record);

  private:
    ScanStore(std::filesystem::path path, std::int64_t beta)
        : path_(std::move(path)), beta_(beta) {}

    std::filesystem::path path_;
    std::int64_t beta_;
    std::map<std::int64_t, nlohmann::json> records_;
};

} // namespace optb
