#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "alder/counting.hpp"

namespace alder {

/// A request for one count table: its key, horizon and a builder.
struct TableRequest {
    std::string key;
    std::int64_t horizon;
    std::function<CountTable(std::int64_t)> build;
};

TableRequest rho_request(const ResidueClassSet& set, std::int64_t horizon);
TableRequest q_request(std::int64_t a, std::int64_t d, std::int64_t horizon);
TableRequest g_request(std::int64_t d, std::int64_t horizon);

/// Memo of CountTables keyed by description, optionally backed by a cache
/// directory. Tables are immutable once published. A stored table serves any
/// request with a horizon no larger than its own.
///
/// Disk format (text, one file per key):
///   alder-count-table 1
///   key <key>
///   horizon <h>
///   <h+1 decimal values, one per line>
///   checksum <fnv1a-64 hex of all preceding bytes>
/// Files that fail to parse or verify are deleted and rebuilt.
class TableStore {
public:
    struct Stats {
        std::uint64_t memory_hits = 0;
        std::uint64_t disk_hits = 0;
        std::uint64_t builds = 0;
        std::uint64_t disk_rejects = 0;
    };

    explicit TableStore(std::optional<std::filesystem::path> cache_dir = std::nullopt);

    std::shared_ptr<const CountTable> get(const TableRequest& request);

    /// Builds every distinct request up front, `jobs` at a time.
    void warm(const std::vector<TableRequest>& requests, int jobs);

    Stats stats() const;
    const std::optional<std::filesystem::path>& cache_dir() const noexcept { return cache_dir_; }

    static std::string serialize(const CountTable& table);
    /// nullopt on any structural or checksum error.
    static std::optional<CountTable> deserialize(const std::string& text);
    std::filesystem::path path_for(const std::string& key) const;

private:
    std::shared_ptr<const CountTable> lookup(const std::string& key, std::int64_t horizon);
    std::shared_ptr<const CountTable> load_from_disk(const TableRequest& request);
    void store_to_disk(const CountTable& table);

    std::optional<std::filesystem::path> cache_dir_;
    mutable std::mutex mutex_;
    std::mutex disk_mutex_;
    std::map<std::string, std::shared_ptr<const CountTable>> tables_;
    Stats stats_;
};

}  // namespace alder
