#include "alder/table_store.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "alder/executor.hpp"

namespace alder {

namespace {

constexpr const char* kMagic = "alder-count-table 1";

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

}  // namespace

TableRequest rho_request(const ResidueClassSet& set, std::int64_t horizon) {
    return {rho_key(set), horizon, [set](std::int64_t h) { return rho_table(set, h); }};
}

TableRequest q_request(std::int64_t a, std::int64_t d, std::int64_t horizon) {
    return {q_key(a, d), horizon, [a, d](std::int64_t h) { return q_table(a, d, h); }};
}

TableRequest g_request(std::int64_t d, std::int64_t horizon) {
    return {g_key(d), horizon, [d](std::int64_t h) { return g_table(d, h); }};
}

TableStore::TableStore(std::optional<std::filesystem::path> cache_dir) : cache_dir_(std::move(cache_dir)) {
    if (cache_dir_) std::filesystem::create_directories(*cache_dir_);
}

std::shared_ptr<const CountTable> TableStore::lookup(const std::string& key, std::int64_t horizon) {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(key);
    if (it != tables_.end() && it->second->horizon >= horizon) {
        ++stats_.memory_hits;
        return it->second;
    }
    return nullptr;
}

std::shared_ptr<const CountTable> TableStore::get(const TableRequest& request) {
    if (auto hit = lookup(request.key, request.horizon)) return hit;

    std::shared_ptr<const CountTable> table = load_from_disk(request);
    if (!table) {
        table = std::make_shared<const CountTable>(request.build(request.horizon));
        {
            std::lock_guard lock(mutex_);
            ++stats_.builds;
        }
        store_to_disk(*table);
    }

    std::lock_guard lock(mutex_);
    auto& slot = tables_[request.key];
    if (!slot || slot->horizon < table->horizon) slot = table;
    return slot;
}

void TableStore::warm(const std::vector<TableRequest>& requests, int jobs) {
    // Collapse duplicates to the largest horizon per key.
    std::map<std::string, const TableRequest*> distinct;
    for (const auto& r : requests) {
        auto& slot = distinct[r.key];
        if (!slot || slot->horizon < r.horizon) slot = &r;
    }
    std::vector<const TableRequest*> todo;
    for (const auto& [key, r] : distinct) todo.push_back(r);
    parallel_map(todo.size(), jobs, [&](std::size_t i) {
        get(*todo[i]);
        return 0;
    });
}

TableStore::Stats TableStore::stats() const {
    std::lock_guard lock(mutex_);
    return stats_;
}

std::string TableStore::serialize(const CountTable& table) {
    std::ostringstream os;
    os << kMagic << '\n' << "key " << table.key << '\n' << "horizon " << table.horizon << '\n';
    for (const auto& v : table.values) os << v << '\n';
    auto body = os.str();
    return body + "checksum " + hex64(fnv1a(body)) + '\n';
}

std::optional<CountTable> TableStore::deserialize(const std::string& text) {
    const auto pos = text.rfind("checksum ");
    if (pos == std::string::npos || (pos > 0 && text[pos - 1] != '\n')) return std::nullopt;
    const auto body = text.substr(0, pos);
    auto tail = text.substr(pos + 9);
    while (!tail.empty() && (tail.back() == '\n' || tail.back() == '\r')) tail.pop_back();
    if (tail != hex64(fnv1a(body))) return std::nullopt;

    std::istringstream in(body);
    std::string line;
    if (!std::getline(in, line) || line != kMagic) return std::nullopt;
    CountTable t;
    if (!std::getline(in, line) || line.rfind("key ", 0) != 0) return std::nullopt;
    t.key = line.substr(4);
    if (!std::getline(in, line) || line.rfind("horizon ", 0) != 0) return std::nullopt;
    try {
        t.horizon = std::stoll(line.substr(8));
    } catch (...) {
        return std::nullopt;
    }
    if (t.horizon < 0) return std::nullopt;
    t.values.reserve(static_cast<std::size_t>(t.horizon) + 1);
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        t.values.emplace_back(line);
    }
    if (t.values.size() != static_cast<std::size_t>(t.horizon) + 1 || t.values[0] != 1) return std::nullopt;
    return t;
}

std::filesystem::path TableStore::path_for(const std::string& key) const {
    return *cache_dir_ / (hex64(fnv1a(key)) + ".tbl");
}

std::shared_ptr<const CountTable> TableStore::load_from_disk(const TableRequest& request) {
    if (!cache_dir_) return nullptr;
    std::lock_guard lock(disk_mutex_);
    const auto path = path_for(request.key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return nullptr;
    std::stringstream buf;
    buf << in.rdbuf();
    in.close();
    auto table = deserialize(buf.str());
    if (!table || table->key != request.key) {
        std::error_code ec;
        std::filesystem::remove(path, ec);
        std::lock_guard stats_lock(mutex_);
        ++stats_.disk_rejects;
        return nullptr;
    }
    if (table->horizon < request.horizon) return nullptr;
    std::lock_guard stats_lock(mutex_);
    ++stats_.disk_hits;
    return std::make_shared<const CountTable>(std::move(*table));
}

void TableStore::store_to_disk(const CountTable& table) {
    if (!cache_dir_) return;
    std::lock_guard lock(disk_mutex_);
    const auto path = path_for(table.key);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << serialize(table);
        if (!out) return;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace alder
