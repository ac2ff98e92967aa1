#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "stdet/census.hpp"
#include "stdet/ring.hpp"

namespace stdet {

// One file per census, keyed by (canonical descriptor, n, engine, schema
// version).  The file name is the checksum of the key; the content is a
// key header followed by the census CSV body and a body checksum, so a
// stale or foreign file is detected and treated as a miss.  Writers take
// an advisory flock and publish via rename, so concurrent processes
// cannot corrupt an entry.
class FileCensusCache {
public:
    static constexpr int kSchemaVersion = 1;

    explicit FileCensusCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    static std::string key(const Ring& ring, uint32_t n, CensusEngine engine);
    std::filesystem::path entry_path(const std::string& key) const;

    std::optional<CountVector> load(const Ring& ring, uint32_t n, CensusEngine engine) const;
    void store(const Ring& ring, const CountVector& cv);

    // Default directory: $STDET_CACHE_DIR, else ~/.cache/stdet.
    static std::filesystem::path default_dir();

private:
    std::filesystem::path dir_;
};

} // namespace stdet
