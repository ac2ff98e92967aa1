#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stdet/census.hpp"
#include "stdet/ring.hpp"

namespace stdet {

// FNV-1a, used for cache file naming and body integrity.
uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

// Census table in the interchange format:
//   det_index,det_display,count
std::string census_to_csv(const Ring& ring, const CountVector& cv);

// Parses the table section back into counts; lines starting with '#' and
// blank lines are ignored.  Throws ParseError on malformed rows.
std::vector<mpz_class> census_counts_from_csv(const Ring& ring, std::string_view csv);

// Full census description (counts plus aggregates) in the three output
// styles served by the CLI.
std::string census_report_csv(const Ring& ring, const CountVector& cv);
std::string census_report_markdown(const Ring& ring, const CountVector& cv);
std::string census_report_structured(const Ring& ring, const CountVector& cv);

// Minimal writer for the key/value-with-nested-arrays documents used by
// reports: two-space indentation, `key: value`, `-` items.
class StructuredWriter {
public:
    void key_value(std::string_view key, std::string_view value);
    void open(std::string_view key);    // `key:` then indent
    void close();                       // dedent
    void item(std::string_view value);  // `- value`
    void open_item();                   // `-` then indent (map item)
    std::string str() const { return out_; }

private:
    void indent();
    std::string out_;
    int depth_ = 0;
    bool item_head_ = false;
};

} // namespace stdet
