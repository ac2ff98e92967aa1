#include "stdet/io.hpp"

#include <sstream>

#include "stdet/formulas.hpp"

namespace stdet {

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string census_to_csv(const Ring& ring, const CountVector& cv) {
    std::string out = "det_index,det_display,count\n";
    for (uint32_t a = 0; a < ring.size(); ++a)
        out += std::to_string(a) + "," + ring.display(a) + "," + cv.counts[a].get_str() + "\n";
    return out;
}

std::vector<mpz_class> census_counts_from_csv(const Ring& ring, std::string_view csv) {
    std::vector<mpz_class> counts(ring.size(), 0);
    std::vector<bool> seen(ring.size(), false);
    std::istringstream in{std::string(csv)};
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "det_index,det_display,count")
                throw ParseError("unexpected census CSV header: " + line);
            header_seen = true;
            continue;
        }
        size_t c1 = line.find(',');
        size_t c2 = line.rfind(',');
        if (c1 == std::string::npos || c2 == c1)
            throw ParseError("malformed census CSV row: " + line);
        uint64_t idx = std::stoull(line.substr(0, c1));
        if (idx >= ring.size()) throw ParseError("census CSV row index out of range: " + line);
        counts[idx] = mpz_class(line.substr(c2 + 1));
        seen[idx] = true;
    }
    for (uint32_t a = 0; a < ring.size(); ++a)
        if (!seen[a]) throw ParseError("census CSV is missing index " + std::to_string(a));
    return counts;
}

namespace {

struct Aggregates {
    UnitZeroTotals totals;
    std::vector<mpz_class> layers;
    std::vector<LayerClassSplit> classes;
    bool has_charsum = false;
    mpz_class charsum;
};

Aggregates collect(const Ring& ring, const CountVector& cv) {
    Aggregates agg;
    agg.totals = unit_and_zero_totals(ring, cv);
    agg.layers = layer_histogram(ring, cv);
    agg.classes = class_totals(ring, cv);
    if (ring.q() % 2 == 1) {
        agg.has_charsum = true;
        agg.charsum = character_sum(ring, cv);
    }
    return agg;
}

} // namespace

std::string census_report_csv(const Ring& ring, const CountVector& cv) {
    Aggregates agg = collect(ring, cv);
    std::string out;
    out += "# ring=" + ring.name() + " n=" + std::to_string(cv.n) + " engine=" + engine_name(cv.engine) + "\n";
    out += census_to_csv(ring, cv);
    out += "# total=" + cv.total().get_str() + "\n";
    out += "# ist=" + agg.totals.ist.get_str() + "\n";
    out += "# zero=" + agg.totals.zero.get_str() + "\n";
    for (uint32_t s = 0; s < agg.layers.size(); ++s)
        out += "# layer_" + std::to_string(s) + "=" + agg.layers[s].get_str() + "\n";
    for (const auto& c : agg.classes) {
        out += "# class_s" + std::to_string(c.s) + "_qr=" + c.qr_total.get_str() +
               " nqr=" + c.nqr_total.get_str() + "\n";
    }
    if (agg.has_charsum) out += "# character_sum=" + agg.charsum.get_str() + "\n";
    return out;
}

std::string census_report_markdown(const Ring& ring, const CountVector& cv) {
    Aggregates agg = collect(ring, cv);
    std::string out;
    out += "## Census of " + ring.name() + ", n = " + std::to_string(cv.n) +
           " (" + engine_name(cv.engine) + ")\n\n";
    out += "| det | index | count |\n|---|---|---|\n";
    for (uint32_t a = 0; a < ring.size(); ++a)
        out += "| " + ring.display(a) + " | " + std::to_string(a) + " | " + cv.counts[a].get_str() + " |\n";
    out += "\n";
    out += "- total: " + cv.total().get_str() + "\n";
    out += "- nonsingular: " + agg.totals.ist.get_str() + "\n";
    out += "- zero determinant: " + agg.totals.zero.get_str() + "\n";
    for (uint32_t s = 0; s < agg.layers.size(); ++s)
        out += "- layer " + std::to_string(s) + ": " + agg.layers[s].get_str() + "\n";
    if (agg.has_charsum) out += "- character sum: " + agg.charsum.get_str() + "\n";
    return out;
}

std::string census_report_structured(const Ring& ring, const CountVector& cv) {
    Aggregates agg = collect(ring, cv);
    StructuredWriter w;
    w.key_value("ring", ring.name());
    w.key_value("n", std::to_string(cv.n));
    w.key_value("engine", engine_name(cv.engine));
    w.open("counts");
    for (uint32_t a = 0; a < ring.size(); ++a) {
        w.open_item();
        w.key_value("index", std::to_string(a));
        w.key_value("det", ring.display(a));
        w.key_value("count", cv.counts[a].get_str());
        w.close();
    }
    w.close();
    w.open("aggregates");
    w.key_value("total", cv.total().get_str());
    w.key_value("nonsingular", agg.totals.ist.get_str());
    w.key_value("zero", agg.totals.zero.get_str());
    w.open("layers");
    for (uint32_t s = 0; s < agg.layers.size(); ++s) w.item(agg.layers[s].get_str());
    w.close();
    w.open("classes");
    for (const auto& c : agg.classes) {
        w.open_item();
        w.key_value("s", std::to_string(c.s));
        w.key_value("qr_total", c.qr_total.get_str());
        w.key_value("nqr_total", c.nqr_total.get_str());
        w.key_value("at_gamma_pow_s", c.rep_qr.get_str());
        if (c.rep_nqr) w.key_value("at_gamma_pow_s_nqr", c.rep_nqr->get_str());
        w.close();
    }
    w.close();
    if (agg.has_charsum) w.key_value("character_sum", agg.charsum.get_str());
    w.close();
    return w.str();
}

void StructuredWriter::indent() {
    if (item_head_) {
        // first key of a `-` map item goes on the dash line
        item_head_ = false;
        return;
    }
    for (int i = 0; i < depth_; ++i) out_ += "  ";
}

void StructuredWriter::key_value(std::string_view key, std::string_view value) {
    indent();
    out_ += std::string(key) + ": " + std::string(value) + "\n";
}

void StructuredWriter::open(std::string_view key) {
    indent();
    out_ += std::string(key) + ":\n";
    ++depth_;
}

void StructuredWriter::close() { --depth_; }

void StructuredWriter::item(std::string_view value) {
    indent();
    out_ += "- " + std::string(value) + "\n";
}

void StructuredWriter::open_item() {
    indent();
    out_ += "- ";
    ++depth_;
    item_head_ = true;
}

} // namespace stdet
