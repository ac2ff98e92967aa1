#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "stdet/ring.hpp"

namespace stdet {

enum class CensusEngine { dp, naive };

std::string engine_name(CensusEngine e);

// Work caps for the census engines.  dp_work bounds |R|^4 * n for the
// transfer DP; naive_tuples bounds |R|^(2n-1) for the exhaustive oracle.
// Exceeding a cap is an error, never an approximation.
struct Budget {
    uint64_t dp_work = 3'300'000'000ULL;
    uint64_t naive_tuples = 10'000'000ULL;
};

// Exact determinant census: counts[a] = #{A in ST_n(R) : det(A) = a},
// indexed by the canonical element encoding.
struct CountVector {
    std::string ring; // canonical descriptor
    uint32_t n = 0;
    CensusEngine engine = CensusEngine::dp;
    std::vector<mpz_class> counts;

    mpz_class total() const;
};

// Transfer dynamic program over the three-term determinant recurrence.
// State is the pair of consecutive leading-minor determinants with
// det A_0 = 1; squares of the off-diagonal entry are aggregated into
// (value, multiplicity) pairs.  Exact for every ring within budget.
CountVector census_dp(const Ring& ring, uint32_t n, const Budget& budget = {});

// Ground-truth oracle: enumerates all |R|^(2n-1) entry tuples.
CountVector census_naive(const Ring& ring, uint32_t n, const Budget& budget = {});

// Structural invariants every census must satisfy; throws std::logic_error
// on violation.  Conjugation invariance is checked exhaustively when
// |R| <= 81.  Both engines call this before returning.
void validate_census(const Ring& ring, const CountVector& cv);

struct UnitZeroTotals {
    mpz_class ist;
    mpz_class zero;
};
UnitZeroTotals unit_and_zero_totals(const Ring& ring, const CountVector& cv);

// Entry s = total count over determinants of valuation exactly s, for
// s = 0..e (entry e is the zero count).
std::vector<mpz_class> layer_histogram(const Ring& ring, const CountVector& cv);

// Sum of eta(a) * counts[a] with eta the quadratic character pulled back
// through residue reduction; odd q only.
mpz_class character_sum(const Ring& ring, const CountVector& cv);

// Per-layer split of the census by the square class of the unit factor.
// The qr side is the set {gamma^s * u : u in Q(R)}; the nqr side is the
// rest of the layer (for odd q this is exactly the class partition).
struct LayerClassSplit {
    uint32_t s = 0;
    mpz_class qr_total;
    mpz_class nqr_total;
    mpz_class rep_qr;                 // count at the element gamma^s
    std::optional<mpz_class> rep_nqr; // count at gamma^s * b for the least nqr unit b
};
std::vector<LayerClassSplit> class_totals(const Ring& ring, const CountVector& cv);

// Smallest unit of nqr square class, if any.
std::optional<uint32_t> least_nqr_unit(const Ring& ring);

// Memoizing census provider: each (ring, n, engine) is computed at most
// once.  Ring handles are memoized by canonical descriptor.  Used by the
// verification harness and the CLI (which may attach a file cache).
class FileCensusCache;

class CensusProvider {
public:
    explicit CensusProvider(Budget budget = {}) : budget_(budget) {}

    const Budget& budget() const { return budget_; }
    void set_file_cache(FileCensusCache* cache) { file_cache_ = cache; }

    std::shared_ptr<const Ring> ring(const std::string& desc);
    const CountVector& census(const std::string& desc, uint32_t n, CensusEngine engine);

    uint64_t computed_count() const { return computed_; } // engine invocations (cache misses)
    uint64_t request_count() const { return requests_; }

private:
    Budget budget_;
    FileCensusCache* file_cache_ = nullptr;
    std::map<std::string, std::shared_ptr<const Ring>> rings_;
    std::map<std::string, CountVector> memo_;
    uint64_t computed_ = 0;
    uint64_t requests_ = 0;
};

} // namespace stdet
