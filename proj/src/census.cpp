#include "stdet/census.hpp"

#include <algorithm>

#include "stdet/census_cache.hpp"

namespace stdet {

std::string engine_name(CensusEngine e) { return e == CensusEngine::dp ? "dp" : "naive"; }

mpz_class CountVector::total() const {
    mpz_class t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

namespace {

mpz_class mpz_pow(uint64_t base, uint64_t exp) {
    mpz_class b(std::to_string(base)), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), (unsigned long)exp);
    return r;
}

} // namespace

void validate_census(const Ring& ring, const CountVector& cv) {
    const uint32_t S = ring.size();
    if (cv.counts.size() != S) throw std::logic_error("census size mismatch");

    // Conservation: the 2n-1 defining entries are free.
    if (cv.total() != mpz_pow(S, 2ULL * cv.n - 1))
        throw std::logic_error("census total != |R|^(2n-1) for " + cv.ring);

    // Conjugation bijection: counts[a] = counts[r^2 a] for every unit r.
    if (S <= 81) {
        for (uint32_t r = 0; r < S; ++r) {
            if (!ring.is_unit(r)) continue;
            uint32_t r2 = ring.mul(r, r);
            for (uint32_t a = 0; a < S; ++a)
                if (cv.counts[a] != cv.counts[ring.mul(r2, a)])
                    throw std::logic_error("conjugation invariance violated for " + cv.ring);
        }
    }

    // Odd dimension: scaling the determinant by any unit is a bijection.
    if (cv.n % 2 == 1) {
        const mpz_class* first = nullptr;
        for (uint32_t a = 0; a < S; ++a) {
            if (!ring.is_unit(a)) continue;
            if (!first) first = &cv.counts[a];
            else if (cv.counts[a] != *first)
                throw std::logic_error("odd-n unit uniformity violated for " + cv.ring);
        }
    }
}

CountVector census_dp(const Ring& ring, uint32_t n, const Budget& budget) {
    if (n < 1) throw DomainError("census requires n >= 1");
    const uint64_t S = ring.size();
    mpz_class work = mpz_pow(S, 4) * n;
    if (work > budget.dp_work)
        throw BudgetError("census_dp work |R|^4*n = " + work.get_str() + " exceeds budget " +
                          std::to_string(budget.dp_work));

    // State (det A_{k-1}, det A_k) -> weight, with det A_0 = 1.
    std::vector<mpz_class> cur((size_t)S * S), next((size_t)S * S);
    for (uint32_t x = 0; x < S; ++x) cur[(size_t)1 * S + x] = 1;

    const auto& squares = ring.square_multiset();
    mpz_class tmp;
    for (uint32_t step = 2; step <= n; ++step) {
        for (auto& w : next) w = 0;
        for (uint32_t u = 0; u < S; ++u) {
            for (uint32_t v = 0; v < S; ++v) {
                const mpz_class& w = cur[(size_t)u * S + v];
                if (w == 0) continue;
                for (const auto& [sq, mult] : squares) {
                    uint32_t su = ring.mul(sq, u);
                    tmp = w * mult;
                    mpz_class* row = next.data() + (size_t)v * S;
                    for (uint32_t x = 0; x < S; ++x)
                        row[ring.sub(ring.mul(x, v), su)] += tmp;
                }
            }
        }
        cur.swap(next);
    }

    CountVector cv;
    cv.ring = ring.name();
    cv.n = n;
    cv.engine = CensusEngine::dp;
    cv.counts.assign(S, 0);
    for (uint32_t u = 0; u < S; ++u)
        for (uint32_t v = 0; v < S; ++v) cv.counts[v] += cur[(size_t)u * S + v];
    validate_census(ring, cv);
    return cv;
}

CountVector census_naive(const Ring& ring, uint32_t n, const Budget& budget) {
    if (n < 1) throw DomainError("census requires n >= 1");
    const uint32_t S = ring.size();
    const uint32_t len = 2 * n - 1;
    mpz_class tuples = mpz_pow(S, len);
    if (tuples > budget.naive_tuples)
        throw BudgetError("census_naive tuple count " + tuples.get_str() + " exceeds budget " +
                          std::to_string(budget.naive_tuples));

    std::vector<uint32_t> sq(S);
    for (uint32_t r = 0; r < S; ++r) sq[r] = ring.mul(r, r);

    // digits[0..n-1] = diagonal, digits[n..2n-2] = off-diagonal.
    std::vector<uint32_t> digits(len, 0);
    std::vector<uint64_t> counts(S, 0);
    uint64_t count = tuples.get_ui();
    for (uint64_t it = 0; it < count; ++it) {
        uint32_t prev = 1; // det A_0
        uint32_t det = digits[0];
        for (uint32_t i = 1; i < n; ++i) {
            uint32_t nd = ring.sub(ring.mul(digits[i], det), ring.mul(sq[digits[n + i - 1]], prev));
            prev = det;
            det = nd;
        }
        ++counts[det];
        for (uint32_t j = 0; j < len; ++j) {
            if (++digits[j] < S) break;
            digits[j] = 0;
        }
    }

    CountVector cv;
    cv.ring = ring.name();
    cv.n = n;
    cv.engine = CensusEngine::naive;
    cv.counts.reserve(S);
    for (uint32_t a = 0; a < S; ++a) cv.counts.emplace_back((unsigned long)counts[a]);
    validate_census(ring, cv);
    return cv;
}

UnitZeroTotals unit_and_zero_totals(const Ring& ring, const CountVector& cv) {
    UnitZeroTotals t;
    t.zero = cv.counts[0];
    for (uint32_t a = 0; a < ring.size(); ++a)
        if (ring.is_unit(a)) t.ist += cv.counts[a];
    return t;
}

std::vector<mpz_class> layer_histogram(const Ring& ring, const CountVector& cv) {
    std::vector<mpz_class> h(ring.e() + 1, 0);
    for (uint32_t a = 0; a < ring.size(); ++a) h[ring.valuation(a)] += cv.counts[a];
    return h;
}

mpz_class character_sum(const Ring& ring, const CountVector& cv) {
    if (ring.q() % 2 == 0) throw DomainError("character sum undefined for even q (" + ring.name() + ")");
    mpz_class s = 0;
    for (uint32_t a = 0; a < ring.size(); ++a) {
        int chi = ring.quadratic_character(a);
        if (chi > 0) s += cv.counts[a];
        else if (chi < 0) s -= cv.counts[a];
    }
    return s;
}

std::optional<uint32_t> least_nqr_unit(const Ring& ring) {
    for (uint32_t a = 0; a < ring.size(); ++a)
        if (ring.square_class(a) == SquareClass::nqr_unit) return a;
    return std::nullopt;
}

std::vector<LayerClassSplit> class_totals(const Ring& ring, const CountVector& cv) {
    const uint32_t e = ring.e();
    std::vector<LayerClassSplit> out;
    auto nqr = least_nqr_unit(ring);
    for (uint32_t s = 0; s < e; ++s) {
        LayerClassSplit split;
        split.s = s;
        uint32_t gs = s == 0 ? 1 : ring.pow(ring.gamma(), s);
        // Elements reachable as gamma^s * (square-class unit).
        std::vector<bool> qr_side(ring.size(), false);
        for (uint32_t u = 0; u < ring.size(); ++u)
            if (ring.square_class(u) == SquareClass::qr_unit) qr_side[ring.mul(gs, u)] = true;
        std::optional<uint32_t> nqr_rep_elem;
        for (uint32_t a = 0; a < ring.size(); ++a) {
            if (ring.valuation(a) != s) continue;
            if (qr_side[a]) split.qr_total += cv.counts[a];
            else {
                split.nqr_total += cv.counts[a];
                if (!nqr_rep_elem) nqr_rep_elem = a;
            }
        }
        split.rep_qr = cv.counts[gs];
        if (nqr && ring.q() % 2 == 1)
            split.rep_nqr = cv.counts[ring.mul(gs, *nqr)];
        else if (nqr_rep_elem)
            split.rep_nqr = cv.counts[*nqr_rep_elem];
        out.push_back(std::move(split));
    }
    return out;
}

std::shared_ptr<const Ring> CensusProvider::ring(const std::string& desc) {
    auto canonical = parse_descriptor(desc);
    auto key = canonical.text();
    auto it = rings_.find(key);
    if (it != rings_.end()) return it->second;
    auto r = Ring::build(canonical);
    rings_.emplace(key, r);
    return r;
}

const CountVector& CensusProvider::census(const std::string& desc, uint32_t n, CensusEngine engine) {
    ++requests_;
    auto r = ring(desc);
    std::string key = r->name() + "/" + std::to_string(n) + "/" + engine_name(engine);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    if (file_cache_) {
        if (auto cached = file_cache_->load(*r, n, engine)) {
            auto [pos, inserted] = memo_.emplace(key, std::move(*cached));
            (void)inserted;
            return pos->second;
        }
    }
    ++computed_;
    CountVector cv = engine == CensusEngine::dp ? census_dp(*r, n, budget_) : census_naive(*r, n, budget_);
    if (file_cache_) file_cache_->store(*r, cv);
    auto [pos, inserted] = memo_.emplace(key, std::move(cv));
    (void)inserted;
    return pos->second;
}

} // namespace stdet
