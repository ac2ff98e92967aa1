#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stdet/errors.hpp"

namespace stdet {

// The four ring families after canonicalization.  A prime field is a
// degree-1 `field`; Z(p^1), FU(q,1) and GR(p^e,1)/GR(p^1,r) collapse to
// `field` or `modular` during parsing.
enum class RingKind {
    field,       // F_{p^k}, nilpotency index 1
    modular,     // Z_{p^e}, e >= 2
    poly_chain,  // F_q[u]/(u^e), e >= 2
    galois_ring, // GR(p^e, r) = Z_{p^e}[x]/(f), e >= 2, r >= 2
};

constexpr uint64_t kDefaultMaxRingSize = uint64_t{1} << 20;

// Canonical specification of a finite field or chain ring.
//
// `k` is always the residue-field degree (extension degree for fields and
// poly-chain base fields, r for Galois rings, 1 for Z_{p^e}).  `modulus`
// holds the monic irreducible used for construction, constant term first:
// over F_p for field/poly_chain, coefficient-wise lifted to Z_{p^e} for
// galois_ring.  Empty when k == 1.
struct RingDescriptor {
    RingKind kind = RingKind::field;
    uint32_t p = 0;
    uint32_t k = 1;
    uint32_t e = 1;
    std::vector<uint32_t> modulus;

    uint64_t q() const;    // residue field size p^k
    uint64_t size() const; // q^e
    std::string text() const;

    bool operator==(const RingDescriptor&) const = default;
};

// Parses and canonicalizes a descriptor.
//
// Grammar (no whitespace):
//   F(q) | F(p^k) | Z(p^e) | FU(q,e) | FU(p^k,e) | GR(p^e,r)
// where single numbers are accepted wherever an explicit power is allowed,
// provided they factor as the required prime power.  The deterministic
// modulus search runs here, so the returned descriptor is complete.
RingDescriptor parse_descriptor(std::string_view text, uint64_t max_size = kDefaultMaxRingSize);

enum class SquareClass { qr_unit, nqr_unit, non_unit };

// An immutable finite chain ring with canonical element encoding.
// Elements are indices in [0, size()); index 0 is the zero element and
// index 1 the identity under every encoding.  All operations are pure,
// and every derived structure (valuation, square classes, operation
// tables) is computed in the constructor, so handles can be shared
// freely across threads.
class Ring {
public:
    static std::shared_ptr<const Ring> build(const RingDescriptor& desc,
                                             uint64_t max_size = kDefaultMaxRingSize);
    static std::shared_ptr<const Ring> build(std::string_view desc_text,
                                             uint64_t max_size = kDefaultMaxRingSize);

    const RingDescriptor& descriptor() const { return desc_; }
    const std::string& name() const { return name_; }

    uint32_t size() const { return size_; }
    uint32_t p() const { return desc_.p; }
    uint32_t q() const { return q_; }
    uint32_t e() const { return desc_.e; }
    uint32_t unit_count() const { return unit_count_; }
    // Generator of the maximal ideal; the zero element for fields.
    uint32_t gamma() const { return gamma_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t pow(uint32_t a, uint64_t exp) const;
    // Multiplicative inverse; throws DomainError on non-units.
    uint32_t inv(uint32_t a) const;

    // Largest s with a in gamma^s R; valuation(0) = e, units have 0.
    uint32_t valuation(uint32_t a) const { return val_[a]; }
    bool is_unit(uint32_t a) const { return val_[a] == 0; }
    SquareClass square_class(uint32_t a) const { return sq_class_[a]; }
    // +1 / -1 on units by square class, 0 on non-units.  Defined for odd
    // q only; on chain rings the element is first reduced to the residue
    // field.  Throws DomainError for even q.
    int quadratic_character(uint32_t a) const;

    // Entry-wise reduction R -> R/gamma^t R on element indices, 1 <= t <= e.
    uint32_t reduce(uint32_t a, uint32_t t) const;
    RingDescriptor quotient_descriptor(uint32_t t) const;
    std::shared_ptr<const Ring> quotient(uint32_t t) const;
    // The residue field R/gamma R (this ring itself when e == 1).
    std::shared_ptr<const Ring> residue_field() const;

    std::vector<uint32_t> elements() const;
    std::vector<uint32_t> units() const;
    // Elements of valuation exactly s; {0} for s == e.
    std::vector<uint32_t> layer(uint32_t s) const;

    // Distinct square values with multiplicities: (v, #{r : r^2 = v}),
    // ascending in v.  Drives the census transfer step.
    const std::vector<std::pair<uint32_t, uint32_t>>& square_multiset() const { return squares_; }

    // Human-readable element rendering (polynomial form for k >= 2 or u-adic
    // kinds, plain integers otherwise).
    std::string display(uint32_t a) const;

    ~Ring();
    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

private:
    explicit Ring(const RingDescriptor& desc);

    uint32_t raw_add(uint32_t a, uint32_t b) const;
    uint32_t raw_mul(uint32_t a, uint32_t b) const;
    uint32_t raw_neg(uint32_t a) const;
    void build_structure();

    RingDescriptor desc_;
    std::string name_;
    uint32_t size_ = 0;
    uint32_t q_ = 0;
    uint32_t unit_count_ = 0;
    uint32_t gamma_ = 0;
    std::shared_ptr<const Ring> base_field_;    // poly_chain coefficients
    std::shared_ptr<const Ring> residue_field_; // null when e == 1 (self)
    std::vector<uint8_t> val_;
    std::vector<SquareClass> sq_class_;
    std::vector<std::pair<uint32_t, uint32_t>> squares_;
    // Full operation tables, only when size^2 stays affordable.
    bool has_tables_ = false;
    std::vector<uint16_t> add_tab_;
    std::vector<uint16_t> mul_tab_;
    std::vector<uint16_t> neg_tab_;
};

// Exposed for tests: smallest monic irreducible of degree k over F_p in
// the canonical order (coefficient tuples compared constant term first).
std::vector<uint32_t> least_irreducible(uint32_t p, uint32_t k);
bool is_prime(uint64_t m);
// Factors m = p^k with p prime; throws DomainError otherwise.
std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t m);

} // namespace stdet
