#include "stdet/ring.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>

namespace stdet {

namespace {

uint64_t ipow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

// Polynomial helpers over F_p, coefficients ascending, constant term first.
using Poly = std::vector<uint32_t>;

Poly poly_mod(const Poly& a, const Poly& m, uint32_t p) {
    Poly r = a;
    const size_t dm = m.size() - 1; // m monic of degree dm
    while (r.size() > dm) {
        uint32_t lead = r.back();
        size_t shift = r.size() - 1 - dm;
        if (lead != 0) {
            for (size_t j = 0; j <= dm; ++j) {
                uint64_t sub = (uint64_t)lead * m[j] % p;
                uint32_t& c = r[shift + j];
                c = (uint32_t)((c + p - sub) % p);
            }
        }
        r.pop_back();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool poly_divides(const Poly& d, const Poly& f, uint32_t p) {
    return poly_mod(f, d, p).empty();
}

bool is_irreducible(const Poly& f, uint32_t p) {
    const size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (size_t d = 1; 2 * d <= k; ++d) {
        uint64_t count = ipow(p, (uint32_t)d);
        Poly g(d + 1, 0);
        g[d] = 1;
        for (uint64_t t = 0; t < count; ++t) {
            uint64_t v = t;
            // Tuple order is irrelevant for divisor search.
            for (size_t j = 0; j < d; ++j) {
                g[j] = (uint32_t)(v % p);
                v /= p;
            }
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(uint64_t m) {
    if (m < 2) return false;
    for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

std::pair<uint32_t, uint32_t> factor_prime_power(uint64_t m) {
    if (m < 2) throw DomainError("not a prime power: " + std::to_string(m));
    uint64_t p = m;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t k = 0;
    uint64_t r = m;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) throw DomainError("not a prime power: " + std::to_string(m));
    return {(uint32_t)p, k};
}

std::vector<uint32_t> least_irreducible(uint32_t p, uint32_t k) {
    // Monic degree-k polynomials ordered by coefficient tuple
    // (c_0, ..., c_{k-1}), constant term compared first.
    Poly f(k + 1, 0);
    f[k] = 1;
    uint64_t count = ipow(p, k);
    for (uint64_t t = 0; t < count; ++t) {
        uint64_t v = t;
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t digit = (uint32_t)(v / ipow(p, k - 1 - j)) % p;
            f[j] = digit;
        }
        (void)v;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("irreducible search exhausted"); // cannot happen
}

uint64_t RingDescriptor::q() const { return ipow(p, k); }

uint64_t RingDescriptor::size() const { return ipow(q(), e); }

std::string RingDescriptor::text() const {
    switch (kind) {
    case RingKind::field:
        return "F(" + std::to_string(q()) + ")";
    case RingKind::modular:
        return "Z(" + std::to_string(p) + "^" + std::to_string(e) + ")";
    case RingKind::poly_chain:
        return "FU(" + std::to_string(q()) + "," + std::to_string(e) + ")";
    case RingKind::galois_ring:
        return "GR(" + std::to_string(p) + "^" + std::to_string(e) + "," + std::to_string(k) + ")";
    }
    return {};
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() const { return pos == s.size(); }
    uint64_t number() {
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '9')
            throw ParseError("expected number at position " + std::to_string(pos) + " in '" + std::string(s) + "'");
        uint64_t v = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            v = v * 10 + (uint64_t)(s[pos] - '0');
            if (v > (uint64_t)1 << 40) throw DomainError("number too large in descriptor");
            ++pos;
        }
        return v;
    }
};

// Reads "a" or "a^b"; returns (a, b) with b = 1 when no caret.
std::pair<uint64_t, uint64_t> power_form(Cursor& c) {
    uint64_t a = c.number();
    uint64_t b = 1;
    if (c.eat('^')) b = c.number();
    return {a, b};
}

void require_prime(uint64_t p) {
    if (!is_prime(p)) throw DomainError("p must be prime, got " + std::to_string(p));
}

} // namespace

RingDescriptor parse_descriptor(std::string_view text, uint64_t max_size) {
    Cursor c{text};
    RingDescriptor d;
    auto head = [&](std::string_view prefix) {
        if (text.substr(0, prefix.size()) != prefix) return false;
        c.pos = prefix.size();
        return true;
    };

    if (head("FU(")) {
        auto [base, bk] = power_form(c);
        if (!c.eat(',')) throw ParseError("expected ',' in FU descriptor");
        uint64_t e = c.number();
        if (!c.eat(')') || !c.done()) throw ParseError("malformed descriptor '" + std::string(text) + "'");
        uint32_t p, k;
        if (bk == 1) {
            std::tie(p, k) = factor_prime_power(base);
        } else {
            require_prime(base);
            p = (uint32_t)base;
            k = (uint32_t)bk;
        }
        if (e == 0) throw DomainError("e must be >= 1");
        d.kind = RingKind::poly_chain;
        d.p = p;
        d.k = k;
        d.e = (uint32_t)e;
    } else if (head("GR(")) {
        auto [base, be] = power_form(c);
        if (!c.eat(',')) throw ParseError("expected ',' in GR descriptor");
        uint64_t r = c.number();
        if (!c.eat(')') || !c.done()) throw ParseError("malformed descriptor '" + std::string(text) + "'");
        uint32_t p, e;
        if (be == 1) {
            std::tie(p, e) = factor_prime_power(base);
        } else {
            require_prime(base);
            p = (uint32_t)base;
            e = (uint32_t)be;
        }
        if (e == 0 || r == 0) throw DomainError("e and r must be >= 1");
        d.kind = RingKind::galois_ring;
        d.p = p;
        d.k = (uint32_t)r;
        d.e = e;
    } else if (head("F(")) {
        auto [base, bk] = power_form(c);
        if (!c.eat(')') || !c.done()) throw ParseError("malformed descriptor '" + std::string(text) + "'");
        uint32_t p, k;
        if (bk == 1) {
            std::tie(p, k) = factor_prime_power(base);
        } else {
            require_prime(base);
            p = (uint32_t)base;
            k = (uint32_t)bk;
        }
        d.kind = RingKind::field;
        d.p = p;
        d.k = k;
        d.e = 1;
    } else if (head("Z(")) {
        auto [base, be] = power_form(c);
        if (!c.eat(')') || !c.done()) throw ParseError("malformed descriptor '" + std::string(text) + "'");
        uint32_t p, e;
        if (be == 1) {
            std::tie(p, e) = factor_prime_power(base);
        } else {
            require_prime(base);
            p = (uint32_t)base;
            e = (uint32_t)be;
        }
        if (e == 0) throw DomainError("e must be >= 1");
        d.kind = RingKind::modular;
        d.p = p;
        d.k = 1;
        d.e = e;
    } else {
        throw ParseError("unrecognized descriptor '" + std::string(text) + "'");
    }

    // Canonicalization: collapse degenerate parameters to the smallest kind.
    if (d.kind == RingKind::galois_ring) {
        if (d.k == 1) d.kind = RingKind::modular;
        else if (d.e == 1) d.kind = RingKind::field; // GR(p, r) is the field F_{p^r}
    }
    if (d.kind == RingKind::poly_chain && d.e == 1) d.kind = RingKind::field;
    if (d.kind == RingKind::modular && d.e == 1) d.kind = RingKind::field;

    if (d.size() > max_size)
        throw DomainError("ring size " + std::to_string(d.size()) + " exceeds cap " + std::to_string(max_size));

    // Deterministic modulus for every kind that extends F_p.
    d.modulus.clear();
    if ((d.kind == RingKind::field || d.kind == RingKind::poly_chain || d.kind == RingKind::galois_ring) && d.k >= 2)
        d.modulus = least_irreducible(d.p, d.k);
    return d;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(const RingDescriptor& desc) : desc_(desc) {}
Ring::~Ring() = default;

std::shared_ptr<const Ring> Ring::build(std::string_view desc_text, uint64_t max_size) {
    return build(parse_descriptor(desc_text, max_size), max_size);
}

std::shared_ptr<const Ring> Ring::build(const RingDescriptor& desc, uint64_t max_size) {
    if (desc.p < 2 || !is_prime(desc.p)) throw DomainError("descriptor p must be prime");
    if (desc.e == 0 || desc.k == 0) throw DomainError("descriptor e, k must be >= 1");
    if (desc.size() > max_size)
        throw DomainError("ring size " + std::to_string(desc.size()) + " exceeds cap " + std::to_string(max_size));
    auto ring = std::shared_ptr<Ring>(new Ring(desc));
    ring->build_structure();
    return ring;
}

namespace {
constexpr uint32_t kTableLimit = 4096;

// Digit codecs for the canonical encodings.
inline void decode_digits(uint32_t x, uint32_t base, uint32_t count, uint32_t* out) {
    for (uint32_t i = 0; i < count; ++i) {
        out[i] = x % base;
        x /= base;
    }
}
inline uint32_t encode_digits(const uint32_t* d, uint32_t base, uint32_t count) {
    uint32_t x = 0;
    for (uint32_t i = count; i-- > 0;) x = x * base + d[i];
    return x;
}
} // namespace

uint32_t Ring::raw_add(uint32_t a, uint32_t b) const {
    switch (desc_.kind) {
    case RingKind::field: {
        if (desc_.k == 1) return (a + b) % desc_.p;
        uint32_t da[32], db[32];
        decode_digits(a, desc_.p, desc_.k, da);
        decode_digits(b, desc_.p, desc_.k, db);
        for (uint32_t i = 0; i < desc_.k; ++i) da[i] = (da[i] + db[i]) % desc_.p;
        return encode_digits(da, desc_.p, desc_.k);
    }
    case RingKind::modular:
        return (uint32_t)(((uint64_t)a + b) % size_);
    case RingKind::poly_chain: {
        uint32_t da[32], db[32];
        decode_digits(a, q_, desc_.e, da);
        decode_digits(b, q_, desc_.e, db);
        for (uint32_t i = 0; i < desc_.e; ++i) da[i] = base_field_->add(da[i], db[i]);
        return encode_digits(da, q_, desc_.e);
    }
    case RingKind::galois_ring: {
        uint32_t m = (uint32_t)ipow(desc_.p, desc_.e);
        uint32_t da[32], db[32];
        decode_digits(a, m, desc_.k, da);
        decode_digits(b, m, desc_.k, db);
        for (uint32_t i = 0; i < desc_.k; ++i) da[i] = (uint32_t)(((uint64_t)da[i] + db[i]) % m);
        return encode_digits(da, m, desc_.k);
    }
    }
    return 0;
}

uint32_t Ring::raw_neg(uint32_t a) const {
    switch (desc_.kind) {
    case RingKind::field: {
        if (desc_.k == 1) return a == 0 ? 0 : desc_.p - a;
        uint32_t da[32];
        decode_digits(a, desc_.p, desc_.k, da);
        for (uint32_t i = 0; i < desc_.k; ++i) da[i] = da[i] == 0 ? 0 : desc_.p - da[i];
        return encode_digits(da, desc_.p, desc_.k);
    }
    case RingKind::modular:
        return a == 0 ? 0 : size_ - a;
    case RingKind::poly_chain: {
        uint32_t da[32];
        decode_digits(a, q_, desc_.e, da);
        for (uint32_t i = 0; i < desc_.e; ++i) da[i] = base_field_->neg(da[i]);
        return encode_digits(da, q_, desc_.e);
    }
    case RingKind::galois_ring: {
        uint32_t m = (uint32_t)ipow(desc_.p, desc_.e);
        uint32_t da[32];
        decode_digits(a, m, desc_.k, da);
        for (uint32_t i = 0; i < desc_.k; ++i) da[i] = da[i] == 0 ? 0 : m - da[i];
        return encode_digits(da, m, desc_.k);
    }
    }
    return 0;
}

uint32_t Ring::raw_mul(uint32_t a, uint32_t b) const {
    switch (desc_.kind) {
    case RingKind::field: {
        if (desc_.k == 1) return (uint32_t)((uint64_t)a * b % desc_.p);
        const uint32_t k = desc_.k, p = desc_.p;
        uint32_t da[32], db[32];
        uint64_t conv[64] = {0};
        decode_digits(a, p, k, da);
        decode_digits(b, p, k, db);
        for (uint32_t i = 0; i < k; ++i) {
            if (!da[i]) continue;
            for (uint32_t j = 0; j < k; ++j) conv[i + j] += (uint64_t)da[i] * db[j];
        }
        // Reduce modulo the monic modulus: x^k = -(sum modulus[j] x^j).
        for (uint32_t i = 2 * k - 2; i >= k; --i) {
            uint64_t t = conv[i] % p;
            conv[i] = 0;
            if (t) {
                for (uint32_t j = 0; j < k; ++j)
                    conv[i - k + j] += (uint64_t)(p - desc_.modulus[j] % p) % p * t;
            }
            if (i == k) break;
        }
        uint32_t out[32];
        for (uint32_t i = 0; i < k; ++i) out[i] = (uint32_t)(conv[i] % p);
        return encode_digits(out, p, k);
    }
    case RingKind::modular:
        return (uint32_t)((uint64_t)a * b % size_);
    case RingKind::poly_chain: {
        const uint32_t e = desc_.e;
        uint32_t da[32], db[32], acc[32];
        decode_digits(a, q_, e, da);
        decode_digits(b, q_, e, db);
        for (uint32_t i = 0; i < e; ++i) acc[i] = 0;
        for (uint32_t i = 0; i < e; ++i) {
            if (!da[i]) continue;
            for (uint32_t j = 0; i + j < e; ++j)
                acc[i + j] = base_field_->add(acc[i + j], base_field_->mul(da[i], db[j]));
        }
        return encode_digits(acc, q_, e);
    }
    case RingKind::galois_ring: {
        const uint32_t r = desc_.k;
        const uint32_t m = (uint32_t)ipow(desc_.p, desc_.e);
        uint32_t da[32], db[32];
        uint64_t conv[64] = {0};
        decode_digits(a, m, r, da);
        decode_digits(b, m, r, db);
        for (uint32_t i = 0; i < r; ++i) {
            if (!da[i]) continue;
            for (uint32_t j = 0; j < r; ++j)
                conv[i + j] = (conv[i + j] + (uint64_t)da[i] * db[j]) % m;
        }
        for (uint32_t i = 2 * r - 2; i >= r; --i) {
            uint64_t t = conv[i] % m;
            conv[i] = 0;
            if (t) {
                for (uint32_t j = 0; j < r; ++j)
                    conv[i - r + j] = (conv[i - r + j] + (m - desc_.modulus[j] % m) % m * t) % m;
            }
            if (i == r) break;
        }
        uint32_t out[32];
        for (uint32_t i = 0; i < r; ++i) out[i] = (uint32_t)(conv[i] % m);
        return encode_digits(out, m, r);
    }
    }
    return 0;
}

uint32_t Ring::add(uint32_t a, uint32_t b) const {
    return has_tables_ ? add_tab_[(size_t)a * size_ + b] : raw_add(a, b);
}
uint32_t Ring::mul(uint32_t a, uint32_t b) const {
    return has_tables_ ? mul_tab_[(size_t)a * size_ + b] : raw_mul(a, b);
}
uint32_t Ring::neg(uint32_t a) const { return has_tables_ ? neg_tab_[a] : raw_neg(a); }

uint32_t Ring::pow(uint32_t a, uint64_t exp) const {
    uint32_t result = 1, base = a;
    while (exp) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

uint32_t Ring::inv(uint32_t a) const {
    if (!is_unit(a)) throw DomainError("inverse of non-unit element " + std::to_string(a) + " in " + name_);
    // |U(R)| = (q-1) q^{e-1}; a^(|U|-1) inverts every unit.
    return pow(a, (uint64_t)unit_count_ - 1);
}

int Ring::quadratic_character(uint32_t a) const {
    if (q_ % 2 == 0) throw DomainError("quadratic character undefined for even q (" + name_ + ")");
    switch (square_class(a)) {
    case SquareClass::qr_unit: return 1;
    case SquareClass::nqr_unit: return -1;
    case SquareClass::non_unit: return 0;
    }
    return 0;
}

uint32_t Ring::reduce(uint32_t a, uint32_t t) const {
    if (t < 1 || t > desc_.e) throw DomainError("reduction index t out of range");
    if (t == desc_.e) return a;
    switch (desc_.kind) {
    case RingKind::field:
        return a; // e == 1, t == e
    case RingKind::modular:
        return a % (uint32_t)ipow(desc_.p, t);
    case RingKind::poly_chain:
        return a % (uint32_t)ipow(q_, t);
    case RingKind::galois_ring: {
        uint32_t m = (uint32_t)ipow(desc_.p, desc_.e);
        uint32_t mt = (uint32_t)ipow(desc_.p, t);
        uint32_t da[32];
        decode_digits(a, m, desc_.k, da);
        for (uint32_t i = 0; i < desc_.k; ++i) da[i] %= mt;
        return encode_digits(da, mt, desc_.k);
    }
    }
    return a;
}

RingDescriptor Ring::quotient_descriptor(uint32_t t) const {
    if (t < 1 || t > desc_.e) throw DomainError("quotient index t out of range");
    RingDescriptor d = desc_;
    if (t == desc_.e) return d;
    d.e = t;
    if (t == 1) {
        d.kind = RingKind::field;
        if (d.k == 1) d.modulus.clear();
        return d;
    }
    return d; // modular / poly_chain / galois_ring with smaller e keep kind and modulus
}

std::shared_ptr<const Ring> Ring::quotient(uint32_t t) const {
    return build(quotient_descriptor(t));
}

std::shared_ptr<const Ring> Ring::residue_field() const {
    if (desc_.e == 1) return build(desc_);
    return residue_field_;
}

std::vector<uint32_t> Ring::elements() const {
    std::vector<uint32_t> out(size_);
    for (uint32_t i = 0; i < size_; ++i) out[i] = i;
    return out;
}

std::vector<uint32_t> Ring::units() const {
    std::vector<uint32_t> out;
    out.reserve(unit_count_);
    for (uint32_t i = 0; i < size_; ++i)
        if (val_[i] == 0) out.push_back(i);
    return out;
}

std::vector<uint32_t> Ring::layer(uint32_t s) const {
    if (s > desc_.e) throw DomainError("layer index out of range");
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < size_; ++i)
        if (val_[i] == s) out.push_back(i);
    return out;
}

void Ring::build_structure() {
    size_ = (uint32_t)desc_.size();
    q_ = (uint32_t)desc_.q();
    name_ = desc_.text();

    if (desc_.kind == RingKind::poly_chain) {
        RingDescriptor base;
        base.kind = RingKind::field;
        base.p = desc_.p;
        base.k = desc_.k;
        base.e = 1;
        base.modulus = desc_.modulus;
        base_field_ = build(base);
    }

    // gamma: p for Z_{p^e} and GR, u for F_q[u]/(u^e), 0 for fields.
    switch (desc_.kind) {
    case RingKind::field: gamma_ = 0; break;
    case RingKind::modular: gamma_ = desc_.p; break;
    case RingKind::poly_chain: gamma_ = q_; break;
    case RingKind::galois_ring: gamma_ = desc_.p; break;
    }

    if ((uint64_t)size_ * size_ <= (uint64_t)kTableLimit * kTableLimit && size_ <= kTableLimit) {
        add_tab_.resize((size_t)size_ * size_);
        mul_tab_.resize((size_t)size_ * size_);
        neg_tab_.resize(size_);
        for (uint32_t a = 0; a < size_; ++a) {
            neg_tab_[a] = (uint16_t)raw_neg(a);
            for (uint32_t b = 0; b < size_; ++b) {
                add_tab_[(size_t)a * size_ + b] = (uint16_t)raw_add(a, b);
                mul_tab_[(size_t)a * size_ + b] = (uint16_t)raw_mul(a, b);
            }
        }
        has_tables_ = true;
    }

    // gamma-adic valuation, computed per kind.
    val_.assign(size_, 0);
    const uint32_t e = desc_.e;
    for (uint32_t x = 0; x < size_; ++x) {
        uint32_t v = 0;
        switch (desc_.kind) {
        case RingKind::field:
            v = x == 0 ? 1 : 0;
            break;
        case RingKind::modular: {
            if (x == 0) v = e;
            else {
                uint32_t y = x;
                while (y % desc_.p == 0) {
                    y /= desc_.p;
                    ++v;
                }
            }
            break;
        }
        case RingKind::poly_chain: {
            if (x == 0) v = e;
            else {
                uint32_t y = x;
                while (y % q_ == 0) {
                    y /= q_;
                    ++v;
                }
            }
            break;
        }
        case RingKind::galois_ring: {
            uint32_t m = (uint32_t)ipow(desc_.p, e);
            uint32_t d[32];
            decode_digits(x, m, desc_.k, d);
            v = e;
            for (uint32_t i = 0; i < desc_.k; ++i) {
                if (d[i] == 0) continue;
                uint32_t vi = 0, y = d[i];
                while (y % desc_.p == 0) {
                    y /= desc_.p;
                    ++vi;
                }
                v = std::min(v, vi);
            }
            break;
        }
        }
        val_[x] = (uint8_t)v;
    }

    unit_count_ = 0;
    for (uint32_t x = 0; x < size_; ++x)
        if (val_[x] == 0) ++unit_count_;

    if (desc_.e >= 2) {
        RingDescriptor rf;
        rf.kind = RingKind::field;
        rf.p = desc_.p;
        rf.k = desc_.k;
        rf.e = 1;
        rf.modulus = desc_.k >= 2 ? desc_.modulus : std::vector<uint32_t>{};
        if (desc_.kind == RingKind::galois_ring) {
            // Residue field modulus is the reduction mod p of the lift,
            // which is the original irreducible over F_p.
            for (auto& c : rf.modulus) c %= desc_.p;
        }
        residue_field_ = build(rf);
    }

    // Square multiset drives the census transfer step.
    std::map<uint32_t, uint32_t> sq;
    for (uint32_t r = 0; r < size_; ++r) ++sq[mul(r, r)];
    squares_.assign(sq.begin(), sq.end());

    // Square classes.  Odd q: Euler criterion on the residue-field image.
    // Even q: explicit membership in the set of squares of units.
    sq_class_.assign(size_, SquareClass::non_unit);
    if (q_ % 2 == 1) {
        const Ring* rf = residue_field_ ? residue_field_.get() : this;
        uint64_t euler = (uint64_t)(q_ - 1) / 2;
        for (uint32_t x = 0; x < size_; ++x) {
            if (val_[x] != 0) continue;
            uint32_t img = desc_.e >= 2 ? reduce(x, 1) : x;
            sq_class_[x] = rf->pow(img, euler) == 1 ? SquareClass::qr_unit : SquareClass::nqr_unit;
        }
    } else {
        std::vector<bool> unit_square(size_, false);
        for (uint32_t u = 0; u < size_; ++u)
            if (val_[u] == 0) unit_square[mul(u, u)] = true;
        for (uint32_t x = 0; x < size_; ++x) {
            if (val_[x] != 0) continue;
            sq_class_[x] = unit_square[x] ? SquareClass::qr_unit : SquareClass::nqr_unit;
        }
    }
}

namespace {

// Renders sum of c_i * g^i, ascending powers, constant term first.
std::string poly_display(const std::vector<std::string>& coeffs, const std::vector<bool>& is_one, char g) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].empty()) continue; // zero term
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += coeffs[i];
        } else {
            if (!is_one[i]) out += coeffs[i];
            out += g;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string Ring::display(uint32_t a) const {
    switch (desc_.kind) {
    case RingKind::field: {
        if (desc_.k == 1) return std::to_string(a);
        uint32_t d[32];
        decode_digits(a, desc_.p, desc_.k, d);
        std::vector<std::string> coeffs(desc_.k);
        std::vector<bool> ones(desc_.k);
        for (uint32_t i = 0; i < desc_.k; ++i) {
            coeffs[i] = d[i] ? std::to_string(d[i]) : "";
            ones[i] = d[i] == 1;
        }
        return poly_display(coeffs, ones, 'x');
    }
    case RingKind::modular:
        return std::to_string(a);
    case RingKind::poly_chain: {
        uint32_t d[32];
        decode_digits(a, q_, desc_.e, d);
        std::vector<std::string> coeffs(desc_.e);
        std::vector<bool> ones(desc_.e);
        for (uint32_t i = 0; i < desc_.e; ++i) {
            ones[i] = d[i] == 1;
            if (d[i] == 0) continue;
            std::string cd = base_field_ ? base_field_->display(d[i]) : std::to_string(d[i]);
            if (cd.find('+') != std::string::npos) cd = "(" + cd + ")";
            coeffs[i] = cd;
        }
        return poly_display(coeffs, ones, 'u');
    }
    case RingKind::galois_ring: {
        uint32_t m = (uint32_t)ipow(desc_.p, desc_.e);
        uint32_t d[32];
        decode_digits(a, m, desc_.k, d);
        std::vector<std::string> coeffs(desc_.k);
        std::vector<bool> ones(desc_.k);
        for (uint32_t i = 0; i < desc_.k; ++i) {
            coeffs[i] = d[i] ? std::to_string(d[i]) : "";
            ones[i] = d[i] == 1;
        }
        return poly_display(coeffs, ones, 'x');
    }
    }
    return std::to_string(a);
}

} // namespace stdet
