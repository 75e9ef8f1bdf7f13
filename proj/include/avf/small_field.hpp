#pragma once

#include "avf/integer.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace avf {

// Table-backed arithmetic for small finite fields F_{p^e}, p^e bounded by the
// oracle field cap.  Elements are packed base-p digit strings in [0, p^e):
// value c_0 + c_1 p + ... encodes c_0 + c_1 x + ... modulo the lexicographically
// smallest monic irreducible of degree e.  Multiplication runs on discrete
// logs, addition on Zech logarithms.
class SmallField {
  public:
    using El = std::uint32_t;

    SmallField(std::uint32_t p, std::uint32_t e, std::uint64_t cap);

    std::uint32_t p() const { return p_; }
    std::uint32_t ext_degree() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; } // low-first, monic

    El zero() const { return 0; }
    El one() const { return 1; }
    El from_uint(std::uint64_t c) const { return static_cast<El>(c % p_); }

    El add(El a, El b) const;
    El sub(El a, El b) const { return add(a, neg(b)); }
    El neg(El a) const;
    El mul(El a, El b) const;
    El inv(El a) const;
    El div(El a, El b) const { return mul(a, inv(b)); }
    El pow(El a, std::uint64_t k) const;

    // odd characteristic: one square root if it exists (the other is neg)
    bool sqrt(El a, El* root) const;
    bool is_square(El a) const;
    // characteristic 2: absolute trace, the Frobenius inverse y -> y^{q/2},
    // and a solution of w^2 + w = c when Tr(c) = 0
    El frob_sqrt(El a) const;
    bool artin_schreier_solve(El c, El* w) const;

    // the image of a subfield element under the embedding that sends the
    // subfield generator to the smallest root of its modulus here
    class Embedding {
      public:
        El operator()(El sub_elt) const { return map_[sub_elt]; }

      private:
        friend class SmallField;
        std::vector<El> map_;
    };
    Embedding embed_from(const SmallField& subfield) const;

  private:
    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<El> exp_;           // exp_[i] = packed(gamma^i), size 2(q-1)
    std::vector<std::uint32_t> log_; // log_[packed], log_[0] = sentinel
    std::vector<std::uint32_t> zech_; // zech_[i] = log(1 + gamma^i), sentinel for -1
    static constexpr std::uint32_t kSentinel = 0xffffffffu;

    // odd char tables
    std::vector<El> sqrt_;
    // char 2 tables
    std::vector<El> frob_sqrt_;
    std::vector<El> artin_;

    El add_packed(El a, El b) const;
};

// Process-wide cache of constructed fields (they are immutable); the cap is
// still enforced per call.  Thread-safe.
std::shared_ptr<const SmallField> shared_small_field(std::uint32_t p, std::uint32_t e, std::uint64_t cap);

} // namespace avf
