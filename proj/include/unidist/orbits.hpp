#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "unidist/common.hpp"
#include "unidist/jacquet.hpp"
#include "unidist/segcalc.hpp"
#include "unidist/tri.hpp"
#include "unidist/weylinv.hpp"

namespace unidist::orb {

inline constexpr int64_t kDefaultSupportCap = 24;

enum class BlockKind { Ltype, Ztype, Ladder };

// One inducing factor on the Siegel Levi: L(segment), Z(segment) or a ladder.
struct BlockSpec {
    BlockKind kind = BlockKind::Ltype;
    seg::Multisegment payload;  // exactly one segment for Ltype/Ztype

    int64_t size() const { return payload.total_length(); }
    static BlockSpec L(const seg::Segment& s) { return {BlockKind::Ltype, {{s}}}; }
    static BlockSpec Z(const seg::Segment& s) { return {BlockKind::Ztype, {{s}}}; }
    static BlockSpec ladder(const seg::Multisegment& m) { return {BlockKind::Ladder, m}; }
};

void validate_blocks(const seg::LineTable& t, const std::vector<BlockSpec>& blocks);

// A candidate orbit: per-block splits, the cut s_i defining
// c = {(i,j) : s_i < j <= j_i}, and an involution of the flattened index set
// with tau(c) = c whose image rows are strictly monotone along each row
// (increasing on the part outside c, decreasing inside).
struct OrbitShape {
    std::vector<jac::Composition> splits;
    std::vector<int> s_cut;
    std::vector<int> tau;  // flat involution, 0-based

    int flat_size() const { return static_cast<int>(tau.size()); }
    std::vector<std::pair<int, int>> flat_index() const;  // (block, part), 0-based
    std::vector<bool> membership() const;                 // flat -> in c
};

// All involutions of W_k admissible for the given block sizes: those with
// every tau-and-sign fixed block of even size.
std::vector<weyl::SignedPermutation> admissible_involutions(const std::vector<int64_t>& sizes);

// Symbolic stabilizer: GL_{n_i}(F) on sign-free fixed blocks, GL_{n_i}(E)
// identifying swapped pairs, Sp_{n_i}(E) on signed fixed blocks.
struct StabFactor {
    enum Kind { GL_F, GL_E, Sp_E } kind = GL_F;
    int64_t size = 0;
    int block = 0;    // 1-based
    int partner = 0;  // 1-based; equals block unless kind == GL_E
};
std::vector<StabFactor> stabilizer_descriptor(const weyl::SignedPermutation& w,
                                              const std::vector<int64_t>& sizes);

// Per-block |det| exponent of the relevant modulus character.
struct ModulusEntry {
    int block = 0;  // 1-based
    enum Field { F, E } field = F;
    int exponent = 0;
};
std::vector<ModulusEntry> modulus_exponents(const weyl::SignedPermutation& w,
                                            const std::vector<int64_t>& sizes);

// Streams every orbit shape for the given block sizes, ordered by total part
// count, then composition, cut and involution lexicographically.
void enumerate_orbit_shapes(const std::vector<int64_t>& sizes,
                            const std::function<void(const OrbitShape&)>& sink,
                            int64_t cap = kDefaultSupportCap);
std::vector<OrbitShape> enumerate_orbit_shapes(const std::vector<int64_t>& sizes,
                                               int64_t cap = kDefaultSupportCap);

// One inducing-factor assignment: the Langlands data of each flat factor.
using FactorAssignment = std::vector<seg::Multisegment>;

// All factor assignments compatible with the shape's splits (one per term of
// each ladder block's splitting; L and Z blocks contribute a single term).
std::vector<FactorAssignment> factor_terms(const seg::LineTable& t,
                                           const std::vector<BlockSpec>& blocks,
                                           const OrbitShape& shape);

struct ConditionEntry {
    int block = 0, part = 0;          // 1-based index pair
    std::string condition;            // "glf-half" | "sp" | "pair-nu-dual" | "pair-nu-inv"
    Tri verdict = Tri::Unknown;
    std::string witness;
};

struct RelevanceResult {
    Tri verdict = Tri::Unknown;
    std::vector<ConditionEntry> log;
};

// With verbose = false the log skips the witness strings; the certificate
// path re-checks verbosely.
RelevanceResult check_relevant(const seg::LineTable& t, const std::vector<BlockSpec>& blocks,
                               const OrbitShape& shape, const FactorAssignment& factors,
                               const seg::SegcalcConfig& cfg = {}, bool verbose = true);

struct RelevanceCertificate {
    OrbitShape orbit;
    FactorAssignment factors;
    std::vector<ConditionEntry> conditions;
};

struct SearchOutcome {
    enum Kind { Found, NoneCertified, Unknown } kind = Unknown;
    RelevanceCertificate certificate;  // valid when kind == Found
    std::vector<ConditionEntry> failure_log;  // first failures, capped
    int64_t branches = 0;
    int64_t unknown_branches = 0;
};

// Scans all orbit shapes and factor terms in enumeration order. Found on the
// first fully-satisfied branch; NoneCertified only when every branch fails a
// definite condition; Unknown otherwise.
SearchOutcome exists_relevant(const seg::LineTable& t, const std::vector<BlockSpec>& blocks,
                              int64_t cap = kDefaultSupportCap,
                              const seg::SegcalcConfig& cfg = {});

// GL(F)-distinction of nu^{-1/2} L(m) for an inducing factor, Unknown-propagating.
Tri glf_half_dist(const seg::LineTable& t, const seg::Multisegment& m,
                  const seg::SegcalcConfig& cfg = {});
// Sp-distinction of the inducing factor L(m) (m ladder data).
bool sp_dist_factor(const seg::LineTable& t, const seg::Multisegment& m);

} // namespace unidist::orb
