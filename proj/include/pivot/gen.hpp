#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pivot/block.hpp"

namespace pivot {

/// pcg32 (PCG-XSH-RR): 64-bit LCG state advanced by
/// state * 6364136223846793005 + inc, output by xorshift-high then a
/// data-dependent 32-bit rotation. Fixed published constants, so streams
/// are identical across platforms and runs. See README for the exact
/// sampling recipes built on top.
class Pcg32 {
 public:
  static constexpr std::uint64_t kDefaultStream = 0xda3e39cb94b95bdbULL;

  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = kDefaultStream);

  std::uint32_t next_u32();

  /// Uniform on [0, 1) with 53 random mantissa bits (two u32 draws).
  double next_double();

  /// Standard complex Gaussian CN(0,1): sqrt(-ln u) * exp(2*pi*i*v) with
  /// u uniform on (0, 1] and v uniform on [0, 1).
  Complex next_complex_gaussian();

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

/// splitmix64 mix of (seed, stream), used to derive independent sub-seeds
/// for the components of one instance.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/// Matrix with independent CN(0,1) entries drawn row-major from rng.
Matrix gaussian_matrix(Index rows, Index cols, Pcg32& rng);

/// Theorem-1 hypotheses that the violating generator can break surgically.
enum class Violation {
  incl_CstarAstar,
  incl_BA,
  incl_CK,
  incl_BstarKstar,
};

const char* to_string(Violation v);
std::optional<Violation> violation_from_string(std::string_view name);

/// Name of the Theorem-2 inclusion that block-swapping maps v onto.
const char* theorem2_violated_field(Violation v);

/// Seeded recipe for one reproducible block instance.
struct InstanceSpec {
  Index p = 2;
  Index q = 2;
  Index rank_a = 1;
  Index rank_k = 1;
  std::uint64_t seed = 0;
  std::optional<Violation> violate;
};

/// Random n x n matrix of rank r and index at most 1, built as F * G with
/// F (n x r), G (r x n) complex Gaussian, resampled until G * F is
/// invertible with condition number below 1 / rank_rtol (at most 100
/// attempts, then GenerationFailure). Deterministic given the seed.
Matrix random_index1(Index n, Index r, std::uint64_t seed,
                     const Tolerance& tol = {});

/// theorem1_instance together with the planted pseudo Schur complement K,
/// which the construction D = K + C A# B guarantees pseudo_schur recovers.
struct Theorem1Draw {
  BlockMatrix blocks;
  Matrix planted_schur;
};

Theorem1Draw theorem1_draw(const InstanceSpec& spec, const Tolerance& tol = {});

/// Block instance satisfying all four Theorem-1 inclusions by construction:
/// A and K drawn by random_index1, B = A B0 K, C = K C0 A, D = K + C A# B.
BlockMatrix theorem1_instance(const InstanceSpec& spec,
                              const Tolerance& tol = {});

/// Instance breaking exactly spec.violate while preserving the index-1
/// property of A and of the pseudo Schur complement. Throws
/// InfeasibleViolation when the named inclusion cannot be broken at the
/// requested ranks (rank_a = p for the A-side inclusions, rank_k = q for
/// the K-side ones).
BlockMatrix theorem1_violating_instance(const InstanceSpec& spec,
                                        const Tolerance& tol = {});

/// Theorem-2 mirrors, realized by block_swap of the Theorem-1 generators.
BlockMatrix theorem2_instance(const InstanceSpec& spec,
                              const Tolerance& tol = {});
BlockMatrix theorem2_violating_instance(const InstanceSpec& spec,
                                        const Tolerance& tol = {});

}  // namespace pivot
