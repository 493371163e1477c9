#include "pivot/gen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pivot {

namespace {

constexpr std::uint64_t kPcgMultiplier = 6364136223846793005ULL;

constexpr int kResampleBudget = 100;
constexpr int kPerturbBudget = 16;

// Sub-seed streams for the pieces of one block instance.
enum SeedStream : std::uint64_t {
  kStreamA = 1,
  kStreamK = 2,
  kStreamCouplers = 3,
  kStreamPerturbation = 4,
};

void validate_spec(const InstanceSpec& spec) {
  if (spec.p < 1 || spec.q < 1) {
    throw std::invalid_argument("InstanceSpec: block dimensions must be >= 1");
  }
  if (spec.rank_a < 1 || spec.rank_a > spec.p) {
    throw std::invalid_argument("InstanceSpec: rank_a out of bounds");
  }
  if (spec.rank_k < 1 || spec.rank_k > spec.q) {
    throw std::invalid_argument("InstanceSpec: rank_k out of bounds");
  }
}

struct CoreDraw {
  Matrix a;
  Matrix k;
  Matrix a_sharp;
  Matrix k_sharp;
  Matrix b0;
  Matrix c0;
};

CoreDraw draw_core(const InstanceSpec& spec, const Tolerance& tol) {
  CoreDraw core;
  core.a = random_index1(spec.p, spec.rank_a, split_seed(spec.seed, kStreamA),
                         tol);
  core.k = random_index1(spec.q, spec.rank_k, split_seed(spec.seed, kStreamK),
                         tol);
  core.a_sharp = group_inverse(core.a, tol).inverse;
  core.k_sharp = group_inverse(core.k, tol).inverse;
  Pcg32 rng(split_seed(spec.seed, kStreamCouplers));
  core.b0 = gaussian_matrix(spec.p, spec.q, rng);
  core.c0 = gaussian_matrix(spec.q, spec.p, rng);
  return core;
}

BlockMatrix assemble_instance(const CoreDraw& core, const Matrix& b,
                              const Matrix& c, const Tolerance&) {
  const Matrix d = core.k + c * (core.a_sharp * b);
  return BlockMatrix(core.a, b, c, d);
}

bool named_field(const HypothesisReport& report, Violation v) {
  switch (v) {
    case Violation::incl_CstarAstar:
      return report.incl_CstarAstar;
    case Violation::incl_BA:
      return report.incl_BA;
    case Violation::incl_CK:
      return report.incl_CK;
    case Violation::incl_BstarKstar:
      return report.incl_BstarKstar;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Pcg32::Pcg32(std::uint64_t seed, std::uint64_t stream)
    : state_(0), inc_((stream << 1u) | 1u) {
  next_u32();
  state_ += seed;
  next_u32();
}

std::uint32_t Pcg32::next_u32() {
  const std::uint64_t old = state_;
  state_ = old * kPcgMultiplier + inc_;
  const auto xorshifted =
      static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

double Pcg32::next_double() {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  const std::uint64_t bits = ((hi << 32u) | lo) >> 11u;  // top 53 bits
  return static_cast<double>(bits) * 0x1.0p-53;
}

Complex Pcg32::next_complex_gaussian() {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  const std::uint64_t bits = ((hi << 32u) | lo) >> 11u;
  const double u = static_cast<double>(bits + 1) * 0x1.0p-53;  // (0, 1]
  const double v = next_double();
  const double radius = std::sqrt(-std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  return Complex(radius * std::cos(angle), radius * std::sin(angle));
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30u)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27u)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31u);
}

Matrix gaussian_matrix(Index rows, Index cols, Pcg32& rng) {
  Matrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      out(i, j) = rng.next_complex_gaussian();
    }
  }
  return out;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::incl_CstarAstar:
      return "incl_CstarAstar";
    case Violation::incl_BA:
      return "incl_BA";
    case Violation::incl_CK:
      return "incl_CK";
    case Violation::incl_BstarKstar:
      return "incl_BstarKstar";
  }
  throw std::logic_error("unreachable");
}

std::optional<Violation> violation_from_string(std::string_view name) {
  if (name == "incl_CstarAstar") return Violation::incl_CstarAstar;
  if (name == "incl_BA") return Violation::incl_BA;
  if (name == "incl_CK") return Violation::incl_CK;
  if (name == "incl_BstarKstar") return Violation::incl_BstarKstar;
  return std::nullopt;
}

const char* theorem2_violated_field(Violation v) {
  switch (v) {
    case Violation::incl_CstarAstar:
      return "incl_BstarDstar";
    case Violation::incl_BA:
      return "incl_CD";
    case Violation::incl_CK:
      return "incl_BL";
    case Violation::incl_BstarKstar:
      return "incl_CstarLstar";
  }
  throw std::logic_error("unreachable");
}

Matrix random_index1(Index n, Index r, std::uint64_t seed,
                     const Tolerance& tol) {
  if (n < 1 || r < 1 || r > n) {
    throw std::invalid_argument("random_index1: need 1 <= r <= n");
  }
  Pcg32 rng(seed);
  const double cond_ceiling = 1.0 / tol.effective_rank_rtol(n, n);
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    const Matrix f = gaussian_matrix(n, r, rng);
    const Matrix g = gaussian_matrix(r, n, rng);
    const Matrix w = g * f;
    const Eigen::JacobiSVD<Matrix> svd(w);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv(r - 1) <= 0.0 || sv(0) / sv(r - 1) >= cond_ceiling) {
      continue;
    }
    Matrix a = f * g;
    if (numerical_rank(a, tol) == r && has_index_at_most_one(a, tol)) {
      return a;
    }
  }
  throw GenerationFailure("random_index1: resample budget exhausted for n=" +
                          std::to_string(n) + ", r=" + std::to_string(r));
}

Theorem1Draw theorem1_draw(const InstanceSpec& spec, const Tolerance& tol) {
  validate_spec(spec);
  const CoreDraw core = draw_core(spec, tol);
  const Matrix b = core.a * core.b0 * core.k;
  const Matrix c = core.k * core.c0 * core.a;
  return Theorem1Draw{assemble_instance(core, b, c, tol), core.k};
}

BlockMatrix theorem1_instance(const InstanceSpec& spec, const Tolerance& tol) {
  if (spec.violate) {
    throw std::invalid_argument(
        "theorem1_instance: spec.violate must be absent");
  }
  return theorem1_draw(spec, tol).blocks;
}

BlockMatrix theorem1_violating_instance(const InstanceSpec& spec,
                                        const Tolerance& tol) {
  validate_spec(spec);
  if (!spec.violate) {
    throw std::invalid_argument(
        "theorem1_violating_instance: spec.violate must name an inclusion");
  }
  const Violation target = *spec.violate;
  const bool a_side = target == Violation::incl_BA ||
                      target == Violation::incl_CstarAstar;
  if (a_side && spec.rank_a == spec.p) {
    throw InfeasibleViolation(std::string(to_string(target)) +
                              " cannot be broken: A has full rank");
  }
  if (!a_side && spec.rank_k == spec.q) {
    throw InfeasibleViolation(std::string(to_string(target)) +
                              " cannot be broken: K has full rank");
  }

  const CoreDraw core = draw_core(spec, tol);
  const Matrix base_b = core.a * core.b0 * core.k;
  const Matrix base_c = core.k * core.c0 * core.a;
  // Oblique projectors onto N(A) and N(K); sandwiching the perturbation
  // between a projector and the opposite core keeps every inclusion except
  // the targeted one intact, and leaves K = D - C A# B unchanged.
  const Matrix proj_a =
      Matrix::Identity(spec.p, spec.p) - core.a * core.a_sharp;
  const Matrix proj_k =
      Matrix::Identity(spec.q, spec.q) - core.k * core.k_sharp;

  Pcg32 rng(split_seed(spec.seed, kStreamPerturbation));
  for (int attempt = 0; attempt < kPerturbBudget; ++attempt) {
    Matrix b = base_b;
    Matrix c = base_c;
    switch (target) {
      case Violation::incl_BA:
        b += proj_a * gaussian_matrix(spec.p, spec.q, rng) * core.k;
        break;
      case Violation::incl_BstarKstar:
        b += core.a * gaussian_matrix(spec.p, spec.q, rng) * proj_k;
        break;
      case Violation::incl_CstarAstar:
        c += core.k * gaussian_matrix(spec.q, spec.p, rng) * proj_a;
        break;
      case Violation::incl_CK:
        c += proj_k * gaussian_matrix(spec.q, spec.p, rng) * core.a;
        break;
    }
    BlockMatrix m = assemble_instance(core, b, c, tol);
    if (!named_field(check_hypotheses(m, tol), target)) {
      return m;
    }
  }
  throw GenerationFailure(
      std::string("theorem1_violating_instance: perturbation failed to break ") +
      to_string(target));
}

BlockMatrix theorem2_instance(const InstanceSpec& spec, const Tolerance& tol) {
  return block_swap(theorem1_instance(spec, tol));
}

BlockMatrix theorem2_violating_instance(const InstanceSpec& spec,
                                        const Tolerance& tol) {
  return block_swap(theorem1_violating_instance(spec, tol));
}

}  // namespace pivot
