#ifndef WLP_RANK_HPP
#define WLP_RANK_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "wlp/matrix.hpp"

namespace wlp {

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Prime modulus; construction rejects non-primes.
struct PrimeField {
  std::uint64_t p;
  explicit PrimeField(std::uint64_t modulus);
};

enum class RankMethod { kBareissExact, kModularMultiPrime };

struct RankOptions {
  // Force fraction-free elimination regardless of size (--exact).
  bool force_exact = false;
  // Seed for prime selection; fixed default keeps runs reproducible.
  std::uint64_t seed = 1;
  // Bareiss when min(rows, cols) is at most this, else modular.
  std::int64_t bareiss_max_dim = 256;
  // Modular certification: ranks mod this many primes, then the running
  // max must be re-verified by one further prime.
  int initial_primes = 3;
  int max_primes = 24;
};

struct RankResult {
  std::int64_t rank = 0;
  RankMethod method = RankMethod::kBareissExact;
  std::vector<std::uint64_t> primes_used;
};

/// Rank of the matrix reduced mod p. Throws std::invalid_argument if p is
/// not prime.
std::int64_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p);

/// Exact rank over the rationals. Fraction-free (Bareiss) elimination with
/// big integers up to bareiss_max_dim; beyond that, ranks modulo random
/// primes with cross-prime agreement (mod-p rank never exceeds the
/// rational rank, so the certified value is the observed max).
RankResult rank_rational(const IntegerMatrix& m, const RankOptions& opts = {});

// Coefficient field: characteristic 0 means the rationals.
struct FieldSpec {
  std::uint64_t characteristic = 0;
};

struct SpanResult {
  bool in_span = false;
  RankMethod method = RankMethod::kBareissExact;
  std::vector<std::uint64_t> primes_used;
  // A solution x of M x = v. Present whenever in_span on the exact paths
  // (always over F_p; over Q when the exact-elimination path ran). Entries
  // over F_p are integer residues in [0, p).
  std::optional<std::vector<mpq_class>> witness;
};

/// Decides v in columnspan(M) over the field; v.size() must equal rows(M).
SpanResult in_column_span(const IntegerMatrix& m,
                          const std::vector<std::int64_t>& v, FieldSpec field,
                          const RankOptions& opts = {});

}  // namespace wlp

#endif  // WLP_RANK_HPP
