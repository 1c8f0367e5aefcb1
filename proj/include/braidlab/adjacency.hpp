#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidlab/braid.hpp"

namespace braidlab {

/// A torus link T_{p,q}, optionally split-united with `unknots` trivial
/// components (idle strands of the braid).
struct TorusClaim {
  int p = 1;
  int q = 1;
  int unknots = 0;

  /// "T(2,5)" or "T(3,4) + 2 unknots"
  std::string str() const;
  friend bool operator==(const TorusClaim&, const TorusClaim&) = default;
};

struct CertificateStep {
  BraidMove move;
  /// word_hash of the word after this move.
  std::uint64_t hash = 0;
  /// Full word after this move, stored at block boundaries.
  std::optional<BraidWord> checkpoint;
};

/// Move sequence from a positive word closing to `target` down to one
/// closing to `source`. Deletions run from the larger link to the smaller.
struct AdjacencyCertificate {
  int version = 1;
  int strands = 1;
  TorusClaim source;
  TorusClaim target;
  BraidWord initial_word;
  std::vector<CertificateStep> steps;
  std::string construction;
  std::map<std::string, std::int64_t> params;
  std::int64_t achieved_n = 0;
  /// Set by adj_staircase: "full-bound" or "composed-floor".
  std::string achieved;

  std::size_t deletions() const;
  /// Replays every step; throws on an illegal move.
  BraidWord final_word() const;
};

/// FNV-1a (64 bit) over the strand count as u32 LE followed by each letter
/// as i32 LE.
std::uint64_t word_hash(const BraidWord& w);
std::string hash_hex(std::uint64_t h);
std::uint64_t parse_hash_hex(const std::string& text);

struct Verdict {
  enum class Status { Valid, InvalidStep, EndpointMismatch };
  Status status = Status::Valid;
  std::size_t step_index = 0;
  std::string reason;
  /// "initial" or "final" for EndpointMismatch.
  std::string which;
  std::string expected;
  std::string found;

  bool valid() const noexcept { return status == Status::Valid; }
  std::string str() const;
};

/// Replays the certificate and checks the initial word against the target
/// claim and the final word against the source claim. Never throws for a
/// malformed certificate; the problem is reported in the verdict.
Verdict verify(const AdjacencyCertificate& cert);

/// Whether the closure of `w` matches the claim, comparing components,
/// Bennequin Euler characteristic and Alexander polynomial after removing
/// claim.unknots idle strands. Returns a description of the mismatch.
std::optional<std::string> claim_mismatch(const BraidWord& w, const TorusClaim& claim);

/// T_{n,m} (plus a - n split unknots) inside T_{a,b} by deleting rows and
/// columns of (a_1 ... a_{a-1})^b. Throws BoundViolated unless n <= a, m <= b.
AdjacencyCertificate adj_grid(int n, int m, int a, int b);

/// T_{2,n} inside T_{3,m}, n = floor((5m - 1) / 3).
AdjacencyCertificate adj_index3(int m);

/// T_{2,n} inside T_{4,m}, n = floor((5m - 3) / 2).
AdjacencyCertificate adj_index4(int m);

struct HalfTwistReduction {
  std::vector<BraidMove> moves;
  /// Split union of positive 2-braids obtained from half_twist(m).
  BraidWord beta;
};

/// Deletions and relations turning half_twist(m) into beta_m.
HalfTwistReduction half_twist_reduce(int m);

/// Length of beta_m: (3l-1)l, (3l+1)l, (3l+3)l+1 for m = 3l, 3l+1, 3l+2.
std::int64_t beta_length(int m);

/// T_{2,n} inside T_{m,m} starting from the word half_twist(m)^2,
/// n = m - 1 + len(beta_{m-2}) + len(beta_m).
AdjacencyCertificate adj_square(int m);

/// T_{2,n} inside T_{m,m+1}. Tries a construction reaching
/// floor((2m^2 - m + 5) / 3) and falls back to adj_square after deleting
/// one factor; `achieved` records which one was emitted.
AdjacencyCertificate adj_staircase(int m);

/// Largest integer <= (2m^2 + 4) / 3 - m.
std::int64_t square_bound(std::int64_t m);
/// floor((2m^2 - m + 5) / 3).
std::int64_t staircase_bound(std::int64_t m);

}  // namespace braidlab
