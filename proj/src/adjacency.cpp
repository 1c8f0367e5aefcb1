#include "braidlab/adjacency.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <sstream>

#include "braidlab/closure.hpp"
#include "braidlab/error.hpp"

namespace braidlab {

namespace {

using move::CyclicShift;
using move::DeleteGenerator;
using move::Relation;

// Relation moves on positive words, without going through exceptions.
std::optional<std::vector<int>> try_relation(const std::vector<int>& w, std::size_t p, Relation::Form form) {
  if (form == Relation::Form::Long) {
    if (p + 2 >= w.size() || w[p] != w[p + 2] || std::abs(w[p] - w[p + 1]) != 1) return std::nullopt;
    auto v = w;
    std::swap(v[p], v[p + 1]);
    v[p + 2] = v[p];
    return v;
  }
  if (p + 1 >= w.size() || std::abs(w[p] - w[p + 1]) < 2) return std::nullopt;
  auto v = w;
  std::swap(v[p], v[p + 1]);
  return v;
}

// Shortest sequence of relations turning the positive word `from` into `to`.
// Equal positive braids are connected through positive words, so the search
// stays inside a finite set. Results are memoized.
std::vector<Relation> rewrite_sequence(const std::vector<int>& from, const std::vector<int>& to) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Relation>> memo;
  auto key = std::make_pair(from, to);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  std::map<std::vector<int>, std::pair<std::vector<int>, Relation>> parent;
  std::deque<std::vector<int>> queue{from};
  parent.emplace(from, std::make_pair(std::vector<int>{}, Relation{}));
  bool found = from == to;
  while (!queue.empty() && !found) {
    auto w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < w.size() && !found; ++p) {
      for (auto form : {Relation::Form::Long, Relation::Form::Commuting}) {
        auto v = try_relation(w, p, form);
        if (!v || parent.count(*v)) continue;
        parent.emplace(*v, std::make_pair(w, Relation{p, form}));
        if (*v == to) {
          found = true;
          break;
        }
        queue.push_back(std::move(*v));
      }
    }
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "no positive rewrite between the given words");
  std::vector<Relation> path;
  for (auto cur = to; cur != from;) {
    const auto& [prev, rel] = parent.at(cur);
    path.push_back(rel);
    cur = prev;
  }
  std::reverse(path.begin(), path.end());
  std::lock_guard lock(mutex);
  memo.emplace(std::move(key), path);
  return path;
}

class Builder {
 public:
  explicit Builder(BraidWord initial) : initial_(initial), word_(std::move(initial)) {}

  const BraidWord& word() const { return word_; }
  int letter(std::size_t pos) const { return word_.letters().at(pos); }

  void apply(const BraidMove& mv) {
    apply_move_in_place(word_, mv);
    steps_.push_back(CertificateStep{mv, word_hash(word_), std::nullopt});
  }
  void long_relation(std::size_t pos) { apply(Relation{pos, Relation::Form::Long}); }
  void commute(std::size_t pos) { apply(Relation{pos, Relation::Form::Commuting}); }
  void remove(std::size_t pos) { apply(DeleteGenerator{pos}); }

  void remove_expect(std::size_t pos, int expected) {
    if (letter(pos) != expected) {
      throw Error(ErrorCode::InvalidArgument, "expected a_" + std::to_string(expected) + " at " + std::to_string(pos));
    }
    remove(pos);
  }

  // Rewrites the window starting at pos into `target` (same length).
  void rewrite(std::size_t pos, const std::vector<int>& target) {
    const auto& ls = word_.letters();
    std::vector<int> window(ls.begin() + static_cast<long>(pos), ls.begin() + static_cast<long>(pos + target.size()));
    for (const auto& rel : rewrite_sequence(window, target)) apply(Relation{pos + rel.position, rel.form});
  }

  void checkpoint() {
    if (!steps_.empty()) steps_.back().checkpoint = word_;
  }

  // Deletes the last `count` occurrences of generator g (all if count < 0)
  // among positions >= from.
  void delete_last(int g, long count, std::size_t from = 0) {
    for (std::size_t pos = word_.size(); pos-- > from && count != 0;) {
      if (letter(pos) == g) {
        remove(pos);
        --count;
      }
    }
  }

  AdjacencyCertificate finish(TorusClaim source, TorusClaim target, std::string construction,
                              std::map<std::string, std::int64_t> params, std::int64_t achieved_n) {
    checkpoint();
    AdjacencyCertificate c;
    c.strands = initial_.strands();
    c.source = source;
    c.target = target;
    c.initial_word = initial_;
    c.steps = std::move(steps_);
    c.construction = std::move(construction);
    c.params = std::move(params);
    c.achieved_n = achieved_n;
    return c;
  }

  std::vector<BraidMove> moves() const {
    std::vector<BraidMove> out;
    for (const auto& s : steps_) out.push_back(s.move);
    return out;
  }

 private:
  BraidWord initial_;
  BraidWord word_;
  std::vector<CertificateStep> steps_;
};

// a_t A_j -> A_j a_{t-1} at position p, where A_j = a_1 ... a_j (shifted).
void pass_through_run(Builder& b, std::size_t p, int t, int j) {
  for (int k = 0; k < t - 2; ++k) b.commute(p + static_cast<std::size_t>(k));
  b.long_relation(p + static_cast<std::size_t>(t - 2));
  for (int k = 0; k < j - t; ++k) b.commute(p + static_cast<std::size_t>(t + k));
}

// A_j A_j A_{j-1} ... A_1 -> (a_1 A_j)(a_1 A_{j-1}) ... (a_1 A_1) at pos.
void collapse_runs(Builder& b, std::size_t pos, int j) {
  for (int jj = j; jj >= 2; --jj) {
    for (int t = jj; t >= 2; --t) pass_through_run(b, pos + static_cast<std::size_t>(t - 1), t, jj);
    pos += static_cast<std::size_t>(jj + 1);
  }
}

void reduce_half_twist(Builder& b, std::size_t offset, int shift, int m);

// Region (a_1 A_j) ... (a_1 A_1) at offset: delete every a_2, collect the
// a_1 letters in front and reduce the half twist left on strands 3 and up.
void strip_and_recurse(Builder& b, std::size_t offset, int shift, int j) {
  const std::size_t len = static_cast<std::size_t>(j) * static_cast<std::size_t>(j + 1) / 2 + static_cast<std::size_t>(j);
  const std::size_t end = offset + len;
  for (std::size_t pos = end; pos-- > offset;) {
    if (b.letter(pos) == shift + 2) b.remove(pos);
  }
  const std::size_t new_end = end - static_cast<std::size_t>(std::max(0, j - 1));
  std::size_t front = offset;
  for (std::size_t pos = offset; pos < new_end; ++pos) {
    if (b.letter(pos) != shift + 1) continue;
    for (std::size_t q = pos; q > front; --q) b.commute(q - 1);
    ++front;
  }
  reduce_half_twist(b, offset + 2 * static_cast<std::size_t>(j), shift + 2, j - 1);
}

// half_twist(m) on generators shifted by `shift`, starting at offset.
void reduce_half_twist(Builder& b, std::size_t offset, int shift, int m) {
  if (m <= 2) return;
  const int j = m - 2;
  b.remove_expect(offset + static_cast<std::size_t>(m - 2), shift + m - 1);
  collapse_runs(b, offset, j);
  strip_and_recurse(b, offset, shift, j);
}

// (a_1 a_2)^3 -> a_1 a_2 a_1 a_1 a_2 a_1 for `count` consecutive blocks.
void index3_full_twists(Builder& b, std::size_t offset, int count) {
  for (int j = 0; j < count; ++j) b.long_relation(offset + 6 * static_cast<std::size_t>(j) + 3);
}

const std::vector<int> kTwist3{1, 2, 1, 1, 2, 1};

// Moves the a_1 at position p through `blocks` consecutive full twists.
void index3_push_a1(Builder& b, std::size_t p, int blocks) {
  std::vector<int> from{1};
  from.insert(from.end(), kTwist3.begin(), kTwist3.end());
  std::vector<int> to = kTwist3;
  to.push_back(1);
  for (int k = 0; k < blocks; ++k) {
    b.rewrite(p, to);
    p += 6;
  }
}

// Delta^{2l} (as l twist blocks at offset) -> (a1 a2 a1 a1 a2)^l a1^l, then
// the l - 1 relations at the junctions.
void index3_collect(Builder& b, std::size_t offset, int l) {
  for (int j = 0; j + 1 < l; ++j) {
    index3_push_a1(b, offset + 5 * static_cast<std::size_t>(j) + 5, l - 1 - j);
  }
  b.checkpoint();
  for (int j = 0; j + 1 < l; ++j) b.long_relation(offset + 5 * static_cast<std::size_t>(j) + 4);
  b.checkpoint();
}

const std::vector<int> kHalf4{1, 2, 1, 3, 2, 1};

// k half twists (a1 a3 a2)^2 at offset -> (a1 a2 a1 a3 a2)^k a1^ceil(k/2) a3^floor(k/2).
void index4_collect(Builder& b, std::size_t offset, int k) {
  for (int j = 0; j < k; ++j) b.rewrite(offset + 6 * static_cast<std::size_t>(j), kHalf4);
  b.checkpoint();
  for (int j = 0; j + 1 < k; ++j) {
    std::size_t p = offset + 5 * static_cast<std::size_t>(j) + 5;
    int x = 1;
    for (int blocks = k - 1 - j; blocks > 0; --blocks) {
      std::vector<int> to = kHalf4;
      to.push_back(4 - x);
      b.rewrite(p, to);
      x = 4 - x;
      p += 6;
    }
  }
  b.checkpoint();
}

// Sorts a run of a_1 / a_3 letters from `from` to the end into a_1^x a_3^y.
void sort_a1_a3(Builder& b, std::size_t from) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = from; p + 1 < b.word().size(); ++p) {
      if (b.letter(p) == 3 && b.letter(p + 1) == 1) {
        b.commute(p);
        changed = true;
      }
    }
  }
}

std::map<std::string, std::int64_t> param_m(int m) { return {{"m", m}}; }

}  // namespace

std::string TorusClaim::str() const {
  std::string s = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (unknots > 0) s += " + " + std::to_string(unknots) + (unknots == 1 ? " unknot" : " unknots");
  return s;
}

std::size_t AdjacencyCertificate::deletions() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const CertificateStep& s) {
    return std::holds_alternative<DeleteGenerator>(s.move);
  }));
}

BraidWord AdjacencyCertificate::final_word() const {
  BraidWord w = initial_word;
  for (const auto& s : steps) apply_move_in_place(w, s.move);
  return w;
}

std::uint64_t word_hash(const BraidWord& w) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  feed(static_cast<std::uint32_t>(w.strands()));
  for (int e : w.letters()) feed(static_cast<std::uint32_t>(e));
  return h;
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::uint64_t parse_hash_hex(const std::string& text) {
  if (text.size() != 16) throw Error(ErrorCode::ParseError, "bad hash '" + text + "'");
  std::uint64_t h = 0;
  for (char c : text) {
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else {
      throw Error(ErrorCode::ParseError, "bad hash '" + text + "'");
    }
    h = h * 16 + static_cast<std::uint64_t>(v);
  }
  return h;
}

std::string Verdict::str() const {
  switch (status) {
    case Status::Valid:
      return "Valid";
    case Status::InvalidStep:
      return "InvalidStep at step " + std::to_string(step_index) + ": " + reason;
    case Status::EndpointMismatch:
      return "EndpointMismatch (" + which + "): expected " + expected + ", found " + found;
  }
  return "";
}

std::optional<std::string> claim_mismatch(const BraidWord& w, const TorusClaim& claim) {
  if (claim.p < 1 || claim.q < 1 || claim.unknots < 0) return "claim parameters out of range";
  if (!w.is_positive()) return "a word with inverse letters";
  // Remove idle strands, highest first.
  std::vector<int> letters = w.letters();
  int strands = w.strands();
  int removed = 0;
  for (int s = strands; s >= 1 && removed < claim.unknots; --s) {
    bool touched = std::any_of(letters.begin(), letters.end(), [s](int e) { return e == s - 1 || e == s; });
    if (touched) continue;
    for (int& e : letters)
      if (e > s) --e;
    --strands;
    ++removed;
  }
  if (removed < claim.unknots) {
    return std::to_string(removed) + " idle strands instead of " + std::to_string(claim.unknots);
  }
  const BraidWord core(strands, std::move(letters));
  const auto fp = fingerprint(core);
  auto describe = [](const ClosureFingerprint& f) {
    std::string s = "components=" + std::to_string(f.components);
    if (f.bennequin_chi) s += ", chi=" + std::to_string(*f.bennequin_chi);
    s += ", alexander=" + (f.alexander ? f.alexander->str() : std::string("0"));
    return s;
  };
  if (std::min(claim.p, claim.q) == 2) {
    if (identify_torus2(core) == std::max(claim.p, claim.q)) return std::nullopt;
    return describe(fp);
  }
  const auto expected = fingerprint(torus_braid(claim.p, claim.q));
  if (fp.components == expected.components && fp.bennequin_chi == expected.bennequin_chi &&
      fp.alexander == expected.alexander) {
    return std::nullopt;
  }
  return describe(fp);
}

Verdict verify(const AdjacencyCertificate& cert) {
  Verdict v;
  if (cert.strands != cert.initial_word.strands()) {
    v.status = Verdict::Status::InvalidStep;
    v.reason = "strand count does not match the initial word";
    return v;
  }
  BraidWord w = cert.initial_word;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    try {
      apply_move_in_place(w, step.move);
    } catch (const Error& e) {
      v.status = Verdict::Status::InvalidStep;
      v.step_index = i;
      v.reason = e.what();
      return v;
    }
    if (word_hash(w) != step.hash) {
      v.status = Verdict::Status::InvalidStep;
      v.step_index = i;
      v.reason = "hash mismatch (expected " + hash_hex(step.hash) + ", replay gives " + hash_hex(word_hash(w)) + ")";
      return v;
    }
    if (step.checkpoint && *step.checkpoint != w) {
      v.status = Verdict::Status::InvalidStep;
      v.step_index = i;
      v.reason = "checkpoint word differs from replay";
      return v;
    }
  }
  for (const auto& [which, word, claim] :
       {std::tuple{"initial", cert.initial_word, cert.target}, std::tuple{"final", w, cert.source}}) {
    std::optional<std::string> mismatch;
    try {
      mismatch = claim_mismatch(word, claim);
    } catch (const Error& e) {
      mismatch = e.what();
    }
    if (mismatch) {
      v.status = Verdict::Status::EndpointMismatch;
      v.which = which;
      v.expected = claim.str();
      v.found = *mismatch;
      return v;
    }
  }
  return v;
}

AdjacencyCertificate adj_grid(int n, int m, int a, int b) {
  if (n < 1 || m < 1 || a < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "grid parameters must be positive");
  if (n > a || m > b) {
    throw Error(ErrorCode::BoundViolated, "T(" + std::to_string(n) + "," + std::to_string(m) + ") does not fit in T(" +
                                              std::to_string(a) + "," + std::to_string(b) + ")");
  }
  Builder bld(torus_braid(a, b));
  const std::size_t row = static_cast<std::size_t>(a - 1);
  // Drop whole factors from the end, then the top generators of each factor.
  for (std::size_t k = 0; k < row * static_cast<std::size_t>(b - m); ++k) bld.remove(bld.word().size() - 1);
  bld.checkpoint();
  for (int f = m - 1; f >= 0; --f) {
    for (int g = a - 1; g >= n; --g) bld.remove_expect(static_cast<std::size_t>(f) * row + static_cast<std::size_t>(g - 1), g);
  }
  return bld.finish(TorusClaim{n, m, a - n}, TorusClaim{a, b, 0}, "grid", {{"n", n}, {"m", m}, {"a", a}, {"b", b}},
                    n);
}

AdjacencyCertificate adj_index3(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "index3 needs m >= 2");
  const int l = m / 3;
  Builder b(torus_braid(3, m));
  std::int64_t n = 0;
  switch (m % 3) {
    case 0:
      index3_full_twists(b, 0, l);
      b.checkpoint();
      index3_collect(b, 0, l);
      n = 5 * l - 1;
      break;
    case 1:
      index3_full_twists(b, 2, l);
      b.checkpoint();
      index3_collect(b, 2, l);
      b.long_relation(1);
      n = 5 * l + 1;
      break;
    default:
      index3_full_twists(b, 4, l);
      b.long_relation(1);
      b.checkpoint();
      if (l > 0) {
        index3_push_a1(b, 3, l);
        index3_collect(b, 3, l);
        b.long_relation(2);
      }
      n = 5 * l + 3;
      break;
  }
  // Delete all but the first a_2.
  const auto& ls = b.word().letters();
  const std::size_t first = static_cast<std::size_t>(std::find(ls.begin(), ls.end(), 2) - ls.begin());
  b.delete_last(2, -1, first + 1);
  return b.finish(TorusClaim{2, static_cast<int>(n), 0}, TorusClaim{3, m, 0}, "index3", param_m(m), n);
}

AdjacencyCertificate adj_index4(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "index4 needs m >= 2");
  Builder b(torus_braid(4, m));
  // (a1 a2 a3)^m -> (a3 a1 a2)^m -> (a1 a3 a2)^m
  b.apply(CyclicShift{CyclicShift::Direction::BackToFront});
  for (int j = 0; j < m; ++j) b.commute(3 * static_cast<std::size_t>(j));
  b.checkpoint();
  std::int64_t n = 0;
  if (m == 2) {
    // a1 a3 a2 a1 a2: a3 occurs once, so the closure destabilizes to T(2,3).
    b.delete_last(3, 1);
    n = 3;
  } else {
    const bool odd = m % 2 == 1;
    const int l = odd ? (m - 1) / 2 : (m - 2) / 2;
    const std::size_t prefix = odd ? 9 : 12;
    const int k = l - 1;
    index4_collect(b, prefix, k);
    sort_a1_a3(b, prefix + 5 * static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) b.long_relation(prefix - 1 + 5 * static_cast<std::size_t>(j));
    b.checkpoint();
    b.delete_last(2, odd ? l : l + 1);
    b.checkpoint();
    n = odd ? 5 * l + 1 : 5 * l + 3;
  }
  sort_a1_a3(b, 6);
  return b.finish(TorusClaim{2, static_cast<int>(n), 0}, TorusClaim{4, m, 0}, "index4", param_m(m), n);
}

std::int64_t beta_length(int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "beta needs m >= 0");
  if (m == 0) return 0;
  const std::int64_t l = m / 3;
  switch (m % 3) {
    case 0:
      return (3 * l - 1) * l;
    case 1:
      return (3 * l + 1) * l;
    default:
      return (3 * l + 3) * l + 1;
  }
}

HalfTwistReduction half_twist_reduce(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "half twist needs m >= 1");
  Builder b(half_twist(m));
  reduce_half_twist(b, 0, 0, m);
  return HalfTwistReduction{b.moves(), b.word()};
}

std::int64_t square_bound(std::int64_t m) {
  // floor((2m^2 + 4 - 3m) / 3)
  const std::int64_t num = 2 * m * m + 4 - 3 * m;
  return num >= 0 ? num / 3 : -((-num + 2) / 3);
}

std::int64_t staircase_bound(std::int64_t m) { return (2 * m * m - m + 5) / 3; }

AdjacencyCertificate adj_square(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "square needs m >= 2");
  const BraidWord delta = half_twist(m);
  Builder b(delta.concat(delta));
  reduce_half_twist(b, delta.size(), 0, m);
  b.checkpoint();
  reduce_half_twist(b, static_cast<std::size_t>(2 * m - 3), 0, m - 2);
  const std::int64_t n = (m - 1) + (m > 2 ? beta_length(m - 2) : 0) + beta_length(m);
  return b.finish(TorusClaim{2, static_cast<int>(n), 0}, TorusClaim{m, m, 0}, "square", param_m(m), n);
}

AdjacencyCertificate adj_staircase(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "staircase needs m >= 2");
  const BraidWord delta = half_twist(m);
  const BraidWord run = ascending_run(m - 1, m);
  {
    // Delta A_{m-1} Delta: the middle A_{m-1} Delta collapses like a half
    // twist without its first deletion.
    Builder b(delta.concat(run).concat(delta));
    const std::size_t mid = delta.size();
    collapse_runs(b, mid, m - 1);
    b.checkpoint();
    strip_and_recurse(b, mid, 0, m - 1);
    b.checkpoint();
    reduce_half_twist(b, static_cast<std::size_t>(2 * m - 3), 0, m - 2);
    const std::int64_t n = 3 * (m - 1) + 2 * (m > 2 ? beta_length(m - 2) : 0);
    auto cert = b.finish(TorusClaim{2, static_cast<int>(n), 0}, TorusClaim{m, m + 1, 0}, "staircase", param_m(m), n);
    cert.achieved = "full-bound";
    if (verify(cert).valid()) return cert;
  }
  // Delta^2 A_{m-1}: drop the trailing run, then reduce as for T(m,m).
  Builder b(delta.concat(delta).concat(run));
  for (int k = 0; k < m - 1; ++k) b.remove(b.word().size() - 1);
  b.checkpoint();
  reduce_half_twist(b, delta.size(), 0, m);
  b.checkpoint();
  reduce_half_twist(b, static_cast<std::size_t>(2 * m - 3), 0, m - 2);
  const std::int64_t n = (m - 1) + (m > 2 ? beta_length(m - 2) : 0) + beta_length(m);
  auto cert = b.finish(TorusClaim{2, static_cast<int>(n), 0}, TorusClaim{m, m + 1, 0}, "staircase", param_m(m), n);
  cert.achieved = "composed-floor";
  return cert;
}

}  // namespace braidlab
