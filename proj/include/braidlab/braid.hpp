#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace braidlab {

/// A word in the braid group B_n. Letter e > 0 is the generator a_e, e < 0 is
/// its inverse. The strand count is stored explicitly so deletions never
/// change n.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws IndexOutOfRange if a letter is 0 or |letter| > strands - 1.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  bool is_positive() const noexcept;
  /// Exponent sum: positive letters minus negative letters.
  std::int64_t algebraic_length() const noexcept;

  BraidWord concat(const BraidWord& rhs) const;
  BraidWord inverse() const;
  /// The same word seen on more strands.
  BraidWord widened(int strands) const;
  /// Generators renumbered by +offset on the given strand count (a_i -> a_{i+offset}).
  BraidWord shifted(int offset, int strands) const;

  /// "s:3 w:1,2,-1"
  std::string literal() const;
  static BraidWord parse(std::string_view literal);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// (a_1 a_2 ... a_{p-1})^q on p strands; its closure is T_{p,q}.
BraidWord torus_braid(int p, int q);

/// Positive half twist (a_1...a_{m-1})(a_1...a_{m-2})...(a_1 a_2) a_1 on m strands.
BraidWord half_twist(int m);

/// a_1 a_2 ... a_k on the given strand count.
BraidWord ascending_run(int k, int strands);

namespace move {

/// Insert or remove a letter pair e, -e starting at `position`.
struct FreeReduce {
  std::size_t position = 0;
  int letter = 1;
  bool insert = false;
  friend bool operator==(const FreeReduce&, const FreeReduce&) = default;
};

/// Braid relation at `position`: the long form rewrites x y x -> y x y for
/// adjacent generators of equal sign; the commuting form swaps two letters
/// whose generators are at least two apart.
struct Relation {
  enum class Form { Long, Commuting };
  std::size_t position = 0;
  Form form = Form::Long;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Conjugation moving one letter between the ends of the word.
struct CyclicShift {
  enum class Direction { FrontToBack, BackToFront };
  Direction direction = Direction::FrontToBack;
  friend bool operator==(const CyclicShift&, const CyclicShift&) = default;
};

/// Adds the positive generator a_index before `position`.
struct InsertGenerator {
  std::size_t position = 0;
  int index = 1;
  friend bool operator==(const InsertGenerator&, const InsertGenerator&) = default;
};

/// Removes the positive letter at `position`.
struct DeleteGenerator {
  std::size_t position = 0;
  friend bool operator==(const DeleteGenerator&, const DeleteGenerator&) = default;
};

}  // namespace move

using BraidMove = std::variant<move::FreeReduce, move::Relation, move::CyclicShift, move::InsertGenerator,
                               move::DeleteGenerator>;

/// Applies one elementary move. Throws IllegalMove when the pattern does not
/// match and IndexOutOfRange when a position or generator index is invalid.
BraidWord apply_move(const BraidWord& word, const BraidMove& mv);
/// In-place variant used when replaying long move sequences.
void apply_move_in_place(BraidWord& word, const BraidMove& mv);

std::string describe(const BraidMove& mv);

/// Underlying permutation: perm[i] is the final position (0-based, bottom to
/// top reading) of the strand that starts at position i. Letters act first to
/// last, so permutation(u.concat(v)) = permutation(v) o permutation(u).
std::vector<int> permutation(const BraidWord& word);
int cycle_count(const std::vector<int>& perm);

/// ASCII fence diagram, first letter at the bottom. Throws NotPositive.
std::string fence_render(const BraidWord& word);

}  // namespace braidlab
