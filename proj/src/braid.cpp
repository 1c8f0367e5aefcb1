#include "braidlab/braid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "braidlab/error.hpp"

namespace braidlab {

namespace {

int generator(int letter) { return letter < 0 ? -letter : letter; }

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

void check_position(std::size_t pos, std::size_t needed, const BraidWord& w) {
  if (pos + needed > w.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "position " + std::to_string(pos) + " out of range for word of length " + std::to_string(w.size()));
  }
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorCode::IndexOutOfRange, "a braid needs at least one strand");
  for (int e : letters_) {
    if (e == 0 || generator(e) > strands_ - 1) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "letter " + std::to_string(e) + " invalid on " + std::to_string(strands_) + " strands");
    }
  }
}

bool BraidWord::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](int e) { return e > 0; });
}

std::int64_t BraidWord::algebraic_length() const noexcept {
  std::int64_t len = 0;
  for (int e : letters_) len += e > 0 ? 1 : -1;
  return len;
}

BraidWord BraidWord::concat(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_) throw Error(ErrorCode::InvalidArgument, "concatenating braids on different strand counts");
  BraidWord out = *this;
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return out;
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& e : inv) e = -e;
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::widened(int strands) const {
  if (strands < strands_) throw Error(ErrorCode::InvalidArgument, "cannot narrow a braid");
  return BraidWord(strands, letters_);
}

BraidWord BraidWord::shifted(int offset, int strands) const {
  std::vector<int> out = letters_;
  for (int& e : out) e += e > 0 ? offset : -offset;
  return BraidWord(strands, std::move(out));
}

std::string BraidWord::literal() const {
  std::ostringstream os;
  os << "s:" << strands_ << " w:";
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? "," : "") << letters_[i];
  return os.str();
}

BraidWord BraidWord::parse(std::string_view literal) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  literal = trim(literal);
  if (literal.substr(0, 2) != "s:") throw Error(ErrorCode::ParseError, "braid literal must start with 's:'");
  auto wpos = literal.find("w:");
  if (wpos == std::string_view::npos) throw Error(ErrorCode::ParseError, "braid literal lacks 'w:'");
  int strands = parse_int(trim(literal.substr(2, wpos - 2)));
  std::vector<int> letters;
  std::string_view rest = trim(literal.substr(wpos + 2));
  while (!rest.empty()) {
    auto comma = rest.find(',');
    letters.push_back(parse_int(trim(rest.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord ascending_run(int k, int strands) {
  std::vector<int> letters;
  for (int i = 1; i <= k; ++i) letters.push_back(i);
  return BraidWord(strands, std::move(letters));
}

BraidWord torus_braid(int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "torus braid needs p, q >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>((p - 1) * q));
  for (int r = 0; r < q; ++r) {
    for (int i = 1; i < p; ++i) letters.push_back(i);
  }
  return BraidWord(p, std::move(letters));
}

BraidWord half_twist(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "half twist needs m >= 1");
  std::vector<int> letters;
  for (int top = m - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  }
  return BraidWord(m, std::move(letters));
}

void apply_move_in_place(BraidWord& word, const BraidMove& mv) {
  auto letters = word.letters();
  const int n = word.strands();
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, move::FreeReduce>) {
          if (m.insert) {
            if (m.position > letters.size()) throw Error(ErrorCode::IndexOutOfRange, "insert position past end");
            if (m.letter == 0 || generator(m.letter) > n - 1) throw Error(ErrorCode::IndexOutOfRange, "bad generator");
            letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(m.position), {m.letter, -m.letter});
          } else {
            check_position(m.position, 2, word);
            if (letters[m.position] != -letters[m.position + 1]) {
              throw Error(ErrorCode::IllegalMove, "letters at " + std::to_string(m.position) + " are not inverse");
            }
            auto it = letters.begin() + static_cast<std::ptrdiff_t>(m.position);
            letters.erase(it, it + 2);
          }
        } else if constexpr (std::is_same_v<M, move::Relation>) {
          const std::size_t p = m.position;
          if (m.form == move::Relation::Form::Long) {
            check_position(p, 3, word);
            int x = letters[p], y = letters[p + 1];
            bool same_sign = (x > 0) == (y > 0);
            if (letters[p + 2] != x || !same_sign || std::abs(generator(x) - generator(y)) != 1) {
              throw Error(ErrorCode::IllegalMove, "no x y x pattern with adjacent generators at " + std::to_string(p));
            }
            letters[p] = y;
            letters[p + 1] = x;
            letters[p + 2] = y;
          } else {
            check_position(p, 2, word);
            if (std::abs(generator(letters[p]) - generator(letters[p + 1])) < 2) {
              throw Error(ErrorCode::IllegalMove, "letters at " + std::to_string(p) + " do not commute");
            }
            std::swap(letters[p], letters[p + 1]);
          }
        } else if constexpr (std::is_same_v<M, move::CyclicShift>) {
          if (letters.empty()) throw Error(ErrorCode::IllegalMove, "cannot shift the empty word");
          if (m.direction == move::CyclicShift::Direction::FrontToBack) {
            std::rotate(letters.begin(), letters.begin() + 1, letters.end());
          } else {
            std::rotate(letters.rbegin(), letters.rbegin() + 1, letters.rend());
          }
        } else if constexpr (std::is_same_v<M, move::InsertGenerator>) {
          if (m.position > letters.size()) throw Error(ErrorCode::IndexOutOfRange, "insert position past end");
          if (m.index < 1 || m.index > n - 1) throw Error(ErrorCode::IndexOutOfRange, "bad generator index");
          letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(m.position), m.index);
        } else {
          check_position(m.position, 1, word);
          if (letters[m.position] < 0) {
            throw Error(ErrorCode::IllegalMove, "only positive generators may be deleted");
          }
          letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(m.position));
        }
      },
      mv);
  word = BraidWord(n, std::move(letters));
}

BraidWord apply_move(const BraidWord& word, const BraidMove& mv) {
  BraidWord out = word;
  apply_move_in_place(out, mv);
  return out;
}

std::string describe(const BraidMove& mv) {
  return std::visit(
      [](const auto& m) -> std::string {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, move::FreeReduce>) {
          return std::string(m.insert ? "insert" : "remove") + " pair " + std::to_string(m.letter) + " at " +
                 std::to_string(m.position);
        } else if constexpr (std::is_same_v<M, move::Relation>) {
          return std::string(m.form == move::Relation::Form::Long ? "long" : "commuting") + " relation at " +
                 std::to_string(m.position);
        } else if constexpr (std::is_same_v<M, move::CyclicShift>) {
          return m.direction == move::CyclicShift::Direction::FrontToBack ? "cyclic shift front to back"
                                                                         : "cyclic shift back to front";
        } else if constexpr (std::is_same_v<M, move::InsertGenerator>) {
          return "insert a_" + std::to_string(m.index) + " at " + std::to_string(m.position);
        } else {
          return "delete at " + std::to_string(m.position);
        }
      },
      mv);
}

std::vector<int> permutation(const BraidWord& word) {
  // at[pos] = strand currently sitting at position pos
  std::vector<int> at(static_cast<std::size_t>(word.strands()));
  for (int i = 0; i < word.strands(); ++i) at[static_cast<std::size_t>(i)] = i;
  for (int e : word.letters()) {
    int g = generator(e);
    std::swap(at[static_cast<std::size_t>(g - 1)], at[static_cast<std::size_t>(g)]);
  }
  std::vector<int> perm(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return perm;
}

int cycle_count(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

std::string fence_render(const BraidWord& word) {
  if (!word.is_positive()) throw Error(ErrorCode::NotPositive, "fence diagrams need positive words");
  const auto width = static_cast<std::size_t>(2 * word.strands() - 1);
  std::string plain(width, ' ');
  for (std::size_t i = 0; i < width; i += 2) plain[i] = '|';
  std::string out = plain + "\n";
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    std::string row = plain;
    row[static_cast<std::size_t>(2 * *it - 1)] = '-';
    out += row + "\n";
  }
  out += plain + "\n";
  return out;
}

}  // namespace braidlab
