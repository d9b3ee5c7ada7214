#include "qgimli/gimli_ref.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace qgimli {

namespace {

Word shift_left(Word w, int amount, Word mask) {
  return (w << amount) & mask;
}

void check_word(Word w, const Params& params, const char* what) {
  if ((w & ~params.word_mask()) != 0)
    throw std::domain_error(std::string(what) + " exceeds the word range");
}

Word parse_hex_token(const std::string& token, std::size_t line_no) {
  std::size_t pos = 0;
  Word value = 0;
  try {
    value = std::stoull(token, &pos, 16);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != token.size())
    throw std::runtime_error("bad hex field '" + token + "' on line " +
                             std::to_string(line_no));
  return value;
}

}  // namespace

std::string word_to_hex(Word value, int digits) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%0*llx", digits,
                static_cast<unsigned long long>(value));
  return buf;
}

Word rotate_word_left(Word w, int amount, int word_len) {
  const Word mask = word_len >= 64 ? ~Word{0} : ((Word{1} << word_len) - 1);
  amount %= word_len;
  if (amount == 0) return w & mask;
  return ((w << amount) | ((w & mask) >> (word_len - amount))) & mask;
}

std::array<Word, 3> sp_box(Word x, Word y, Word z, const Params& params) {
  params.validate();
  check_word(x, params, "x");
  check_word(y, params, "y");
  check_word(z, params, "z");
  const Word mask = params.word_mask();
  const Word rx = rotate_word_left(x, 24, params.word_len);
  const Word ry = rotate_word_left(y, 9, params.word_len);
  const Word rz = z;
  const Word s2 = rx ^ shift_left(rz, 1, mask) ^ shift_left(ry & rz, 2, mask);
  const Word s1 = rx ^ ry ^ shift_left(rx | rz, 1, mask);
  const Word s0 = ry ^ rz ^ shift_left(rx & ry, 3, mask);
  return {s0, s1, s2};
}

Word round_tweak(int round, const Params& params) {
  params.validate();
  if (round < 0 || round % 4 != 0)
    throw std::invalid_argument("constant rounds are positive multiples of 4");
  return (params.effective_constant() ^ static_cast<Word>(round)) &
         params.word_mask();
}

GimliState gimli_permute(
    const GimliState& state, const Params& params,
    const std::function<void(int, const GimliState&)>& on_round) {
  params.validate();
  for (const auto& row : state.words)
    for (Word w : row) check_word(w, params, "state word");

  GimliState s = state;
  for (int r = params.rounds; r >= 1; --r) {
    for (int j = 0; j < 4; ++j) {
      const auto updated = sp_box(s.words[0][j], s.words[1][j], s.words[2][j],
                                  params);
      s.words[0][j] = updated[0];
      s.words[1][j] = updated[1];
      s.words[2][j] = updated[2];
    }
    if (r % 4 == 0) {  // Small-Swap
      std::swap(s.words[0][0], s.words[0][1]);
      std::swap(s.words[0][2], s.words[0][3]);
    }
    if (r % 4 == 2) {  // Big-Swap
      std::swap(s.words[0][0], s.words[0][2]);
      std::swap(s.words[0][1], s.words[0][3]);
    }
    if (r % 4 == 0) s.words[0][0] ^= round_tweak(r, params);
    if (on_round) on_round(r, s);
  }
  return s;
}

GimliState gimli_permute(const GimliState& state, const Params& params) {
  return gimli_permute(state, params, nullptr);
}

std::vector<StateFileEntry> read_state_file(std::istream& in,
                                            const Params& params) {
  params.validate();
  std::vector<StateFileEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string token;
    while (fields >> token) tokens.push_back(token);
    if (tokens.empty()) continue;
    if (tokens.size() != 13)
      throw std::runtime_error("expected 13 fields on line " +
                               std::to_string(line_no) + ", got " +
                               std::to_string(tokens.size()));
    StateFileEntry entry;
    for (int f = 0; f < 12; ++f) {
      const Word w = parse_hex_token(tokens[f], line_no);
      if ((w & ~params.word_mask()) != 0)
        throw std::runtime_error("word out of range on line " +
                                 std::to_string(line_no));
      entry.state.words[f / 4][f % 4] = w;
    }
    entry.reserved = parse_hex_token(tokens[12], line_no);
    entries.push_back(entry);
  }
  return entries;
}

void write_state_file(std::ostream& out,
                      std::span<const StateFileEntry> entries,
                      const Params& params) {
  params.validate();
  const int digits = (params.word_len + 3) / 4;
  for (const StateFileEntry& entry : entries) {
    for (int f = 0; f < 12; ++f) {
      if (f) out << ' ';
      out << word_to_hex(entry.state.words[f / 4][f % 4], digits);
    }
    out << ' ' << word_to_hex(entry.reserved, digits) << '\n';
  }
}

}  // namespace qgimli
